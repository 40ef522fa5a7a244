// Copyright 2026 The siegelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "siegelab/complex.hpp"
#include "siegelab/maps.hpp"

namespace siegelab {

/// Finite forward-invariant set of labelled points with local degrees.
struct OrbitPortrait {
  std::vector<std::string> nodes;
  std::vector<std::size_t> next;
  std::vector<std::uint64_t> local_degree;
  std::vector<std::size_t> marked_cycle;  // in cycle order

  std::size_t size() const { return nodes.size(); }
  std::size_t index_of(const std::string& label) const;
  bool on_marked_cycle(std::size_t node) const;
};

/// Validates totality, degrees in [1, degree_bound] and that `marked_cycle`
/// is a single cycle of degree-one nodes.
OrbitPortrait make_portrait(std::vector<std::string> nodes, std::vector<std::size_t> next,
                            std::vector<std::uint64_t> local_degree, std::vector<std::size_t> marked_cycle,
                            std::uint64_t degree_bound = 64);

/// {"nodes": [...], "edges": {"w": "z", ...}, "degrees": {"w": 2, ...}, "cycle": [...]}
/// Missing degrees default to 1.
OrbitPortrait portrait_from_json(const nlohmann::json& doc);
nlohmann::json portrait_to_json(const OrbitPortrait& portrait);

/// Builds `next` by evaluating the map at each point and matching the image
/// to the nearest listed point within `tolerance`.
OrbitPortrait portrait_from_points(const MapFamily& map, std::span<const Complex> points,
                                   std::span<const std::uint64_t> degrees, std::span<const std::size_t> cycle,
                                   double tolerance = 1e-8);

/// True when no node of degree > 1 lies on a cycle of `next`.
bool critical_acyclic(const OrbitPortrait& portrait);

/// True when no node of degree > 1 has the marked cycle in its forward orbit.
bool critical_orbits_avoid_cycle(const OrbitPortrait& portrait);

struct RamificationAssignment {
  std::vector<std::uint64_t> nu;

  std::uint64_t operator[](std::size_t node) const { return nu[node]; }
  bool operator==(const RamificationAssignment&) const = default;
};

RamificationAssignment compute_nu(const OrbitPortrait& portrait);
RamificationAssignment pull_back_nu(const OrbitPortrait& portrait, const RamificationAssignment& nu);

enum class CoveringClass { Covering, HolomorphicOnly, Neither };

std::string to_string(CoveringClass c);

struct CoveringReport {
  std::vector<CoveringClass> per_node;
  CoveringClass global = CoveringClass::Covering;
};

CoveringReport check_covering(const OrbitPortrait& portrait, const RamificationAssignment& nu,
                              const RamificationAssignment& nu_tilde);

}  // namespace siegelab
