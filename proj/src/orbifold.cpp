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

#include "siegelab/orbifold.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "siegelab/errors.hpp"

namespace siegelab {

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (b != 0 && q > std::numeric_limits<std::uint64_t>::max() / b) {
    throw DomainError("compute_nu: ramification value overflows 64 bits");
  }
  return q * b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw DomainError("compute_nu: degree product overflows 64 bits");
  }
  return a * b;
}

bool is_periodic(const OrbitPortrait& p, std::size_t node) {
  std::size_t z = node;
  for (std::size_t k = 0; k < p.size(); ++k) {
    z = p.next[z];
    if (z == node) return true;
  }
  return false;
}

}  // namespace

std::size_t OrbitPortrait::index_of(const std::string& label) const {
  const auto it = std::find(nodes.begin(), nodes.end(), label);
  if (it == nodes.end()) throw InvalidArgument("portrait: unknown node '" + label + "'");
  return static_cast<std::size_t>(it - nodes.begin());
}

bool OrbitPortrait::on_marked_cycle(std::size_t node) const {
  return std::find(marked_cycle.begin(), marked_cycle.end(), node) != marked_cycle.end();
}

OrbitPortrait make_portrait(std::vector<std::string> nodes, std::vector<std::size_t> next,
                            std::vector<std::uint64_t> local_degree, std::vector<std::size_t> marked_cycle,
                            std::uint64_t degree_bound) {
  const std::size_t n = nodes.size();
  if (n == 0) throw InvalidArgument("portrait: no nodes");
  if (next.size() != n || local_degree.size() != n) throw InvalidArgument("portrait: next and degrees must be total");
  for (std::size_t i = 0; i < n; ++i) {
    if (next[i] >= n) throw InvalidArgument("portrait: next leaves the node set at '" + nodes[i] + "'");
    if (local_degree[i] < 1 || local_degree[i] > degree_bound) {
      throw InvalidArgument("portrait: local degree out of range at '" + nodes[i] + "'");
    }
  }
  {
    auto sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("portrait: duplicate node label");
    }
  }
  if (marked_cycle.empty()) throw InvalidArgument("portrait: marked cycle is empty");
  for (std::size_t k = 0; k < marked_cycle.size(); ++k) {
    const std::size_t c = marked_cycle[k];
    if (c >= n) throw InvalidArgument("portrait: marked cycle names an unknown node");
    if (next[c] != marked_cycle[(k + 1) % marked_cycle.size()]) {
      throw InvalidArgument("portrait: marked cycle is not a cycle of next");
    }
    if (local_degree[c] != 1) throw InvalidArgument("portrait: marked cycle contains a critical node");
  }
  {
    auto sorted = marked_cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("portrait: marked cycle repeats a node");
    }
  }
  return OrbitPortrait{std::move(nodes), std::move(next), std::move(local_degree), std::move(marked_cycle)};
}

OrbitPortrait portrait_from_json(const nlohmann::json& doc) {
  try {
    std::vector<std::string> nodes = doc.at("nodes").get<std::vector<std::string>>();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
    auto lookup = [&index](const std::string& label) {
      const auto it = index.find(label);
      if (it == index.end()) throw InvalidArgument("portrait: unknown node '" + label + "'");
      return it->second;
    };
    std::vector<std::size_t> next(nodes.size(), nodes.size());
    for (const auto& [from, to] : doc.at("edges").items()) next[lookup(from)] = lookup(to.get<std::string>());
    std::vector<std::uint64_t> degree(nodes.size(), 1);
    if (doc.contains("degrees")) {
      for (const auto& [node, d] : doc.at("degrees").items()) degree[lookup(node)] = d.get<std::uint64_t>();
    }
    std::vector<std::size_t> cycle;
    for (const auto& label : doc.at("cycle")) cycle.push_back(lookup(label.get<std::string>()));
    const std::uint64_t bound = doc.value("degree_bound", std::uint64_t{64});
    return make_portrait(std::move(nodes), std::move(next), std::move(degree), std::move(cycle), bound);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("portrait: malformed JSON: ") + e.what());
  }
}

nlohmann::json portrait_to_json(const OrbitPortrait& p) {
  nlohmann::json doc;
  doc["nodes"] = p.nodes;
  doc["edges"] = nlohmann::json::object();
  doc["degrees"] = nlohmann::json::object();
  for (std::size_t i = 0; i < p.size(); ++i) {
    doc["edges"][p.nodes[i]] = p.nodes[p.next[i]];
    doc["degrees"][p.nodes[i]] = p.local_degree[i];
  }
  doc["cycle"] = nlohmann::json::array();
  for (std::size_t c : p.marked_cycle) doc["cycle"].push_back(p.nodes[c]);
  return doc;
}

OrbitPortrait portrait_from_points(const MapFamily& map, std::span<const Complex> points,
                                   std::span<const std::uint64_t> degrees, std::span<const std::size_t> cycle,
                                   double tolerance) {
  const std::size_t n = points.size();
  std::vector<std::string> labels(n);
  std::vector<std::size_t> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "p" + std::to_string(i);
    const RiemannPoint image = eval(map, points[i]);
    if (image.is_infinite()) throw DomainError("portrait: image of " + labels[i] + " overflows");
    std::size_t best = n;
    double best_dist = tolerance;
    for (std::size_t j = 0; j < n; ++j) {
      const double dist = std::abs(image.value() - points[j]);
      if (dist <= best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == n) throw InvalidArgument("portrait: image of " + labels[i] + " is not among the listed points");
    next[i] = best;
  }
  return make_portrait(std::move(labels), std::move(next), {degrees.begin(), degrees.end()},
                       {cycle.begin(), cycle.end()});
}

bool critical_acyclic(const OrbitPortrait& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.local_degree[i] > 1 && is_periodic(p, i)) return false;
  }
  return true;
}

bool critical_orbits_avoid_cycle(const OrbitPortrait& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.local_degree[i] == 1) continue;
    std::size_t z = i;
    for (std::size_t k = 0; k <= p.size(); ++k) {
      z = p.next[z];
      if (p.on_marked_cycle(z)) return false;
    }
  }
  return true;
}

RamificationAssignment compute_nu(const OrbitPortrait& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.local_degree[i] > 1 && is_periodic(p, i)) {
      throw CriticalCycle("compute_nu: critical node '" + p.nodes[i] + "' is periodic");
    }
  }
  // lcm of degree products over paths of length >= 1 ending at each node; 1 when there is none.
  std::vector<std::uint64_t> into(p.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u = 0; u < p.size(); ++u) {
      const std::size_t z = p.next[u];
      const std::uint64_t updated = checked_lcm(into[z], checked_mul(p.local_degree[u], into[u]));
      if (updated != into[z]) {
        into[z] = updated;
        changed = true;
      }
    }
  }
  for (std::size_t c : p.marked_cycle) into[c] = 2;
  return RamificationAssignment{std::move(into)};
}

RamificationAssignment pull_back_nu(const OrbitPortrait& p, const RamificationAssignment& nu) {
  if (nu.nu.size() != p.size()) throw InvalidArgument("pull_back_nu: assignment is not total");
  RamificationAssignment out{std::vector<std::uint64_t>(p.size())};
  for (std::size_t z = 0; z < p.size(); ++z) {
    const std::uint64_t v = nu[p.next[z]];
    if (v % p.local_degree[z] != 0) {
      throw NotDivisible(p.nodes[z], "pull_back_nu: degree " + std::to_string(p.local_degree[z]) + " of '" +
                                         p.nodes[z] + "' does not divide " + std::to_string(v));
    }
    out.nu[z] = v / p.local_degree[z];
  }
  return out;
}

std::string to_string(CoveringClass c) {
  switch (c) {
    case CoveringClass::Covering: return "covering";
    case CoveringClass::HolomorphicOnly: return "holomorphic-only";
    case CoveringClass::Neither: return "neither";
  }
  return "neither";
}

CoveringReport check_covering(const OrbitPortrait& p, const RamificationAssignment& nu,
                              const RamificationAssignment& nu_tilde) {
  if (nu.nu.size() != p.size() || nu_tilde.nu.size() != p.size()) {
    throw InvalidArgument("check_covering: assignments must be total");
  }
  CoveringReport report;
  report.per_node.resize(p.size());
  for (std::size_t w = 0; w < p.size(); ++w) {
    const std::uint64_t image = nu[p.next[w]];
    const std::uint64_t lifted = p.local_degree[w] * nu_tilde[w];
    CoveringClass c = CoveringClass::Neither;
    if (image == lifted) {
      c = CoveringClass::Covering;
    } else if (lifted % image == 0) {
      c = CoveringClass::HolomorphicOnly;
    }
    report.per_node[w] = c;
    report.global = std::max(report.global, c);
  }
  return report;
}

}  // namespace siegelab
