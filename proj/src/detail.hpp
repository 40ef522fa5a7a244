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

// Pieces shared between the serial reference code and the OpenMP kernels.

#include <cstdint>
#include <vector>

#include "siegelab/pullback.hpp"
#include "siegelab/render.hpp"

namespace siegelab::detail {

/// One randomised chain of a shrink experiment.
PullbackChain shrink_chain(const LocalMap& map, const JordanDiskApprox& disk0, std::size_t depth,
                           std::uint64_t rng_seed, std::uint64_t chain_index, const ShrinkOptions& options);

/// Folds finished chains (indexed by chain number) into a report.
ShrinkReport summarize_shrink(const std::vector<PullbackChain>& chains, std::size_t depth, double epsilon,
                              std::uint64_t rng_seed);

/// Unit-sphere image of z under inverse stereographic projection.
/// Finite point with its chordal weight 1 / sqrt(1 + |z|^2).
struct ChordalPoint {
  Complex z;
  double weight;
};
ChordalPoint chordal_point(Complex z);
inline double chord(const ChordalPoint& a, const ChordalPoint& b) {
  return 2.0 * std::abs(a.z - b.z) * a.weight * b.weight;
}

void check_render(const Window& window, long columns, long rows, const RenderParams& params, double radius);
Cell dynamical_cell(const MapFamily& map, const Window& window, long i, long j, long columns, long rows,
                    const RenderParams& params, double radius);
Cell parameter_cell(const Window& window, long i, long j, long columns, long rows, const RenderParams& params);

}  // namespace siegelab::detail
