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

// OpenMP kernels for the pullback experiments. Serial references live in
// ../pullback.cpp and must produce identical results.

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "../detail.hpp"
#include "siegelab/errors.hpp"
#include "siegelab/pullback.hpp"

namespace siegelab {

double chordal_diameter(const JordanDiskApprox& disk) {
  const auto& v = disk.boundary();
  const auto n = static_cast<long>(v.size());
  std::vector<detail::ChordalPoint> p(v.size());
  for (long i = 0; i < n; ++i) p[i] = detail::chordal_point(v[i]);

  double best = 0.0;
#pragma omp parallel for schedule(dynamic, 64) reduction(max : best) if (n > 512)
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) best = std::max(best, detail::chord(p[i], p[j]));
  }
  return best;
}

ShrinkReport shrink_experiment(const MapFamily& map, const JordanDiskApprox& disk0, std::size_t chains,
                               std::size_t depth, double epsilon, std::uint64_t rng_seed,
                               const ShrinkOptions& options) {
  if (!disk0.contains(disk0.vertex_centroid())) throw InvalidArgument("shrink_experiment: vertex centroid is not interior");
  const LocalMap local = local_map(map);
  std::vector<PullbackChain> results(chains);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  const auto count = static_cast<long>(chains);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long c = 0; c < count; ++c) {
    results[c] = detail::shrink_chain(local, disk0, depth, rng_seed, static_cast<std::uint64_t>(c), options);
  }
  return detail::summarize_shrink(results, depth, epsilon, rng_seed);
}

}  // namespace siegelab
