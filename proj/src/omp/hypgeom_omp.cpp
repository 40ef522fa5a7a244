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

#include <omp.h>

#include "siegelab/hypgeom.hpp"

namespace siegelab {

std::vector<double> boundary_distance_field(const PolygonalDomain& domain, Complex origin, double spacing, long nx,
                                            long ny, int threads) {
  std::vector<double> out(static_cast<std::size_t>(nx * ny));
  const int t = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(t)
  for (long j = 0; j < ny; ++j) {
    for (long i = 0; i < nx; ++i) {
      const Complex p = origin + Complex(spacing * static_cast<double>(i), spacing * static_cast<double>(j));
      out[static_cast<std::size_t>(j * nx + i)] = domain.contains(p) ? domain.boundary_distance(p) : 0.0;
    }
  }
  return out;
}

}  // namespace siegelab
