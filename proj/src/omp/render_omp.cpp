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

#include <algorithm>

#include "../detail.hpp"
#include "siegelab/render.hpp"

namespace siegelab {

namespace {

template <class CellFn>
Raster render_tiles(long columns, long rows, const RenderParams& params, CellFn cell) {
  Raster r{columns, rows, std::vector<Cell>(static_cast<std::size_t>(columns * rows))};
  const long tx = (columns + params.tile - 1) / params.tile;
  const long ty = (rows + params.tile - 1) / params.tile;
  const int threads = params.threads > 0 ? params.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long t = 0; t < tx * ty; ++t) {
    const long i0 = (t % tx) * params.tile, j0 = (t / tx) * params.tile;
    const long i1 = std::min(columns, i0 + params.tile), j1 = std::min(rows, j0 + params.tile);
    for (long j = j0; j < j1; ++j) {
      for (long i = i0; i < i1; ++i) r.cells[static_cast<std::size_t>(j * columns + i)] = cell(i, j);
    }
  }
  return r;
}

}  // namespace

Raster render_dynamical(const MapFamily& map, const Window& window, long columns, long rows,
                        const RenderParams& params) {
  const double radius = params.escape_radius > 0.0 ? params.escape_radius : default_escape_radius(map);
  detail::check_render(window, columns, rows, params, radius);
  return render_tiles(columns, rows, params, [&](long i, long j) {
    return detail::dynamical_cell(map, window, i, j, columns, rows, params, radius);
  });
}

Raster render_parameter(const Window& window, long columns, long rows, const RenderParams& params) {
  detail::check_render(window, columns, rows, params, params.escape_radius > 0.0 ? params.escape_radius : 1e6);
  return render_tiles(columns, rows, params,
                      [&](long i, long j) { return detail::parameter_cell(window, i, j, columns, rows, params); });
}

}  // namespace siegelab
