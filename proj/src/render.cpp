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

#include "siegelab/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>

#ifdef SIEGELAB_HAVE_PNG
#include <png.h>
#endif

#include "siegelab/errors.hpp"
#include "detail.hpp"

namespace siegelab {

Complex Window::pixel_center(long i, long j, long columns, long rows) const {
  const double x = center.real() - 0.5 * width + (static_cast<double>(i) + 0.5) * width / static_cast<double>(columns);
  const double y = center.imag() + 0.5 * height - (static_cast<double>(j) + 0.5) * height / static_cast<double>(rows);
  return {x, y};
}

void validate_window(const Window& w) {
  if (!(w.width > 0.0) || !(w.height > 0.0) || !std::isfinite(w.width) || !std::isfinite(w.height) ||
      !is_finite(w.center)) {
    throw InvalidArgument("window: extents must be positive and finite");
  }
}

double default_escape_radius(const MapFamily& map) {
  return std::holds_alternative<Sine>(map.variant()) ? 50.0 : 1e6;
}

Cell classify_orbit(const MapFamily& map, Complex z0, std::uint32_t max_iter, double escape_radius,
                    const TrapSpec& traps) {
  if (max_iter < 1) throw InvalidArgument("classify_orbit: max_iter must be at least 1");
  if (!(escape_radius > 0.0)) throw InvalidArgument("classify_orbit: escape radius must be positive");
  const bool sine = std::holds_alternative<Sine>(map.variant());
  RiemannPoint z = z0;
  for (std::uint32_t n = 0; n <= max_iter; ++n) {
    if (z.is_infinite() || (sine ? std::abs(z.value().imag()) : std::abs(z.value())) > escape_radius) {
      return Cell{CellKind::Escaping, -1, n};
    }
    for (std::size_t t = 0; t < traps.disks.size(); ++t) {
      if (std::abs(z.value() - traps.disks[t].center) < traps.disks[t].radius) {
        return Cell{CellKind::Trapped, static_cast<std::int32_t>(t), n};
      }
    }
    if (n == max_iter) break;
    z = eval(map, z.value());
  }
  return Cell{CellKind::Bounded, -1, max_iter};
}

namespace detail {

void check_render(const Window& window, long columns, long rows, const RenderParams& params, double radius) {
  validate_window(window);
  if (columns < 1 || rows < 1) throw InvalidArgument("render: raster size must be positive");
  if (params.tile < 1) throw InvalidArgument("render: tile size must be positive");
  for (const auto& t : params.traps.disks) {
    if (!(t.radius > 0.0) || std::abs(t.center) + t.radius >= radius) {
      throw InvalidArgument("render: trap disks must have positive radius and lie inside the escape radius");
    }
  }
}

Cell dynamical_cell(const MapFamily& map, const Window& window, long i, long j, long columns, long rows,
                    const RenderParams& params, double radius) {
  return classify_orbit(map, window.pixel_center(i, j, columns, rows), params.max_iter, radius, params.traps);
}

Cell parameter_cell(const Window& window, long i, long j, long columns, long rows, const RenderParams& params) {
  const Complex lambda = window.pixel_center(i, j, columns, rows);
  if (lambda == 0.0) return Cell{CellKind::Bounded, -1, params.max_iter};
  const double radius = params.escape_radius > 0.0 ? params.escape_radius : 1e6;
  return classify_orbit(MapFamily::zexp(lambda), -lambda / std::exp(1.0), params.max_iter, radius, params.traps);
}

}  // namespace detail

Raster render_dynamical_serial(const MapFamily& map, const Window& window, long columns, long rows,
                               const RenderParams& params) {
  const double radius = params.escape_radius > 0.0 ? params.escape_radius : default_escape_radius(map);
  detail::check_render(window, columns, rows, params, radius);
  Raster r{columns, rows, std::vector<Cell>(static_cast<std::size_t>(columns * rows))};
  for (long j = 0; j < rows; ++j) {
    for (long i = 0; i < columns; ++i) {
      r.cells[static_cast<std::size_t>(j * columns + i)] =
          detail::dynamical_cell(map, window, i, j, columns, rows, params, radius);
    }
  }
  return r;
}

Raster render_parameter_serial(const Window& window, long columns, long rows, const RenderParams& params) {
  detail::check_render(window, columns, rows, params, params.escape_radius > 0.0 ? params.escape_radius : 1e6);
  Raster r{columns, rows, std::vector<Cell>(static_cast<std::size_t>(columns * rows))};
  for (long j = 0; j < rows; ++j) {
    for (long i = 0; i < columns; ++i) {
      r.cells[static_cast<std::size_t>(j * columns + i)] = detail::parameter_cell(window, i, j, columns, rows, params);
    }
  }
  return r;
}

Rgb Palette::color(const Cell& cell) const {
  switch (cell.kind) {
    case CellKind::Bounded: return bounded;
    case CellKind::Trapped:
      return traps.empty() ? bounded : traps[static_cast<std::size_t>(cell.trap_id) % traps.size()];
    case CellKind::Escaping: {
      const double t = std::log1p(static_cast<double>(cell.iterations)) /
                       std::log1p(static_cast<double>(std::max<std::uint32_t>(max_iter, 1)));
      const double s = std::min(1.0, t);
      Rgb c{};
      for (int k = 0; k < 3; ++k) {
        c[k] = static_cast<std::uint8_t>(std::lround((1.0 - s) * escape_fast[k] + s * escape_slow[k]));
      }
      return c;
    }
  }
  return bounded;
}

nlohmann::json palette_to_json(const Palette& p) {
  return {{"bounded", p.bounded},         {"escape_fast", p.escape_fast}, {"escape_slow", p.escape_slow},
          {"traps", p.traps},             {"max_iter", p.max_iter}};
}

Palette palette_from_json(const nlohmann::json& doc) {
  Palette p;
  p.bounded = doc.value("bounded", p.bounded);
  p.escape_fast = doc.value("escape_fast", p.escape_fast);
  p.escape_slow = doc.value("escape_slow", p.escape_slow);
  p.traps = doc.value("traps", p.traps);
  p.max_iter = doc.value("max_iter", p.max_iter);
  return p;
}

void write_image(const Raster& raster, const Palette& palette, const std::string& path,
                 const nlohmann::json& metadata) {
  if (raster.width < 1 || raster.height < 1 ||
      raster.cells.size() != static_cast<std::size_t>(raster.width * raster.height)) {
    throw InvalidArgument("write_image: raster dimensions do not match its cells");
  }
  std::vector<std::uint8_t> payload;
  payload.reserve(raster.cells.size() * 3);
  for (const Cell& c : raster.cells) {
    const Rgb rgb = palette.color(c);
    payload.insert(payload.end(), rgb.begin(), rgb.end());
  }
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("write_image: cannot open '" + path + "'");
    out << "P6\n" << raster.width << ' ' << raster.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
    if (!out) throw IoError("write_image: write to '" + path + "' failed");
  }
  if (metadata.is_null()) return;
  nlohmann::json sidecar = metadata;
  sidecar["schema_version"] = kSidecarSchemaVersion;
  sidecar["image"] = {{"width", raster.width}, {"height", raster.height}, {"format", "ppm-p6"}};
  sidecar["palette"] = palette_to_json(palette);
  std::ofstream side(path + ".json", std::ios::trunc);
  if (!side) throw IoError("write_image: cannot open '" + path + ".json'");
  side << sidecar.dump(2) << '\n';
  if (!side) throw IoError("write_image: write to '" + path + ".json' failed");
}

bool png_supported() {
#ifdef SIEGELAB_HAVE_PNG
  return true;
#else
  return false;
#endif
}

void write_png(const Raster& raster, const Palette& palette, const std::string& path) {
#ifdef SIEGELAB_HAVE_PNG
  std::unique_ptr<FILE, int (*)(FILE*)> file(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!file) throw IoError("write_png: cannot open '" + path + "'");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw IoError("write_png: libpng initialisation failed");
  }
  std::vector<std::uint8_t> row(static_cast<std::size_t>(raster.width) * 3);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("write_png: libpng error while writing '" + path + "'");
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(raster.width), static_cast<png_uint_32>(raster.height), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (long j = 0; j < raster.height; ++j) {
    for (long i = 0; i < raster.width; ++i) {
      const Rgb c = palette.color(raster.at(i, j));
      std::copy(c.begin(), c.end(), row.begin() + 3 * i);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
#else
  (void)raster;
  (void)palette;
  throw IoError("write_png: built without libpng ('" + path + "' not written)");
#endif
}

std::size_t largest_bounded_component(const Raster& r) {
  std::vector<std::uint8_t> seen(r.cells.size(), 0);
  std::vector<long> stack;
  std::size_t best = 0;
  for (std::size_t s = 0; s < r.cells.size(); ++s) {
    if (seen[s] || r.cells[s].kind == CellKind::Escaping) continue;
    std::size_t size = 0;
    seen[s] = 1;
    stack.push_back(static_cast<long>(s));
    while (!stack.empty()) {
      const long k = stack.back();
      stack.pop_back();
      ++size;
      const long i = k % r.width, j = k / r.width;
      const long nb[4][2] = {{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}};
      for (const auto& q : nb) {
        if (q[0] < 0 || q[1] < 0 || q[0] >= r.width || q[1] >= r.height) continue;
        const auto idx = static_cast<std::size_t>(q[1] * r.width + q[0]);
        if (seen[idx] || r.cells[idx].kind == CellKind::Escaping) continue;
        seen[idx] = 1;
        stack.push_back(static_cast<long>(idx));
      }
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace siegelab
