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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "siegelab/complex.hpp"
#include "siegelab/maps.hpp"

namespace siegelab {

struct Window {
  Complex center;
  double width = 4.0;
  double height = 4.0;

  /// Centre of pixel (column i, row j); row 0 is the top edge.
  Complex pixel_center(long i, long j, long columns, long rows) const;
};

void validate_window(const Window& window);

enum class CellKind : std::uint8_t { Escaping, Trapped, Bounded };

struct Cell {
  CellKind kind = CellKind::Bounded;
  std::int32_t trap_id = -1;
  std::uint32_t iterations = 0;  // n at escape or capture, max_iter when bounded

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Raster {
  long width = 0;
  long height = 0;
  std::vector<Cell> cells;  // row major

  const Cell& at(long i, long j) const { return cells[static_cast<std::size_t>(j * width + i)]; }
  friend bool operator==(const Raster&, const Raster&) = default;
};

struct TrapDisk {
  Complex center;
  double radius = 0.0;
};

struct TrapSpec {
  std::vector<TrapDisk> disks;
};

struct RenderParams {
  std::uint32_t max_iter = 1000;
  double escape_radius = 0.0;  // 0: family default
  TrapSpec traps;
  int threads = 0;             // 0: OpenMP default
  long tile = 32;
};

/// 50 for the sine family, 1e6 otherwise.
double default_escape_radius(const MapFamily& map);

/// Escaping at the first n with |z_n| > escape_radius; for the sine family the
/// test is |Im z_n| > escape_radius, since sin stays bounded on horizontal strips.
Cell classify_orbit(const MapFamily& map, Complex z0, std::uint32_t max_iter, double escape_radius,
                    const TrapSpec& traps = {});

Raster render_dynamical(const MapFamily& map, const Window& window, long columns, long rows,
                        const RenderParams& params = {});
Raster render_dynamical_serial(const MapFamily& map, const Window& window, long columns, long rows,
                               const RenderParams& params = {});

/// Each pixel is a parameter lambda of lambda z e^z; the orbit of the
/// critical value -lambda/e is classified.
Raster render_parameter(const Window& window, long columns, long rows, const RenderParams& params = {});
Raster render_parameter_serial(const Window& window, long columns, long rows, const RenderParams& params = {});

using Rgb = std::array<std::uint8_t, 3>;

struct Palette {
  Rgb bounded{0, 0, 0};
  Rgb escape_fast{255, 255, 255};
  Rgb escape_slow{90, 90, 90};
  std::vector<Rgb> traps{{255, 220, 0}, {0, 160, 255}, {230, 60, 60}, {60, 200, 90}};
  std::uint32_t max_iter = 1000;  // scale of the escape gradient

  Rgb color(const Cell& cell) const;
};

nlohmann::json palette_to_json(const Palette& palette);
Palette palette_from_json(const nlohmann::json& doc);

inline constexpr int kSidecarSchemaVersion = 1;

/// Writes the raster as binary PPM (P6). Writes `path + ".json"` holding
/// `metadata` plus schema version, dimensions and palette when
/// `metadata` is not null.
void write_image(const Raster& raster, const Palette& palette, const std::string& path,
                 const nlohmann::json& metadata = nullptr);

bool png_supported();
void write_png(const Raster& raster, const Palette& palette, const std::string& path);

/// Cells of the largest 4-connected component of non-escaping pixels.
std::size_t largest_bounded_component(const Raster& raster);

}  // namespace siegelab
