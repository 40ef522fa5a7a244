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

#include <vector>

#include "siegelab/complex.hpp"
#include "siegelab/maps.hpp"
#include "siegelab/series.hpp"

namespace siegelab {

/// psi(zeta) = sum_{k>=1} b_k zeta^k with f(psi(zeta)) = psi(multiplier * zeta).
struct Linearizer {
  Complex multiplier;
  Complex center;
  std::vector<Complex> coeffs;  // coeffs[k] = b_k rounded, coeffs[0] = 0, coeffs[1] = 1
  /// Rounding remainders: b_k = coeffs[k] + coeffs_lo[k] to about 106 bits. May be empty.
  std::vector<Complex> coeffs_lo;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  TaylorSeries as_series() const;
};

struct BoundaryOrbit {
  std::vector<Complex> points;
  Complex seed;
  bool escaped = false;
};

struct RotationMeasurement {
  double rotation_number = 0.0;  // in [0, 1)
  double error_bound = 0.0;
  std::size_t steps = 0;
};

/// Coefficients of the map about `center` via exact series arithmetic.
TaylorSeries taylor_at(const MapFamily& map, Complex center, std::size_t order);

/// Solves the conjugacy equation term by term through `order`, in quad
/// precision; the input coefficients are taken as exact.
/// The series must be centred at a fixed point with unimodular multiplier.
Linearizer linearizer(const TaylorSeries& series, std::size_t order);

/// Coefficients of f(psi(zeta)) - psi(lambda zeta) through the linearizer's
/// order, evaluated in quad precision from coeffs + coeffs_lo.
std::vector<Complex> conjugacy_residual(const TaylorSeries& series, const Linearizer& psi);

BoundaryOrbit trace_boundary(const MapFamily& map, Complex seed, std::size_t n, double escape_radius);

/// Mean angular step of the orbit about `center`, in turns, reduced mod 1.
RotationMeasurement measure_rotation_number(const BoundaryOrbit& orbit, Complex center);

/// Root-test estimate 1 / limsup |b_k|^{1/k} over the tail half of the
/// coefficients. Heuristic; +infinity when the tail vanishes.
double inner_radius(const Linearizer& psi);

}  // namespace siegelab
