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

#include <cmath>
#include <complex>
#include <numbers>

namespace siegelab {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A point of the Riemann sphere: either a finite complex number or infinity.
class RiemannPoint {
 public:
  RiemannPoint() = default;
  RiemannPoint(Complex z) : z_(z), infinite_(!(std::isfinite(z.real()) && std::isfinite(z.imag()))) {}  // NOLINT

  static RiemannPoint infinity() {
    RiemannPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Finite value; meaningless when is_infinite().
  Complex value() const { return z_; }

  friend bool operator==(const RiemannPoint& a, const RiemannPoint& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.z_ == b.z_;
  }

 private:
  Complex z_{0.0, 0.0};
  bool infinite_ = false;
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// e^{2 pi i t}
inline Complex unit_root(double t) { return std::polar(1.0, kTwoPi * t); }

}  // namespace siegelab
