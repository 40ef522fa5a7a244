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

#include "siegelab/maps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "siegelab/errors.hpp"

namespace siegelab {

namespace {

constexpr double kSingularTolerance = 1e-9;
const double kInvE = std::exp(-1.0);
const double kE = std::exp(1.0);

// Halley iteration on f(w) = w - z e^{-w}, which stays finite on every branch.
std::optional<Complex> halley_lambert(Complex z, Complex w) {
  for (int it = 0; it < 64; ++it) {
    const Complex t = z * std::exp(-w);
    const Complex f = w - t;
    const Complex fp = 1.0 + t;
    const Complex fpp = -t;
    const Complex denom = 2.0 * fp * fp - f * fpp;
    if (denom == 0.0 || !is_finite(denom)) return std::nullopt;
    const Complex step = 2.0 * f * fp / denom;
    w -= step;
    if (!is_finite(w)) return std::nullopt;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(w))) {
      return w;
    }
  }
  return w;
}

Complex branch_point_series(Complex z, double sign) {
  const Complex p = sign * std::sqrt(2.0 * (kE * z + 1.0));
  return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
}

Complex asymptotic_guess(Complex z, int k) {
  const Complex l1 = std::log(z) + Complex(0.0, kTwoPi * k);
  const Complex l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

MapFamily MapFamily::sine(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("sine: theta must be finite");
  return MapFamily(Sine{theta - std::floor(theta)});
}

MapFamily MapFamily::zexp(Complex lambda) {
  if (lambda == 0.0 || !is_finite(lambda)) throw InvalidArgument("zexp: lambda must be finite and nonzero");
  return MapFamily(ZExp{lambda});
}

MapFamily MapFamily::exp_affine(Complex lambda) {
  if (lambda == 0.0 || !is_finite(lambda)) throw InvalidArgument("expaffine: lambda must be finite and nonzero");
  return MapFamily(ExpAffine{lambda});
}

std::string MapFamily::name() const {
  struct Visitor {
    std::string operator()(const Sine&) const { return "sine"; }
    std::string operator()(const ZExp&) const { return "zexp"; }
    std::string operator()(const ExpAffine&) const { return "expaffine"; }
  };
  return std::visit(Visitor{}, variant_);
}

bool MapFamily::in_class_b() const {
  // The exp-affine family has an unbounded lattice of critical values.
  return !std::holds_alternative<ExpAffine>(variant_);
}

RiemannPoint eval(const MapFamily& map, Complex z) {
  struct Visitor {
    Complex z;
    Complex operator()(const Sine& s) const { return unit_root(s.theta) * std::sin(z); }
    Complex operator()(const ZExp& f) const { return f.lambda * z * std::exp(z); }
    Complex operator()(const ExpAffine& g) const { return std::exp(z) + z + std::log(g.lambda); }
  };
  return RiemannPoint(std::visit(Visitor{z}, map.variant()));
}

Complex derivative(const MapFamily& map, Complex z) {
  struct Visitor {
    Complex z;
    Complex operator()(const Sine& s) const { return unit_root(s.theta) * std::cos(z); }
    Complex operator()(const ZExp& f) const { return f.lambda * (1.0 + z) * std::exp(z); }
    Complex operator()(const ExpAffine&) const { return std::exp(z) + 1.0; }
  };
  return std::visit(Visitor{z}, map.variant());
}

SingularData singular_data(const MapFamily& map) {
  struct Visitor {
    SingularData operator()(const Sine& s) const {
      SingularData d;
      d.critical_point_lattice = Lattice{Complex(kPi / 2, 0.0), Complex(kPi, 0.0)};
      const Complex v = unit_root(s.theta);
      d.critical_values = {v, -v};
      return d;
    }
    SingularData operator()(const ZExp& f) const {
      SingularData d;
      d.critical_points = {Complex(-1.0, 0.0)};
      d.critical_values = {-f.lambda * kInvE};
      d.asymptotic_values = {Complex(0.0, 0.0)};
      return d;
    }
    SingularData operator()(const ExpAffine& g) const {
      SingularData d;
      d.critical_point_lattice = Lattice{Complex(0.0, kPi), Complex(0.0, kTwoPi)};
      d.critical_value_lattice = Lattice{Complex(-1.0, kPi) + std::log(g.lambda), Complex(0.0, kTwoPi)};
      return d;
    }
  };
  return std::visit(Visitor{}, map.variant());
}

double distance_to_singular_set(const MapFamily& map, Complex w) {
  const SingularData d = singular_data(map);
  double best = std::numeric_limits<double>::infinity();
  for (Complex v : d.critical_values) best = std::min(best, std::abs(w - v));
  for (Complex v : d.asymptotic_values) best = std::min(best, std::abs(w - v));
  if (d.critical_value_lattice) {
    const Lattice& l = *d.critical_value_lattice;
    // Lattice steps are purely imaginary here; project onto the step direction.
    const Complex rel = (w - l.base) / l.step;
    const double k = std::round(rel.real());
    for (double dk : {-1.0, 0.0, 1.0}) best = std::min(best, std::abs(w - l.at(static_cast<long>(k + dk))));
  }
  return best;
}

Complex lambert_w(int branch, Complex w) {
  if (w == 0.0) {
    if (branch == 0) return 0.0;
    throw DomainError("lambert_w: w = 0 is a singularity of every branch other than 0");
  }
  if (!is_finite(w)) throw DomainError("lambert_w: w must be finite");
  if (std::abs(w + kInvE) < 1e-300) return -1.0;

  std::array<Complex, 5> guesses{};
  std::size_t count = 0;
  const bool near_branch_point = std::abs(w + kInvE) < 0.3;
  if (branch == 0) {
    if (near_branch_point) guesses[count++] = branch_point_series(w, 1.0);
    if (std::abs(w) < 1.0) guesses[count++] = std::log(1.0 + w);
    guesses[count++] = asymptotic_guess(w, 0);
    guesses[count++] = w;
  } else {
    if (near_branch_point && ((branch == -1 && w.imag() >= 0.0) || (branch == 1 && w.imag() < 0.0))) {
      guesses[count++] = branch_point_series(w, -1.0);
    }
    guesses[count++] = asymptotic_guess(w, branch);
    if (branch == -1 || branch == 1) guesses[count++] = branch_point_series(w, -1.0);
  }

  std::optional<Complex> fallback;
  for (std::size_t i = 0; i < count; ++i) {
    const auto root = halley_lambert(w, guesses[i]);
    if (!root) continue;
    if (!fallback) fallback = root;
    if (*root != 0.0 && lambert_branch_of(*root) == branch) return *root;
    if (*root == 0.0 && branch == 0) return *root;
  }
  if (fallback && std::abs(std::imag(w)) == 0.0) return *fallback;
  throw NoConvergence("lambert_w: iteration did not settle on the requested branch");
}

int lambert_branch_of(Complex z) {
  if (z == 0.0) return 0;
  // On the real axis the unwinding formula sits on a cut; W_{-1} owns (-inf, -1).
  if (z.imag() == 0.0) return z.real() < -1.0 ? -1 : 0;
  const Complex w = z * std::exp(z);
  const Complex k = (z + std::log(z) - std::log(w)) / Complex(0.0, kTwoPi);
  return static_cast<int>(std::lround(k.real()));
}

Complex wright_omega(Complex t) {
  // Unwinding number K(t) selects the Lambert branch with y = W_K(e^t).
  const int unwind = static_cast<int>(std::ceil((t.imag() - kPi) / kTwoPi));
  Complex y;
  if (t.real() < 600.0) {
    const Complex et = std::exp(t);
    y = (et == 0.0) ? et : lambert_w(unwind, et);
    if (et == 0.0) return y;
  } else {
    y = t - std::log(t);
  }
  for (int it = 0; it < 50; ++it) {
    const Complex r = y + std::log(y) - t;
    const Complex step = r / (1.0 + 1.0 / y);
    y -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(y))) break;
  }
  return y;
}

Complex inverse_branch(const MapFamily& map, Complex w, BranchSelector branch) {
  if (distance_to_singular_set(map, w) < kSingularTolerance) {
    throw NearSingularValue("inverse_branch: target lies on a singular value");
  }
  struct Visitor {
    Complex w;
    int k;
    Complex operator()(const Sine& s) const {
      const Complex principal = std::asin(std::conj(unit_root(s.theta)) * w);
      return (k % 2 == 0 ? principal : -principal) + kPi * static_cast<double>(k);
    }
    Complex operator()(const ZExp& f) const { return lambert_w(k, w / f.lambda); }
    Complex operator()(const ExpAffine& g) const {
      const Complex c = w - std::log(g.lambda);
      return c - wright_omega(c + Complex(0.0, kTwoPi * k));
    }
  };
  Complex z = std::visit(Visitor{w, branch.index}, map.variant());

  // Newton polish; damped for the exp-affine family where the seed is coarser.
  const bool damped = std::holds_alternative<ExpAffine>(map.variant());
  const double tol = 1e-13 * (1.0 + std::abs(w));
  for (int it = 0; it < 40; ++it) {
    const RiemannPoint fz = eval(map, z);
    if (fz.is_infinite()) throw NoConvergence("inverse_branch: iterate overflowed");
    const Complex r = fz.value() - w;
    if (std::abs(r) <= tol) return z;
    const Complex step = r / derivative(map, z);
    if (!damped) {
      z -= step;
      continue;
    }
    double t = 1.0;
    while (t > 1e-4) {
      const RiemannPoint trial = eval(map, z - t * step);
      if (trial.is_finite() && std::abs(trial.value() - w) < std::abs(r)) break;
      t *= 0.5;
    }
    z -= t * step;
  }
  const RiemannPoint fz = eval(map, z);
  if (fz.is_finite() && std::abs(fz.value() - w) <= 1e-10 * (1.0 + std::abs(w))) return z;
  throw NoConvergence("inverse_branch: Newton polish did not converge");
}

BranchSelector branch_of(const MapFamily& map, Complex z) {
  struct Visitor {
    Complex z;
    int operator()(const Sine&) const { return static_cast<int>(std::lround(z.real() / kPi)); }
    int operator()(const ZExp&) const { return lambert_branch_of(z); }
    int operator()(const ExpAffine&) const { return -static_cast<int>(std::lround(z.imag() / kTwoPi)); }
  };
  return BranchSelector{std::visit(Visitor{z}, map.variant())};
}

}  // namespace siegelab
