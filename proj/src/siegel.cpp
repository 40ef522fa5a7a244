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

#include "siegelab/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_complex.hpp>

#include "siegelab/errors.hpp"

namespace siegelab {

namespace {

constexpr double kSmallDivisorFloor = 1e-12;

using QComplex = boost::multiprecision::cpp_complex_quad;

QComplex to_quad(Complex z) { return QComplex(z.real(), z.imag()); }

void split(const QComplex& q, Complex& hi, Complex& lo) {
  using Real = boost::multiprecision::cpp_bin_float_quad;
  const double hr = static_cast<double>(q.real()), hi_i = static_cast<double>(q.imag());
  hi = Complex(hr, hi_i);
  lo = Complex(static_cast<double>(Real(q.real() - hr)), static_cast<double>(Real(q.imag() - hi_i)));
}

// Steps closer than this to the unwrap cut are counted as ambiguous.
constexpr double kUnwrapSlack = 1e-2;

}  // namespace

TaylorSeries Linearizer::as_series() const { return TaylorSeries(0.0, coeffs); }

TaylorSeries taylor_at(const MapFamily& map, Complex center, std::size_t order) {
  if (order < 2) throw InvalidArgument("taylor_at: order must be >= 2");
  const TaylorSeries h = TaylorSeries::variable(0.0, order);
  struct Visitor {
    Complex c;
    const TaylorSeries& h;
    std::size_t order;
    TaylorSeries operator()(const Sine& s) const {
      // sin(c + h) = sin c cos h + cos c sin h
      return unit_root(s.theta) * (std::sin(c) * cos_series(order) + std::cos(c) * sin_series(order));
    }
    TaylorSeries operator()(const ZExp& f) const {
      const TaylorSeries linear = TaylorSeries::constant(0.0, c, order) + h;
      return (f.lambda * std::exp(c)) * (linear * exp_series(order));
    }
    TaylorSeries operator()(const ExpAffine& g) const {
      const TaylorSeries affine = TaylorSeries::constant(0.0, c + std::log(g.lambda), order) + h;
      return std::exp(c) * exp_series(order) + affine;
    }
  };
  const TaylorSeries local = std::visit(Visitor{center, h, order}, map.variant());
  return TaylorSeries(center, std::vector<Complex>(local.coeffs().begin(), local.coeffs().end()));
}

Linearizer linearizer(const TaylorSeries& series, std::size_t order) {
  if (order < 1 || series.order() < order) throw InvalidArgument("linearizer: series order too small");
  const Complex lambda = series[1];
  if (std::abs(std::abs(lambda) - 1.0) > 1e-9) throw InvalidArgument("linearizer: multiplier must be unimodular");
  if (std::abs(series[0] - series.center()) > 1e-9 * (1.0 + std::abs(series.center()))) {
    throw InvalidArgument("linearizer: series is not centred at a fixed point");
  }

  const QComplex ql = to_quad(lambda);
  // pw[j][m]: coefficient m of psi^j. Coefficient k of psi^j, j >= 2, only involves b_1..b_{k-1}.
  std::vector<std::vector<QComplex>> pw(order + 1, std::vector<QComplex>(order + 1));
  std::vector<QComplex> b(order + 1);
  b[1] = 1;
  pw[1][1] = 1;

  QComplex lambda_k = ql;
  for (std::size_t k = 2; k <= order; ++k) {
    lambda_k *= ql;
    const QComplex divisor = lambda_k - ql;
    if (abs(divisor) < kSmallDivisorFloor) {
      throw SmallDivisorBlowup("linearizer: |lambda^k - lambda| below floor at k = " + std::to_string(k));
    }
    QComplex known = 0;
    for (std::size_t j = k; j >= 2; --j) {
      QComplex c = 0;
      for (std::size_t i = 1; i + (j - 1) <= k; ++i) c += b[i] * pw[j - 1][k - i];
      pw[j][k] = c;
      if (series[j] != Complex{}) known += to_quad(series[j]) * c;
    }
    b[k] = known / divisor;
    pw[1][k] = b[k];
  }

  Linearizer psi;
  psi.multiplier = lambda;
  psi.center = series.center();
  psi.coeffs.resize(order + 1);
  psi.coeffs_lo.resize(order + 1);
  for (std::size_t k = 1; k <= order; ++k) split(b[k], psi.coeffs[k], psi.coeffs_lo[k]);
  return psi;
}

std::vector<Complex> conjugacy_residual(const TaylorSeries& series, const Linearizer& psi) {
  const std::size_t n = psi.order();
  std::vector<QComplex> b(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    b[k] = to_quad(psi.coeffs[k]);
    if (k < psi.coeffs_lo.size()) b[k] += to_quad(psi.coeffs_lo[k]);
  }
  // f(psi) - f(0) through order n, accumulated over powers of psi.
  std::vector<QComplex> lhs(n + 1), power(n + 1), next(n + 1);
  power[0] = 1;
  for (std::size_t j = 1; j <= std::min(n, series.order()); ++j) {
    std::fill(next.begin(), next.end(), QComplex(0));
    for (std::size_t m = 0; m <= n; ++m) {
      if (power[m] == QComplex(0)) continue;
      for (std::size_t i = 1; i + m <= n; ++i) next[i + m] += power[m] * b[i];
    }
    power.swap(next);
    if (series[j] == Complex{}) continue;
    const QComplex a = to_quad(series[j]);
    for (std::size_t m = 0; m <= n; ++m) lhs[m] += a * power[m];
  }
  std::vector<Complex> out(n + 1);
  QComplex lambda_k = 1;
  const QComplex ql = to_quad(psi.multiplier);
  for (std::size_t k = 0; k <= n; ++k) {
    const QComplex r = lhs[k] - b[k] * lambda_k;
    out[k] = Complex(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    lambda_k *= ql;
  }
  return out;
}

BoundaryOrbit trace_boundary(const MapFamily& map, Complex seed, std::size_t n, double escape_radius) {
  if (n < 1) throw InvalidArgument("trace_boundary: n must be >= 1");
  BoundaryOrbit orbit;
  orbit.seed = seed;
  orbit.points.reserve(n + 1);
  orbit.points.push_back(seed);
  Complex z = seed;
  for (std::size_t i = 0; i < n; ++i) {
    const RiemannPoint next = eval(map, z);
    if (next.is_infinite()) {
      orbit.escaped = true;
      break;
    }
    z = next.value();
    orbit.points.push_back(z);
    if (std::abs(z) > escape_radius) {
      orbit.escaped = true;
      break;
    }
  }
  return orbit;
}

RotationMeasurement measure_rotation_number(const BoundaryOrbit& orbit, Complex center) {
  if (orbit.escaped) throw DegenerateOrbit("measure_rotation_number: orbit escaped");
  if (orbit.points.size() < 2) throw DegenerateOrbit("measure_rotation_number: need at least one step");
  const std::size_t n = orbit.points.size() - 1;

  std::vector<double> steps(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = orbit.points[i] - center;
    const Complex b = orbit.points[i + 1] - center;
    if (a == 0.0 || b == 0.0) throw DegenerateOrbit("measure_rotation_number: orbit meets the centre");
    if (orbit.points[i] == orbit.points[i + 1]) throw DegenerateOrbit("measure_rotation_number: stationary orbit");
    double t = std::arg(b / a) / kTwoPi;
    t -= std::floor(t);
    steps[i] = t;
  }

  // Unwrap every step into a common unit window whose cut sits in the widest
  // empty gap of the step distribution.
  std::vector<double> sorted = steps;
  std::sort(sorted.begin(), sorted.end());
  double best_gap = sorted.front() + 1.0 - sorted.back();
  double cut = std::fmod(sorted.back() + 0.5 * best_gap, 1.0);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double gap = sorted[i] - sorted[i - 1];
    if (gap > best_gap) {
      best_gap = gap;
      cut = sorted[i - 1] + 0.5 * gap;
    }
  }

  double total = 0.0;
  std::size_t ambiguous = 0;
  for (double t : steps) {
    double u = t - cut;
    u -= std::floor(u);
    if (u < kUnwrapSlack || u > 1.0 - kUnwrapSlack) ++ambiguous;
    total += u + cut;
  }
  double rho = total / static_cast<double>(n);
  rho -= std::floor(rho);

  RotationMeasurement m;
  m.rotation_number = rho;
  m.steps = n;
  m.error_bound = (1.0 + static_cast<double>(ambiguous)) / static_cast<double>(n);
  return m;
}

double inner_radius(const Linearizer& psi) {
  const std::size_t n = psi.order();
  if (n < 10) throw InvalidArgument("inner_radius: need at least 10 coefficients");
  double root = 0.0;
  for (std::size_t k = n / 2; k <= n; ++k) {
    const double a = std::abs(psi.coeffs[k]);
    if (a > 0.0) root = std::max(root, std::pow(a, 1.0 / static_cast<double>(k)));
  }
  return root == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / root;
}

}  // namespace siegelab
