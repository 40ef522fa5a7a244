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

#include <doctest.h>

#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <limits>
#include <map>

#include "siegelab/errors.hpp"
#include "siegelab/rotation.hpp"
#include "siegelab/series.hpp"
#include "siegelab/siegel.hpp"

using namespace siegelab;

namespace {

const Complex kLambda = unit_root(kGoldenMean);

TaylorSeries quadratic(std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[1] = kLambda;
  c[2] = 1.0;
  return TaylorSeries(0.0, c);
}

// Cauchy integral by the trapezoid rule on |z - center| = r.
Complex cauchy_coefficient(const MapFamily& map, Complex center, std::size_t k, double r) {
  const int n = 512;
  Complex sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const Complex u = std::polar(1.0, kTwoPi * j / n);
    sum += eval(map, center + r * u).value() * std::pow(u, -static_cast<double>(k));
  }
  return sum / static_cast<double>(n) / std::pow(r, static_cast<double>(k));
}

double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const double cell = 0.02;
  std::map<std::pair<long, long>, std::vector<Complex>> grid;
  for (Complex p : b) grid[{std::lround(p.real() / cell), std::lround(p.imag() / cell)}].push_back(p);
  auto nearest = [&](Complex p) {
    double best = std::numeric_limits<double>::infinity();
    const long ix = std::lround(p.real() / cell), iy = std::lround(p.imag() / cell);
    for (long dx = -2; dx <= 2; ++dx) {
      for (long dy = -2; dy <= 2; ++dy) {
        auto it = grid.find({ix + dx, iy + dy});
        if (it == grid.end()) continue;
        for (Complex q : it->second) best = std::min(best, std::abs(p - q));
      }
    }
    return best;
  };
  double h = 0.0;
  for (Complex p : a) h = std::max(h, nearest(p));
  return h;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const TaylorSeries x = TaylorSeries::variable(0.0, 6);
  const TaylorSeries one = TaylorSeries::constant(0.0, 1.0, 6);
  const TaylorSeries geom = one + x + x * x + x * x * x + x * x * x * x + x * x * x * x * x + x * x * x * x * x * x;
  const TaylorSeries prod = (one - x) * geom;
  CHECK(std::abs(prod[0] - 1.0) < 1e-15);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(std::abs(prod[k]) < 1e-15);
  CHECK(std::abs((Complex(2.0) * x)[1] - 2.0) < 1e-15);
  CHECK(std::abs(geom.evaluate(0.5) - 1.984375) < 1e-15);
}

TEST_CASE("composition of elementary series") {
  const std::size_t n = 12;
  // sin^2 + cos^2 = 1 and exp(h) composed with h = sin gives exp(sin).
  const TaylorSeries s = sin_series(n), c = cos_series(n);
  const TaylorSeries one = s * s + c * c;
  CHECK(std::abs(one[0] - 1.0) < 1e-15);
  for (std::size_t k = 1; k <= n; ++k) CHECK(std::abs(one[k]) < 1e-15);
  const TaylorSeries es = compose(exp_series(n), s);
  const double z = 0.1;
  CHECK(std::abs(es.evaluate(z) - std::exp(std::sin(z))) < 1e-14);
}

TEST_CASE("taylor_at examples") {
  const MapFamily s = MapFamily::sine(kGoldenMean);
  const TaylorSeries ts = taylor_at(s, 0.0, 5);
  const Complex e = unit_root(kGoldenMean);
  CHECK(std::abs(ts[1] - e) < 1e-15);
  CHECK(std::abs(ts[2]) == 0.0);
  CHECK(std::abs(ts[3] + e / 6.0) < 1e-15);
  CHECK(std::abs(ts[4]) == 0.0);
  CHECK(std::abs(ts[5] - e / 120.0) < 1e-15);

  const Complex lambda(1.5, -0.5);
  const TaylorSeries tz = taylor_at(MapFamily::zexp(lambda), 0.0, 3);
  CHECK(std::abs(tz[1] - lambda) < 1e-15);
  CHECK(std::abs(tz[2] - lambda) < 1e-15);
  CHECK(std::abs(tz[3] - lambda / 2.0) < 1e-15);

  const MapFamily maps[] = {s, MapFamily::zexp(lambda), MapFamily::exp_affine({0.5, 2.0})};
  for (const auto& map : maps) {
    const Complex c(0.4, -0.2);
    CHECK(std::abs(taylor_at(map, c, 2)[1] - derivative(map, c)) < 1e-13);
  }
  CHECK_THROWS_AS(taylor_at(s, 0.0, 1), InvalidArgument);
}

TEST_CASE("taylor_at matches Cauchy integrals") {
  const MapFamily maps[] = {MapFamily::sine(0.3), MapFamily::zexp({1.5, -0.5}), MapFamily::exp_affine({0.5, 2.0})};
  const Complex c(0.4, -0.2);
  for (const auto& map : maps) {
    const TaylorSeries t = taylor_at(map, c, 20);
    for (std::size_t k = 0; k <= 20; ++k) {
      const Complex ref = cauchy_coefficient(map, c, k, 1.0);
      CHECK(std::abs(t[k] - ref) <= 1e-10 * std::max(std::abs(ref), 1e-3));
    }
  }
}

TEST_CASE("linearizer of the quadratic") {
  const Linearizer psi = linearizer(quadratic(40), 40);
  CHECK(psi.coeffs[1] == Complex(1.0));
  const Complex b2 = 1.0 / (kLambda * kLambda - kLambda);
  CHECK(std::abs(psi.coeffs[2] - b2) < 1e-12);
  // Order three by hand: lambda b3 + 2 b2 = lambda^3 b3.
  CHECK(std::abs(psi.coeffs[3] - 2.0 * b2 / (std::pow(kLambda, 3) - kLambda)) < 1e-12);
  const auto res = conjugacy_residual(quadratic(40), psi);
  for (std::size_t k = 0; k <= 40; ++k) CHECK(std::abs(res[k]) <= 1e-9);
  // For lambda z + z^2 the recursion is (lambda^k - lambda) b_k = sum_{i+j=k} b_i b_j; run it in 50 digits.
  using R = boost::multiprecision::cpp_bin_float_50;
  using C = boost::multiprecision::cpp_complex_50;
  const C lam(R(kLambda.real()), R(kLambda.imag()));
  std::vector<C> ref(41);
  ref[1] = 1;
  C lk = lam;
  for (std::size_t k = 2; k <= 40; ++k) {
    lk *= lam;
    C sum = 0;
    for (std::size_t i = 1; i < k; ++i) sum += ref[i] * ref[k - i];
    ref[k] = sum / (lk - lam);
  }
  for (std::size_t k = 1; k <= 40; ++k) {
    const C got = C(R(psi.coeffs[k].real()), R(psi.coeffs[k].imag())) + C(R(psi.coeffs_lo[k].real()), R(psi.coeffs_lo[k].imag()));
    CHECK(static_cast<double>(abs(got - ref[k]) / abs(ref[k])) < 1e-28);
  }
  // Rounded coefficients alone sit on the double floor: |b_40| is about 1.8e16.
  Linearizer rounded = psi;
  rounded.coeffs_lo.clear();
  CHECK(std::abs(conjugacy_residual(quadratic(40), rounded)[40]) > 1e-9);
}

TEST_CASE("linearizer of the sine") {
  const MapFamily s = MapFamily::sine(kGoldenMean);
  const TaylorSeries t = taylor_at(s, 0.0, 30);
  const Linearizer psi = linearizer(t, 30);
  CHECK(std::abs(psi.coeffs[2]) == 0.0);
  double worst = 0.0;
  for (Complex r : conjugacy_residual(t, psi)) worst = std::max(worst, std::abs(r));
  CHECK(worst <= 1e-9);
}

TEST_CASE("linearizer preconditions") {
  std::vector<Complex> c = {0.0, 1.0, 1.0};
  CHECK_THROWS_AS(linearizer(TaylorSeries(0.0, c), 2), SmallDivisorBlowup);
  std::vector<Complex> half = {0.0, unit_root(0.5), 1.0, 0.0};
  CHECK_THROWS_AS(linearizer(TaylorSeries(0.0, half), 3), SmallDivisorBlowup);
  std::vector<Complex> big = {0.0, 2.0, 1.0};
  CHECK_THROWS_AS(linearizer(TaylorSeries(0.0, big), 2), InvalidArgument);
}

TEST_CASE("inner_radius") {
  Linearizer id;
  id.multiplier = kLambda;
  id.coeffs.assign(21, Complex{});
  id.coeffs[1] = 1.0;
  CHECK(std::isinf(inner_radius(id)));

  Linearizer geo = id;
  const double r = 0.7;
  for (std::size_t k = 1; k <= 20; ++k) geo.coeffs[k] = std::pow(r, -static_cast<double>(k));
  CHECK(std::abs(inner_radius(geo) - r) <= 0.1 * r);

  const double r40 = inner_radius(linearizer(quadratic(40), 40));
  const double r60 = inner_radius(linearizer(quadratic(60), 60));
  CHECK(r60 > 0.0);
  CHECK(std::isfinite(r60));
  CHECK(std::abs(r40 - r60) <= 0.2 * r60);

  Linearizer short_one = id;
  short_one.coeffs.resize(5);
  CHECK_THROWS_AS(inner_radius(short_one), InvalidArgument);
}

TEST_CASE("golden sine boundary orbit") {
  const MapFamily s = MapFamily::sine(kGoldenMean);
  const BoundaryOrbit orbit = trace_boundary(s, unit_root(kGoldenMean), 100000, 10.0);
  REQUIRE_FALSE(orbit.escaped);
  CHECK(orbit.points.size() == 100001);
  CHECK(orbit.points[0] == unit_root(kGoldenMean));

  const RotationMeasurement m = measure_rotation_number(orbit, 0.0);
  CHECK(std::abs(m.rotation_number - kGoldenMean) < 5e-3);
  const auto cf = cf_expand(m.rotation_number, 4);
  CHECK(cf.to_string() == "[0;1,1,1,1]");

  // Image orbit winds at the same rate.
  BoundaryOrbit image = orbit;
  image.points.erase(image.points.begin());
  const RotationMeasurement mi = measure_rotation_number(image, 0.0);
  CHECK(std::abs(mi.rotation_number - m.rotation_number) <= 2.0 / 100000.0);
}

TEST_CASE("boundary is forward invariant") {
  const MapFamily s = MapFamily::sine(kGoldenMean);
  const BoundaryOrbit orbit = trace_boundary(s, unit_root(kGoldenMean), 20000, 10.0);
  REQUIRE_FALSE(orbit.escaped);
  std::vector<Complex> tail(orbit.points.begin() + 10000, orbit.points.end());
  std::vector<Complex> image;
  for (Complex p : tail) image.push_back(eval(s, p).value());
  CHECK(hausdorff(tail, image) < 1e-3);
  CHECK(hausdorff(image, tail) < 1e-3);
}

TEST_CASE("zexp with real positive lambda keeps the critical orbit bounded") {
  // x -> 4 x e^x maps [-4/e, 0) into itself; iterate independently.
  long double x = -4.0L / std::exp(1.0L);
  for (int i = 0; i < 100; ++i) {
    x = 4.0L * x * std::exp(x);
    REQUIRE(x < 0.0L);
    REQUIRE(x >= -4.0L / std::exp(1.0L) - 1e-15L);
  }
  const BoundaryOrbit orbit = trace_boundary(MapFamily::zexp(4.0), -4.0 / std::exp(1.0), 100, 1e6);
  CHECK_FALSE(orbit.escaped);
  CHECK(std::abs(orbit.points.back().real() - static_cast<double>(x)) < 1e-6);
  CHECK(trace_boundary(MapFamily::zexp(4.0), 3.0, 100, 1e6).escaped);
}

TEST_CASE("fixed points and degenerate orbits") {
  const MapFamily s = MapFamily::sine(kGoldenMean);
  const BoundaryOrbit fixed = trace_boundary(s, 0.0, 10, 10.0);
  for (Complex p : fixed.points) CHECK(std::abs(p) < 1e-9);
  CHECK_THROWS_AS(measure_rotation_number(fixed, 0.0), DegenerateOrbit);
  const MapFamily f = MapFamily::zexp(0.5);
  const Complex q = -std::log(0.5);
  const BoundaryOrbit fq = trace_boundary(f, q, 10, 10.0);
  CHECK_THROWS_AS(measure_rotation_number(fq, 0.0), DegenerateOrbit);
  CHECK(trace_boundary(s, {0.0, 5.0}, 10, 10.0).escaped);
}

TEST_CASE("rigid rotation") {
  for (double theta : {kGoldenMean, 0.1, 0.9, std::sqrt(2.0) - 1.0}) {
    BoundaryOrbit orbit;
    for (int k = 0; k <= 10000; ++k) orbit.points.push_back(2.0 * unit_root(theta * k));
    orbit.seed = orbit.points.front();
    const RotationMeasurement m = measure_rotation_number(orbit, 0.0);
    CHECK(std::abs(m.rotation_number - theta) < 1e-4);
  }
}
