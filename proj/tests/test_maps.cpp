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

#include <cmath>
#include <random>

#include "siegelab/errors.hpp"
#include "siegelab/maps.hpp"
#include "siegelab/rotation.hpp"

using namespace siegelab;

namespace {

const double kTheta = kGoldenMean;

Complex random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  for (;;) {
    Complex z(u(rng), u(rng));
    if (std::abs(z) <= radius) return z;
  }
}

}  // namespace

TEST_CASE("eval examples") {
  CHECK(eval(MapFamily::sine(0.3), 0.0).value() == Complex(0.0));
  CHECK(eval(MapFamily::zexp({2.0, 1.0}), 0.0).value() == Complex(0.0));
  CHECK(std::abs(eval(MapFamily::sine(0.0), kPi / 2).value() - 1.0) < 1e-15);
  CHECK(eval(MapFamily::sine(kTheta), {0.0, 1000.0}).is_infinite());
  CHECK(eval(MapFamily::zexp(2.0), 800.0).is_infinite());
}

TEST_CASE("parameters are validated") {
  CHECK_THROWS_AS(MapFamily::zexp(0.0), InvalidArgument);
  CHECK_THROWS_AS(MapFamily::exp_affine({NAN, 0.0}), InvalidArgument);
  CHECK(MapFamily::sine(1.25).name() == "sine");
  CHECK(MapFamily::sine(kTheta).in_class_b());
  CHECK(MapFamily::zexp(2.0).in_class_b());
  CHECK_FALSE(MapFamily::exp_affine(2.0).in_class_b());
}

TEST_CASE("derivative examples") {
  const Complex lambda(2.5, -1.0);
  CHECK(std::abs(derivative(MapFamily::sine(kTheta), 0.0) - unit_root(kTheta)) < 1e-15);
  CHECK(std::abs(derivative(MapFamily::zexp(lambda), 0.0) - lambda) < 1e-15);
  CHECK(std::abs(derivative(MapFamily::zexp(lambda), -1.0)) < 1e-15);
}

TEST_CASE("derivative matches central differences") {
  std::mt19937_64 rng(11);
  const MapFamily maps[] = {MapFamily::sine(kTheta), MapFamily::zexp({1.5, 0.7}), MapFamily::exp_affine({-2.0, 1.0})};
  for (const auto& map : maps) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Complex z = random_point(rng, 3.0);
      const double h = 1e-5;
      const Complex fd = (eval(map, z + h).value() - eval(map, z - h).value()) / (2.0 * h);
      const Complex d = derivative(map, z);
      worst = std::max(worst, std::abs(fd - d) / std::max(1.0, std::abs(d)));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("singular data") {
  const auto zexp = singular_data(MapFamily::zexp(std::exp(1.0)));
  REQUIRE(zexp.critical_values.size() == 1);
  CHECK(std::abs(zexp.critical_values[0] - Complex(-1.0)) < 1e-15);
  REQUIRE(zexp.asymptotic_values.size() == 1);
  CHECK(zexp.asymptotic_values[0] == Complex(0.0));
  CHECK(zexp.critical_points == std::vector<Complex>{Complex(-1.0)});

  const auto sine = singular_data(MapFamily::sine(kTheta));
  CHECK(sine.asymptotic_values.empty());
  REQUIRE(sine.critical_values.size() == 2);
  CHECK(std::abs(sine.critical_values[0] + sine.critical_values[1]) < 1e-15);
  CHECK(std::abs(std::abs(sine.critical_values[0]) - 1.0) < 1e-15);

  const Complex lambda(0.3, 2.0);
  const MapFamily g = MapFamily::exp_affine(lambda);
  const auto ea = singular_data(g);
  REQUIRE(ea.critical_point_lattice);
  REQUIRE(ea.critical_value_lattice);
  CHECK(ea.asymptotic_values.empty());
  for (long k = -3; k <= 3; ++k) {
    const Complex c(0.0, (2.0 * static_cast<double>(k) + 1.0) * kPi);
    CHECK(std::abs(ea.critical_point_lattice->at(k) - c) < 1e-15);
    CHECK(std::abs(derivative(g, c)) < 1e-12);
    CHECK(std::abs(ea.critical_value_lattice->at(k) - eval(g, c).value()) < 1e-12);
  }
}

TEST_CASE("distance to the singular set") {
  const MapFamily s = MapFamily::sine(kTheta);
  CHECK(distance_to_singular_set(s, unit_root(kTheta)) < 1e-15);
  CHECK(std::abs(distance_to_singular_set(s, 0.0) - 1.0) < 1e-15);
  const MapFamily g = MapFamily::exp_affine(1.0);
  CHECK(std::abs(distance_to_singular_set(g, Complex(-1.0, 3.0 * kPi + 0.25)) - 0.25) < 1e-12);
}

TEST_CASE("lambert_w examples") {
  CHECK(lambert_w(0, 0.0) == Complex(0.0));
  CHECK(std::abs(lambert_w(0, std::exp(1.0)) - 1.0) < 1e-15);
  CHECK(std::abs(lambert_w(-1, -std::exp(-1.0)) + 1.0) < 1e-7);
  CHECK_THROWS_AS(lambert_w(1, 0.0), DomainError);
  CHECK_THROWS_AS(lambert_w(-1, 0.0), DomainError);
}

TEST_CASE("lambert_w against reference values") {
  // 30-digit reference evaluations of W_k(z).
  struct Ref {
    int k;
    Complex z, w;
  };
  const Ref refs[] = {
      {0, 1.0, {0.56714329040978387, 0.0}},
      {0, -0.2, {-0.25917110181907376, 0.0}},
      {0, {2.0, 3.0}, {1.0900765344857908, 0.5301397207748388}},
      {-1, -0.2, {-2.5426413577735263, 0.0}},
      {-1, {1.0, 1.0}, {-0.98696957322127523, -3.663857003284792}},
      {1, {1.0, 1.0}, {-1.3428489407008043, 5.2472493742914012}},
      {1, -3.0, {-0.95420835845684201, 7.7311792937569602}},
      {2, {0.0, 0.5}, {-3.2369290624978424, 12.30922474287153}},
      {-2, {-10.0, 0.1}, {0.23610002678969789, -7.8938816302461855}},
      {0, -2.0, {0.17281600283999998, 1.6736864137408427}},
  };
  for (const auto& r : refs) {
    CAPTURE(r.k);
    CAPTURE(r.z);
    CHECK(std::abs(lambert_w(r.k, r.z) - r.w) < 1e-13 * (1.0 + std::abs(r.w)));
  }
}

TEST_CASE("lambert_w residual on three branches") {
  std::mt19937_64 rng(5);
  for (int k : {-1, 0, 1}) {
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const Complex z = random_point(rng, 20.0);
      if (std::abs(z + std::exp(-1.0)) < 1e-6 || std::abs(z) < 1e-12) continue;
      const Complex w = lambert_w(k, z);
      worst = std::max(worst, std::abs(w * std::exp(w) - z) / (1.0 + std::abs(z)));
      CHECK(lambert_branch_of(w) == k);
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("wright omega solves w + log w = t") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Complex t = random_point(rng, 30.0);
    const Complex w = wright_omega(t);
    CHECK(std::abs(w + std::log(w) - t) < 1e-12 * (1.0 + std::abs(t)));
  }
}

TEST_CASE("inverse_branch examples") {
  const MapFamily s = MapFamily::sine(kTheta);
  const Complex z0(0.3, 0.1);
  CHECK(std::abs(inverse_branch(s, eval(s, z0).value(), {0}) - z0) < 1e-14);
  CHECK_THROWS_AS(inverse_branch(s, unit_root(kTheta), {0}), NearSingularValue);

  // Independent check: z e^z = w / lambda.
  const MapFamily f = MapFamily::zexp(2.0);
  const Complex w = eval(f, -0.5).value();
  const Complex z = inverse_branch(f, w, {0});
  CHECK(std::abs(z + 0.5) < 1e-14);
  CHECK(std::abs(z * std::exp(z) - w / 2.0) < 1e-15);
  CHECK_THROWS_AS(inverse_branch(f, 0.0, {0}), NearSingularValue);
  CHECK_THROWS_AS(inverse_branch(f, -2.0 / std::exp(1.0), {-1}), NearSingularValue);
}

TEST_CASE("round trip through the nearest branch") {
  std::mt19937_64 rng(17);
  const MapFamily maps[] = {MapFamily::sine(kTheta), MapFamily::zexp({1.5, 0.7}), MapFamily::exp_affine({-2.0, 1.0})};
  for (const auto& map : maps) {
    CAPTURE(map.name());
    double worst = 0.0;
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
      const Complex z = random_point(rng, 5.0);
      const Complex w = eval(map, z).value();
      if (distance_to_singular_set(map, w) < 1e-6) continue;
      const Complex back = inverse_branch(map, w, branch_of(map, z));
      worst = std::max(worst, std::abs(back - z));
      ++checked;
    }
    CHECK(checked > 9900);
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("different branches give different preimages") {
  const MapFamily g = MapFamily::exp_affine({1.0, 1.0});
  const Complex w(0.4, -0.3);
  for (int j = -3; j <= 3; ++j) {
    const Complex z = inverse_branch(g, w, {j});
    CHECK(std::abs(eval(g, z).value() - w) < 1e-10 * (1.0 + std::abs(w)));
    CHECK(branch_of(g, z).index == j);
  }
  const MapFamily s = MapFamily::sine(kTheta);
  for (int k = -3; k <= 3; ++k) {
    const Complex z = inverse_branch(s, w, {k});
    CHECK(std::abs(eval(s, z).value() - w) < 1e-12);
    CHECK(branch_of(s, z).index == k);
  }
}
