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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "siegelab/complex.hpp"

namespace siegelab {

/// S(z) = e^{2 pi i theta} sin z.
struct Sine {
  double theta = 0.0;
};

/// f(z) = lambda z e^z.
struct ZExp {
  Complex lambda{1.0, 0.0};
};

/// g(z) = e^z + z + Log(lambda), principal logarithm.
struct ExpAffine {
  Complex lambda{1.0, 0.0};
};

/// A concrete transcendental entire map. Immutable once built.
class MapFamily {
 public:
  using Variant = std::variant<Sine, ZExp, ExpAffine>;

  static MapFamily sine(double theta);
  static MapFamily zexp(Complex lambda);
  static MapFamily exp_affine(Complex lambda);

  const Variant& variant() const { return variant_; }
  std::string name() const;

  /// Whether the family belongs to the class of maps with bounded singular set.
  /// Stored per family, not computed.
  bool in_class_b() const;

 private:
  explicit MapFamily(Variant v) : variant_(v) {}
  Variant variant_;
};

/// z = base + k * step for all integers k.
struct Lattice {
  Complex base;
  Complex step;

  Complex at(long k) const { return base + static_cast<double>(k) * step; }
};

struct SingularData {
  std::optional<Lattice> critical_point_lattice;
  std::vector<Complex> critical_points;
  std::optional<Lattice> critical_value_lattice;
  std::vector<Complex> critical_values;
  std::vector<Complex> asymptotic_values;
};

/// Integer index of a local inverse branch. Sine: arcsin sheet k;
/// ZExp: Lambert W branch k; ExpAffine: horizontal strip index.
struct BranchSelector {
  int index = 0;
  friend bool operator==(BranchSelector, BranchSelector) = default;
};

/// Exact value of the map; overflow yields the point at infinity.
RiemannPoint eval(const MapFamily& map, Complex z);

/// Analytic derivative.
Complex derivative(const MapFamily& map, Complex z);

SingularData singular_data(const MapFamily& map);

/// Distance from w to the nearest finite singular value of the map.
double distance_to_singular_set(const MapFamily& map, Complex w);

/// Branch k of the Lambert W function (principal-branch conventions):
/// returns z with z e^z = w. Throws DomainError for w = 0 on branch k != 0.
Complex lambert_w(int branch, Complex w);

/// The branch index k for which lambert_w(k, z e^z) returns z.
int lambert_branch_of(Complex z);

/// Unique y with y + Log(y) = t (the Wright omega function).
Complex wright_omega(Complex t);

/// Local inverse: z with eval(map, z) = w on the requested branch.
/// Throws NearSingularValue when w is within 1e-9 of a singular value and
/// NoConvergence when the ExpAffine polish fails.
Complex inverse_branch(const MapFamily& map, Complex w, BranchSelector branch);

/// The branch whose inverse_branch maps eval(map, z) back to z.
BranchSelector branch_of(const MapFamily& map, Complex z);

}  // namespace siegelab
