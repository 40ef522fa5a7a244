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

#include <cstdint>
#include <functional>

#include "siegelab/complex.hpp"
#include "siegelab/pullback.hpp"

namespace siegelab {

/// Circle reflection z -> 1/conj(z); swaps 0 and infinity.
RiemannPoint reflect(const RiemannPoint& z);

/// Exterior map, evaluated on |z| >= 1.
struct OuterMap {
  std::function<RiemannPoint(Complex)> value;
  std::function<Complex(Complex)> derivative;  // may be empty
};

class SymmetricModel {
 public:
  explicit SymmetricModel(OuterMap outer) : outer_(std::move(outer)) {}

  /// outer(z) for |z| >= 1, reflect(outer(reflect(z))) inside the disk.
  RiemannPoint operator()(const RiemannPoint& z) const;
  const OuterMap& outer() const { return outer_; }

 private:
  OuterMap outer_;
};

SymmetricModel build_model(OuterMap outer);

struct Mobius {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  RiemannPoint operator()(const RiemannPoint& z) const;
  Complex derivative(Complex z) const;
  Mobius inverse() const { return Mobius{d, -b, -c, a}; }
};

/// phi o f o phi^{-1}, with slope, singular distance and inverse branches
/// transported through phi.
LocalMap conjugate(const LocalMap& f, const Mobius& phi);

OuterMap outer_map(const LocalMap& f);

/// LocalMap whose values come from the model; slope and inverse branches are
/// those of `outer` and are valid on |z| >= 1.
LocalMap model_local_map(const SymmetricModel& model, const LocalMap& outer);

struct SymmetryReport {
  std::size_t samples = 0;
  double max_deviation = 0.0;
  Complex worst_point;
};

/// Largest chordal distance between g(reflect(z)) and reflect(g(z)) over
/// points with log|z| uniform in [-log_radius, log_radius].
SymmetryReport verify_symmetry(const std::function<RiemannPoint(Complex)>& g, std::size_t samples,
                               std::uint64_t rng_seed, double log_radius = 2.0);
SymmetryReport verify_symmetry(const SymmetricModel& model, std::size_t samples, std::uint64_t rng_seed,
                               double log_radius = 2.0);

}  // namespace siegelab
