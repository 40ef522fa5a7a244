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

#include "siegelab/blaschke.hpp"

#include <cmath>

#include "siegelab/errors.hpp"

namespace siegelab {

RiemannPoint reflect(const RiemannPoint& z) {
  if (z.is_infinite()) return Complex(0.0);
  if (z.value() == 0.0) return RiemannPoint::infinity();
  return 1.0 / std::conj(z.value());
}

RiemannPoint SymmetricModel::operator()(const RiemannPoint& z) const {
  if (z.is_infinite()) throw DomainError("symmetric model: infinity is not in the domain");
  const Complex w = z.value();
  if (w == 0.0) throw EvalAtZero("symmetric model: evaluation at 0");
  if (std::abs(w) >= 1.0) return outer_.value(w);
  return reflect(outer_.value(reflect(w).value()));
}

SymmetricModel build_model(OuterMap outer) {
  if (!outer.value) throw InvalidArgument("build_model: outer map has no evaluator");
  return SymmetricModel(std::move(outer));
}

RiemannPoint Mobius::operator()(const RiemannPoint& z) const {
  if (z.is_infinite()) {
    if (c == 0.0) return RiemannPoint::infinity();
    return a / c;
  }
  const Complex den = c * z.value() + d;
  if (den == 0.0) return RiemannPoint::infinity();
  return (a * z.value() + b) / den;
}

Complex Mobius::derivative(Complex z) const {
  const Complex den = c * z + d;
  return (a * d - b * c) / (den * den);
}

LocalMap conjugate(const LocalMap& f, const Mobius& phi) {
  const Mobius inv = phi.inverse();
  LocalMap g;
  g.value = [f, phi, inv](Complex z) {
    const RiemannPoint u = inv(z);
    if (u.is_infinite()) return RiemannPoint::infinity();
    return phi(f.value(u.value()));
  };
  g.slope = [f, phi, inv](Complex z) {
    const Complex u = inv(z).value();
    const Complex fu = f.value(u).value();
    return phi.derivative(fu) * f.slope(u) * inv.derivative(z);
  };
  g.singular_distance = [f, inv](Complex w) {
    const RiemannPoint u = inv(w);
    return u.is_infinite() ? 0.0 : f.singular_distance(u.value());
  };
  g.inverse = [f, phi, inv](Complex w, int k) {
    return phi(f.inverse(inv(w).value(), k)).value();
  };
  return g;
}

OuterMap outer_map(const LocalMap& f) { return OuterMap{f.value, f.slope}; }

LocalMap model_local_map(const SymmetricModel& model, const LocalMap& outer) {
  LocalMap g = outer;
  g.value = [model](Complex z) { return model(z); };
  return g;
}

SymmetryReport verify_symmetry(const std::function<RiemannPoint(Complex)>& g, std::size_t samples,
                               std::uint64_t rng_seed, double log_radius) {
  if (samples < 1) throw InvalidArgument("verify_symmetry: samples must be positive");
  SymmetryReport report;
  report.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    const double u1 = static_cast<double>(counter_hash(rng_seed, 0, 2 * i) >> 11) * 0x1p-53;
    const double u2 = static_cast<double>(counter_hash(rng_seed, 0, 2 * i + 1) >> 11) * 0x1p-53;
    const Complex z = std::polar(std::exp(log_radius * (2.0 * u1 - 1.0)), kTwoPi * u2);
    const double dev = chordal_distance(g(reflect(z).value()), reflect(g(z)));
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.worst_point = z;
    }
  }
  return report;
}

SymmetryReport verify_symmetry(const SymmetricModel& model, std::size_t samples, std::uint64_t rng_seed,
                               double log_radius) {
  return verify_symmetry([&model](Complex z) { return model(z); }, samples, rng_seed, log_radius);
}

}  // namespace siegelab
