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

#include <cstddef>
#include <span>
#include <vector>

#include "siegelab/complex.hpp"

namespace siegelab {

/// Truncated power series sum_k c_k (z - center)^k, k = 0..order.
class TaylorSeries {
 public:
  TaylorSeries() = default;
  TaylorSeries(Complex center, std::vector<Complex> coeffs);

  /// The series of (z - center) itself, truncated at `order`.
  static TaylorSeries variable(Complex center, std::size_t order);
  static TaylorSeries constant(Complex center, Complex value, std::size_t order);

  Complex center() const { return center_; }
  std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }
  Complex& operator[](std::size_t k) { return coeffs_[k]; }

  Complex evaluate(Complex z) const;

  friend TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
  friend TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b);
  friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b);
  friend TaylorSeries operator*(Complex s, const TaylorSeries& a);

 private:
  Complex center_{};
  std::vector<Complex> coeffs_;
};

/// outer(inner(z)) truncated at min order; inner must have zero constant term
/// relative to outer's center (inner[0] == outer.center()).
TaylorSeries compose(const TaylorSeries& outer, const TaylorSeries& inner);

/// exp(h), sin(h), cos(h) as series in h about 0.
TaylorSeries exp_series(std::size_t order);
TaylorSeries sin_series(std::size_t order);
TaylorSeries cos_series(std::size_t order);

}  // namespace siegelab
