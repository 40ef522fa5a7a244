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

#include "siegelab/series.hpp"

#include <algorithm>

#include "siegelab/errors.hpp"

namespace siegelab {

TaylorSeries::TaylorSeries(Complex center, std::vector<Complex> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
  for (Complex c : coeffs_) {
    if (!is_finite(c)) throw InvalidArgument("TaylorSeries: non-finite coefficient");
  }
}

TaylorSeries TaylorSeries::variable(Complex center, std::size_t order) {
  std::vector<Complex> c(order + 1);
  if (order >= 1) c[1] = 1.0;
  return TaylorSeries(center, std::move(c));
}

TaylorSeries TaylorSeries::constant(Complex center, Complex value, std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[0] = value;
  return TaylorSeries(center, std::move(c));
}

Complex TaylorSeries::evaluate(Complex z) const {
  const Complex h = z - center_;
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * h + *it;
  return acc;
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return TaylorSeries(a.center(), std::move(c));
}

TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) { return a + Complex(-1.0) * b; }

TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return TaylorSeries(a.center(), std::move(c));
}

TaylorSeries operator*(Complex s, const TaylorSeries& a) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (Complex& x : c) x *= s;
  return TaylorSeries(a.center(), std::move(c));
}

TaylorSeries compose(const TaylorSeries& outer, const TaylorSeries& inner) {
  const std::size_t n = std::min(outer.order(), inner.order());
  // Shift inner so that it is a series in (w - outer.center()) with zero constant term.
  std::vector<Complex> shifted(inner.coeffs().begin(), inner.coeffs().begin() + static_cast<long>(n) + 1);
  shifted[0] -= outer.center();
  const TaylorSeries h(inner.center(), std::move(shifted));
  TaylorSeries acc = TaylorSeries::constant(inner.center(), outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * h;
    acc[0] += outer[k];
  }
  return acc;
}

TaylorSeries exp_series(std::size_t order) {
  std::vector<Complex> c(order + 1);
  double term = 1.0;
  for (std::size_t k = 0; k <= order; ++k) {
    c[k] = term;
    term /= static_cast<double>(k + 1);
  }
  return TaylorSeries(0.0, std::move(c));
}

TaylorSeries sin_series(std::size_t order) {
  const TaylorSeries e = exp_series(order);
  std::vector<Complex> c(order + 1);
  for (std::size_t k = 1; k <= order; k += 2) c[k] = ((k / 2) % 2 == 0 ? 1.0 : -1.0) * e[k];
  return TaylorSeries(0.0, std::move(c));
}

TaylorSeries cos_series(std::size_t order) {
  const TaylorSeries e = exp_series(order);
  std::vector<Complex> c(order + 1);
  for (std::size_t k = 0; k <= order; k += 2) c[k] = ((k / 2) % 2 == 0 ? 1.0 : -1.0) * e[k];
  return TaylorSeries(0.0, std::move(c));
}

}  // namespace siegelab
