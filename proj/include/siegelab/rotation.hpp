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
#include <string>
#include <vector>

namespace siegelab {

/// Simple continued fraction [a0; a1, a2, ...] of a real number.
struct ContinuedFraction {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> partial_quotients;  // a1..an, all >= 1
  double value = 0.0;
  bool terminated = false;  // expansion ended because the remainder vanished

  std::string to_string() const;
};

struct Convergent {
  std::int64_t p = 0;
  std::int64_t q = 1;
};

struct BoundedTypeReport {
  bool bounded = false;
  std::int64_t observed_max = 0;
  std::size_t depth = 0;  // number of partial quotients inspected
};

/// Gauss-map expansion with at most max_terms partial quotients after a0.
ContinuedFraction cf_expand(double x, int max_terms);

/// Builds a continued fraction from explicit terms, e.g. parsed "[0;1,2,2]".
ContinuedFraction cf_from_terms(std::int64_t a0, std::vector<std::int64_t> partial_quotients);

/// Parses "[a0;a1,a2,...]" (brackets optional).
ContinuedFraction cf_parse(const std::string& text);

/// Decided on the available (truncated) terms only.
BoundedTypeReport is_bounded_type(const ContinuedFraction& cf, std::int64_t bound);

/// p_k/q_k for k = 0..n; throws std::overflow_error past 64 bits.
std::vector<Convergent> convergents(const ContinuedFraction& cf);

/// Value of the finite fraction [a0; a1..an].
double cf_value(const ContinuedFraction& cf);

/// (sqrt(5) - 1) / 2
inline const double kGoldenMean = 0.6180339887498949;

}  // namespace siegelab
