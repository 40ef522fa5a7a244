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

#include "siegelab/rotation.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "siegelab/errors.hpp"

namespace siegelab {

namespace {

// Remainders below this are treated as an exact rational termination.
constexpr double kRemainderFloor = 1e-14;

std::int64_t checked_mul_add(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r) || __builtin_add_overflow(r, c, &r)) {
    throw std::overflow_error("convergents: 64-bit overflow");
  }
  return r;
}

}  // namespace

std::string ContinuedFraction::to_string() const {
  std::ostringstream os;
  os << '[' << a0 << ';';
  for (std::size_t i = 0; i < partial_quotients.size(); ++i) {
    if (i) os << ',';
    os << partial_quotients[i];
  }
  os << ']';
  return os.str();
}

ContinuedFraction cf_expand(double x, int max_terms) {
  if (!std::isfinite(x)) throw InvalidArgument("cf_expand: x must be finite");
  if (max_terms < 1) throw InvalidArgument("cf_expand: max_terms must be >= 1");
  ContinuedFraction cf;
  cf.value = x;
  const double fl = std::floor(x);
  cf.a0 = static_cast<std::int64_t>(fl);
  double r = x - fl;
  while (static_cast<int>(cf.partial_quotients.size()) < max_terms) {
    if (r < kRemainderFloor) {
      cf.terminated = true;
      break;
    }
    const double y = 1.0 / r;
    if (y > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 4)) {
      cf.terminated = true;
      break;
    }
    double a = std::floor(y);
    r = y - a;
    if (1.0 - r < kRemainderFloor * y) {
      a += 1.0;
      r = 0.0;
    }
    cf.partial_quotients.push_back(static_cast<std::int64_t>(a));
    if (r < kRemainderFloor) {
      cf.terminated = true;
      break;
    }
  }
  return cf;
}

ContinuedFraction cf_from_terms(std::int64_t a0, std::vector<std::int64_t> partial_quotients) {
  for (auto a : partial_quotients) {
    if (a < 1) throw InvalidArgument("continued fraction: partial quotients must be >= 1");
  }
  ContinuedFraction cf;
  cf.a0 = a0;
  cf.partial_quotients = std::move(partial_quotients);
  cf.terminated = true;
  cf.value = cf_value(cf);
  return cf;
}

ContinuedFraction cf_parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != '[' && c != ']' && c != ' ') s.push_back(c);
  }
  const auto semi = s.find(';');
  try {
    const std::int64_t a0 = std::stoll(s.substr(0, semi));
    std::vector<std::int64_t> terms;
    if (semi != std::string::npos) {
      std::stringstream rest(s.substr(semi + 1));
      std::string item;
      while (std::getline(rest, item, ',')) {
        if (!item.empty()) terms.push_back(std::stoll(item));
      }
    }
    return cf_from_terms(a0, std::move(terms));
  } catch (const std::logic_error&) {
    throw InvalidArgument("cannot parse continued fraction '" + text + "'");
  }
}

BoundedTypeReport is_bounded_type(const ContinuedFraction& cf, std::int64_t bound) {
  BoundedTypeReport report;
  report.depth = cf.partial_quotients.size();
  for (auto a : cf.partial_quotients) report.observed_max = std::max(report.observed_max, a);
  report.bounded = report.observed_max <= bound;
  return report;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  std::vector<Convergent> out;
  out.reserve(cf.partial_quotients.size() + 1);
  std::int64_t p_prev = 1, q_prev = 0;
  std::int64_t p = cf.a0, q = 1;
  out.push_back({p, q});
  for (auto a : cf.partial_quotients) {
    const std::int64_t p_next = checked_mul_add(a, p, p_prev);
    const std::int64_t q_next = checked_mul_add(a, q, q_prev);
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    out.push_back({p, q});
  }
  return out;
}

double cf_value(const ContinuedFraction& cf) {
  double v = 0.0;
  bool any = false;
  for (auto it = cf.partial_quotients.rbegin(); it != cf.partial_quotients.rend(); ++it) {
    v = 1.0 / (static_cast<double>(*it) + (any ? v : 0.0));
    any = true;
  }
  return static_cast<double>(cf.a0) + (any ? v : 0.0);
}

}  // namespace siegelab
