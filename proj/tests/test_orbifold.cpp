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

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "siegelab/errors.hpp"
#include "siegelab/orbifold.hpp"

using namespace siegelab;

namespace {

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("n" + std::to_string(i));
  return out;
}

// lcm of degree products over all paths of 1..max_len steps into each node.
std::vector<std::uint64_t> brute_force_nu(const OrbitPortrait& p, std::size_t max_len) {
  const std::size_t n = p.size();
  std::vector<std::uint64_t> nu(n, 1);
  // Paths are extended at the far end: a path w -> ... -> z of length L+1 is u -> w -> ... -> z with next(u) = w.
  std::vector<std::map<std::size_t, std::set<std::uint64_t>>> by_start(n);  // end -> start -> products
  for (std::size_t w = 0; w < n; ++w) by_start[p.next[w]][w].insert(p.local_degree[w]);
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::map<std::size_t, std::set<std::uint64_t>>> grown(n);
    for (std::size_t z = 0; z < n; ++z) {
      for (const auto& [start, products] : by_start[z]) {
        for (std::uint64_t prod : products) nu[z] = std::lcm(nu[z], prod);
        for (std::size_t u = 0; u < n; ++u) {
          if (p.next[u] != start) continue;
          for (std::uint64_t prod : products) grown[z][u].insert(prod * p.local_degree[u]);
        }
      }
    }
    by_start = std::move(grown);
  }
  for (std::size_t c : p.marked_cycle) nu[c] = 2;
  return nu;
}

std::vector<std::size_t> cycle_through(const std::vector<std::size_t>& next, std::size_t start) {
  std::size_t x = start;
  for (std::size_t i = 0; i < next.size(); ++i) x = next[x];
  std::vector<std::size_t> cycle{x};
  for (std::size_t y = next[x]; y != x; y = next[y]) cycle.push_back(y);
  return cycle;
}

bool periodic(const std::vector<std::size_t>& next, std::size_t node) {
  std::size_t x = next[node];
  for (std::size_t i = 0; i < next.size(); ++i, x = next[x]) {
    if (x == node) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("nu examples") {
  SUBCASE("all degrees one") {
    const auto p = make_portrait({"a", "b", "c"}, {1, 2, 2}, {1, 1, 1}, {2});
    CHECK(compute_nu(p).nu == std::vector<std::uint64_t>{1, 1, 2});
  }
  SUBCASE("critical preimage of a fixed node") {
    const auto p = make_portrait({"w", "z", "c"}, {1, 1, 2}, {2, 1, 1}, {2});
    const auto nu = compute_nu(p);
    CHECK(nu[1] == 2);
    CHECK(nu.nu == brute_force_nu(p, 10));
  }
  SUBCASE("two critical branches") {
    const auto p = make_portrait({"a", "b", "z", "c"}, {2, 2, 2, 3}, {2, 3, 1, 1}, {3});
    const auto nu = compute_nu(p);
    CHECK(nu[2] == 6);
    CHECK(nu.nu == brute_force_nu(p, 10));
  }
  SUBCASE("periodic critical node") {
    const auto p = make_portrait({"a", "b", "c"}, {1, 0, 2}, {2, 1, 1}, {2});
    CHECK_THROWS_AS(compute_nu(p), CriticalCycle);
    CHECK_FALSE(critical_acyclic(p));
  }
}

TEST_CASE("pull back examples") {
  const auto p = make_portrait({"a", "b", "c", "d"}, {1, 1, 3, 3}, {1, 3, 1, 1}, {3});
  const RamificationAssignment nu{{5, 6, 7, 2}};
  const auto tilde = pull_back_nu(p, nu);
  CHECK(tilde[0] == 6);
  CHECK(tilde[1] == 2);
  CHECK(tilde[2] == 2);
  CHECK(tilde[3] == 2);

  const auto q = make_portrait({"a", "c"}, {1, 1}, {4, 1}, {1});
  try {
    pull_back_nu(q, compute_nu(q));
    FAIL("expected NotDivisible");
  } catch (const NotDivisible& e) {
    CHECK(e.node() == "a");
  }
  CHECK_FALSE(critical_orbits_avoid_cycle(q));
}

TEST_CASE("covering classification") {
  const auto p = make_portrait({"a", "b", "z", "c"}, {2, 2, 2, 3}, {2, 3, 1, 1}, {3});
  const auto nu = compute_nu(p);
  const auto tilde = pull_back_nu(p, nu);
  auto report = check_covering(p, nu, tilde);
  CHECK(report.global == CoveringClass::Covering);

  auto doubled = tilde;
  doubled.nu[0] *= 2;
  report = check_covering(p, nu, doubled);
  CHECK(report.per_node[0] == CoveringClass::HolomorphicOnly);
  CHECK(report.per_node[1] == CoveringClass::Covering);
  CHECK(report.global == CoveringClass::HolomorphicOnly);

  const auto q = make_portrait({"x", "c"}, {1, 1}, {1, 1}, {1});
  const auto nq = compute_nu(q);
  const RamificationAssignment one{{1, 2}};
  report = check_covering(q, nq, one);
  CHECK(report.per_node[0] == CoveringClass::Neither);
  CHECK(report.global == CoveringClass::Neither);
  CHECK(to_string(CoveringClass::HolomorphicOnly) == "holomorphic-only");
}

TEST_CASE("compute_nu matches path enumeration on all small portraits") {
  std::size_t checked = 0, rejected = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t maps = 1;
    for (std::size_t i = 0; i < n; ++i) maps *= n;
    std::size_t degree_vectors = 1;
    for (std::size_t i = 0; i < n; ++i) degree_vectors *= 4;
    // All maps; all degree vectors up to 4 nodes, a fixed stride through them beyond.
    const std::size_t stride = n <= 4 ? 1 : (n == 5 ? 97 : 1009);
    for (std::size_t m = 0; m < maps; ++m) {
      std::vector<std::size_t> next(n);
      for (std::size_t i = 0, code = m; i < n; ++i, code /= n) next[i] = code % n;
      const auto cycle = cycle_through(next, 0);
      for (std::size_t dv = (m % stride); dv < degree_vectors; dv += stride) {
        std::vector<std::uint64_t> deg(n);
        for (std::size_t i = 0, code = dv; i < n; ++i, code /= 4) deg[i] = 1 + code % 4;
        bool cycle_critical = false;
        for (std::size_t c : cycle) cycle_critical |= deg[c] > 1;
        if (cycle_critical) continue;
        const auto p = make_portrait(labels(n), next, deg, cycle);
        bool acyclic = true;
        for (std::size_t i = 0; i < n; ++i) acyclic &= !(deg[i] > 1 && periodic(next, i));
        if (!acyclic) {
          CHECK_THROWS_AS(compute_nu(p), CriticalCycle);
          ++rejected;
          continue;
        }
        const auto nu = compute_nu(p);
        REQUIRE(nu.nu == brute_force_nu(p, 2 * n));
        if (critical_orbits_avoid_cycle(p)) {
          CHECK(check_covering(p, nu, pull_back_nu(p, nu)).global == CoveringClass::Covering);
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 10000);
  CHECK(rejected > 0);
}

TEST_CASE("adding a degree-one node keeps nu") {
  const auto p = make_portrait({"a", "b", "z", "c"}, {2, 2, 3, 3}, {2, 3, 1, 1}, {3});
  const auto nu = compute_nu(p);
  for (std::size_t target = 0; target < 4; ++target) {
    const auto q = make_portrait({"a", "b", "z", "c", "new"}, {2, 2, 3, 3, target}, {2, 3, 1, 1, 1}, {3});
    const auto nq = compute_nu(q);
    for (std::size_t i = 0; i < 4; ++i) CHECK(nq[i] == nu[i]);
  }
}

TEST_CASE("portrait validation and json") {
  CHECK_THROWS_AS(make_portrait({"a", "b"}, {1, 0}, {1, 1}, {0}), InvalidArgument);
  CHECK_THROWS_AS(make_portrait({"a", "a"}, {1, 1}, {1, 1}, {1}), InvalidArgument);
  CHECK_THROWS_AS(make_portrait({"a", "b"}, {1, 1}, {100, 1}, {1}), InvalidArgument);
  CHECK_THROWS_AS(make_portrait({"a", "b"}, {1, 1}, {1, 1}, {}), InvalidArgument);

  const auto doc = nlohmann::json::parse(R"({"nodes": ["w", "z", "c"], "edges": {"w": "z", "z": "z", "c": "c"},
                                             "degrees": {"w": 2}, "cycle": ["c"]})");
  const auto p = portrait_from_json(doc);
  CHECK(p.local_degree[p.index_of("w")] == 2);
  CHECK(p.local_degree[p.index_of("z")] == 1);
  CHECK(compute_nu(p)[p.index_of("z")] == 2);
  const auto back = portrait_from_json(portrait_to_json(p));
  CHECK(back.nodes == p.nodes);
  CHECK(back.next == p.next);
  CHECK(back.local_degree == p.local_degree);
  CHECK(back.marked_cycle == p.marked_cycle);
  CHECK_THROWS_AS(portrait_from_json(nlohmann::json::parse(R"({"nodes": ["a"], "edges": {"a": "b"}, "cycle": ["a"]})")),
                  InvalidArgument);
}

TEST_CASE("portrait from points") {
  const MapFamily s = MapFamily::sine(0.5);  // z -> -sin z
  const std::vector<Complex> pts{0.0, kPi, -kPi};
  const std::vector<std::uint64_t> deg{1, 1, 1};
  const std::vector<std::size_t> cycle{0};
  const auto p = portrait_from_points(s, pts, deg, cycle);
  CHECK(p.next == std::vector<std::size_t>{0, 0, 0});
  CHECK(compute_nu(p).nu == std::vector<std::uint64_t>{2, 1, 1});
  const std::vector<Complex> bad{0.0, 1.0};
  const std::vector<std::uint64_t> bad_deg{1, 1};
  CHECK_THROWS_AS(portrait_from_points(s, bad, bad_deg, cycle), InvalidArgument);
}
