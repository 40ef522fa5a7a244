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

#include "siegelab/pullback.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail.hpp"
#include "siegelab/errors.hpp"

namespace siegelab {

namespace {

double segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

bool segments_closer_than(Complex a, Complex b, Complex c, Complex d, double tol) {
  // Proper crossing test, then endpoint distances.
  auto cross = [](Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); };
  const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  return segment_distance(a, c, d) < tol || segment_distance(b, c, d) < tol || segment_distance(c, a, b) < tol ||
         segment_distance(d, a, b) < tol;
}

// Whether a singular value lies within `margin` (chordal) of the segment [a, b].
bool segment_near_singular(const LocalMap& map, Complex a, Complex b, double margin, int depth = 0) {
  const Complex mid = 0.5 * (a + b);
  const double half = 0.5 * std::abs(b - a);
  const double euclid_margin = 0.5 * margin * (1.0 + std::norm(mid));
  const double d = map.singular_distance(mid);
  if (d < euclid_margin) return true;
  if (d > half + euclid_margin) return false;
  if (depth > 40) return true;
  return segment_near_singular(map, a, mid, margin, depth + 1) || segment_near_singular(map, mid, b, margin, depth + 1);
}

class Continuation {
 public:
  Continuation(const LocalMap& map, const LiftOptions& options) : map_(map), options_(options) {}

  std::optional<Complex> newton(Complex z, Complex w) const {
    for (int it = 0; it < options_.newton_iterations; ++it) {
      const RiemannPoint fz = map_.value(z);
      if (fz.is_infinite()) return std::nullopt;
      const Complex s = map_.slope(z);
      if (s == 0.0 || !is_finite(s)) return std::nullopt;
      const Complex step = (fz.value() - w) / s;
      z -= step;
      if (!is_finite(z)) return std::nullopt;
      if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z))) break;
    }
    const RiemannPoint fz = map_.value(z);
    if (fz.is_infinite() || std::abs(fz.value() - w) > 1e-11 * (1.0 + std::abs(w))) return std::nullopt;
    return z;
  }

  // Tangent predictor from (z_prev, w_prev) followed by Newton toward w_next.
  // Rejected when the corrector moves more than half the predicted step,
  // i.e. when the linearisation is too poor to trust the branch.
  std::optional<Complex> step(Complex z_prev, Complex w_prev, Complex w_next) const {
    const Complex s = map_.slope(z_prev);
    if (s == 0.0 || !is_finite(s)) return std::nullopt;
    const Complex predicted = z_prev + (w_next - w_prev) / s;
    const auto z = newton(predicted, w_next);
    if (!z) return std::nullopt;
    const double allowed = 0.5 * std::abs(predicted - z_prev) + 1e-12 * (1.0 + std::abs(*z));
    if (std::abs(*z - predicted) > allowed) return std::nullopt;
    return z;
  }

  // Follows the straight path from value(seed) to w.
  Complex homotopy(Complex seed, Complex w) const {
    Complex z = seed;
    Complex w_cur = map_.value(seed).value();
    const Complex w_start = w_cur;
    double t = 0.0, dt = 1.0 / 16.0;
    while (t < 1.0) {
      const double t_next = std::min(1.0, t + dt);
      const Complex w_next = w_start + t_next * (w - w_start);
      if (const auto z_next = step(z, w_cur, w_next)) {
        z = *z_next;
        w_cur = w_next;
        t = t_next;
        dt *= 1.5;
      } else {
        dt *= 0.5;
        if (dt < 1e-10) throw NoConvergence("lift: continuation from the seed stalled");
      }
    }
    return z;
  }

 private:
  const LocalMap& map_;
  const LiftOptions& options_;
};

// Shared driver. `refine(i)` inserts a target vertex after index i and returns it.
template <class Refine>
std::vector<Complex> continue_around(const LocalMap& map, std::vector<Complex>& target, Complex seed,
                                     const LiftOptions& options, Refine&& refine) {
  if (target.size() < 3) throw InvalidArgument("lift: disk needs at least 3 vertices");
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (segment_near_singular(map, target[i], target[(i + 1) % target.size()], options.singular_margin)) {
      throw SingularValueOnBoundary("lift: a singular value lies on the disk boundary");
    }
  }
  const RiemannPoint image = map.value(seed);
  if (image.is_infinite() || !JordanDiskApprox(target).contains(image.value())) {
    throw InvalidArgument("lift: the seed's image is not inside the disk");
  }

  const Continuation cont(map, options);
  std::vector<Complex> lifted;
  lifted.reserve(target.size());
  lifted.push_back(cont.homotopy(seed, target[0]));
  std::size_t i = 0;
  for (;;) {
    const std::size_t m = target.size();
    const std::size_t j = (i + 1) % m;
    const auto next = cont.step(lifted[i], target[i], target[j]);
    if (!next) {
      if (m >= options.max_vertices) throw NoConvergence("lift: refinement cap reached");
      refine(i);
      continue;
    }
    if (j == 0) {
      if (std::abs(*next - lifted[0]) > options.closure_tolerance * std::max(1.0, std::abs(lifted[0]))) {
        throw LiftDidNotClose("lift: continuation around the boundary did not close (degree > 1)");
      }
      return lifted;
    }
    lifted.push_back(*next);
    ++i;
  }
}

}  // namespace

JordanDiskApprox::JordanDiskApprox(std::vector<Complex> boundary) : boundary_(std::move(boundary)) {}

JordanDiskApprox JordanDiskApprox::circle(Complex center, double radius, std::size_t vertices) {
  std::vector<Complex> pts(vertices);
  for (std::size_t k = 0; k < vertices; ++k) {
    pts[k] = center + std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(vertices));
  }
  return JordanDiskApprox(std::move(pts));
}

int JordanDiskApprox::winding_number(Complex z) const {
  // Crossing-number form of the winding number.
  int wn = 0;
  const std::size_t n = boundary_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = boundary_[i];
    const Complex b = boundary_[(i + 1) % n];
    const double side = (b.real() - a.real()) * (z.imag() - a.imag()) - (z.real() - a.real()) * (b.imag() - a.imag());
    if (a.imag() <= z.imag()) {
      if (b.imag() > z.imag() && side > 0) ++wn;
    } else if (b.imag() <= z.imag() && side < 0) {
      --wn;
    }
  }
  return wn;
}

bool JordanDiskApprox::is_simple(double resolution) const {
  const std::size_t n = boundary_.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = boundary_[i], b = boundary_[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      const Complex c = boundary_[j], d = boundary_[(j + 1) % n];
      if (segments_closer_than(a, b, c, d, resolution)) return false;
    }
  }
  return true;
}

Complex JordanDiskApprox::vertex_centroid() const {
  Complex s{};
  for (Complex z : boundary_) s += z;
  return boundary_.empty() ? s : s / static_cast<double>(boundary_.size());
}

LocalMap local_map(const MapFamily& map) {
  LocalMap m;
  m.value = [map](Complex z) { return eval(map, z); };
  m.slope = [map](Complex z) { return derivative(map, z); };
  m.singular_distance = [map](Complex w) { return distance_to_singular_set(map, w); };
  m.inverse = [map](Complex w, int k) { return inverse_branch(map, w, BranchSelector{k}); };
  return m;
}

double chordal_distance(const RiemannPoint& z, const RiemannPoint& w) {
  if (z.is_infinite() && w.is_infinite()) return 0.0;
  if (z.is_infinite()) return 2.0 * detail::chordal_point(w.value()).weight;
  if (w.is_infinite()) return 2.0 * detail::chordal_point(z.value()).weight;
  return detail::chord(detail::chordal_point(z.value()), detail::chordal_point(w.value()));
}

double chordal_diameter_serial(const JordanDiskApprox& disk) {
  const auto& v = disk.boundary();
  std::vector<detail::ChordalPoint> p;
  p.reserve(v.size());
  for (Complex z : v) p.push_back(detail::chordal_point(z));
  double best = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) best = std::max(best, detail::chord(p[i], p[j]));
  }
  return best;
}

LiftResult lift_disk_refined(const LocalMap& map, const JordanDiskApprox& disk, Complex seed,
                             const LiftOptions& options) {
  std::vector<Complex> target = disk.boundary();
  auto refine = [&target](std::size_t i) {
    const Complex mid = 0.5 * (target[i] + target[(i + 1) % target.size()]);
    target.insert(target.begin() + static_cast<long>(i) + 1, mid);
    return mid;
  };
  std::vector<Complex> lifted = continue_around(map, target, seed, options, refine);
  return LiftResult{JordanDiskApprox(std::move(lifted)), JordanDiskApprox(std::move(target))};
}

JordanDiskApprox lift_disk(const MapFamily& map, const JordanDiskApprox& disk, Complex seed,
                           const LiftOptions& options) {
  return lift_disk_refined(local_map(map), disk, seed, options).lifted;
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return mix(mix(mix(seed) ^ stream) ^ counter);
}

namespace {

int choose_branch(const LocalMap& map, const BranchPolicy& policy, Complex interior, std::uint64_t chain_index,
                  std::size_t level) {
  struct Visitor {
    const LocalMap& map;
    Complex interior;
    std::uint64_t chain_index;
    std::size_t level;
    int operator()(const FixedBranch& p) const { return p.branch; }
    int operator()(const RandomBranch& p) const {
      const auto span = static_cast<std::uint64_t>(p.max_branch - p.min_branch + 1);
      return p.min_branch + static_cast<int>(counter_hash(p.seed, chain_index, level) % span);
    }
    int operator()(const NearestToReference& p) const {
      int best = p.min_branch;
      double best_d = std::numeric_limits<double>::infinity();
      for (int k = p.min_branch; k <= p.max_branch; ++k) {
        try {
          const double d = std::abs(map.inverse(interior, k) - p.reference);
          if (d < best_d) {
            best_d = d;
            best = k;
          }
        } catch (const Error&) {
        }
      }
      return best;
    }
  };
  return std::visit(Visitor{map, interior, chain_index, level}, policy);
}

// Inserts one new parameter after vertex i on levels 0..top. Level 0 takes the
// chord midpoint; higher levels take the matching preimage, so the shared
// parametrisation survives refinement.
Complex insert_fiber(const LocalMap& map, std::vector<std::vector<Complex>>& levels, std::size_t top, std::size_t i,
                     const LiftOptions& options) {
  const Continuation cont(map, options);
  const std::size_t m = levels[0].size();
  const std::size_t j = (i + 1) % m;
  std::vector<Complex> fiber(top + 1);
  fiber[0] = 0.5 * (levels[0][i] + levels[0][j]);
  for (std::size_t n = 1; n <= top; ++n) {
    auto z = cont.step(levels[n][i], levels[n - 1][i], fiber[n - 1]);
    if (!z) z = cont.step(levels[n][j], levels[n - 1][j], fiber[n - 1]);
    if (!z) throw NoConvergence("pullback_chain: could not refine a lower level");
    fiber[n] = *z;
  }
  for (std::size_t n = 0; n <= top; ++n) levels[n].insert(levels[n].begin() + static_cast<long>(i) + 1, fiber[n]);
  return fiber[top];
}

}  // namespace

PullbackChain pullback_chain(const LocalMap& map, const JordanDiskApprox& disk0, const BranchPolicy& policy,
                             std::size_t depth, std::uint64_t chain_index, const LiftOptions& options) {
  std::vector<std::vector<Complex>> levels{disk0.boundary()};
  PullbackChain chain;
  Complex interior = disk0.vertex_centroid();
  if (!disk0.contains(interior)) throw InvalidArgument("pullback_chain: vertex centroid is not interior");

  for (std::size_t n = 0; n < depth; ++n) {
    const int k = choose_branch(map, policy, interior, chain_index, n);
    try {
      const Complex seed = map.inverse(interior, k);
      std::vector<Complex>& target = levels[n];
      auto refine = [&, n](std::size_t i) { return insert_fiber(map, levels, n, i, options); };
      std::vector<Complex> lifted = continue_around(map, target, seed, options, refine);
      levels.push_back(std::move(lifted));
      chain.branch_log.push_back(BranchSelector{k});
      interior = seed;
    } catch (const Error& e) {
      std::string kind = "Error";
      if (dynamic_cast<const SingularValueOnBoundary*>(&e)) kind = "SingularValueOnBoundary";
      else if (dynamic_cast<const LiftDidNotClose*>(&e)) kind = "LiftDidNotClose";
      else if (dynamic_cast<const NoConvergence*>(&e)) kind = "NoConvergence";
      else if (dynamic_cast<const NearSingularValue*>(&e)) kind = "NearSingularValue";
      chain.failure = ChainFailure{n + 1, kind, e.what()};
      break;
    }
  }

  chain.levels.reserve(levels.size());
  for (auto& l : levels) chain.levels.emplace_back(std::move(l));
  for (const auto& l : chain.levels) chain.diameters.push_back(chordal_diameter(l));
  return chain;
}

PullbackChain pullback_chain(const MapFamily& map, const JordanDiskApprox& disk0, const BranchPolicy& policy,
                             std::size_t depth, std::uint64_t chain_index, const LiftOptions& options) {
  return pullback_chain(local_map(map), disk0, policy, depth, chain_index, options);
}

double correspondence_error(const LocalMap& map, const PullbackChain& chain) {
  double worst = 0.0;
  for (std::size_t n = 0; n + 1 < chain.levels.size(); ++n) {
    const auto& up = chain.levels[n + 1].boundary();
    const auto& down = chain.levels[n].boundary();
    if (up.size() != down.size()) return std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < up.size(); ++i) {
      const RiemannPoint v = map.value(up[i]);
      worst = std::max(worst, v.is_infinite() ? std::numeric_limits<double>::infinity() : std::abs(v.value() - down[i]));
    }
  }
  return worst;
}

namespace detail {

ChordalPoint chordal_point(Complex z) {
  const double r = std::abs(z);
  return {z, r > 1.0 ? 1.0 / (r * std::sqrt(1.0 + 1.0 / (r * r))) : 1.0 / std::sqrt(1.0 + r * r)};
}

PullbackChain shrink_chain(const LocalMap& map, const JordanDiskApprox& disk0, std::size_t depth,
                           std::uint64_t rng_seed, std::uint64_t chain_index, const ShrinkOptions& options) {
  const BranchPolicy policy = RandomBranch{options.min_branch, options.max_branch, rng_seed};
  return pullback_chain(map, disk0, policy, depth, chain_index, options.lift);
}

ShrinkReport summarize_shrink(const std::vector<PullbackChain>& chains, std::size_t depth, double epsilon,
                              std::uint64_t rng_seed) {
  ShrinkReport report;
  report.chains = chains.size();
  report.depth = depth;
  report.epsilon = epsilon;
  report.rng_seed = rng_seed;

  const std::size_t needed = std::min<std::size_t>(3, depth);
  bool any_deep = false;
  for (const auto& c : chains) {
    report.chain_diameters.push_back(c.diameters);
    std::vector<int> branches;
    for (auto b : c.branch_log) branches.push_back(b.index);
    report.chain_branches.push_back(std::move(branches));
    report.failures.push_back(c.failure);
    if (c.depth() == depth) ++report.completed;
    if (c.depth() >= needed) any_deep = true;
  }
  if (chains.empty() || !any_deep) throw ExperimentDegenerate("shrink_experiment: no chain reached depth 3");

  for (std::size_t level = 0; level <= depth; ++level) {
    std::vector<double> values;
    for (const auto& c : chains) {
      if (c.diameters.size() > level) values.push_back(c.diameters[level]);
    }
    LevelStats s;
    s.level = level;
    s.count = values.size();
    if (!values.empty()) {
      std::sort(values.begin(), values.end());
      s.min = values.front();
      s.max = values.back();
      const std::size_t h = values.size() / 2;
      s.median = values.size() % 2 ? values[h] : 0.5 * (values[h - 1] + values[h]);
    }
    report.levels.push_back(s);
  }

  // N: from this level on, every completed chain stays below epsilon.
  if (report.completed > 0) {
    std::optional<std::size_t> n_reached;
    for (std::size_t level = depth + 1; level-- > 0;) {
      double worst = 0.0;
      for (const auto& c : chains) {
        if (c.depth() == depth) worst = std::max(worst, c.diameters[level]);
      }
      if (worst < epsilon) n_reached = level;
      else break;
    }
    report.first_level_below_epsilon = n_reached;
  }
  return report;
}

}  // namespace detail

ShrinkReport shrink_experiment_serial(const MapFamily& map, const JordanDiskApprox& disk0, std::size_t chains,
                                      std::size_t depth, double epsilon, std::uint64_t rng_seed,
                                      const ShrinkOptions& options) {
  if (!disk0.contains(disk0.vertex_centroid())) throw InvalidArgument("shrink_experiment: vertex centroid is not interior");
  const LocalMap local = local_map(map);
  std::vector<PullbackChain> results;
  results.reserve(chains);
  for (std::size_t c = 0; c < chains; ++c) {
    results.push_back(detail::shrink_chain(local, disk0, depth, rng_seed, c, options));
  }
  return detail::summarize_shrink(results, depth, epsilon, rng_seed);
}

JordanDiskApprox disk_outside_orbit(const std::vector<Complex>& orbit, double angle, double radius,
                                    double clearance, std::size_t vertices, double scan_step) {
  if (orbit.empty()) throw InvalidArgument("disk_outside_orbit: empty orbit");
  if (!(radius > 0.0) || !(scan_step > 0.0)) throw InvalidArgument("disk_outside_orbit: radius and step must be positive");
  double far = 0.0;
  for (Complex p : orbit) far = std::max(far, std::abs(p));
  for (long k = 0;; ++k) {
    const double r = 1.0 + scan_step * static_cast<double>(k);
    const Complex c = std::polar(r, angle);
    double gap = std::numeric_limits<double>::infinity();
    for (Complex p : orbit) gap = std::min(gap, std::abs(p - c));
    if (gap - radius >= clearance) return JordanDiskApprox::circle(c, radius, vertices);
    if (r > far + radius + clearance + 1.0) throw InvalidArgument("disk_outside_orbit: no clear position on the ray");
  }
}

}  // namespace siegelab
