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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "siegelab/complex.hpp"
#include "siegelab/maps.hpp"

namespace siegelab {

/// Closed, positively oriented polygonal approximation of a Jordan curve.
/// The closing edge from the last vertex back to the first is implicit.
class JordanDiskApprox {
 public:
  JordanDiskApprox() = default;
  explicit JordanDiskApprox(std::vector<Complex> boundary);

  static JordanDiskApprox circle(Complex center, double radius, std::size_t vertices = 64);

  const std::vector<Complex>& boundary() const { return boundary_; }
  std::size_t size() const { return boundary_.size(); }

  int winding_number(Complex z) const;
  bool contains(Complex z) const { return winding_number(z) != 0; }
  /// No two non-adjacent edges come closer than `resolution`.
  bool is_simple(double resolution = 1e-9) const;
  Complex vertex_centroid() const;

 private:
  std::vector<Complex> boundary_;
};

/// Evaluation contract used by the lifting machinery. Families and
/// conjugated models both provide one.
/// Circle of `radius` centred on the ray arg z = angle, at the first radius
/// (scanning outward from 1 in steps of `scan_step`) where its distance to
/// every orbit point is at least `clearance`.
JordanDiskApprox disk_outside_orbit(const std::vector<Complex>& orbit, double angle, double radius,
                                    double clearance, std::size_t vertices = 64, double scan_step = 1e-3);

struct LocalMap {
  std::function<RiemannPoint(Complex)> value;
  std::function<Complex(Complex)> slope;
  std::function<double(Complex)> singular_distance;
  std::function<Complex(Complex, int)> inverse;
};

LocalMap local_map(const MapFamily& map);

double chordal_distance(const RiemannPoint& z, const RiemannPoint& w);

/// Max pairwise chordal distance over boundary vertices (OpenMP kernel).
double chordal_diameter(const JordanDiskApprox& disk);
/// Serial reference for chordal_diameter.
double chordal_diameter_serial(const JordanDiskApprox& disk);

struct LiftOptions {
  std::size_t max_vertices = 4096;
  int newton_iterations = 20;
  double closure_tolerance = 1e-8;
  double singular_margin = 1e-6;  // chordal
};

struct LiftResult {
  JordanDiskApprox lifted;
  JordanDiskApprox target;  // input boundary after adaptive refinement; vertexwise image of `lifted`
};

/// Lifts the disk through the inverse branch that sends eval(seed) to seed.
/// Throws SingularValueOnBoundary, LiftDidNotClose or NoConvergence.
LiftResult lift_disk_refined(const LocalMap& map, const JordanDiskApprox& disk, Complex seed,
                             const LiftOptions& options = {});
JordanDiskApprox lift_disk(const MapFamily& map, const JordanDiskApprox& disk, Complex seed,
                           const LiftOptions& options = {});

struct FixedBranch {
  int branch = 0;
};
struct RandomBranch {
  int min_branch = -1;
  int max_branch = 1;
  std::uint64_t seed = 0;
};
struct NearestToReference {
  Complex reference;
  int min_branch = -2;
  int max_branch = 2;
};
using BranchPolicy = std::variant<FixedBranch, RandomBranch, NearestToReference>;

struct ChainFailure {
  std::size_t level = 0;  // level that could not be built
  std::string kind;
  std::string message;
};

/// The pullback sequence V_0, V_1, ... All levels share one vertex
/// parametrisation: eval(levels[n+1][i]) == levels[n][i].
struct PullbackChain {
  std::vector<JordanDiskApprox> levels;
  std::vector<BranchSelector> branch_log;  // branch used to build level n+1
  std::vector<double> diameters;
  std::optional<ChainFailure> failure;

  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
};

/// Builds up to `depth` pullbacks of disk0, stopping early (with `failure`
/// set) on a lift error. `chain_index` feeds the counter-based RNG.
PullbackChain pullback_chain(const LocalMap& map, const JordanDiskApprox& disk0, const BranchPolicy& policy,
                             std::size_t depth, std::uint64_t chain_index = 0, const LiftOptions& options = {});
PullbackChain pullback_chain(const MapFamily& map, const JordanDiskApprox& disk0, const BranchPolicy& policy,
                             std::size_t depth, std::uint64_t chain_index = 0, const LiftOptions& options = {});

/// Largest |eval(levels[n+1][i]) - levels[n][i]| over the chain.
double correspondence_error(const LocalMap& map, const PullbackChain& chain);

struct LevelStats {
  std::size_t level = 0;
  std::size_t count = 0;
  double max = 0.0;
  double min = 0.0;
  double median = 0.0;
};

struct ShrinkReport {
  std::size_t chains = 0;
  std::size_t depth = 0;
  double epsilon = 0.0;
  std::uint64_t rng_seed = 0;
  std::size_t completed = 0;
  std::vector<LevelStats> levels;
  std::optional<std::size_t> first_level_below_epsilon;  // N, or empty when not reached
  std::vector<std::vector<double>> chain_diameters;       // per chain, per built level
  std::vector<std::vector<int>> chain_branches;
  std::vector<std::optional<ChainFailure>> failures;
};

struct ShrinkOptions {
  int min_branch = -1;
  int max_branch = 1;
  int threads = 0;  // 0: OpenMP default
  LiftOptions lift;
};

/// Randomised pullback chains run over a work queue (OpenMP). Deterministic in rng_seed.
ShrinkReport shrink_experiment(const MapFamily& map, const JordanDiskApprox& disk0, std::size_t chains,
                               std::size_t depth, double epsilon, std::uint64_t rng_seed,
                               const ShrinkOptions& options = {});
/// Serial reference: same report, chains built one after another.
ShrinkReport shrink_experiment_serial(const MapFamily& map, const JordanDiskApprox& disk0, std::size_t chains,
                                      std::size_t depth, double epsilon, std::uint64_t rng_seed,
                                      const ShrinkOptions& options = {});

/// Counter-based generator: a pure function of (seed, stream, counter).
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

}  // namespace siegelab
