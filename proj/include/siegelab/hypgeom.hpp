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

#include <span>
#include <vector>

#include "siegelab/complex.hpp"

namespace siegelab {

/// Open arc {e^{it} : phi1 < t < phi2} of the unit circle, phi1 in [0, 2 pi).
struct ArcInterval {
  double phi1 = 0.0;
  double phi2 = 0.0;

  double length() const { return phi2 - phi1; }
  Complex start() const { return std::polar(1.0, phi1); }
  Complex end() const { return std::polar(1.0, phi2); }
};

/// Normalises (a, b) with 0 < b - a < 2 pi; throws DegenerateInterval otherwise.
ArcInterval make_interval(double a, double b);

/// Counterclockwise arc of a Euclidean circle from angle_start to angle_end.
struct CircleArc {
  Complex center;
  double radius = 0.0;
  double angle_start = 0.0;
  double angle_end = 0.0;  // angle_end > angle_start

  Complex point(double t) const { return center + std::polar(radius, t); }
  std::vector<Complex> polyline(std::size_t segments) const;
};

/// The exterior half of the hyperbolic d-neighbourhood of I in the sphere
/// slit along the complementary arc.
struct HalfNeighborhood {
  ArcInterval interval;
  double d = 0.0;
  CircleArc outer_arc;  // |z| >= 1
  CircleArc inner_arc;  // reflection of outer_arc in the unit circle
  double beta = 0.0;    // angle between the boundary circles and the slit
};

/// beta in (0, pi) with log cot(beta / 4) = d.
double angle_from_d(double d);

HalfNeighborhood build_half_neighborhood(const ArcInterval& interval, double d);

/// Coordinate of z in the upper half-plane model of the slit sphere: the arc
/// I goes to the positive imaginary axis. Throws PointOnSlit.
Complex slit_uniformizer(const ArcInterval& interval, Complex z);

/// Image of infinity under slit_uniformizer.
Complex slit_uniformizer_at_infinity(const ArcInterval& interval);

/// Hyperbolic distance (curvature -1) in the sphere minus the closed arc T \ I.
double slit_sphere_distance(const ArcInterval& interval, Complex z, Complex w);

/// Hyperbolic distance from z to the geodesic I.
double slit_sphere_distance_to_arc(const ArcInterval& interval, Complex z);

/// |z| > 1 and z inside the outer boundary circle.
bool half_membership(const HalfNeighborhood& hn, Complex z);

/// |z| > 1 and slit_sphere_distance_to_arc(z) < d.
bool half_membership_by_distance(const ArcInterval& interval, double d, Complex z);

/// Closed polygon given by its vertices.
struct Polygon {
  std::vector<Complex> vertices;

  bool contains(Complex z) const;
  double boundary_distance(Complex z) const;
};

/// Outer polygon minus polygonal holes.
struct PolygonalDomain {
  Polygon outer;
  std::vector<Polygon> holes;

  bool contains(Complex z) const;
  double boundary_distance(Complex z) const;
};

/// Lattice approximation of the quasihyperbolic metric |dz| / dist(z, boundary).
/// Lattice nodes sit at integer multiples of the step, so domains sharing a
/// step share nodes. Built once; queries are const and thread-safe.
class QuasihyperbolicGrid {
 public:
  QuasihyperbolicGrid(PolygonalDomain domain, double grid_step, int threads = 0);

  double distance(Complex z, Complex w) const;
  /// Distance from w to the nearest of the source points.
  double distance_to_set(std::span<const Complex> sources, Complex w) const;
  /// Distances from the sources to every lattice node (infinity when unreachable
  /// or outside), row-major over node_count().
  std::vector<double> field(std::span<const Complex> sources) const;

  Complex node(std::size_t index) const;
  std::size_t node_count() const { return static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_); }
  double step() const { return step_; }
  const PolygonalDomain& domain() const { return domain_; }
  /// Boundary distances sampled on the half-step lattice.
  const std::vector<double>& boundary_distances() const { return delta_; }

 private:
  struct Seed {
    long index;
    double cost;
  };
  std::vector<Seed> attach(Complex z) const;
  std::vector<double> dijkstra(const std::vector<Seed>& seeds) const;
  double half_delta(long hx, long hy) const { return delta_[static_cast<std::size_t>(hy * hnx_ + hx)]; }

  PolygonalDomain domain_;
  double step_;
  long ix0_ = 0, iy0_ = 0;  // lattice index of node (0, 0)
  long nx_ = 0, ny_ = 0;
  long hnx_ = 0, hny_ = 0;
  std::vector<double> delta_;
};

/// Boundary-distance field on a half-step lattice (OpenMP kernel) and its serial reference.
std::vector<double> boundary_distance_field(const PolygonalDomain& domain, Complex origin, double spacing, long nx,
                                            long ny, int threads = 0);
std::vector<double> boundary_distance_field_serial(const PolygonalDomain& domain, Complex origin, double spacing,
                                                   long nx, long ny);

double quasihyperbolic_distance(const PolygonalDomain& domain, Complex z, Complex w, double grid_step);

}  // namespace siegelab
