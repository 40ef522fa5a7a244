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

#include "siegelab/hypgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "siegelab/errors.hpp"

namespace siegelab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Complex reflect_circle(Complex z) { return 1.0 / std::conj(z); }

Complex circumcenter(Complex p, Complex q, Complex r) {
  const Complex qp = q - p, rp = r - p;
  const double d = 2.0 * (qp.real() * rp.imag() - qp.imag() * rp.real());
  if (d == 0.0) throw DegenerateInterval("half neighbourhood: boundary circle degenerates to a line");
  const double a = std::norm(qp), b = std::norm(rp);
  return p + Complex((rp.imag() * a - qp.imag() * b) / d, (qp.real() * b - rp.real() * a) / d);
}

// Counterclockwise arc with endpoints p and r passing through q.
CircleArc arc_through(Complex p, Complex q, Complex r) {
  const Complex c = circumcenter(p, q, r);
  auto offset = [](double t, double base) {
    double u = t - base;
    u -= kTwoPi * std::floor(u / kTwoPi);
    return u;
  };
  const double tp = std::arg(p - c);
  const double tq = offset(std::arg(q - c), tp);
  const double tr = offset(std::arg(r - c), tp);
  CircleArc arc;
  arc.center = c;
  arc.radius = std::abs(p - c);
  if (tq < tr) {
    arc.angle_start = tp;
    arc.angle_end = tp + tr;
  } else {
    arc.angle_start = tp + tr;
    arc.angle_end = tp + kTwoPi;
  }
  return arc;
}

double segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

struct SlitFrame {
  Complex a, b, rot;
};

SlitFrame slit_frame(const ArcInterval& I) {
  SlitFrame f{I.start(), I.end(), 1.0};
  const Complex mid_slit = std::polar(1.0, 0.5 * (I.phi1 + I.phi2) + kPi);
  const Complex m = (mid_slit - f.b) / (mid_slit - f.a);
  f.rot = -std::conj(m) / std::abs(m);
  return f;
}

double upper_half_plane_distance(Complex u, Complex v) {
  return 2.0 * std::asinh(std::abs(u - v) / (2.0 * std::sqrt(u.imag() * v.imag())));
}

double distance_to_imaginary_axis(Complex u) { return std::asinh(std::abs(u.real()) / u.imag()); }

}  // namespace

ArcInterval make_interval(double a, double b) {
  const double len = b - a;
  if (!(len > 0.0) || !(len < kTwoPi) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DegenerateInterval("arc interval must satisfy 0 < phi2 - phi1 < 2 pi");
  }
  const double phi1 = a - kTwoPi * std::floor(a / kTwoPi);
  return ArcInterval{phi1, phi1 + len};
}

std::vector<Complex> CircleArc::polyline(std::size_t segments) const {
  std::vector<Complex> pts(segments + 1);
  for (std::size_t k = 0; k <= segments; ++k) {
    pts[k] = point(angle_start + (angle_end - angle_start) * static_cast<double>(k) / static_cast<double>(segments));
  }
  return pts;
}

double angle_from_d(double d) {
  if (!(d > 0.0)) throw InvalidArgument("angle_from_d: d must be positive");
  return 4.0 * std::atan(std::exp(-d));
}

Complex slit_uniformizer(const ArcInterval& I, Complex z) {
  const SlitFrame f = slit_frame(I);
  if (std::abs(std::abs(z) - 1.0) < 1e-15) {
    double t = std::arg(z) - I.phi2;
    t -= kTwoPi * std::floor(t / kTwoPi);
    if (t <= kTwoPi - I.length() + 1e-15) throw PointOnSlit("slit_uniformizer: point lies on the removed arc");
  }
  const Complex zeta = f.rot * (z - f.b) / (z - f.a);
  if (!is_finite(zeta) || (zeta.real() <= 0.0 && std::abs(zeta.imag()) <= 1e-15 * std::abs(zeta))) {
    throw PointOnSlit("slit_uniformizer: point lies on the removed arc");
  }
  return Complex(0.0, 1.0) * std::sqrt(zeta);
}

Complex slit_uniformizer_at_infinity(const ArcInterval& I) {
  return Complex(0.0, 1.0) * std::sqrt(slit_frame(I).rot);
}

double slit_sphere_distance(const ArcInterval& I, Complex z, Complex w) {
  if (z == w) return 0.0;
  return upper_half_plane_distance(slit_uniformizer(I, z), slit_uniformizer(I, w));
}

double slit_sphere_distance_to_arc(const ArcInterval& I, Complex z) {
  return distance_to_imaginary_axis(slit_uniformizer(I, z));
}

HalfNeighborhood build_half_neighborhood(const ArcInterval& I, double d) {
  if (!(I.length() > 0.0 && I.length() < kTwoPi)) throw DegenerateInterval("half neighbourhood: empty or full arc");
  HalfNeighborhood hn;
  hn.interval = I;
  hn.d = d;
  hn.beta = angle_from_d(d);

  if (d >= distance_to_imaginary_axis(slit_uniformizer_at_infinity(I)) - 1e-12) {
    throw DegenerateInterval("half neighbourhood: contains infinity, boundary is not a bounded circle");
  }

  // The boundary rays sit at angle +-(pi - beta) from I in the slit-plane frame.
  const SlitFrame f = slit_frame(I);
  auto back = [&f](Complex zeta) {
    const Complex m = zeta / f.rot;
    return (f.b - m * f.a) / (1.0 - m);
  };
  const double ray = kPi - hn.beta;
  Complex outer_mid = back(std::polar(1.0, ray));
  if (std::abs(outer_mid) < 1.0) outer_mid = back(std::polar(1.0, -ray));

  hn.outer_arc = arc_through(f.a, outer_mid, f.b);
  hn.inner_arc = arc_through(reflect_circle(f.a), reflect_circle(outer_mid), reflect_circle(f.b));
  return hn;
}

bool half_membership(const HalfNeighborhood& hn, Complex z) {
  return std::abs(z) > 1.0 && std::abs(z - hn.outer_arc.center) < hn.outer_arc.radius;
}

bool half_membership_by_distance(const ArcInterval& I, double d, Complex z) {
  if (!(std::abs(z) > 1.0)) return false;
  return slit_sphere_distance_to_arc(I, z) < d;
}

bool Polygon::contains(Complex z) const {
  bool inside = false;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Complex a = vertices[i], b = vertices[j];
    if ((a.imag() > z.imag()) != (b.imag() > z.imag()) &&
        z.real() < (b.real() - a.real()) * (z.imag() - a.imag()) / (b.imag() - a.imag()) + a.real()) {
      inside = !inside;
    }
  }
  return inside;
}

double Polygon::boundary_distance(Complex z) const {
  double best = kInf;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) best = std::min(best, segment_distance(z, vertices[i], vertices[(i + 1) % n]));
  return best;
}

bool PolygonalDomain::contains(Complex z) const {
  if (!outer.contains(z)) return false;
  return std::none_of(holes.begin(), holes.end(), [z](const Polygon& h) { return h.contains(z); });
}

double PolygonalDomain::boundary_distance(Complex z) const {
  double best = outer.boundary_distance(z);
  for (const auto& h : holes) best = std::min(best, h.boundary_distance(z));
  return best;
}

std::vector<double> boundary_distance_field_serial(const PolygonalDomain& domain, Complex origin, double spacing,
                                                   long nx, long ny) {
  std::vector<double> out(static_cast<std::size_t>(nx * ny));
  for (long j = 0; j < ny; ++j) {
    for (long i = 0; i < nx; ++i) {
      const Complex p = origin + Complex(spacing * static_cast<double>(i), spacing * static_cast<double>(j));
      out[static_cast<std::size_t>(j * nx + i)] = domain.contains(p) ? domain.boundary_distance(p) : 0.0;
    }
  }
  return out;
}

QuasihyperbolicGrid::QuasihyperbolicGrid(PolygonalDomain domain, double grid_step, int threads)
    : domain_(std::move(domain)), step_(grid_step) {
  if (!(grid_step > 0.0)) throw InvalidArgument("quasihyperbolic grid: step must be positive");
  if (domain_.outer.vertices.size() < 3) throw InvalidArgument("quasihyperbolic grid: outer polygon needs 3 vertices");
  double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
  for (Complex v : domain_.outer.vertices) {
    xmin = std::min(xmin, v.real());
    xmax = std::max(xmax, v.real());
    ymin = std::min(ymin, v.imag());
    ymax = std::max(ymax, v.imag());
  }
  ix0_ = static_cast<long>(std::floor(xmin / step_));
  iy0_ = static_cast<long>(std::floor(ymin / step_));
  nx_ = static_cast<long>(std::ceil(xmax / step_)) - ix0_ + 1;
  ny_ = static_cast<long>(std::ceil(ymax / step_)) - iy0_ + 1;
  hnx_ = 2 * nx_ - 1;
  hny_ = 2 * ny_ - 1;
  const Complex origin(static_cast<double>(ix0_) * step_, static_cast<double>(iy0_) * step_);
  delta_ = boundary_distance_field(domain_, origin, 0.5 * step_, hnx_, hny_, threads);
}

Complex QuasihyperbolicGrid::node(std::size_t index) const {
  const long ix = static_cast<long>(index) % nx_;
  const long iy = static_cast<long>(index) / nx_;
  return Complex(static_cast<double>(ix0_ + ix) * step_, static_cast<double>(iy0_ + iy) * step_);
}

std::vector<QuasihyperbolicGrid::Seed> QuasihyperbolicGrid::attach(Complex z) const {
  if (!domain_.contains(z)) throw InvalidArgument("quasihyperbolic distance: point outside the domain");
  std::vector<Seed> seeds;
  const long cx = static_cast<long>(std::floor(z.real() / step_)) - ix0_;
  const long cy = static_cast<long>(std::floor(z.imag() / step_)) - iy0_;
  for (long iy = cy - 1; iy <= cy + 2; ++iy) {
    for (long ix = cx - 1; ix <= cx + 2; ++ix) {
      if (ix < 0 || iy < 0 || ix >= nx_ || iy >= ny_) continue;
      if (half_delta(2 * ix, 2 * iy) <= 0.0) continue;
      const long index = iy * nx_ + ix;
      const Complex p = node(static_cast<std::size_t>(index));
      const double len = std::abs(p - z);
      if (len == 0.0) {
        seeds.push_back({index, 0.0});
        continue;
      }
      const double dm = domain_.boundary_distance(0.5 * (p + z));
      if (dm > 0.5 * len) seeds.push_back({index, len / dm});
    }
  }
  return seeds;
}

std::vector<double> QuasihyperbolicGrid::dijkstra(const std::vector<Seed>& seeds) const {
  std::vector<double> dist(node_count(), kInf);
  using Item = std::pair<double, long>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (const Seed& s : seeds) {
    if (s.cost < dist[static_cast<std::size_t>(s.index)]) {
      dist[static_cast<std::size_t>(s.index)] = s.cost;
      queue.push({s.cost, s.index});
    }
  }
  static constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
  static constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
  while (!queue.empty()) {
    const auto [d, index] = queue.top();
    queue.pop();
    if (d > dist[static_cast<std::size_t>(index)]) continue;
    const long ix = index % nx_, iy = index / nx_;
    for (int k = 0; k < 8; ++k) {
      const long jx = ix + kDx[k], jy = iy + kDy[k];
      if (jx < 0 || jy < 0 || jx >= nx_ || jy >= ny_) continue;
      if (half_delta(2 * jx, 2 * jy) <= 0.0) continue;
      const double len = (k < 4 ? 1.0 : std::numbers::sqrt2) * step_;
      const double dm = half_delta(2 * ix + kDx[k], 2 * iy + kDy[k]);
      if (!(dm > 0.5 * len)) continue;
      const double nd = d + len / dm;
      const long jdx = jy * nx_ + jx;
      if (nd < dist[static_cast<std::size_t>(jdx)]) {
        dist[static_cast<std::size_t>(jdx)] = nd;
        queue.push({nd, jdx});
      }
    }
  }
  return dist;
}

std::vector<double> QuasihyperbolicGrid::field(std::span<const Complex> sources) const {
  std::vector<Seed> seeds;
  for (Complex s : sources) {
    const auto more = attach(s);
    seeds.insert(seeds.end(), more.begin(), more.end());
  }
  return dijkstra(seeds);
}

double QuasihyperbolicGrid::distance_to_set(std::span<const Complex> sources, Complex w) const {
  const std::vector<double> dist = field(sources);
  double best = kInf;
  for (const Seed& s : attach(w)) best = std::min(best, dist[static_cast<std::size_t>(s.index)] + s.cost);
  for (Complex s : sources) {
    const double len = std::abs(s - w);
    if (len == 0.0) return 0.0;
    const double dm = domain_.boundary_distance(0.5 * (s + w));
    if (dm > 0.5 * len) best = std::min(best, len / dm);
  }
  if (!std::isfinite(best)) throw Disconnected("quasihyperbolic distance: no lattice path between the points");
  return best;
}

double QuasihyperbolicGrid::distance(Complex z, Complex w) const {
  if (z == w) {
    if (!domain_.contains(z)) throw InvalidArgument("quasihyperbolic distance: point outside the domain");
    return 0.0;
  }
  const Complex source[1] = {z};
  return distance_to_set(source, w);
}

double quasihyperbolic_distance(const PolygonalDomain& domain, Complex z, Complex w, double grid_step) {
  return QuasihyperbolicGrid(domain, grid_step).distance(z, w);
}

}  // namespace siegelab
