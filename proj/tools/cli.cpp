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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "siegelab/errors.hpp"
#include "siegelab/hypgeom.hpp"
#include "siegelab/orbifold.hpp"
#include "siegelab/pullback.hpp"
#include "siegelab/render.hpp"
#include "siegelab/rotation.hpp"
#include "siegelab/siegel.hpp"

namespace siegelab::cli {

using nlohmann::json;

namespace {

constexpr int kReportSchemaVersion = 1;

struct ConfigEntry {
  std::string name;
  std::vector<std::string> values;
};

// Flat key=value files (CLI11's INI reader) or the "config" block of JSON
// reports and sidecars.
std::vector<ConfigEntry> read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CLI::FileError::Missing(path);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  std::vector<ConfigEntry> entries;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') {
    std::istringstream in(text);
    for (auto& item : CLI::ConfigINI().from_config(in)) {
      if (item.name == "++" || item.name == "--") continue;
      entries.push_back({item.name, item.inputs});
    }
    return entries;
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CLI::ConversionError(std::string("config: ") + e.what());
  }
  const json& flat = doc.contains("config") ? doc.at("config") : doc;
  for (const auto& [key, value] : flat.items()) {
    ConfigEntry entry{key, {}};
    auto text_of = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (value.is_array()) {
      for (const auto& v : value) entry.values.push_back(text_of(v));
    } else {
      entry.values.push_back(text_of(value));
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

// Splices config-file values in front of the command line options they do
// not already appear in, so flags win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  std::size_t sub = args.size();
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (sub == args.size() && !args[i].starts_with("-")) sub = i;
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].starts_with("--config=")) path = args[i].substr(9);
  }
  if (path.empty() || sub == args.size()) return args;
  auto given = [&args](const std::string& name) {
    return std::any_of(args.begin(), args.end(), [&name](const std::string& a) {
      return a == "--" + name || a.starts_with("--" + name + "=");
    });
  };
  std::vector<std::string> injected;
  for (const auto& entry : read_config(path)) {
    if (entry.name == "config" || given(entry.name)) continue;
    for (const auto& v : entry.values) injected.push_back("--" + entry.name + "=" + v);
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub) + 1, injected.begin(), injected.end());
  return args;
}

json effective_config(const CLI::App* sub) {
  json config = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help" || name == "config") continue;
    std::vector<std::string> values = opt->results();
    if (values.empty()) {
      const std::string d = opt->get_default_str();
      if (d.empty()) continue;
      values.push_back(d);
    }
    config[name] = values.size() == 1 ? json(values.front()) : json(values);
  }
  return config;
}

std::string resolve_out(const std::string& out, const std::string& fallback) {
  const std::filesystem::path p =
      out.empty() ? std::filesystem::path(default_output_dir()) / fallback : std::filesystem::path(out);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  return p.string();
}

void write_json(const std::string& path, const json& doc) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << doc.dump(2) << '\n';
  if (!f) throw IoError("write to '" + path + "' failed");
}

json report(const std::string& subcommand, const CLI::App* sub, json result) {
  return json{{"schema_version", kReportSchemaVersion},
              {"subcommand", subcommand},
              {"config", effective_config(sub)},
              {"result", std::move(result)}};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::pair<long, long> parse_size(const std::string& text) {
  const auto x = text.find('x');
  try {
    std::size_t used = 0;
    if (x == std::string::npos) {
      const long n = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const long w = std::stol(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const long h = std::stol(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) throw std::invalid_argument(text);
    return {w, h};
  } catch (const std::logic_error&) {
    throw InvalidArgument("size must be N or WxH, got '" + text + "'");
  }
}

TrapSpec parse_traps(const std::string& text) {
  TrapSpec traps;
  std::stringstream ss(text);
  std::string disk;
  while (std::getline(ss, disk, ';')) {
    if (disk.empty()) continue;
    const auto last = disk.rfind(',');
    if (last == std::string::npos) throw InvalidArgument("trap must be re,im,r, got '" + disk + "'");
    TrapDisk t;
    t.center = parse_complex(disk.substr(0, last));
    try {
      t.radius = std::stod(disk.substr(last + 1));
    } catch (const std::logic_error&) {
      throw InvalidArgument("trap radius is not a number in '" + disk + "'");
    }
    traps.disks.push_back(t);
  }
  return traps;
}

struct MapOptions {
  std::string family = "sine";
  std::string theta = "golden";
  std::string lambda = "1,0";

  void add(CLI::App* sub) {
    sub->add_option("--family", family, "sine | zexp | expaffine")->check(CLI::IsMember({"sine", "zexp", "expaffine"}));
    sub->add_option("--theta", theta, "rotation parameter: golden, decimal or [a0;a1,...]");
    sub->add_option("--lambda", lambda, "multiplier re,im");
  }
  MapFamily build() const { return parse_family(family, theta, lambda); }
};

json raster_counts(const Raster& r) {
  std::size_t esc = 0, trap = 0, bnd = 0;
  for (const Cell& c : r.cells) {
    if (c.kind == CellKind::Escaping) ++esc;
    else if (c.kind == CellKind::Trapped) ++trap;
    else ++bnd;
  }
  return {{"escaping", esc}, {"trapped", trap}, {"bounded", bnd}};
}

}  // namespace

double parse_theta(const std::string& text) {
  if (text == "golden") return kGoldenMean;
  if (!text.empty() && (text.front() == '[' || text.find(';') != std::string::npos)) return cf_parse(text).value;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw InvalidArgument("theta must be 'golden', a decimal or [a0;a1,...], got '" + text + "'");
  }
}

Complex parse_complex(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const double re = std::stod(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string tail = text.substr(comma + 1);
    const double im = std::stod(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw InvalidArgument("complex value must be re,im, got '" + text + "'");
  }
}

MapFamily parse_family(const std::string& family, const std::string& theta, const std::string& lambda) {
  if (family == "sine") return MapFamily::sine(parse_theta(theta));
  if (family == "zexp") return MapFamily::zexp(parse_complex(lambda));
  if (family == "expaffine") return MapFamily::exp_affine(parse_complex(lambda));
  throw InvalidArgument("unknown family '" + family + "'");
}

std::string default_output_dir() {
  const char* env = std::getenv("SIEGELAB_OUTPUT_DIR");
  return env && *env ? std::string(env) : std::string(".");
}

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for entire maps with bounded type Siegel disks", "siegelab"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  int threads = 0;
  std::string out_path, config_path;
  auto common = [&](CLI::App* sub) {
    sub->option_defaults()->always_capture_default();
    sub->add_option("--config", config_path, "key=value file or JSON report/sidecar; flags win");
    sub->add_option("--threads", threads, "worker threads, 0 for the OpenMP default")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", out_path, "output path");
  };

  // cf
  auto* cf = app.add_subcommand("cf", "continued fraction expansion");
  std::string cf_x;
  int cf_terms = 20;
  long cf_bound = 10;
  cf->add_option("--x", cf_x, "number: golden, decimal or [a0;a1,...]")->required();
  cf->add_option("--terms", cf_terms, "partial quotients to compute")->check(CLI::Range(1, 200));
  cf->add_option("--bound", cf_bound, "bounded type threshold")->check(CLI::PositiveNumber);
  common(cf);

  // trace
  auto* trace = app.add_subcommand("trace", "trace a Siegel boundary orbit and measure its rotation number");
  MapOptions trace_map;
  std::string trace_seed, trace_center = "0,0";
  std::size_t trace_n = 100000;
  double trace_escape = 10.0;
  int trace_cf_terms = 6;
  trace_map.add(trace);
  trace->add_option("--seed-point", trace_seed, "orbit start re,im (default: first critical value)");
  trace->add_option("--center", trace_center, "Siegel disk centre re,im");
  trace->add_option("--iterations", trace_n)->check(CLI::PositiveNumber);
  trace->add_option("--escape-radius", trace_escape)->check(CLI::PositiveNumber);
  trace->add_option("--cf-terms", trace_cf_terms)->check(CLI::Range(1, 50));
  common(trace);

  // shrink
  auto* shrink = app.add_subcommand("shrink", "randomised pullback chains of a disk outside the Siegel disk");
  MapOptions shrink_map;
  std::uint64_t shrink_seed = 1;
  std::size_t shrink_chains = 50, shrink_depth = 25, shrink_vertices = 64, shrink_trace_n = 100000;
  double shrink_eps = 0.02, shrink_radius = 0.1, shrink_clearance = 0.02;
  std::string shrink_angle, shrink_center;
  int shrink_min = -1, shrink_max = 1;
  shrink_map.add(shrink);
  shrink->add_option("--seed", shrink_seed, "random seed");
  shrink->add_option("--chains", shrink_chains)->check(CLI::PositiveNumber);
  shrink->add_option("--depth", shrink_depth)->check(CLI::PositiveNumber);
  shrink->add_option("--epsilon", shrink_eps)->check(CLI::PositiveNumber);
  shrink->add_option("--disk-radius", shrink_radius)->check(CLI::PositiveNumber);
  shrink->add_option("--disk-angle", shrink_angle, "ray for the disk centre (default: argument of the first critical value)");
  shrink->add_option("--disk-center", shrink_center, "explicit disk centre re,im");
  shrink->add_option("--clearance", shrink_clearance)->check(CLI::NonNegativeNumber);
  shrink->add_option("--vertices", shrink_vertices)->check(CLI::Range(8, 4096));
  shrink->add_option("--trace-iterations", shrink_trace_n)->check(CLI::PositiveNumber);
  shrink->add_option("--min-branch", shrink_min);
  shrink->add_option("--max-branch", shrink_max);
  common(shrink);

  // halfnbhd
  auto* half = app.add_subcommand("halfnbhd", "half hyperbolic neighbourhood of an arc of the unit circle");
  double half_phi1 = 0.0, half_phi2 = 0.0, half_d = 0.0;
  std::size_t half_segments = 64;
  std::vector<std::string> half_points;
  half->add_option("--phi1", half_phi1, "arc start angle")->required();
  half->add_option("--phi2", half_phi2, "arc end angle")->required();
  half->add_option("--d", half_d, "hyperbolic radius")->required()->check(CLI::PositiveNumber);
  half->add_option("--segments", half_segments, "polyline segments per arc")->check(CLI::Range(1, 100000));
  half->add_option("--point", half_points, "query point re,im (repeatable)");
  common(half);

  // orbifold
  auto* orb = app.add_subcommand("orbifold", "ramification function of an orbit portrait");
  std::string orb_path;
  orb->add_option("--portrait", orb_path, "portrait JSON file")->required();
  common(orb);

  // renders
  struct RenderOptions {
    std::string center, size = "512", traps;
    double width = 0.0, height = 0.0, escape_radius = 0.0;
    std::uint32_t max_iter = 1000;
    bool png = false;
  };
  auto add_render = [&](CLI::App* sub, RenderOptions& r) {
    sub->add_option("--center", r.center, "window centre re,im");
    sub->add_option("--width", r.width, "window width")->check(CLI::PositiveNumber);
    sub->add_option("--height", r.height, "window height, 0 to match the aspect ratio");
    sub->add_option("--size", r.size, "pixels: N or WxH");
    sub->add_option("--max-iter", r.max_iter)->check(CLI::PositiveNumber);
    sub->add_option("--escape-radius", r.escape_radius, "0 for the family default");
    sub->add_option("--traps", r.traps, "trap disks re,im,r;re,im,r");
    sub->add_flag("--png", r.png, "also write a PNG");
  };
  auto* julia = app.add_subcommand("render-julia", "dynamical plane");
  MapOptions julia_map;
  RenderOptions julia_opts{"0,0", "512", "", 8.0, 0.0, 0.0, 1000, false};
  julia_map.add(julia);
  add_render(julia, julia_opts);
  common(julia);

  auto* param = app.add_subcommand("render-param", "parameter plane of lambda z e^z");
  RenderOptions param_opts{"15.21,22.37", "512", "", 3.0, 0.0, 0.0, 1000, false};
  add_render(param, param_opts);
  common(param);

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    args.pop_back();
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto do_render = [&](CLI::App* sub, const std::string& name, const RenderOptions& r,
                       const MapFamily* map) -> int {
    const auto [cols, rows] = parse_size(r.size);
    if (cols < 1 || rows < 1) throw InvalidArgument("size must be positive");
    Window window{parse_complex(r.center), r.width,
                  r.height > 0.0 ? r.height : r.width * static_cast<double>(rows) / static_cast<double>(cols)};
    RenderParams params;
    params.max_iter = r.max_iter;
    params.escape_radius = r.escape_radius;
    params.traps = parse_traps(r.traps);
    params.threads = threads;
    const Raster raster =
        map ? render_dynamical(*map, window, cols, rows, params) : render_parameter(window, cols, rows, params);
    Palette palette;
    palette.max_iter = r.max_iter;
    const std::string path = resolve_out(out_path, name + ".ppm");
    json result = raster_counts(raster);
    result["largest_bounded_component"] = largest_bounded_component(raster);
    result["window"] = {{"center", complex_json(window.center)}, {"width", window.width}, {"height", window.height}};
    result["escape_radius"] = r.escape_radius > 0.0 ? r.escape_radius : (map ? default_escape_radius(*map) : 1e6);
    result["note"] = "bounded means not escaped within max_iter; it does not separate Fatou from Julia points";
    write_image(raster, palette, path, report(sub->get_name(), sub, result));
    if (r.png) write_png(raster, palette, std::filesystem::path(path).replace_extension(".png").string());
    out << "wrote " << path << " (" << cols << "x" << rows << ", bounded component "
        << result["largest_bounded_component"].get<std::size_t>() << " px)\n";
    return 0;
  };

  try {
    if (*cf) {
      const ContinuedFraction c =
          cf_x.find(';') != std::string::npos ? cf_parse(cf_x) : cf_expand(parse_theta(cf_x), cf_terms);
      const auto bt = is_bounded_type(c, cf_bound);
      json conv = json::array();
      try {
        for (const auto& k : convergents(c)) conv.push_back({k.p, k.q});
      } catch (const std::overflow_error&) {
      }
      out << c.to_string() << '\n';
      out << "convergents:";
      for (const auto& k : conv) out << ' ' << k[0].get<std::int64_t>() << '/' << k[1].get<std::int64_t>();
      out << "\nbounded type (<= " << cf_bound << "): " << (bt.bounded ? "yes" : "no") << ", max "
          << bt.observed_max << " over " << bt.depth << " terms\n";
      write_json(resolve_out(out_path, "cf.json"),
                 report("cf", cf, {{"cf", c.to_string()},
                                   {"a0", c.a0},
                                   {"partial_quotients", c.partial_quotients},
                                   {"terminated", c.terminated},
                                   {"convergents", conv},
                                   {"bounded_type", bt.bounded},
                                   {"observed_max", bt.observed_max}}));
      return 0;
    }
    if (*trace) {
      const MapFamily map = trace_map.build();
      const auto sd = singular_data(map);
      Complex seed;
      if (!trace_seed.empty()) {
        seed = parse_complex(trace_seed);
      } else if (!sd.critical_values.empty()) {
        seed = sd.critical_values.front();
      } else {
        throw InvalidArgument("trace: family has no critical value, pass --seed-point");
      }
      const Complex center = parse_complex(trace_center);
      const BoundaryOrbit orbit = trace_boundary(map, seed, trace_n, trace_escape);
      json result{{"seed_point", complex_json(seed)}, {"escaped", orbit.escaped}, {"points", orbit.points.size()}};
      double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
      for (Complex p : orbit.points) {
        rmin = std::min(rmin, std::abs(p - center));
        rmax = std::max(rmax, std::abs(p - center));
      }
      result["radius_min"] = rmin;
      result["radius_max"] = rmax;
      out << "orbit of " << seed << ": " << orbit.points.size() << " points, "
          << (orbit.escaped ? "escaped" : "bounded") << '\n';
      if (!orbit.escaped) {
        const RotationMeasurement m = measure_rotation_number(orbit, center);
        const ContinuedFraction c = cf_expand(m.rotation_number, trace_cf_terms);
        result["rotation_number"] = m.rotation_number;
        result["error_bound"] = m.error_bound;
        result["cf"] = c.to_string();
        out << "rotation number " << m.rotation_number << " +- " << m.error_bound << "  " << c.to_string() << '\n';
      }
      write_json(resolve_out(out_path, "trace.json"), report("trace", trace, result));
      return orbit.escaped ? 2 : 0;
    }
    if (*shrink) {
      const MapFamily map = shrink_map.build();
      JordanDiskApprox disk0;
      if (!shrink_center.empty()) {
        disk0 = JordanDiskApprox::circle(parse_complex(shrink_center), shrink_radius, shrink_vertices);
      } else {
        const auto sd = singular_data(map);
        if (sd.critical_values.empty()) throw InvalidArgument("shrink: family has no critical value, pass --disk-center");
        const Complex cv = sd.critical_values.front();
        const BoundaryOrbit orbit = trace_boundary(map, cv, shrink_trace_n, 10.0);
        if (orbit.escaped) throw ExperimentDegenerate("shrink: critical orbit escaped, no boundary to place the disk against");
        const double angle = shrink_angle.empty() ? std::arg(cv) : std::stod(shrink_angle);
        disk0 = disk_outside_orbit(orbit.points, angle, shrink_radius, shrink_clearance, shrink_vertices);
      }
      ShrinkOptions opts;
      opts.min_branch = shrink_min;
      opts.max_branch = shrink_max;
      opts.threads = threads;
      const ShrinkReport rep = shrink_experiment(map, disk0, shrink_chains, shrink_depth, shrink_eps, shrink_seed, opts);
      json levels = json::array();
      for (const auto& l : rep.levels) {
        levels.push_back({{"level", l.level}, {"count", l.count}, {"max", l.max}, {"median", l.median}, {"min", l.min}});
      }
      json failures = json::array();
      for (std::size_t i = 0; i < rep.failures.size(); ++i) {
        if (rep.failures[i]) {
          failures.push_back({{"chain", i}, {"level", rep.failures[i]->level}, {"kind", rep.failures[i]->kind},
                              {"message", rep.failures[i]->message}});
        }
      }
      json result{{"disk_center", complex_json(disk0.vertex_centroid())},
                  {"completed", rep.completed},
                  {"levels", levels},
                  {"first_level_below_epsilon",
                   rep.first_level_below_epsilon ? json(*rep.first_level_below_epsilon) : json(nullptr)},
                  {"chain_diameters", rep.chain_diameters},
                  {"chain_branches", rep.chain_branches},
                  {"failures", failures}};
      const std::string path = resolve_out(out_path, "shrink.json");
      write_json(path, report("shrink", shrink, result));
      out << "completed " << rep.completed << "/" << rep.chains << " chains; ";
      if (!rep.levels.empty()) out << "median diameter at depth " << rep.levels.back().level << ": " << rep.levels.back().median << "; ";
      out << "N = " << (rep.first_level_below_epsilon ? std::to_string(*rep.first_level_below_epsilon) : "not reached")
          << "\nreport " << path << '\n';
      return 0;
    }
    if (*half) {
      const ArcInterval interval = make_interval(half_phi1, half_phi2);
      const HalfNeighborhood hn = build_half_neighborhood(interval, half_d);
      auto arc_json = [&](const CircleArc& a) {
        json pts = json::array();
        for (Complex p : a.polyline(half_segments)) pts.push_back(complex_json(p));
        return json{{"center", complex_json(a.center)}, {"radius", a.radius}, {"angle_start", a.angle_start},
                    {"angle_end", a.angle_end}, {"polyline", pts}};
      };
      json queries = json::array();
      for (const auto& s : half_points) {
        const Complex z = parse_complex(s);
        json q{{"point", complex_json(z)}, {"member", half_membership(hn, z)}};
        if (std::abs(std::abs(z) - 1.0) > 0.0) {
          try {
            q["distance_to_arc"] = slit_sphere_distance_to_arc(interval, z);
          } catch (const PointOnSlit&) {
            q["distance_to_arc"] = nullptr;
          }
        }
        queries.push_back(q);
      }
      json result{{"beta", hn.beta}, {"log_cot_beta_over_4", std::log(1.0 / std::tan(hn.beta / 4.0))},
                  {"outer_arc", arc_json(hn.outer_arc)}, {"inner_arc", arc_json(hn.inner_arc)}, {"queries", queries}};
      write_json(resolve_out(out_path, "halfnbhd.json"), report("halfnbhd", half, result));
      out << "beta " << hn.beta << "; outer circle centre " << hn.outer_arc.center << " radius " << hn.outer_arc.radius
          << '\n';
      for (const auto& q : queries) out << "point " << q["point"].dump() << (q["member"].get<bool>() ? " inside" : " outside") << '\n';
      return 0;
    }
    if (*orb) {
      std::ifstream f(orb_path);
      if (!f) throw IoError("cannot read portrait '" + orb_path + "'");
      json doc;
      try {
        doc = json::parse(f);
      } catch (const json::exception& e) {
        throw InvalidArgument(std::string("portrait: ") + e.what());
      }
      const OrbitPortrait p = portrait_from_json(doc);
      const RamificationAssignment nu = compute_nu(p);
      const RamificationAssignment nu_tilde = pull_back_nu(p, nu);
      const CoveringReport cov = check_covering(p, nu, nu_tilde);
      json nodes = json::object();
      out << "node  nu  nu~  class\n";
      for (std::size_t i = 0; i < p.size(); ++i) {
        nodes[p.nodes[i]] = {{"nu", nu[i]}, {"nu_tilde", nu_tilde[i]}, {"class", to_string(cov.per_node[i])}};
        out << p.nodes[i] << "  " << nu[i] << "  " << nu_tilde[i] << "  " << to_string(cov.per_node[i]) << '\n';
      }
      out << "global: " << to_string(cov.global) << '\n';
      write_json(resolve_out(out_path, "orbifold.json"),
                 report("orbifold", orb, {{"nodes", nodes}, {"global", to_string(cov.global)}}));
      return 0;
    }
    if (*julia) {
      const MapFamily map = julia_map.build();
      return do_render(julia, "julia", julia_opts, &map);
    }
    if (*param) return do_render(param, "param", param_opts, nullptr);
  } catch (const NotDivisible& e) {
    err << "error: " << e.what() << " (node " << e.node() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace siegelab::cli
