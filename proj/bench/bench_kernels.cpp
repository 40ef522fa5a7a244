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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "siegelab/hypgeom.hpp"
#include "siegelab/pullback.hpp"
#include "siegelab/rotation.hpp"
#include "siegelab/render.hpp"
#include "siegelab/siegel.hpp"

using namespace siegelab;

namespace {

const MapFamily& golden_sine() {
  static const MapFamily map = MapFamily::sine(kGoldenMean);
  return map;
}

const JordanDiskApprox& golden_disk() {
  static const JordanDiskApprox disk = [] {
    const auto orbit = trace_boundary(golden_sine(), unit_root(kGoldenMean), 100000, 10.0);
    return disk_outside_orbit(orbit.points, kTwoPi * kGoldenMean, 0.1, 0.02, 64);
  }();
  return disk;
}

const PolygonalDomain& slotted_square() {
  static const PolygonalDomain dom{Polygon{{{-2.0, -2.0}, {2.0, -2.0}, {2.0, 2.0}, {-2.0, 2.0}}},
                                   {Polygon{{{-0.3, -0.05}, {0.3, -0.05}, {0.3, 0.05}, {-0.3, 0.05}}}}};
  return dom;
}

const Window kJuliaWindow{0.0, 8.0, 8.0};
const Window kParamWindow{Complex(15.21, 22.37), 3.0, 3.0};

void BM_RenderDynamicalSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(render_dynamical_serial(golden_sine(), kJuliaWindow, 256, 256));
}

void BM_RenderDynamicalOmp(benchmark::State& state) {
  RenderParams p;
  p.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(render_dynamical(golden_sine(), kJuliaWindow, 256, 256, p));
}

void BM_RenderParameterSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(render_parameter_serial(kParamWindow, 256, 256));
}

void BM_RenderParameterOmp(benchmark::State& state) {
  RenderParams p;
  p.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(render_parameter(kParamWindow, 256, 256, p));
}

void BM_ChordalDiameterSerial(benchmark::State& state) {
  const auto disk = JordanDiskApprox::circle(Complex(0.3, 0.1), 0.7, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chordal_diameter_serial(disk));
}

void BM_ChordalDiameterOmp(benchmark::State& state) {
  const auto disk = JordanDiskApprox::circle(Complex(0.3, 0.1), 0.7, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chordal_diameter(disk));
}

void BM_ShrinkSerial(benchmark::State& state) {
  golden_disk();
  for (auto _ : state) benchmark::DoNotOptimize(shrink_experiment_serial(golden_sine(), golden_disk(), 16, 12, 0.02, 1));
}

void BM_ShrinkOmp(benchmark::State& state) {
  golden_disk();
  ShrinkOptions o;
  o.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shrink_experiment(golden_sine(), golden_disk(), 16, 12, 0.02, 1, o));
}

void BM_DistanceFieldSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(boundary_distance_field_serial(slotted_square(), Complex(-2.0, -2.0), 0.01, 401, 401));
}

void BM_DistanceFieldOmp(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(boundary_distance_field(slotted_square(), Complex(-2.0, -2.0), 0.01, 401, 401, threads));
}

}  // namespace

BENCHMARK(BM_RenderDynamicalSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderDynamicalOmp)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderParameterSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderParameterOmp)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChordalDiameterSerial)->Arg(1000)->Arg(4000);
BENCHMARK(BM_ChordalDiameterOmp)->Arg(1000)->Arg(4000);
BENCHMARK(BM_ShrinkSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShrinkOmp)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceFieldSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceFieldOmp)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
