// Parallel kernels against their serial references.
#include <random>

#include <benchmark/benchmark.h>

#include "toridim/fixtures.hpp"
#include "toridim/hardness.hpp"
#include "toridim/oracle.hpp"

using namespace toridim;
namespace fx = toridim::fixtures;

namespace {

RationalPolytope big_simplex() { return scaled(fx::standard_simplex(3), 14); }

PointFamily random_family() {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<PointSet> sets(9);
  for (auto& s : sets)
    for (int k = 0; k < 3; ++k) s.push_back(make_intvec({c(rng), c(rng), c(rng), c(rng), c(rng), c(rng)}));
  return make_family(sets);
}

SetSystem random_sets(std::size_t ground, std::size_t count) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pt(0, ground - 1);
  std::vector<IndexSet> sets;
  for (std::size_t k = 0; k < count; ++k) sets.push_back({pt(rng), pt(rng)});
  return make_set_system(ground, sets);
}

PolytopalSystem hitting_instance() {
  auto s = random_sets(8, 10);
  return hitting_system(s, hitting_supports(s));
}

void lattice_points_parallel(benchmark::State& st) {
  auto p = big_simplex();
  for (auto _ : st) benchmark::DoNotOptimize(lattice_points(p));
}
void lattice_points_serial_ref(benchmark::State& st) {
  auto p = big_simplex();
  for (auto _ : st) benchmark::DoNotOptimize(lattice_points_serial(p));
}

void essential_parallel(benchmark::State& st) {
  auto f = random_family();
  for (auto _ : st) benchmark::DoNotOptimize(is_essential(f));
}
void essential_serial_ref(benchmark::State& st) {
  auto f = random_family();
  for (auto _ : st) benchmark::DoNotOptimize(is_essential_serial(f));
}

void orbit_table_parallel(benchmark::State& st) {
  auto sys = fx::hyperelliptic_weighted(4);
  for (auto _ : st) benchmark::DoNotOptimize(orbit_table(sys));
}
void orbit_table_serial_ref(benchmark::State& st) {
  auto sys = fx::hyperelliptic_weighted(4);
  for (auto _ : st) benchmark::DoNotOptimize(orbit_table_serial(sys));
}

void polytopal_parallel(benchmark::State& st) {
  auto sys = hitting_instance();
  for (auto _ : st) benchmark::DoNotOptimize(polytopal_dimension(sys));
}
void polytopal_serial_ref(benchmark::State& st) {
  auto sys = hitting_instance();
  for (auto _ : st) benchmark::DoNotOptimize(polytopal_dimension_serial(sys));
}

void hitting_parallel(benchmark::State& st) {
  auto s = random_sets(22, 30);
  for (auto _ : st) benchmark::DoNotOptimize(min_hitting_set(s));
}
void hitting_serial_ref(benchmark::State& st) {
  auto s = random_sets(22, 30);
  for (auto _ : st) benchmark::DoNotOptimize(min_hitting_set_serial(s));
}

const std::vector<long> weights{1, 2, 3};

std::vector<std::vector<IntVec>> probe_supports() {
  auto p = fx::weighted_simplex(weights);
  return {full_support(p, 6), full_support(p, 6)};
}

void probe_parallel(benchmark::State& st) {
  auto s = probe_supports();
  for (auto _ : st) benchmark::DoNotOptimize(oracle::random_proj_dimension(oracle::Ring{weights}, s, 8, 1));
}
void probe_serial_ref(benchmark::State& st) {
  auto s = probe_supports();
  for (auto _ : st) benchmark::DoNotOptimize(oracle::random_proj_dimension_serial(oracle::Ring{weights}, s, 8, 1));
}

}  // namespace

BENCHMARK(lattice_points_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(lattice_points_serial_ref)->Unit(benchmark::kMillisecond);
BENCHMARK(essential_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(essential_serial_ref)->Unit(benchmark::kMillisecond);
BENCHMARK(orbit_table_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(orbit_table_serial_ref)->Unit(benchmark::kMillisecond);
BENCHMARK(polytopal_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(polytopal_serial_ref)->Unit(benchmark::kMillisecond);
BENCHMARK(hitting_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(hitting_serial_ref)->Unit(benchmark::kMillisecond);
BENCHMARK(probe_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(probe_serial_ref)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
