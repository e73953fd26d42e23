#include <benchmark/benchmark.h>

#include "quasitoric/hirzebruch.hpp"

namespace {

using namespace quasitoric;
namespace hz = quasitoric::hirzebruch;

void BM_ScalarMultiplyCompare(benchmark::State& state) {
  const QuadScalar x = parse_scalar("3/7+5/11*sqrt(2)"), y = parse_scalar("-2/3+1/9*sqrt(2)");
  for (auto _ : state) {
    QuadScalar z = x * y + x;
    benchmark::DoNotOptimize(z < y);
  }
}
BENCHMARK(BM_ScalarMultiplyCompare);

void BM_TrapezoidVrep(benchmark::State& state) {
  const auto h = hz::trapezoid_hrep(ParamSpec::parse("1+sqrt(2)"));
  for (auto _ : state) benchmark::DoNotOptimize(vrep_from_hrep(h));
}
BENCHMARK(BM_TrapezoidVrep);

void BM_QuasilatticeMembership(benchmark::State& state) {
  const auto q = hz::quasilattice(ParamSpec::parse("sqrt(2)"));
  const Vec2 v{7, parse_scalar("3-2*sqrt(2)")};
  for (auto _ : state) benchmark::DoNotOptimize(member(q, v));
}
BENCHMARK(BM_QuasilatticeMembership);

void BM_GaleDual(benchmark::State& state) {
  const auto v = hz::vector_config(ParamSpec::parse("sqrt(2)"));
  for (auto _ : state) benchmark::DoNotOptimize(gale_dual(v));
}
BENCHMARK(BM_GaleDual);

void BM_Polytopality(benchmark::State& state) {
  const auto a = ParamSpec::parse("sqrt(2)");
  const auto l = standard_lambda(a);
  const auto c = chamber_from_triangulation(hz::triangulation(), 5);
  for (auto _ : state) benchmark::DoNotOptimize(is_polytopal(l, c));
}
BENCHMARK(BM_Polytopality);

void BM_CutStrip(benchmark::State& state) {
  const auto a = ParamSpec::parse("sqrt(2)");
  const auto strip = hz::strip();
  const auto z2 = Quasilattice::integer_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(cut_polyhedron(strip, z2, hz::cut_direction(a), hz::cut_level()));
}
BENCHMARK(BM_CutStrip);

void BM_ProjectionInvariance(benchmark::State& state) {
  const auto datum = hz::lvm_datum(ParamSpec::parse("sqrt(2)"));
  const std::vector<ProjPoint> z{ProjPoint({{0.3, 0.1}, {0.5, -0.2}, {0.7, 0.4}, {-0.1, 0.6}, {1, 0}})};
  const std::vector<Complex> t{{0.37, 0.21}};
  for (auto _ : state) benchmark::DoNotOptimize(verify_projection_invariance(datum, z, t, 1e-9));
}
BENCHMARK(BM_ProjectionInvariance);

}  // namespace

BENCHMARK_MAIN();
