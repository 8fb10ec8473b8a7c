#include <benchmark/benchmark.h>

#include "chazy/flow.hpp"
#include "chazy/transforms.hpp"

using namespace chazy;

namespace {

QuadExt q(long n, long d = 1) { return QuadExt(rat(n, d)); }

void BM_PolyMultiply(benchmark::State& state) {
  auto vars = VarTable::make({"x", "y", "z"});
  MPoly f = parse_poly(vars, "(x + 2*y - 3*z + 1)");
  MPoly g = f;
  for (int i = 1; i < state.range(0); ++i) g = g * f;
  for (auto _ : state) {
    MPoly h = g * f;
    benchmark::DoNotOptimize(h.term_count());
  }
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(8)->Arg(12);

void BM_Pushforward(benchmark::State& state) {
  const BiMap& m = MapRegistry::instance().map("ix.phi1");
  for (auto _ : state) {
    auto rep = pushforward_check(m);
    benchmark::DoNotOptimize(rep.ok);
  }
}
BENCHMARK(BM_Pushforward);

void BM_BtCheckG0(benchmark::State& state) {
  const ScalarBT& m = MapRegistry::instance().scalar("ix.g0");
  for (auto _ : state) {
    auto rep = bt_check(m);
    benchmark::DoNotOptimize(rep.ok);
  }
}
BENCHMARK(BM_BtCheckG0);

void BM_LaurentExtend(benchmark::State& state) {
  const auto& sys = Catalog::instance().system("chazy.III.system");
  Balance b{{1, 1, 1}, {q(0), q(-2), q(-1)}};
  FreeValues fv = {{{3, 0}, q(1)}};
  for (auto _ : state) {
    LaurentSolution sol = laurent_extend(sys, b, q(0), fv, state.range(0));
    benchmark::DoNotOptimize(sol.series.size());
  }
}
BENCHMARK(BM_LaurentExtend)->Arg(6)->Arg(12)->Arg(20);

void BM_LocalIndex(benchmark::State& state) {
  const auto& sys = Catalog::instance().system("chazy.III.system");
  Chart U1 = projective_chart(sys, 1);
  std::vector<QuadExt> pt = {q(0), q(1), q(-10)};
  for (auto _ : state) {
    LocalIndex idx = local_index(sys, U1, pt);
    benchmark::DoNotOptimize(idx.eigenvalues.size());
  }
}
BENCHMARK(BM_LocalIndex);

void BM_FindAccessible(benchmark::State& state) {
  const auto& sys = Catalog::instance().system("chazy.III.system");
  for (auto _ : state) {
    FindResult fr = find_accessible(sys, nullptr);
    benchmark::DoNotOptimize(fr.points.size());
  }
}
BENCHMARK(BM_FindAccessible);

void BM_Integrate(benchmark::State& state) {
  const auto& sys = Catalog::instance().system("darboux.halphen.system");
  PathSpec path{{CScalar(0, 0), CScalar(-1, 0)}};
  IntegratorConfig cfg;
  cfg.rtol = 1e-10;
  std::vector<CScalar> ic = {CScalar(-1, 0), CScalar(-1, 0), CScalar(-1, 0)};
  for (auto _ : state) {
    Trajectory tr = integrate(sys, ic, path, cfg);
    benchmark::DoNotOptimize(tr.states.size());
  }
}
BENCHMARK(BM_Integrate);

void BM_HolomorphyAppA(benchmark::State& state) {
  const auto& sys = Catalog::instance().system("chazy.I.system");
  const auto& charts = MapRegistry::instance().charts("chazy.I.system.charts");
  for (auto _ : state) {
    auto rep = holomorphy_check(sys, charts);
    benchmark::DoNotOptimize(rep.all_polynomial);
  }
}
BENCHMARK(BM_HolomorphyAppA);

}  // namespace

BENCHMARK_MAIN();
