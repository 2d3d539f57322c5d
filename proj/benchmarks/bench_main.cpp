#include <benchmark/benchmark.h>

#include <finitype/curve.hpp>
#include <finitype/decomposition.hpp>
#include <finitype/groebner.hpp>
#include <finitype/ideal.hpp>
#include <finitype/parser.hpp>
#include <finitype/typecalc.hpp>

using namespace finitype;

namespace {

constexpr const char* kFixture = "2*Re(z3) + |z1^2 - z2*z3|^2 + |z2|^4";

IdealSpec cyclic3() {
  return IdealSpec(3, {parse_holo_poly("z1 + z2 + z3", 3), parse_holo_poly("z1*z2 + z2*z3 + z3*z1", 3),
                       parse_holo_poly("z1*z2*z3 - 1", 3)});
}

void BM_GroebnerCyclic3(benchmark::State& state) {
  const IdealSpec ideal = cyclic3();
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(ideal));
}
BENCHMARK(BM_GroebnerCyclic3);

void BM_ColengthPowers(benchmark::State& state) {
  const auto d = std::to_string(state.range(0));
  const IdealSpec ideal(3, {parse_holo_poly("z1^" + d + " - z2*z3", 3), parse_holo_poly("z2^" + d, 3),
                            parse_holo_poly("z3^2 - z1*z2", 3)});
  for (auto _ : state) benchmark::DoNotOptimize(colength(ideal));
}
BENCHMARK(BM_ColengthPowers)->Arg(2)->Arg(3)->Arg(4);

void BM_ColengthBySaturation(benchmark::State& state) {
  const IdealSpec ideal(2, {parse_holo_poly("z1*(z2 - 1)", 2), parse_holo_poly("z2*(z2 - 1)", 2)});
  for (auto _ : state) benchmark::DoNotOptimize(colength(ideal));
}
BENCHMARK(BM_ColengthBySaturation);

void BM_ProbeFixture(benchmark::State& state) {
  const std::vector<RealPoly> gens{parse_poly(kFixture, 3)};
  const Point p{0, 0, GaussianRational::i()};
  ProbeConfig config;
  config.max_weight = static_cast<unsigned>(state.range(0));
  const auto curves = enumerate_probe_curves(3, p, config);
  for (auto _ : state) {
    ExtRational best = mpq_class(0);
    for (const auto& gamma : curves) best = std::max(best, probe_min_order(gens, p, gamma));
    benchmark::DoNotOptimize(best);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * curves.size()));
}
BENCHMARK(BM_ProbeFixture)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DecomposeFixture(benchmark::State& state) {
  const RealPoly r = parse_poly(kFixture, 3);
  const Point p{0, 0, GaussianRational::i()};
  for (auto _ : state) benchmark::DoNotOptimize(decompose(r, p, 8));
}
BENCHMARK(BM_DecomposeFixture);

void BM_TypeBoundsFixture(benchmark::State& state) {
  const ProblemSpec spec(3, {parse_poly(kFixture, 3)});
  for (auto _ : state) benchmark::DoNotOptimize(type_bounds(spec, Point(3), TypeConfig{}));
}
BENCHMARK(BM_TypeBoundsFixture)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
