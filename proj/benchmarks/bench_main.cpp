#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "gaha/oda.hpp"
#include "gaha/principal_series.hpp"
#include "gaha/tensor_model.hpp"

using namespace gaha;

namespace {

std::shared_ptr<const HeckeAlgebra> tilde(int k) { return std::make_shared<const HeckeAlgebra>(HeckeAlgebra::tilde(k, make_rational(1, 2))); }

}  // namespace

static void BM_HeckeMultiply(benchmark::State& st) {
  auto H = tilde(static_cast<int>(st.range(0)));
  std::mt19937_64 rng(1);
  auto a = H->random_element(rng, 2, 4), b = H->random_element(rng, 2, 4);
  for (auto _ : st) benchmark::DoNotOptimize(H->mul(a, b));
}
BENCHMARK(BM_HeckeMultiply)->Arg(2)->Arg(3);

static void BM_VerifyRelations(benchmark::State& st) {
  auto H = tilde(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(H->verify_relations(10));
}
BENCHMARK(BM_VerifyRelations)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SymbolicModule(benchmark::State& st) {
  auto H = tilde(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(SymbolicPS(H));
}
BENCHMARK(BM_SymbolicModule)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_HermitianForm(benchmark::State& st) {
  auto H = tilde(static_cast<int>(st.range(0)));
  SymbolicPS sym(H);
  PSModule ps = sym.at(std::vector<Rational>(H->nvars(), make_rational(1, 5)));
  for (auto _ : st) benchmark::DoNotOptimize(hermitian_form(ps));
}
BENCHMARK(BM_HermitianForm)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Scan50(benchmark::State& st) {
  auto H = tilde(2);
  SymbolicPS sym(H);
  auto pts = parse_line("0..49/49", {make_rational(1, 7), make_rational(1, 11)});
  for (auto _ : st) benchmark::DoNotOptimize(unitarity_scan(sym, pts, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_Scan50)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_Invariants(benchmark::State& st) {
  auto L = std::make_shared<const LieModel>(LieModel::build(parse_group(st.range(0) == 0 ? "Sp(4,R)" : "GL(3,R)")));
  TensorSpace ts(L, L->rank());
  for (auto _ : st) benchmark::DoNotOptimize(invariants(ts, L->rank()));
}
BENCHMARK(BM_Invariants)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_PBWNormal(benchmark::State& st) {
  auto L = std::make_shared<const LieModel>(LieModel::build(parse_group("GL(3,R)")));
  std::mt19937_64 rng(2);
  std::vector<UElem> words;
  for (int i = 0; i < 20; ++i) {
    Word w;
    for (int j = 0; j < st.range(0); ++j) w.push_back(static_cast<int>(rng() % 9));
    words.push_back(UElem{{w, Rational(1)}});
  }
  for (auto _ : st) {
    Enveloping U(L);  // fresh cache each round
    for (const auto& u : words) benchmark::DoNotOptimize(U.normal(u));
  }
}
BENCHMARK(BM_PBWNormal)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_EquivariantHoms(benchmark::State& st) {
  auto L = std::make_shared<const LieModel>(LieModel::build(parse_group("GL(2,R)")));
  TensorSpace ts(L, 2);
  for (auto _ : st) {
    Enveloping U(L);
    benchmark::DoNotOptimize(equivariant_homs(U, ts, static_cast<int>(st.range(0))));
  }
}
BENCHMARK(BM_EquivariantHoms)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_OdaSuiteRankOne(benchmark::State& st) {
  OdaOptions opt;
  opt.degree = 3;
  opt.nus = {{make_rational(1, 3)}};
  for (auto _ : st) benchmark::DoNotOptimize(oda_suite(parse_group("U(2,1)"), opt));
}
BENCHMARK(BM_OdaSuiteRankOne)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
