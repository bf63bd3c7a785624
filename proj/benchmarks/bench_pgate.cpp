#include "knot_examples.hpp"
#include "support.hpp"

#include <pgate/obstruction.hpp>
#include <pgate/torsion.hpp>

#include <benchmark/benchmark.h>

using namespace pgate;
using namespace pgate::testing;

namespace {

void BM_Norm10_157(benchmark::State& state) {
  const Polynomial P = substitute_neg_t_squared(poly(field(k10_157_field), k10_157_torsion));
  for (auto _ : state) benchmark::DoNotOptimize(norm(P));
}
BENCHMARK(BM_Norm10_157)->Unit(benchmark::kMillisecond);

void BM_Factor10_157(benchmark::State& state) {
  const Polynomial P = substitute_neg_t_squared(poly(field(k10_157_field), k10_157_torsion));
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_nf(P));
}
BENCHMARK(BM_Factor10_157)->Unit(benchmark::kMillisecond);

void BM_Irreducible12n553(benchmark::State& state) {
  const Polynomial P = substitute_neg_t_squared(poly(field(k12n553_field), k12n553_torsion));
  for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(P));
}
BENCHMARK(BM_Irreducible12n553)->Unit(benchmark::kMillisecond);

void BM_CheckPairing10_157(benchmark::State& state) {
  const Polynomial P = substitute_neg_t_squared(poly(field(k10_157_field), k10_157_torsion));
  for (auto _ : state) benchmark::DoNotOptimize(check_pairing(P));
}
BENCHMARK(BM_CheckPairing10_157)->Unit(benchmark::kMillisecond);

void BM_FactorRationalDegree(benchmark::State& state) {
  // (t + 2)(t^2 + 2)...(t^n + 2)
  Polynomial p = qpoly("1");
  for (int k = 1; k <= state.range(0); ++k) p *= qpoly("t^" + std::to_string(k) + " + 2");
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_q(p));
}
BENCHMARK(BM_FactorRationalDegree)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_FigureEightTorsion(benchmark::State& state) {
  auto K = field("z^2 - z + 1");
  auto g = parse_presentation("gens: a b; rel: A b a B a b A B a B; meridian: a");
  const FieldElement one(K, 1L), zero(K), zz = FieldElement::generator(K);
  Representation rho{g, {Matrix2{one, one, zero, one}, Matrix2{one, zero, zz, one}}, K};
  const Abelianization alpha = abelianize(g);
  for (auto _ : state) benchmark::DoNotOptimize(twisted_alexander(g, alpha, rho));
}
BENCHMARK(BM_FigureEightTorsion)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
