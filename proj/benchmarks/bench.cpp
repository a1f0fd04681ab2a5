#include <benchmark/benchmark.h>

#include <random>

#include "orbtop/complex.hpp"
#include "orbtop/coset.hpp"
#include "orbtop/function.hpp"
#include "orbtop/homology.hpp"
#include "orbtop/orbit.hpp"
#include "orbtop/simplicial.hpp"
#include "orbtop/snf.hpp"
#include "orbtop/transform.hpp"
#include "orbtop/words.hpp"

using namespace orbtop;

namespace {

void BM_ClassifyCollatz27(benchmark::State& state) {
  FunctionHandle C = FunctionHandle::collatz();
  for (auto _ : state)
    benchmark::DoNotOptimize(classify(C, Integer(27), OrbitBudget{}));
}
BENCHMARK(BM_ClassifyCollatz27);

void BM_ClassifyCollatz837799(benchmark::State& state) {
  // The longest orbit below 10^6: preperiod 522.
  FunctionHandle C = FunctionHandle::collatz();
  for (auto _ : state)
    benchmark::DoNotOptimize(classify(C, Integer(837799), OrbitBudget{}));
}
BENCHMARK(BM_ClassifyCollatz837799);

void BM_ScanCollatz(benchmark::State& state) {
  FunctionHandle C = FunctionHandle::collatz();
  for (auto _ : state) {
    ScanSummary s = scan(C, 1, Integer(state.range(0)), OrbitBudget{},
                         nullptr, 1);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanCollatz)->Arg(1000)->Arg(10000);

void BM_HatEval(benchmark::State& state) {
  FunctionHandle h = hat(FunctionHandle::collatz());
  Integer x = Integer(1) << 200;
  x += 7;
  for (auto _ : state) benchmark::DoNotOptimize(h(x));
}
BENCHMARK(BM_HatEval);

void BM_Snf(benchmark::State& state) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M.at(i, j) = entry(rng);
  for (auto _ : state) {
    Matrix copy = M;
    benchmark::DoNotOptimize(smith_normal_form(std::move(copy)));
  }
}
BENCHMARK(BM_Snf)->Arg(8)->Arg(16)->Arg(24);

void BM_HomologyB(benchmark::State& state) {
  PresentationComplex B =
      PresentationComplex::B(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(homology(truncate_full(B)));
}
BENCHMARK(BM_HomologyB)->Arg(10)->Arg(30);

void BM_CertifyH3(benchmark::State& state) {
  FinitePresentation h3 = presentation_H(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_trivial(h3, 100000));
}
BENCHMARK(BM_CertifyH3);

void BM_TophStream(benchmark::State& state) {
  Graph G = build_Gamma(FunctionHandle::collatz());
  ColumnSource src = [&G](std::uint64_t index) {
    auto [tail, head] = G.edge(Integer(static_cast<unsigned long>(index)));
    std::vector<std::pair<Integer, Integer>> col;
    if (tail == head) return col;
    col.emplace_back(tail, -1);
    col.emplace_back(head, 1);
    if (col[0].first > col[1].first) std::swap(col[0], col[1]);
    return col;
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(toph_stream(src, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TophStream)->Arg(200)->Arg(1000);

void BM_Subdivision(benchmark::State& state) {
  FiniteSlice slice = full_slice(
      PresentationComplex::B(static_cast<unsigned long>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(presentation_to_simplicial(slice));
}
BENCHMARK(BM_Subdivision)->Arg(1)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
