#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "hcyl/autfree.hpp"
#include "hcyl/cylinder.hpp"
#include "hcyl/factor.hpp"
#include "hcyl/matrix.hpp"
#include "hcyl/quotients.hpp"

using namespace hcyl;

namespace {

PolyMatrix random_matrix(std::size_t n, int rank, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> ex(-1, 1), co(-2, 2), terms(1, 3);
  PolyMatrix m(n, n, rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly f(rank);
      for (long t = terms(gen); t > 0; --t) {
        Exponent e(static_cast<std::size_t>(rank));
        for (auto& x : e) x = ex(gen);
        const long c = co(gen);
        f.add_term(e, c == 0 ? 1 : c);
      }
      m(i, j) = f;
    }
  return m;
}

AdmissiblePresentation load(const std::string& name) {
  std::ifstream in(std::string(HCYL_CORPUS_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_BareissDet(benchmark::State& state) {
  const PolyMatrix m = random_matrix(static_cast<std::size_t>(state.range(1)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_det(m, exec_of(state)));
}
BENCHMARK(BM_BareissDet)->ArgsProduct({{0, 1}, {4, 5, 6}})->Unit(benchmark::kMillisecond);

void BM_MagnusComposed(benchmark::State& state) {
  const AdmissiblePresentation p = compose(load("ml.pres"), load("ml_trivial.pres"));
  for (auto _ : state) benchmark::DoNotOptimize(magnus_matrix(p, exec_of(state)));
}
BENCHMARK(BM_MagnusComposed)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FoxMatrixFm(benchmark::State& state) {
  const FreeEndomorphism phi = f_m(3, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fox_matrix_of_endo(phi, exec_of(state)));
}
BENCHMARK(BM_FoxMatrixFm)->ArgsProduct({{0, 1}, {10, 40}})->Unit(benchmark::kMillisecond);

void BM_WitnessFm(benchmark::State& state) {
  for (auto _ : state) {
    StepBudget budget;
    benchmark::DoNotOptimize(witness_family_fm(state.range(1), budget, exec_of(state)));
  }
}
BENCHMARK(BM_WitnessFm)->ArgsProduct({{0, 1}, {5}})->Unit(benchmark::kMillisecond);

void BM_WitnessCfk(benchmark::State& state) {
  for (auto _ : state) {
    StepBudget budget;
    benchmark::DoNotOptimize(witness_family_cfk(state.range(1), budget, exec_of(state)));
  }
}
BENCHMARK(BM_WitnessCfk)->ArgsProduct({{0, 1}, {6}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
