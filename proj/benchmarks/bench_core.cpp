#include <benchmark/benchmark.h>

#include <random>

#include "orbitsep/expr.hpp"
#include "orbitsep/generic.hpp"
#include "orbitsep/vanish.hpp"

using namespace orbitsep;

namespace {

Matrix random_rational_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<long> num(-99, 99), den(1, 20);
  std::vector<std::vector<FieldElem>> rows(n);
  for (auto& r : rows)
    for (std::size_t j = 0; j < n; ++j)
      r.push_back(FieldElem::rational(num(eng), den(eng)));
  return Matrix::from_rows(kRationals, rows);
}

SemigroupSpec additive_spec() {
  const std::vector<std::string> vars{"x", "y"};
  return SemigroupSpec(
      {SelfMap({parse_expression("x", vars, kRationals),
                parse_expression("x + y", vars, kRationals)})},
      true);
}

void BM_rref_rational(benchmark::State& state) {
  Matrix m = random_rational_matrix(static_cast<std::size_t>(state.range(0)),
                                    1234);
  for (auto _ : state) {
    auto r = rref(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_rref_rational)->Arg(8)->Arg(16)->Arg(32);

void BM_orbit_ideal(benchmark::State& state) {
  SemigroupSpec spec = additive_spec();
  Point base{FieldElem::rational(2), FieldElem::rational(0)};
  for (auto _ : state) {
    auto st = stabilized_ideal(spec, base, 2, 3, 12);
    benchmark::DoNotOptimize(st.ideal.hd());
  }
}
BENCHMARK(BM_orbit_ideal);

void BM_generic_rank_exact(benchmark::State& state) {
  SemigroupSpec spec = additive_spec();
  Rng rng(7);
  for (auto _ : state) {
    auto cert = generic_rank(spec, static_cast<std::uint32_t>(state.range(0)),
                             4, RankMethod::exact, rng);
    benchmark::DoNotOptimize(cert.r);
  }
}
BENCHMARK(BM_generic_rank_exact)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
