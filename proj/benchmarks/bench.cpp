#include <benchmark/benchmark.h>

#include "fibercone/delta.hpp"
#include "fibercone/dsl.hpp"
#include "fibercone/fiber.hpp"
#include "fibercone/graded.hpp"

using namespace fibercone;

namespace {

IdealHandle example51() {
  Ring r = parse_ring("ring x, y, z");
  return IdealHandle::from_expr(parse_ideal("((x^2, y^2)^3, x*(x^2, y^2)*z^3, z^6)", r), r);
}

void BM_MonomialPowerLadder(benchmark::State& state) {
  Ring r = parse_ring("ring x, y, z");
  MonomialIdeal ideal =
      evaluate_monomial(parse_ideal("((x^2, y^2)^3, x*(x^2, y^2)*z^3, z^6)", r), r);
  const long long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(power(ideal, n).mu());
  }
}
BENCHMARK(BM_MonomialPowerLadder)->Arg(4)->Arg(8);

void BM_StaircaseColength(benchmark::State& state) {
  Ring r = parse_ring("ring x, y");
  MonomialIdeal ideal = evaluate_monomial(parse_ideal("(x^6, x*y^7*(x,y)^4, y^13)", r), r);
  MonomialIdeal sq = power(ideal, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(artinian_length(sq));
  }
}
BENCHMARK(BM_StaircaseColength);

void BM_FiberSeries(benchmark::State& state) {
  IdealHandle ideal = example51();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fiber_series(ideal).multiplicity());
  }
}
BENCHMARK(BM_FiberSeries);

void BM_GradedPieceRank(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  std::string vars = "x1, x2";
  std::string gens;
  for (int j = 1; j <= s; ++j) vars += ", y" + std::to_string(j);
  Ring r = parse_ring("ring " + vars);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= s; ++j) {
      if (!gens.empty()) gens += ", ";
      gens += "x" + std::to_string(i) + "*y" + std::to_string(j);
    }
  }
  GradedIdeal ideal = evaluate_graded(parse_ideal("(" + gens + ")", r), r);
  GradedIdeal sq = power(ideal, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(piece_dim(sq, 4));
  }
}
BENCHMARK(BM_GradedPieceRank)->Arg(3)->Arg(5);

void BM_KDeltaSeries(benchmark::State& state) {
  DeltaSet d = hh_delta(10, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(k_delta_series(d).multiplicity());
  }
}
BENCHMARK(BM_KDeltaSeries);

void BM_MinorsFaceRing(benchmark::State& state) {
  Poset poset = Poset::minors_2xn(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(face_ring_series(poset).multiplicity());
  }
}
BENCHMARK(BM_MinorsFaceRing)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
