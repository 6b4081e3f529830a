#include <benchmark/benchmark.h>

#include "ncequiv/equiv.hpp"
#include "ncequiv/ideal.hpp"
#include "ncequiv/parse.hpp"
#include "ncequiv/pencil.hpp"

using namespace ncequiv;

namespace {

const VarNames kXY{"x", "y"};
NcPoly P(const char* s) { return parse(s, kXY); }

NcPoly p_range(int lo, int hi) {
  NcPoly p(1);
  for (int a = lo; a <= hi; ++a) p = p * (NcPoly::variable(0) - NcPoly(a));
  return p;
}

void BM_Multiply(benchmark::State& st) {
  NcPoly f = P("(x + y + 1)^4"), g = P("(x*y - y*x + 2)^3");
  for (auto _ : st) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_Multiply);

void BM_Evaluate(benchmark::State& st) {
  NcPoly f = P("(x + y + 1)^6");
  MatrixTuple x = sample_tuple(static_cast<std::size_t>(st.range(0)), 2, 10, 1);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate(f, x));
}
BENCHMARK(BM_Evaluate)->Arg(2)->Arg(4)->Arg(8);

void BM_CharPoly(benchmark::State& st) {
  MatrixTuple x = sample_tuple(static_cast<std::size_t>(st.range(0)), 1, 10, 2);
  for (auto _ : st) benchmark::DoNotOptimize(char_poly(x.mats[0]));
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(12);

void BM_StableAssociation(benchmark::State& st) {
  NcPoly f = P("x*y*x*y + x*y + x"), g = P("x*y^2*x + x*y + x");
  for (auto _ : st) benchmark::DoNotOptimize(stable_association(f, g));
}
BENCHMARK(BM_StableAssociation)->Unit(benchmark::kMillisecond);

void BM_UnexpectedAssociation(benchmark::State& st) {
  NcPoly a = P("y*x^3*y + x*y + y*x"), b = P("x*y*x*y*x + x*y + y*x");
  NcPoly f = a * b, g = b * a;
  for (auto _ : st) benchmark::DoNotOptimize(stable_association(f, g));
}
BENCHMARK(BM_UnexpectedAssociation)->Unit(benchmark::kMillisecond);

void BM_Isospectral(benchmark::State& st) {
  NcPoly f = P("x*y*x*y + x*y + x"), g = P("x*y^2*x + x*y + x");
  for (auto _ : st) benchmark::DoNotOptimize(is_isospectral(f, g));
}
BENCHMARK(BM_Isospectral)->Unit(benchmark::kMillisecond);

void BM_LongChain(benchmark::State& st) {
  const int s = static_cast<int>(st.range(0));
  NcPoly f = p_range(1, s) * NcPoly::variable(1) + NcPoly::variable(0);
  NcPoly g = NcPoly::variable(1) * p_range(1, s) + NcPoly::variable(0);
  for (auto _ : st) benchmark::DoNotOptimize(intertwining_chain(f, g));
}
BENCHMARK(BM_LongChain)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Gcrd(benchmark::State& st) {
  NcPoly h = P("x*y - 2*y + 1");
  NcPoly p = P("y*x + 1") * h, q = P("x") * h;
  for (auto _ : st) benchmark::DoNotOptimize(gcrd_bounded(p, q));
}
BENCHMARK(BM_Gcrd)->Unit(benchmark::kMillisecond);

void BM_JointSimilarity(benchmark::State& st) {
  const auto c = static_cast<std::size_t>(st.range(0));
  MatrixTuple a = sample_tuple(c, 3, 5, 3);
  MatrixTuple s = sample_tuple(c, 1, 5, 4);
  MatrixTuple b = a.conjugated(s.mats[0]);
  for (auto _ : st) benchmark::DoNotOptimize(joint_similarity(a, b));
}
BENCHMARK(BM_JointSimilarity)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_RankRefuter(benchmark::State& st) {
  RefuterConfig cfg;
  cfg.max_size = 4;
  NcPoly f = P("x*y*x*y + x*y + x"), g = P("x*y^2*x + x*y + x");
  for (auto _ : st) benchmark::DoNotOptimize(rank_refuter(f * f, g * g, cfg));
}
BENCHMARK(BM_RankRefuter)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
