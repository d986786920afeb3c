#include <benchmark/benchmark.h>

#include "eulercg/artinian.hpp"
#include "eulercg/principles.hpp"

using namespace ecg;

namespace {

Ring q3() { return polynomial_ring({"x", "y", "z"}); }

std::vector<Poly> cyclic3(const Ring& r) {
  return parse_poly_list("(x + y + z, x*y + y*z + z*x, x*y*z - 1)", r->vars());
}

}  // namespace

static void BM_BuchbergerCyclic3(benchmark::State& state) {
  Ring r = q3();
  auto in = cyclic3(r);
  bool track = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(in, MonomialOrder::grevlex(), track));
}
BENCHMARK(BM_BuchbergerCyclic3)->Arg(0)->Arg(1);

static void BM_BuchbergerKatsura3(benchmark::State& state) {
  Ring r = q3();
  auto in = parse_poly_list("(x + 2*y + 2*z - 1, x^2 + 2*y^2 + 2*z^2 - x, 2*x*y + 2*y*z - y)", r->vars());
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(in, MonomialOrder::grevlex()));
}
BENCHMARK(BM_BuchbergerKatsura3);

static void BM_Intersection(benchmark::State& state) {
  Ring r = polynomial_ring({"x", "y"});
  int k = static_cast<int>(state.range(0));
  std::vector<Poly> a{r->parse("x").pow(k), r->parse("y - x^2")};
  std::vector<Poly> b{r->parse("x - 1").pow(k), r->parse("y + x")};
  for (auto _ : state) {
    // fresh ideals so no cached basis is reused
    Ideal L(r, a), R(r, b);
    benchmark::DoNotOptimize(ideal_intersect(L, R));
  }
}
BENCHMARK(BM_Intersection)->Arg(1)->Arg(3)->Arg(5);

static void BM_ArtinianInverse(benchmark::State& state) {
  Ring r = polynomial_ring({"x", "y"});
  int k = static_cast<int>(state.range(0));
  Ideal J(r, {r->parse("x").pow(k), r->parse("y").pow(k)});
  Algebra alg = quotient_algebra(J);
  ResidueElement u = residue(alg, r->parse("1 + x + 2*y - x*y"));
  for (auto _ : state) benchmark::DoNotOptimize(try_invert(u));
}
BENCHMARK(BM_ArtinianInverse)->Arg(2)->Arg(4)->Arg(8);

static void BM_AdditionPrinciple(benchmark::State& state) {
  Ring r = polynomial_ring({"x", "y"});
  Ideal J1(r, {r->parse("x"), r->parse("y")}), J2(r, {r->parse("x - 1"), r->parse("y - 1")});
  auto t1 = make_generator_tuple(J1, J1.gens()), t2 = make_generator_tuple(J2, J2.gens());
  for (auto _ : state) benchmark::DoNotOptimize(addition_principle(t1, t2));
}
BENCHMARK(BM_AdditionPrinciple)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
