#include <benchmark/benchmark.h>

#include <random>

#include "hyperpoly/assoc.hpp"
#include "hyperpoly/axioms.hpp"
#include "hyperpoly/divide.hpp"
#include "hyperpoly/membership.hpp"
#include "hyperpoly/tropical.hpp"

using namespace hyperpoly;

namespace {

std::vector<Element> random_roots(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Element::tropical(Rational(num(rng)) / Rational(den(rng))));
  return out;
}

void BM_TropicalBoxprod(benchmark::State& state) {
  const auto t = tropical();
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto roots = random_roots(2 * n, 1);
  std::vector<Element> a(roots.begin(), roots.begin() + n), b(roots.begin() + n, roots.end());
  a.push_back(t->one());
  b.push_back(t->one());
  const Polynomial p(t, a), q(t, b);
  for (auto _ : state) benchmark::DoNotOptimize(boxprod(p, q));
}
BENCHMARK(BM_TropicalBoxprod)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_ViroMembership(benchmark::State& state) {
  const auto v = viro();
  const Polynomial p = parse_poly("T^3+2T^2+11T+6", v);
  const ProductExpr e = parse_expr(state.range(0) ? "(T+1)*((T+2)*(T+3))" : "(T+2)*((T+1)*(T+3))", v);
  for (auto _ : state) benchmark::DoNotOptimize(expr_member(p, e));
}
BENCHMARK(BM_ViroMembership)->Arg(0)->Arg(1);

void BM_KrasnerEquality(benchmark::State& state) {
  const auto k = krasner();
  const ProductExpr a = parse_expr("(T+1)*((T^2+1)*(T+1))", k);
  const ProductExpr b = parse_expr("(T^2+1)*((T+1)*(T+1))", k);
  for (auto _ : state) benchmark::DoNotOptimize(expr_equal(a, b));
}
BENCHMARK(BM_KrasnerEquality);

void BM_AssocScan(benchmark::State& state) {
  const auto hf = state.range(0) ? signs() : krasner();
  for (auto _ : state) benchmark::DoNotOptimize(assoc_scan(hf, 2));
}
BENCHMARK(BM_AssocScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BoxEquivalence(benchmark::State& state) {
  const auto roots = random_roots(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(box_equivalence(roots));
}
BENCHMARK(BM_BoxEquivalence)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_RootMultiset(benchmark::State& state) {
  const auto roots = random_roots(static_cast<std::size_t>(state.range(0)), 3);
  const auto t = tropical();
  std::vector<Element> coeffs;
  const PolyBox box = linear_product_box(roots);
  for (const auto& set : box.sets()) coeffs.push_back(t->representative(set));
  const Polynomial p(t, coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(root_multiset(p, false));
}
BENCHMARK(BM_RootMultiset)->Arg(4)->Arg(8)->Arg(16);

void BM_MultAt(benchmark::State& state) {
  const auto t = tropical();
  const Polynomial p = parse_poly("0T^4+4T^3+6T^2+6T+4", t);
  for (auto _ : state) benchmark::DoNotOptimize(mult_at(p, t->parse_element("1")));
}
BENCHMARK(BM_MultAt);

void BM_Reducible(benchmark::State& state) {
  const auto t = tropical();
  const Polynomial p = parse_poly(state.range(0) ? "0T^4+3" : "0T^2+2", t);
  for (auto _ : state) benchmark::DoNotOptimize(is_reducible(p));
}
BENCHMARK(BM_Reducible)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_AxiomsExhaustive(benchmark::State& state) {
  std::string e;
  const auto z3 = weak_hyperfield(parse_cayley_table("3\n1 a b\na b 1\nb 1 a\n1\n", &e), e);
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(*z3, exhaustive_probe()));
}
BENCHMARK(BM_AxiomsExhaustive);

}  // namespace
BENCHMARK_MAIN();
