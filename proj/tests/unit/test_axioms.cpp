#include <gtest/gtest.h>

#include "hyperpoly/axioms.hpp"

using namespace hyperpoly;

namespace {

TEST(Axioms, FiniteCarriersPassExhaustively) {
  std::string e;
  const auto z3 = weak_hyperfield(parse_cayley_table("3\n1 a b\na b 1\nb 1 a\n1\n", &e), e);
  for (const auto& hf : {krasner(), signs(), weak_signs(), z3, prime_field(2), prime_field(3)}) {
    const AxiomReport r = check_axioms(*hf, exhaustive_probe());
    EXPECT_TRUE(r.exhaustive);
    EXPECT_TRUE(r.ok()) << hf->name();
    EXPECT_EQ(r.points, hf->elements().size());
  }
}

TEST(Axioms, InfiniteCarriersPassOnProbeGrids) {
  for (const auto& hf : {tropical(), viro(), prime_field(5)}) {
    const AxiomReport r = check_axioms(*hf, probe_grid(*hf));
    EXPECT_TRUE(r.ok()) << hf->name();
    EXPECT_GT(r.finding("additive-associativity").checked, 0u);
  }
}

TEST(Axioms, PerturbedSignsFail) {
  // 1 ⊞ 1 = {0, 1} in an otherwise unchanged sign table.
  FiniteTables tables = tables_of(*signs());
  tables.label = "S'";
  tables.add[2][2] = {1, 2};
  const auto bad = table_hyperfield(tables);
  const AxiomReport r = check_axioms(*bad, exhaustive_probe());
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.finding("unique-inverse").holds);
  EXPECT_TRUE(r.finding("additive-associativity").holds);
  EXPECT_FALSE(r.finding("reversibility").holds);
  EXPECT_FALSE(r.finding("left-distributivity").counterexample.empty());
}

TEST(Axioms, MultiplicationTableErrorsAreReported) {
  FiniteTables tables = tables_of(*krasner());
  tables.label = "K'";
  tables.mul[1][1] = 0;
  const AxiomReport r = check_axioms(*table_hyperfield(tables), exhaustive_probe());
  EXPECT_FALSE(r.finding("multiplicative-identity").holds);
}

TEST(Axioms, DoubleDistributivity) {
  EXPECT_TRUE(is_doubly_distributive(*signs(), exhaustive_probe()).ok());
  EXPECT_TRUE(is_doubly_distributive(*krasner(), exhaustive_probe()).ok());
  EXPECT_TRUE(is_doubly_distributive(*prime_field(3), exhaustive_probe()).ok());
  const AxiomReport w = is_doubly_distributive(*weak_signs(), exhaustive_probe());
  ASSERT_FALSE(w.ok());
  EXPECT_FALSE(w.findings[0].counterexample.empty());
  EXPECT_EQ(w.findings[0].checked, 81u);
}

TEST(Axioms, ProbeGridIsDeterministicAndCapped) {
  const auto t = tropical();
  const ProbeSpec a = probe_grid(*t), b = probe_grid(*t);
  EXPECT_EQ(a.points, b.points);
  EXPECT_LE(a.points.size(), 14u);
  EXPECT_FALSE(a.exhaustive);
}

}  // namespace
