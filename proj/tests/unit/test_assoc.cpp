#include <gtest/gtest.h>

#include "hyperpoly/assoc.hpp"
#include "hyperpoly/error.hpp"

using namespace hyperpoly;

namespace {

TEST(Assoc, Bracketings) {
  const auto k = krasner();
  const Polynomial p = parse_poly("T+1", k), q = parse_poly("T^2+1", k), r = parse_poly("T", k);
  const auto b = bracketings(p, q, r);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0].str(), "(T+1)*((T^2+1)*T)");
  EXPECT_EQ(b[1].str(), "((T+1)*(T^2+1))*T");
  EXPECT_EQ(b[2].str(), "(T^2+1)*((T+1)*T)");
}

TEST(Assoc, PolynomialCounts) {
  EXPECT_EQ(all_polynomials(signs(), 2, true).size(), 9u);
  EXPECT_EQ(all_polynomials(signs(), 2, false).size(), 18u);
  EXPECT_EQ(all_polynomials(prime_field(5), 1, false).size(), 20u);
}

TEST(Assoc, ScansOverFiniteCarriers) {
  const ScanResult k = assoc_scan(krasner(), 2);
  EXPECT_EQ(k.polynomials, 6u);
  EXPECT_EQ(k.triples, 56u);
  EXPECT_EQ(k.counterexamples.size(), 9u);
  EXPECT_EQ(k.undecided, 0u);
  EXPECT_TRUE(assoc_scan(krasner(), 1, false).counterexamples.empty());
  // Products over a field are single polynomials, so every scan is clean.
  for (int p : {2, 3}) EXPECT_TRUE(assoc_scan(prime_field(p), 2).counterexamples.empty());
  EXPECT_FALSE(assoc_scan(signs(), 1).counterexamples.empty());
  EXPECT_THROW(assoc_scan(tropical(), 1), DomainError);
}

TEST(Assoc, CounterexamplesReplay) {
  const auto k = krasner();
  for (const auto& c : assoc_scan(k, 2).counterexamples) {
    ASSERT_EQ(c.kind, "counterexample");
    EXPECT_TRUE(replay_counterexample(c, k)) << c.subjects.at("left");
  }
  Certificate c = assoc_scan(k, 2).counterexamples.front();
  c.witness = "T^4+1";
  EXPECT_FALSE(replay_counterexample(c, k));
}

TEST(Assoc, OnePlusOneCriterion) {
  for (const auto& hf : {krasner(), weak_signs(), tropical(), viro()}) {
    const Certificate c = one_plus_one_criterion(hf);
    EXPECT_EQ(c.verdict, Verdict::No) << hf->name();
    EXPECT_EQ(c.stats.at("singleton"), "no");
    EXPECT_TRUE(replay_counterexample(c, hf)) << hf->name();
  }
  for (const auto& hf : {signs(), phase(), prime_field(3)}) {
    const Certificate c = one_plus_one_criterion(hf);
    EXPECT_EQ(c.verdict, Verdict::NotApplicable) << hf->name();
    EXPECT_FALSE(c.witness.has_value());
  }
}

TEST(Assoc, PointwiseProducts) {
  const auto s = signs();
  const PointwiseReport r =
      pointwise_products_equal(parse_poly("T+1", s), parse_poly("T-1", s), parse_poly("T-1", s));
  EXPECT_EQ(r.entries.size(), 3u);
  EXPECT_TRUE(r.all_equal());
  const auto t = tropical();
  EXPECT_THROW(pointwise_products_equal(parse_poly("0T", t), parse_poly("0T", t), parse_poly("0T", t)),
               DomainError);
  const PointwiseReport tr = pointwise_products_equal(parse_poly("0T+1", t), parse_poly("0T", t),
                                                      parse_poly("0T+(-1)", t), {t->parse_element("1")});
  EXPECT_TRUE(tr.all_equal());
}

TEST(Assoc, AssocCheckOnAField) {
  const auto f = prime_field(3);
  const Certificate c = assoc_check(parse_poly("T+1", f), parse_poly("T+2", f), parse_poly("T^2+1", f));
  EXPECT_EQ(c.verdict, Verdict::Yes);
  EXPECT_EQ(c.kind, "assoc-holds");
}

}  // namespace
