#include <gtest/gtest.h>

#include <random>

#include "hyperpoly/assoc.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/tropical.hpp"
#include "oracles.hpp"

using namespace hyperpoly;

namespace {

Element tv(long n, long d = 1) { return Element::tropical(Rational(n) / Rational(d)); }

std::vector<Element> values(std::initializer_list<long> xs) {
  std::vector<Element> out;
  for (long x : xs) out.push_back(tv(x));
  return out;
}

TEST(Tropical, SortedHypersumMatchesFold) {
  const auto t = tropical();
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> n(-4, 4), len(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Element> xs;
    for (long i = len(rng); i > 0; --i) xs.push_back(n(rng) == -4 ? t->zero() : tv(n(rng), 2));
    std::sort(xs.begin(), xs.end());
    ASSERT_EQ(trop_hypersum_sorted(xs), t->hypersum(xs));
  }
}

// Coefficient at T^{n-s}: hypersum over all s-subsets of the root sums.
TEST(Tropical, LinearProductBoxMatchesSubsetOracle) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> n(-3, 3), len(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Element> roots;
    for (long i = len(rng); i > 0; --i) roots.push_back(tv(n(rng)));
    const std::size_t k = roots.size();
    const PolyBox box = linear_product_box(roots);
    ASSERT_EQ(box.nominal_degree(), k);
    for (std::size_t s = 0; s <= k; ++s) {
      std::vector<ExtRational> sums;
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != s) continue;
        Rational total(0);
        for (std::size_t i = 0; i < k; ++i) {
          if (mask >> i & 1u) total += roots[i].as_tropical().value.value();
        }
        sums.push_back(total);
      }
      ASSERT_EQ(box.at(k - s), oracle::trop_sum(sums));
    }
  }
}

TEST(Tropical, BoxEquivalenceWithRepeatedRoots) {
  for (const auto& roots : {values({0, 0, 0}), values({2, 2, -1}), values({1, 1, 1, 1}), values({3, 0, 3, 0})}) {
    const Certificate c = box_equivalence(roots);
    EXPECT_EQ(c.verdict, Verdict::Yes) << c.subjects.at("roots");
    const PolySetDescription d = iterated_linear_product(roots);
    ASSERT_TRUE(d.box.has_value());
    EXPECT_EQ(*d.box, linear_product_box(roots));
  }
}

TEST(Tropical, RootMultisets) {
  const auto t = tropical();
  RootMultiset r = root_multiset(parse_poly("0T^2+5T+5", t));
  EXPECT_EQ(r.roots, values({5, 0}));
  EXPECT_TRUE(r.in_box);
  EXPECT_TRUE(r.mult_agrees);
  r = root_multiset(parse_poly("0T^3+3", t));
  EXPECT_EQ(r.roots, values({1, 1, 1}));
  r = root_multiset(parse_poly("0T^2+1T", t));
  EXPECT_EQ(r.roots, (std::vector<Element>{tv(1), t->zero()}));
  r = root_multiset(parse_poly("0T^2+1", t));
  EXPECT_EQ(r.roots, (std::vector<Element>{tv(1, 2), tv(1, 2)}));
}

TEST(Tropical, Reducibility) {
  const auto t = tropical();
  const Certificate irr = is_reducible(parse_poly("0T^2+2", t));
  EXPECT_EQ(irr.verdict, Verdict::No);
  EXPECT_EQ(irr.method, "forced-contradiction");
  const Certificate red = is_reducible(parse_poly("0T^2+5T+5", t));
  EXPECT_EQ(red.verdict, Verdict::Yes);
  ASSERT_TRUE(red.witness.has_value());
  EXPECT_EQ(is_reducible(parse_poly("0T^2+0T+0", t)).verdict, Verdict::No);
  EXPECT_EQ(is_reducible(parse_poly("0T^3+3", t)).verdict, Verdict::No);
  EXPECT_EQ(is_reducible(parse_poly("0T^3+2T^2+3T+3", t)).verdict, Verdict::Yes);
  EXPECT_EQ(is_reducible(parse_poly("0T^5+1", t)).verdict, Verdict::Undecided);
  EXPECT_THROW(is_reducible(parse_poly("0T+1", t)), DomainError);
}

// Distinct roots give a singleton product, which is reducible by definition.
TEST(Tropical, DistinctRootProductsAreReducible) {
  const auto t = tropical();
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> n(-8, 8);
  for (int trial = 0; trial < 40; ++trial) {
    long a = n(rng), b = n(rng), c = n(rng);
    if (a == b || b == c || a == c) continue;
    const auto box = linear_product_box(values({a, b, c}));
    ASSERT_TRUE(box.only().has_value());
    EXPECT_EQ(is_reducible(*box.only()).verdict, Verdict::Yes) << format_poly(*box.only());
  }
}

TEST(Tropical, FiniteReducibilityMatchesBruteForce) {
  for (const auto& hf : {krasner(), signs(), weak_signs()}) {
    for (std::size_t n = 2; n <= 3; ++n) {
      for (const auto& p : all_polynomials(hf, n, true)) {
        bool expect = false;
        for (std::size_t d = 1; d < n && !expect; ++d) {
          for (const auto& q : all_polynomials(hf, d, false)) {
            for (const auto& r : all_polynomials(hf, n - d, false)) {
              if (boxprod(q, r).only() == p) expect = true;
            }
          }
        }
        EXPECT_EQ(is_reducible(p).verdict == Verdict::Yes, expect) << hf->name() << " " << format_poly(p);
      }
    }
  }
}

}  // namespace
