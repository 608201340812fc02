#include <gtest/gtest.h>

#include <random>

#include "hyperpoly/error.hpp"
#include "hyperpoly/hyperfield.hpp"
#include "oracles.hpp"

using namespace hyperpoly;

namespace {

Element tv(long n, long d = 1) { return Element::tropical(Rational(n) / Rational(d)); }
Element vv(long n, long d = 1) { return Element::viro(Rational(n) / Rational(d)); }
Element pv(long n, long d) { return Element::phase(Rational(n) / Rational(d)); }

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(Rational::parse("10/4").str(), "5/2");
  EXPECT_EQ(Rational::parse("-6/3").str(), "-2");
  EXPECT_EQ(ExtRational::parse("-inf").str(), "-inf");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(IntervalUnion, MergesOverlapsAndTouchingParts) {
  const IntervalUnion u({Interval::closed(3, 5), Interval::closed(0, 1), Interval{1, 2, false, true}});
  EXPECT_EQ(u.str(), "[0,2] u [3,5]");
  EXPECT_TRUE(u.contains(ExtRational(1)));
  EXPECT_FALSE(u.contains(ExtRational(Rational(5) / Rational(2))));
  const IntervalUnion gap({Interval{0, 1, true, false}, Interval{1, 2, false, true}});
  EXPECT_FALSE(gap.contains(ExtRational(1)));
}

TEST(Carriers, FiniteHyperadditionMatchesDefinitions) {
  const auto k = krasner();
  const auto s = signs();
  const auto w = weak_signs();
  for (const auto& x : k->elements()) {
    for (const auto& y : k->elements()) EXPECT_EQ(k->hyperadd(x, y), oracle::krasner_add(x, y));
  }
  for (const auto& x : s->elements()) {
    for (const auto& y : s->elements()) {
      EXPECT_EQ(s->hyperadd(x, y), oracle::signs_add(x, y, false));
      EXPECT_EQ(w->hyperadd(x, y), oracle::signs_add(x, y, true));
    }
  }
}

TEST(Carriers, PrimeFieldIsClassicalArithmetic) {
  for (int p : {2, 3, 5, 7}) {
    const auto f = prime_field(p);
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        const Element x = Element::symbol(a), y = Element::symbol(b);
        EXPECT_EQ(f->hyperadd(x, y), oracle::gf_add(x, y, p));
        EXPECT_EQ(f->mul(x, y), Element::symbol(a * b % p));
      }
      if (a) {
        EXPECT_EQ(f->mul(Element::symbol(a), f->inv(Element::symbol(a))), f->one());
      }
      EXPECT_EQ(f->neg(Element::symbol(a)), Element::symbol((p - a) % p));
    }
  }
}

TEST(Carriers, TropicalAndViroHyperaddition) {
  const auto t = tropical();
  EXPECT_EQ(t->hyperadd(tv(2), tv(5)), ElementSet::of(tv(5)));
  EXPECT_EQ(t->hyperadd(tv(3), tv(3)), oracle::trop_closed(ExtRational::neg_inf(), 3));
  EXPECT_EQ(t->hyperadd(t->zero(), tv(-1)), ElementSet::of(tv(-1)));
  EXPECT_EQ(t->mul(tv(1, 2), tv(3, 2)), tv(2));
  const auto v = viro();
  EXPECT_EQ(v->hyperadd(vv(2), vv(5)), oracle::viro_closed(3, 7));
  EXPECT_EQ(v->hyperadd(vv(4), vv(4)), oracle::viro_closed(0, 8));
  EXPECT_EQ(v->neg(vv(3)), vv(3));
}

TEST(Carriers, PhaseHyperaddition) {
  const auto p = phase();
  EXPECT_EQ(p->hyperadd(pv(1, 4), pv(3, 4)), oracle::phase_add(pv(1, 4), pv(3, 4)));
  EXPECT_EQ(p->hyperadd(pv(1, 3), pv(4, 3)), oracle::phase_add(pv(1, 3), pv(4, 3)));
  EXPECT_TRUE(p->hyperadd(pv(1, 3), pv(4, 3)).contains(p->zero()));
  // The arc through turn 0 is stored in two pieces.
  EXPECT_EQ(p->hyperadd(pv(15, 8), pv(1, 8)), oracle::phase_add(pv(15, 8), pv(1, 8)));
  EXPECT_FALSE(p->hyperadd(pv(1, 4), pv(3, 4)).contains(pv(1, 4)));
  EXPECT_EQ(p->parse_element("e^{i pi/8}"), pv(1, 8));
  EXPECT_EQ(p->parse_element("ph(17/8)"), pv(1, 8));
}

// Two hundred random pairs of small sets: the set operation must equal the
// union of the pointwise hyperadditions.
TEST(Carriers, SetHyperaddEqualsUnionOfPairs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3), len(1, 3);
  for (const auto& hf : {tropical(), viro(), phase(), signs(), weak_signs(), krasner(), prime_field(5)}) {
    auto draw = [&] {
      if (hf->is_finite()) {
        const auto all = hf->elements();
        return all[static_cast<std::size_t>(num(rng) + 6) % all.size()];
      }
      switch (hf->carrier()) {
        case CarrierKind::Tropical:
          return num(rng) == -6 ? hf->zero() : tv(num(rng), den(rng));
        case CarrierKind::Viro:
          return vv(num(rng) + 6, den(rng));
        default:
          return num(rng) == 6 ? hf->zero() : pv(num(rng) + 6, 6);
      }
    };
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Element> as, bs;
      for (long i = len(rng); i > 0; --i) as.push_back(draw());
      for (long i = len(rng); i > 0; --i) bs.push_back(draw());
      ElementSet a = hf->singleton(as[0]), b = hf->singleton(bs[0]);
      for (const auto& x : as) a = a.unite(hf->singleton(x));
      for (const auto& y : bs) b = b.unite(hf->singleton(y));
      std::optional<ElementSet> expect;
      for (const auto& x : as) {
        for (const auto& y : bs) {
          const ElementSet s = hf->hyperadd(x, y);
          expect = expect ? expect->unite(s) : s;
        }
      }
      ASSERT_EQ(hf->set_hyperadd(a, b), *expect) << hf->name() << " " << hf->format_set(a) << " ⊞ "
                                                 << hf->format_set(b);
    }
  }
}

TEST(Carriers, ViroIntervalSumMatchesDistanceFormula) {
  const auto v = viro();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> n(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    long a1 = n(rng), a2 = n(rng), b1 = n(rng), b2 = n(rng);
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    const long gap = std::max({0L, b1 - a2, a1 - b2});
    EXPECT_EQ(v->set_hyperadd(oracle::viro_closed(a1, a2), oracle::viro_closed(b1, b2)),
              oracle::viro_closed(gap, a2 + b2));
  }
}

TEST(Carriers, Selectors) {
  EXPECT_EQ(make_hyperfield("GF(7)")->name(), "GF(7)");
  EXPECT_EQ(make_hyperfield("S")->elements().size(), 3u);
  EXPECT_THROW(make_hyperfield("GF(4)"), Error);
  EXPECT_THROW(make_hyperfield("Q"), Error);
  EXPECT_THROW(signs()->parse_element("2"), ParseError);
  EXPECT_THROW(viro()->parse_element("-1"), Error);
  EXPECT_THROW(tropical()->inv(tropical()->zero()), DomainError);
}

TEST(Carriers, WeakHyperfieldFromGroupTable) {
  std::string e;
  const CayleyTable z3 = parse_cayley_table("3\n1 a b\na b 1\nb 1 a\n1\n", &e);
  const auto w = weak_hyperfield(z3, e);
  const Element one = w->parse_element("1"), a = w->parse_element("a");
  EXPECT_EQ(w->elements().size(), 4u);
  EXPECT_EQ(w->mul(a, a), w->parse_element("b"));
  // With e = 1, x ⊞ x is everything; otherwise x ⊞ y is the group.
  EXPECT_EQ(w->hyperadd(a, a).kind(), CarrierKind::Finite);
  EXPECT_TRUE(w->hyperadd(a, a).contains(w->zero()));
  EXPECT_FALSE(w->hyperadd(a, one).contains(w->zero()));
  EXPECT_THROW(parse_cayley_table("2\n1 a\na a\n1\n", &e), Error);
}

TEST(Carriers, SamplesAndRepresentativesStayInside) {
  const auto t = tropical();
  const ElementSet s = oracle::trop_closed(ExtRational::neg_inf(), 3);
  for (const auto& x : t->samples(s, 3)) EXPECT_TRUE(s.contains(x));
  EXPECT_EQ(t->representative(s), tv(3));
  const auto p = phase();
  const ElementSet arc = p->hyperadd(pv(1, 4), pv(3, 4));
  for (const auto& x : p->samples(arc, 3)) EXPECT_TRUE(arc.contains(x));
}

}  // namespace
