#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperpoly/assoc.hpp"
#include "hyperpoly/divide.hpp"

using namespace hyperpoly;

namespace {

std::vector<Polynomial> brute_quotients(const Polynomial& p, const Element& a) {
  std::vector<Polynomial> out;
  if (p.degree() == 0) return out;
  const Polynomial l = Polynomial::linear(p.field(), a);
  for (const auto& q : all_polynomials(p.field(), p.degree() - 1, false)) {
    if (boxprod(l, q).contains(p)) out.push_back(q);
  }
  return out;
}

std::size_t brute_mult(const Polynomial& p, const Element& a) {
  const auto qs = brute_quotients(p, a);
  if (qs.empty()) return 0;
  std::size_t best = 0;
  for (const auto& q : qs) best = std::max(best, brute_mult(q, a));
  return best + 1;
}

// Classical multiplicity of a root over GF(p) by repeated synthetic division.
std::size_t classical_mult(std::vector<int> c, int a, int p) {
  std::size_t m = 0;
  while (c.size() > 1) {
    std::vector<int> q(c.size() - 1);
    int carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = (carry * a + c[i]) % p;
      q[i - 1] = carry;
    }
    if ((carry * a + c[0]) % p != 0) break;
    ++m;
    c = q;
  }
  return m;
}

TEST(Divide, RootDefinitionsAgreeOnFiniteCarriers) {
  for (const auto& hf : {krasner(), signs(), weak_signs(), prime_field(3)}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (const auto& p : all_polynomials(hf, d, false)) {
        for (const auto& a : hf->elements()) {
          const bool zero_in_value = eval(p, a).contains(hf->zero());
          const auto brute = brute_quotients(p, a);
          ASSERT_EQ(is_root(p, a), zero_in_value) << format_poly(p);
          ASSERT_EQ(!brute.empty(), zero_in_value) << format_poly(p) << " at " << hf->format_element(a);
          const QuotientSet qs = quotients(p, a);
          ASSERT_EQ(qs.choices(), brute) << format_poly(p);
          for (const auto& q : brute) ASSERT_TRUE(qs.contains(q));
        }
      }
    }
  }
}

TEST(Divide, FiniteMultiplicityMatchesRecursion) {
  for (const auto& hf : {krasner(), signs(), weak_signs()}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (const auto& p : all_polynomials(hf, d, true)) {
        for (const auto& a : hf->elements()) ASSERT_EQ(mult_at(p, a), brute_mult(p, a)) << format_poly(p);
      }
    }
  }
}

TEST(Divide, PrimeFieldMultiplicityIsClassical) {
  for (int p : {2, 3, 5}) {
    const auto f = prime_field(p);
    for (const auto& poly : all_polynomials(f, 3, true)) {
      std::vector<int> c;
      for (const auto& x : poly.coeffs()) c.push_back(x.as_symbol().index);
      for (int a = 0; a < p; ++a) {
        ASSERT_EQ(mult_at(poly, Element::symbol(a)), classical_mult(c, a, p)) << format_poly(poly);
      }
    }
  }
}

TEST(Divide, ScalingDoesNotChangeMultiplicity) {
  const auto s = signs();
  const Element minus = s->parse_element("-1");
  for (const auto& p : all_polynomials(s, 3, true)) {
    for (const auto& a : s->elements()) EXPECT_EQ(mult_at(scalar_prod(minus, p), a), mult_at(p, a));
  }
}

// Over V, 0 ∈ p(a) iff no monomial value exceeds the sum of the others.
TEST(Divide, ViroRootsFollowThePolygonInequality) {
  const auto v = viro();
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> n(0, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Element> c;
    for (int i = 0; i < 4; ++i) c.push_back(Element::viro(Rational(n(rng))));
    c.back() = v->one();
    const Polynomial p(v, c);
    const Element a = Element::viro(Rational(n(rng)) / Rational(3));
    Rational total(0), top(0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Rational m = v->mul(c[i], v->pow(a, i)).as_viro().value;
      total += m;
      if (top < m) top = m;
    }
    EXPECT_EQ(is_root(p, a), Rational(2) * top <= total) << format_poly(p) << " at " << v->format_element(a);
  }
}

TEST(Divide, Examples) {
  const auto s = signs();
  const Polynomial cubic = parse_poly("T^3-T", s);
  EXPECT_EQ(quotients(cubic, s->zero()).choices(), std::vector<Polynomial>{parse_poly("T^2-1", s)});
  EXPECT_EQ(mult_at(cubic, s->zero()), 1u);
  EXPECT_EQ(mult_set(cubic, ElementSet(FiniteSet{{1, 2}})), 2u);

  const auto t = tropical();
  const Polynomial double_root = parse_poly("0T^2+2", t);
  EXPECT_TRUE(quotients(double_root, t->parse_element("1")).contains(parse_poly("0T+1", t)));
  EXPECT_EQ(mult_at(double_root, t->parse_element("1")), 2u);
  EXPECT_EQ(mult_at(double_root, t->parse_element("0")), 0u);

  const auto v = viro();
  const ElementSet from_one(ViroSet{IntervalUnion({Interval{1, ExtRational::pos_inf(), true, false}})});
  EXPECT_EQ(mult_set(parse_poly("T^2+3T+1", v), from_one), 1u);
}

}  // namespace
