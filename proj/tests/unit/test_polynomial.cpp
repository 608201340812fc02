#include <gtest/gtest.h>

#include <random>

#include "hyperpoly/error.hpp"
#include "hyperpoly/expr.hpp"
#include "hyperpoly/polynomial.hpp"
#include "oracles.hpp"

using namespace hyperpoly;

namespace {

Element tv(long n, long d = 1) { return Element::tropical(Rational(n) / Rational(d)); }

std::vector<Element> tropical_pool() {
  return {tropical()->zero(), tv(-2), tv(-1, 2), tv(0), tv(1), tv(3, 2), tv(4)};
}
std::vector<Element> viro_pool() {
  std::vector<Element> out;
  for (long n : {0, 1, 2, 3, 5, 8}) out.push_back(Element::viro(Rational(n)));
  out.push_back(Element::viro(Rational(1) / Rational(2)));
  return out;
}

// Oracle coefficient set i of p ⊡ q over T, V or S.
ElementSet product_coefficient(const Hyperfield& hf, const Polynomial& p, const Polynomial& q, std::size_t i) {
  std::vector<Element> terms;
  for (std::size_t k = 0; k <= p.degree(); ++k) {
    if (i >= k && i - k <= q.degree()) terms.push_back(hf.mul(p.coeff(k), q.coeff(i - k)));
  }
  switch (hf.carrier()) {
    case CarrierKind::Tropical: {
      std::vector<ExtRational> xs;
      for (const auto& x : terms) xs.push_back(x.as_tropical().value);
      return oracle::trop_sum(xs);
    }
    case CarrierKind::Viro: {
      std::vector<Rational> xs;
      for (const auto& x : terms) xs.push_back(x.as_viro().value);
      return oracle::viro_sum(xs);
    }
    default: {
      std::vector<int> xs;
      for (const auto& x : terms) xs.push_back(oracle::sign_of(x));
      return oracle::signs_sum(xs);
    }
  }
}

TEST(Polynomial, ParsesCarrierLiterals) {
  const auto t = tropical();
  const Polynomial p = parse_poly("0T^3+(-2)", t);
  ASSERT_EQ(p.degree(), 3u);
  EXPECT_EQ(p.coeff(0), tv(-2));
  EXPECT_EQ(p.coeff(1), t->zero());
  EXPECT_EQ(p.coeff(2), t->zero());
  EXPECT_EQ(p.coeff(3), tv(0));
  EXPECT_EQ(parse_poly("T^0", krasner()), Polynomial::unit(krasner()));
  EXPECT_EQ(parse_poly("T^3+2T^2+11T+6", viro()).degree(), 3u);
  const auto s = signs();
  EXPECT_EQ(parse_poly("T-1", s), Polynomial::linear(s, s->one()));
  EXPECT_EQ(parse_poly("-T^2+T", s).leading(), s->parse_element("-1"));
}

TEST(Polynomial, RejectsMalformedText) {
  EXPECT_THROW(parse_poly("T^2+T^2", signs()), ParseError);
  EXPECT_THROW(parse_poly("0T^2+1", signs()), Error);
  EXPECT_THROW(parse_poly("2T", signs()), ParseError);
  EXPECT_THROW(parse_poly("T^", viro()), ParseError);
  EXPECT_THROW(parse_poly("", viro()), ParseError);
  EXPECT_THROW(Polynomial(signs(), {}), DomainError);
}

TEST(Polynomial, FormatRoundTrips) {
  std::mt19937_64 rng(3);
  for (const auto& hf : {tropical(), viro(), signs(), weak_signs(), krasner(), prime_field(5), phase()}) {
    std::vector<Element> pool;
    if (hf->is_finite()) {
      pool = hf->elements();
    } else if (hf->carrier() == CarrierKind::Tropical) {
      pool = tropical_pool();
    } else if (hf->carrier() == CarrierKind::Viro) {
      pool = viro_pool();
    } else {
      pool = {hf->zero(), hf->one(), Element::phase(Rational(1) / Rational(8)), Element::phase(Rational(5) / Rational(3))};
    }
    for (const auto& c : oracle::random_coeffs(rng, *hf, pool, 60, 5)) {
      const Polynomial p(hf, c);
      EXPECT_EQ(parse_poly(format_poly(p), hf), p) << format_poly(p);
    }
  }
}

TEST(Polynomial, EvaluationMatchesMaximumRule) {
  const auto t = tropical();
  const Polynomial p = parse_poly("1T^3+(-2)", t);
  EXPECT_EQ(eval(p, tv(-2)), ElementSet::of(tv(-2)));
  EXPECT_EQ(eval(p, tv(-1)), oracle::trop_closed(ExtRational::neg_inf(), -2));
  EXPECT_EQ(eval(p, tv(0)), ElementSet::of(tv(1)));

  std::mt19937_64 rng(5);
  for (const auto& c : oracle::random_coeffs(rng, *t, tropical_pool(), 200, 5)) {
    const Polynomial q(t, c);
    for (const auto& a : tropical_pool()) {
      std::vector<ExtRational> terms;
      for (std::size_t i = 0; i < c.size(); ++i) terms.push_back(t->mul(c[i], t->pow(a, i)).as_tropical().value);
      ASSERT_EQ(eval(q, a), oracle::trop_sum(terms)) << format_poly(q);
    }
  }
}

TEST(Polynomial, ViroAndSignEvaluation) {
  const auto v = viro();
  EXPECT_EQ(eval(parse_poly("T^3+2T^2+11T+6", v), v->one()), oracle::viro_closed(2, 20));
  const auto s = signs();
  EXPECT_EQ(eval(parse_poly("T^3+T^2+T+1", s), s->one()), ElementSet::of(s->one()));
  EXPECT_TRUE(eval(parse_poly("T^3-T", s), s->one()).contains(s->zero()));
}

TEST(Polynomial, BoxprodMatchesConvolutionOracle) {
  std::mt19937_64 rng(9);
  for (const auto& hf : {tropical(), viro(), signs()}) {
    const auto pool = hf->carrier() == CarrierKind::Tropical ? tropical_pool()
                      : hf->carrier() == CarrierKind::Viro   ? viro_pool()
                                                             : hf->elements();
    const auto polys = oracle::random_coeffs(rng, *hf, pool, 40, 4);
    for (std::size_t i = 0; i + 1 < polys.size(); ++i) {
      const Polynomial p(hf, polys[i]), q(hf, polys[i + 1]);
      const PolyBox box = boxprod(p, q);
      ASSERT_EQ(box.nominal_degree(), p.degree() + q.degree());
      for (std::size_t k = 0; k <= box.nominal_degree(); ++k) {
        ASSERT_EQ(box.at(k), product_coefficient(*hf, p, q, k)) << format_poly(p) << " * " << format_poly(q);
      }
      EXPECT_EQ(box, boxprod(q, p));
    }
  }
}

TEST(Polynomial, BoxExamples) {
  const auto v = viro();
  const PolyBox b = boxprod(parse_poly("T+2", v), parse_poly("T^2+4T+3", v));
  EXPECT_EQ(b.at(0), oracle::viro_closed(6, 6));
  EXPECT_EQ(b.at(1), oracle::viro_closed(5, 11));
  EXPECT_EQ(b.at(2), oracle::viro_closed(2, 6));
  EXPECT_EQ(b.at(3), oracle::viro_closed(1, 1));
  EXPECT_EQ(b.str(), "{1}T^3 + [2,6]T^2 + [5,11]T + {6}");

  const auto s = signs();
  EXPECT_EQ(boxprod(parse_poly("T-1", s), parse_poly("T-1", s)).only(), parse_poly("T^2-T+1", s));

  const auto k = krasner();
  const PolyBox sum = boxsum(parse_poly("T+1", k), parse_poly("T+1", k));
  EXPECT_TRUE(sum.zero_excluded());
  EXPECT_EQ(sum.count(), 3u);
  const PolyBox cancel = boxsum(parse_poly("T", s), parse_poly("-T", s));
  EXPECT_EQ(cancel.enumerate().size(), 2u);
}

TEST(Polynomial, ScalarsPullOutOfProducts) {
  std::mt19937_64 rng(13);
  const auto t = tropical();
  const auto polys = oracle::random_coeffs(rng, *t, tropical_pool(), 40, 3);
  for (std::size_t i = 0; i + 1 < polys.size(); ++i) {
    const Polynomial p(t, polys[i]), q(t, polys[i + 1]);
    const Element a = tv(static_cast<long>(i % 5) - 2);
    const PolyBox lhs = boxprod(scalar_prod(a, p), q);
    const PolyBox rhs = boxprod(p, q);
    for (std::size_t k = 0; k <= rhs.nominal_degree(); ++k) EXPECT_EQ(lhs.at(k), t->scale(a, rhs.at(k)));
    const auto [lead, monic] = monic_decompose(p);
    EXPECT_TRUE(monic.is_monic());
    EXPECT_EQ(scalar_prod(lead, monic), p);
  }
  EXPECT_THROW(scalar_prod(t->zero(), Polynomial::unit(t)), DomainError);
}

TEST(Polynomial, MonomialFactorShifts) {
  std::mt19937_64 rng(17);
  for (const auto& hf : {tropical(), signs()}) {
    const auto pool = hf->is_finite() ? hf->elements() : tropical_pool();
    for (const auto& c : oracle::random_coeffs(rng, *hf, pool, 40, 4)) {
      const Polynomial p(hf, c);
      for (std::size_t n = 0; n < 3; ++n) {
        std::vector<Element> mono(n + 1, hf->zero());
        mono.back() = hf->one();
        EXPECT_EQ(boxprod(Polynomial(hf, mono), p).only(), monomial_shift(p, n));
      }
    }
  }
}

TEST(Expr, ParsesAndPrintsTrees) {
  const auto v = viro();
  const ProductExpr e = parse_expr("(T+1)*((T+2)*(T+3))", v);
  EXPECT_EQ(e.kind(), ProductExpr::Kind::Product);
  EXPECT_EQ(e.right().kind(), ProductExpr::Kind::Product);
  EXPECT_EQ(e.degree_bound(), 3u);
  EXPECT_EQ(parse_expr(e.str(), v), e);
  const ProductExpr s = parse_expr("2*(T+1)", v);
  EXPECT_EQ(s.kind(), ProductExpr::Kind::Scalar);
  EXPECT_THROW(parse_expr("(T+1)*", v), ParseError);
  EXPECT_THROW(parse_expr("(T+1)*(T+2", v), ParseError);
}

TEST(Expr, DegreeCapIsEnforced) {
  const auto k = krasner();
  EXPECT_THROW(parse_expr("(T^4+1)*(T^3+1)", k), LimitExceeded);
  EXPECT_NO_THROW(parse_expr("(T^4+1)*(T^2+1)", k));
}

}  // namespace
