#include <gtest/gtest.h>

#include <set>

#include "hyperpoly/assoc.hpp"
#include "hyperpoly/membership.hpp"

using namespace hyperpoly;

namespace {

// Brute force straight from the coefficient definition: p ∈ a ⊡ b iff each
// p_k lies in the hypersum of a_i b_j over i + j = k.
bool in_product(const Polynomial& p, const Polynomial& a, const Polynomial& b) {
  const Hyperfield& hf = p.hf();
  if (p.degree() != a.degree() + b.degree()) return false;
  for (std::size_t k = 0; k <= p.degree(); ++k) {
    std::vector<Element> terms;
    for (std::size_t i = 0; i <= a.degree(); ++i) {
      if (k >= i && k - i <= b.degree()) terms.push_back(hf.mul(a.coeff(i), b.coeff(k - i)));
    }
    if (!hf.hypersum(terms).contains(p.coeff(k))) return false;
  }
  return true;
}

std::vector<Polynomial> every_polynomial(const HyperfieldPtr& hf, std::size_t deg) {
  return all_polynomials(hf, deg, false);
}

// Members of a⊡(b⊡c), found by scanning every middle polynomial m and every
// candidate p of the right degree.
std::set<Polynomial> nested_members(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
  const auto hf = a.field();
  std::vector<Polynomial> middles;
  for (const auto& m : every_polynomial(hf, b.degree() + c.degree())) {
    if (in_product(m, b, c)) middles.push_back(m);
  }
  std::set<Polynomial> out;
  for (const auto& p : every_polynomial(hf, a.degree() + b.degree() + c.degree())) {
    for (const auto& m : middles) {
      if (in_product(p, a, m)) {
        out.insert(p);
        break;
      }
    }
  }
  return out;
}

TEST(Membership, FiniteDecisionsMatchBruteForce) {
  for (const auto& hf : {krasner(), signs(), weak_signs(), prime_field(3)}) {
    std::vector<Polynomial> leaves = all_polynomials(hf, 1, true);
    const auto quads = all_polynomials(hf, 2, true);
    leaves.push_back(quads.front());
    leaves.push_back(quads.back());
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      for (std::size_t j = 0; j < leaves.size(); ++j) {
        const Polynomial& a = leaves[i];
        const Polynomial& b = leaves[j];
        const Polynomial& c = leaves[(i + j) % leaves.size()];
        const ProductExpr e = ProductExpr::product(ProductExpr::leaf(a),
                                                   ProductExpr::product(ProductExpr::leaf(b), ProductExpr::leaf(c)));
        const std::set<Polynomial> expect = nested_members(a, b, c);
        const auto members = enumerate_members(e);
        ASSERT_EQ(std::set<Polynomial>(members.begin(), members.end()), expect) << hf->name() << " " << e.str();
        for (const auto& p : every_polynomial(hf, e.degree_bound())) {
          const Certificate cert = expr_member(p, e);
          ASSERT_EQ(cert.verdict == Verdict::Yes, expect.contains(p)) << hf->name() << " " << format_poly(p)
                                                                        << " in " << e.str();
          ASSERT_TRUE(replay_membership(cert, hf)) << format_poly(p) << " in " << e.str();
        }
      }
    }
  }
}

TEST(Membership, ViroExampleYesAndNo) {
  const auto v = viro();
  const Polynomial p = parse_poly("T^3+2T^2+11T+6", v);
  const Certificate yes = expr_member(p, parse_expr("(T+2)*((T+1)*(T+3))", v));
  ASSERT_EQ(yes.verdict, Verdict::Yes);
  EXPECT_TRUE(replay_membership(yes, v));

  const Certificate no = expr_member(p, parse_expr("(T+1)*((T+2)*(T+3))", v));
  ASSERT_EQ(no.verdict, Verdict::No);
  EXPECT_EQ(no.method, "root-obstruction");
  ASSERT_GE(no.trace.size(), 3u);
  EXPECT_EQ(no.trace[1].set, "{5}");
  EXPECT_EQ(no.trace[2].set, "[4,6]");
  EXPECT_TRUE(replay_membership(no, v));
}

TEST(Membership, TamperedCertificatesDoNotReplay) {
  const auto v = viro();
  const Polynomial p = parse_poly("T^3+2T^2+11T+6", v);
  Certificate yes = expr_member(p, parse_expr("(T+2)*((T+1)*(T+3))", v));
  for (auto& node : yes.assignment) {
    if (node.path == "root.right") node.poly = "T^2+4T+4";
  }
  EXPECT_FALSE(replay_membership(yes, v));

  Certificate no = expr_member(p, parse_expr("(T+1)*((T+2)*(T+3))", v));
  no.verdict = Verdict::Yes;
  EXPECT_FALSE(replay_membership(no, v));
}

TEST(Membership, LeavesScalarsAndSums) {
  const auto s = signs();
  EXPECT_EQ(expr_member(parse_poly("T+1", s), parse_expr("T+1", s)).verdict, Verdict::Yes);
  EXPECT_EQ(expr_member(parse_poly("T-1", s), parse_expr("T+1", s)).verdict, Verdict::No);
  EXPECT_EQ(expr_member(parse_poly("-T-1", s), parse_expr("(-1)*(T+1)", s)).verdict, Verdict::Yes);
  EXPECT_EQ(expr_member(parse_poly("T", s), parse_expr("(T+1)+(T-1)", s)).verdict, Verdict::Yes);
  EXPECT_EQ(expr_member(parse_poly("T^2", s), parse_expr("(T+1)+(T-1)", s)).verdict, Verdict::No);
}

TEST(Membership, EqualityWitnesses) {
  const auto k = krasner();
  const Certificate eq =
      expr_equal(parse_expr("(T+1)*((T^2+1)*(T+1))", k), parse_expr("(T^2+1)*((T+1)*(T+1))", k));
  ASSERT_EQ(eq.verdict, Verdict::No);
  EXPECT_EQ(eq.witness, "T^4+T^3+T^2+1");
  const auto e = parse_expr("(T+1)*(T+1)", k);
  EXPECT_EQ(expr_equal(e, e).verdict, Verdict::Yes);

  const auto t = tropical();
  const Certificate teq = expr_equal(parse_expr("(0T^2+0)*((0T+0)*(0T+0))", t),
                                     parse_expr("(0T+0)*((0T^2+0)*(0T+0))", t));
  ASSERT_EQ(teq.verdict, Verdict::No);
  ASSERT_EQ(teq.children.size(), 2u);
  EXPECT_NE(teq.children[0].verdict, teq.children[1].verdict);
}

TEST(Membership, SetDescriptions) {
  const auto k = krasner();
  const PolySetDescription d = expr_set(parse_expr("(T+1)*(T+1)", k));
  EXPECT_EQ(d.text, "{T^2+1, T^2+T+1}");
  const auto v = viro();
  EXPECT_EQ(expr_set(parse_expr("(T+2)*(T^2+4T+3)", v)).text, "{{1}T^3 + [2,6]T^2 + [5,11]T + {6}}");
  const auto t = tropical();
  EXPECT_EQ(expr_set(parse_expr("(0T^2+0)*((0T+0)*(0T+0))", t)).text,
            "{0T^4+d1T^3+[-inf,0]T^2+d1T+0 | d1 ∈ [-inf,0]}");
}

}  // namespace
