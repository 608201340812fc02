#include <gtest/gtest.h>

#include "hyperpoly/assoc.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/membership.hpp"

using namespace hyperpoly;

namespace {

TEST(Certificate, JsonRoundTrip) {
  const auto v = viro();
  const Polynomial p = parse_poly("T^3+2T^2+11T+6", v);
  std::vector<Certificate> certs = {
      expr_member(p, parse_expr("(T+1)*((T+2)*(T+3))", v)),
      expr_member(p, parse_expr("(T+2)*((T+1)*(T+3))", v)),
      one_plus_one_criterion(krasner()),
      one_plus_one_criterion(signs()),
  };
  for (const auto& c : certs) {
    const std::string text = to_json(c);
    const Certificate back = certificate_from_json(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(to_json(back), text);
  }
}

TEST(Certificate, VerdictNames) {
  for (Verdict v : {Verdict::Yes, Verdict::No, Verdict::Undecided, Verdict::NotApplicable}) {
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
  }
  EXPECT_THROW(verdict_from_string("maybe"), ParseError);
}

TEST(Certificate, RejectsMalformedJson) {
  EXPECT_THROW(certificate_from_json("{"), ParseError);
  EXPECT_THROW(certificate_from_json("[]"), ParseError);
}

TEST(Certificate, HumanRenderingShowsTrace) {
  const auto v = viro();
  const Certificate c =
      expr_member(parse_poly("T^3+2T^2+11T+6", v), parse_expr("(T+1)*((T+2)*(T+3))", v));
  const std::string text = to_human(c);
  EXPECT_NE(text.find("no"), std::string::npos);
  EXPECT_NE(text.find("d1 ∈ {5}"), std::string::npos);
  EXPECT_NE(text.find("∌ 2"), std::string::npos);
}

}  // namespace
