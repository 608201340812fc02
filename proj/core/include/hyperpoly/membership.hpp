#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperpoly/certificate.hpp"
#include "hyperpoly/expr.hpp"

namespace hyperpoly {

/// Outcome of solving p ∈ ℓ ⊡ q for an unknown q ranging over a box.
struct FactorResult {
  Verdict verdict = Verdict::Undecided;
  std::string method;
  std::optional<Polynomial> quotient;
  std::vector<TraceStep> trace;
};

/// Decides whether some q in `box` has p ∈ ℓ ⊡ q. Coefficient i of the
/// product couples the unknowns q_b with ℓ_{i-b} ≠ 0; constraints with one
/// unknown narrow its domain, constraints with two are solved as a forest
/// by passing messages towards the largest index. Always sound; complete
/// when every constraint has at most two unknowns and they form a forest.
/// Unknowns are named d0, d1, ... after their coefficient index.
FactorResult factor_through(const Polynomial& p, const Polynomial& l, const PolyBox& box);

/// Is p a member of the set denoted by e? YES carries a polynomial for
/// every node; NO carries the refuting step(s).
Certificate expr_member(const Polynomial& p, const ProductExpr& e);

/// Re-checks a membership certificate from its text fields alone: a YES
/// assignment node by node, a root obstruction by evaluation, other NO
/// verdicts by re-deciding.
bool replay_membership(const Certificate& c, const HyperfieldPtr& hf);

/// Description of the member set of an expression.
struct PolySetDescription {
  bool described = false;              ///< false: outside the supported shapes
  std::vector<Polynomial> members;     ///< finite carriers, ascending
  std::optional<PolyBox> box;          ///< when the set is one box
  std::string text;
};

PolySetDescription expr_set(const ProductExpr& e);
/// All members of e over a finite carrier, ascending.
std::vector<Polynomial> enumerate_members(const ProductExpr& e,
                                         std::size_t limit = 200'000);
/// Deterministic sample of members: sampled coefficient choices with the
/// lowest index varying fastest.
std::vector<Polynomial> sample_members(const ProductExpr& e, std::size_t limit = 4096);

/// Set equality of two expressions. Inequality comes with a witness that is
/// a member of exactly one side, replayed through expr_member both ways.
Certificate expr_equal(const ProductExpr& a, const ProductExpr& b);

}  // namespace hyperpoly
