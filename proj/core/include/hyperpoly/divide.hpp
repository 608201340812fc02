#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperpoly/polynomial.hpp"

namespace hyperpoly {

/// All q with p ∈ (T-a) ⊡ q. Writing q = d_{n-1}T^{n-1} + ... + d_0, the
/// conditions are c_n = d_{n-1}, c_i ∈ d_{i-1} ⊞ (-a)d_i and c_0 = (-a)d_0,
/// a chain in which each d_{i-1} depends on d_i alone. `marginals` holds the
/// exact set of values each d_j takes over all quotients.
class QuotientSet {
 public:
  QuotientSet(Polynomial p, Element a);

  const Polynomial& dividend() const { return p_; }
  const Element& root() const { return a_; }
  bool empty() const { return !marginals_.has_value(); }
  const std::optional<PolyBox>& marginals() const { return marginals_; }

  /// Exact test of p ∈ (T-a) ⊡ q.
  bool contains(const Polynomial& q) const;

  /// Finite carriers: every quotient, ascending. Infinite carriers: the
  /// quotient families reached by branching on sampled points of each
  /// chain set plus the structural values c_j·a^k lying in it. `hints`
  /// adds sampled points of hints[j] ∩ (allowed set of d_j).
  std::vector<Polynomial> choices(std::size_t limit = 20'000,
                                  std::span<const ElementSet> hints = {}) const;

 private:
  Polynomial p_;
  Element a_;
  std::optional<PolyBox> marginals_;
  std::vector<Element> structural_;
};

bool is_root(const Polynomial& p, const Element& a);
QuotientSet quotients(const Polynomial& p, const Element& a);

/// 0 if a is not a root, else 1 + the largest multiplicity of a over the
/// quotient choices. Exact over finite carriers; over infinite carriers the
/// maximum is taken over the sampled families of QuotientSet::choices.
std::size_t mult_at(const Polynomial& p, const Element& a);

/// Multiplicity over a region: 0 when no a in the region is a root, else
/// 1 + the largest mult over quotients by roots in the region. Exact for
/// finite carriers. Over infinite carriers candidate roots are sampled
/// points of the region plus ratio points of consecutive coefficients, so
/// the value is a lower bound.
std::size_t mult_set(const Polynomial& p, const ElementSet& region);

/// Candidate roots of p in a region used by mult_set.
std::vector<Element> root_candidates(const Polynomial& p, const ElementSet& region);

}  // namespace hyperpoly
