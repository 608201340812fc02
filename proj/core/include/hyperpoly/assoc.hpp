#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperpoly/certificate.hpp"
#include "hyperpoly/expr.hpp"

namespace hyperpoly {

/// The bracketings compared for a triple: p⊡(q⊡r), (p⊡q)⊡r and q⊡(p⊡r).
/// Up to commutativity of ⊡ these are all ways to multiply three factors.
std::vector<ProductExpr> bracketings(const Polynomial& p, const Polynomial& q,
                                     const Polynomial& r);

/// Certificate kinds: "assoc-holds", "counterexample" or "undecided". A
/// counterexample carries the unequal pair as subjects "left"/"right", the
/// separating witness and its two membership certificates as children.
/// With `all_bracketings` false only p⊡(q⊡r) and (p⊡q)⊡r are compared.
Certificate assoc_check(const Polynomial& p, const Polynomial& q, const Polynomial& r,
                        bool all_bracketings = true);

struct ScanResult {
  std::size_t polynomials = 0;
  std::size_t triples = 0;
  std::size_t undecided = 0;
  std::vector<Certificate> counterexamples;  ///< in scan order
};

/// Every triple of positive-degree polynomials of degree ≤ max_deg over a
/// finite carrier, as multisets p ≤ q ≤ r in the order of polynomial
/// comparison (degree, then coefficients). Work is split into independent
/// units and merged in scan order.
ScanResult assoc_scan(const HyperfieldPtr& hf, std::size_t max_deg, bool monic_only = true);

/// All polynomials of exact degree `deg` over a finite carrier, ascending.
std::vector<Polynomial> all_polynomials(const HyperfieldPtr& hf, std::size_t deg, bool monic_only);

/// Compares (T²+1)⊡((T+1)⊡(T+1)) with (T+1)⊡((T²+1)⊡(T+1)). When 1⊞1 is a
/// singleton the verdict is not-applicable; otherwise the witness is
/// T⁴ + d₁T³ + d₁T² + d₂T + 1 with distinct d₁, d₂ ∈ 1⊞1, which lies in
/// the second set only.
Certificate one_plus_one_criterion(const HyperfieldPtr& hf);

/// Re-checks a counterexample or criterion certificate through its two
/// membership children: both replay, one is yes and the other no.
bool replay_counterexample(const Certificate& c, const HyperfieldPtr& hf);

struct PointwiseEntry {
  Element at;
  std::vector<ElementSet> values;      ///< p(a), q(a), r(a)
  std::vector<ElementSet> bracketed;   ///< p(a)(q(a)r(a)), (p(a)q(a))r(a), q(a)(p(a)r(a))
  bool equal = false;
};

struct PointwiseReport {
  std::vector<PointwiseEntry> entries;
  bool all_equal() const;
};

/// Elementwise products of evaluation sets under the three bracketings, at
/// every point of `region` (the whole carrier when empty and finite).
PointwiseReport pointwise_products_equal(const Polynomial& p, const Polynomial& q,
                                         const Polynomial& r,
                                         std::vector<Element> region = {});

}  // namespace hyperpoly
