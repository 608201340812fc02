#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperpoly/certificate.hpp"
#include "hyperpoly/expr.hpp"
#include "hyperpoly/membership.hpp"

namespace hyperpoly {

/// Hypersum of an ascending list over T: {e_n} when e_{n-1} < e_n and
/// [-inf, e_n] when e_{n-1} = e_n.
ElementSet trop_hypersum_sorted(std::span<const Element> ascending);

/// Coefficient box of (0T+a_1)⊡...⊡(0T+a_n): the set at T^{n-s} is the
/// hypersum of the products of all s-element subsets of the a_i.
PolyBox linear_product_box(std::span<const Element> roots);

/// (0T+a_n)⊡((0T+a_{n-1})⊡(...⊡(0T+a_1))).
ProductExpr linear_chain(std::span<const Element> roots);

/// Checks that the iterated union S_n of linear products equals
/// linear_product_box: (i) S_n ⊆ box by per-step coefficient containment;
/// (ii) sampled members of the box are peeled back to 0T+a_1 through
/// quotients by one linear factor at a time.
Certificate box_equivalence(std::span<const Element> roots, std::size_t samples_per_set = 3);

/// Description of S_n: its box once box_equivalence succeeds.
PolySetDescription iterated_linear_product(std::span<const Element> roots);

struct RootMultiset {
  std::vector<Element> roots;  ///< descending, -inf last
  bool in_box = false;         ///< p ∈ linear_product_box(roots)
  bool mult_agrees = false;    ///< mult_at(p, a) = count of a, for every distinct a
};

/// Roots of a monic tropical polynomial from the upper concave hull of the
/// points (i, c_i): an edge from i to j contributes (c_i - c_j)/(j - i) with
/// multiplicity j - i. Trailing -inf coefficients are -inf roots.
RootMultiset root_multiset(const Polynomial& p, bool check_multiplicities = true);

/// Is {p} = q⊡r for some q, r of positive degree? Finite carriers search
/// all factor pairs; over T each degree split is decided exactly by a
/// case analysis on which coefficients are -inf and which product term
/// attains each maximum, solved by Fourier-Motzkin elimination. T is
/// limited to degree 4; other infinite carriers are undecided.
Certificate is_reducible(const Polynomial& p, std::size_t search_bound = 2'000'000);

}  // namespace hyperpoly
