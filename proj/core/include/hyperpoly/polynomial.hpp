#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperpoly/hyperfield.hpp"

namespace hyperpoly {

/// c_0 + c_1 T + ... + c_n T^n over a hyperfield, with c_n nonzero.
class Polynomial {
 public:
  /// Throws DomainError if `coeffs` is empty or its last entry is zero.
  Polynomial(HyperfieldPtr hf, std::vector<Element> coeffs);

  /// Drops leading zeros; nullopt when every coefficient is zero.
  static std::optional<Polynomial> trimmed(HyperfieldPtr hf, std::vector<Element> coeffs);
  /// The constant polynomial 1.
  static Polynomial unit(HyperfieldPtr hf);
  /// T - a, i.e. coefficients (-a, 1).
  static Polynomial linear(HyperfieldPtr hf, const Element& a);

  const HyperfieldPtr& field() const { return hf_; }
  const Hyperfield& hf() const { return *hf_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const Element& coeff(std::size_t i) const { return coeffs_.at(i); }
  const Element& leading() const { return coeffs_.back(); }
  bool is_monic() const { return leading() == hf_->one(); }

  /// Degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  HyperfieldPtr hf_;
  std::vector<Element> coeffs_;
};

/// Grammar: poly := ['-'] term (('+' | '-') term)*, term := coeff? 'T' ('^' nat)?
/// | coeff. A binary '-' applies the hyperfield negation to its term. Each
/// power may appear once.
Polynomial parse_poly(std::string_view text, const HyperfieldPtr& hf);
/// Inverse of parse_poly. Tropical coefficients are always written out
/// ("0T^2+2"); elsewhere a unit coefficient is omitted and -1 becomes '-'.
std::string format_poly(const Polynomial& p);

/// p(a) = c_n a^n ⊞ ... ⊞ c_0, exactly.
ElementSet eval(const Polynomial& p, const Element& a);

/// Product set of coefficient choices C_0..C_k. A member is the polynomial
/// obtained after dropping leading zeros; the all-zero choice is never a
/// member.
class PolyBox {
 public:
  PolyBox(HyperfieldPtr hf, std::vector<ElementSet> sets);
  static PolyBox of(const Polynomial& p);

  const HyperfieldPtr& field() const { return hf_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  const ElementSet& at(std::size_t i) const { return sets_.at(i); }
  std::size_t nominal_degree() const { return sets_.size() - 1; }

  bool contains(const Polynomial& p) const;
  /// Every set is a singleton (and the result is not the zero vector).
  std::optional<Polynomial> only() const;
  /// True when the all-zero choice was available and had to be excluded.
  bool zero_excluded() const;

  /// Finite carriers only; sorted ascending. Throws LimitExceeded above
  /// `limit` members.
  std::vector<Polynomial> enumerate(std::size_t limit = 1'000'000) const;
  /// Finite carriers only.
  std::size_t count() const;

  /// "{1}T^3 + [2,6]T^2 + [5,11]T + {6}"
  std::string str() const;

  bool operator==(const PolyBox& o) const { return sets_ == o.sets_; }

 private:
  HyperfieldPtr hf_;
  std::vector<ElementSet> sets_;
};

/// p ⊡ q as a box: e_i = ⊞_{k+l=i} c_k d_l, degree deg p + deg q.
PolyBox boxprod(const Polynomial& p, const Polynomial& q);
/// p ⊞ q as a box: e_i = c_i ⊞ d_i, nominal degree max(deg p, deg q).
PolyBox boxsum(const Polynomial& p, const Polynomial& q);

/// a ⊡ p (coefficientwise). DomainError when a = 0.
Polynomial scalar_prod(const Element& a, const Polynomial& p);
/// (c_n, p0) with p0 monic and c_n ⊡ p0 = p.
std::pair<Element, Polynomial> monic_decompose(const Polynomial& p);
/// T^n ⊡ p: coefficients shifted up by n.
Polynomial monomial_shift(const Polynomial& p, std::size_t n);

}  // namespace hyperpoly
