#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpoly/element.hpp"
#include "hyperpoly/element_set.hpp"

namespace hyperpoly {

/// A hyperfield: single-valued commutative multiplication with inverses,
/// set-valued commutative hyperaddition with unique hyperinverses.
///
/// Implementations are immutable after construction and safe to share
/// between threads. Every operation validates that its arguments belong to
/// this carrier and throws CarrierMismatch otherwise.
class Hyperfield {
 public:
  virtual ~Hyperfield() = default;

  /// Selector-style name: "K", "S", "W", "T", "V", "P", "GF(5)", "W(G,e)".
  virtual std::string name() const = 0;
  virtual CarrierKind carrier() const = 0;
  virtual bool is_finite() const { return carrier() == CarrierKind::Finite; }

  virtual Element zero() const = 0;
  virtual Element one() const = 0;

  virtual Element mul(const Element& x, const Element& y) const = 0;
  /// The unique hyperinverse -x, i.e. the y with 0 in x ⊞ y.
  virtual Element neg(const Element& x) const = 0;
  /// Multiplicative inverse; DomainError for zero.
  virtual Element inv(const Element& x) const = 0;
  /// x ⊞ y; never empty.
  virtual ElementSet hyperadd(const Element& x, const Element& y) const = 0;
  /// A ⊞ B := union of a ⊞ b over a in A, b in B, computed exactly.
  virtual ElementSet set_hyperadd(const ElementSet& a, const ElementSet& b) const = 0;
  /// Elementwise product {xy : x in A, y in B}.
  virtual ElementSet set_mul(const ElementSet& a, const ElementSet& b) const = 0;
  /// {a x : x in S}.
  virtual ElementSet scale(const Element& a, const ElementSet& s) const = 0;
  /// {-x : x in S}.
  virtual ElementSet negate(const ElementSet& s) const = 0;

  /// Checks that x is a valid element of this carrier.
  virtual void validate(const Element& x) const = 0;
  virtual void validate(const ElementSet& s) const = 0;

  /// All elements, in a fixed order (finite carriers only).
  virtual std::vector<Element> elements() const;

  /// Parses a coefficient literal ("1", "-1", "5/2", "-inf", "ph(1/8)",
  /// "e^{i pi/8}", a group symbol, ...).
  virtual Element parse_element(std::string_view text) const = 0;
  virtual std::string format_element(const Element& x) const = 0;
  virtual std::string format_set(const ElementSet& s) const = 0;

  /// A deterministic member of a nonempty set. Prefers closed endpoints
  /// (largest first), then interior points.
  virtual Element representative(const ElementSet& s) const = 0;
  /// Up to `per_component` deterministic members of every component of s:
  /// closed upper endpoint, an interior point, closed lower endpoint.
  virtual std::vector<Element> samples(const ElementSet& s,
                                       std::size_t per_component) const = 0;
  /// A second member distinct from `first`, when s has one.
  std::optional<Element> other_member(const ElementSet& s, const Element& first) const;

  /// Seed values used by probe-mode axiom checks.
  virtual std::vector<Element> default_probe() const = 0;

  // Derived conveniences shared by all carriers.
  bool is_zero(const Element& x) const { return x == zero(); }
  ElementSet singleton(const Element& x) const;
  /// s without the zero element.
  ElementSet remove_zero(const ElementSet& s) const;
  /// Left fold of set_hyperadd; DomainError on an empty list.
  ElementSet hypersum(std::span<const Element> xs) const;
  ElementSet hypersum_sets(std::span<const ElementSet> xs) const;
  Element div(const Element& x, const Element& y) const { return mul(x, inv(y)); }
  Element pow(const Element& x, std::size_t k) const;
};

using HyperfieldPtr = std::shared_ptr<const Hyperfield>;

/// Throws CarrierMismatch unless both refer to the same hyperfield.
void require_same(const Hyperfield& a, const Hyperfield& b);

/// Builds a hyperfield from its selector: "K", "S", "W", "T", "V", "P",
/// "GF(p)" with p prime, or "W(G,e):<table-file>".
HyperfieldPtr make_hyperfield(std::string_view selector);

HyperfieldPtr krasner();
HyperfieldPtr signs();
HyperfieldPtr weak_signs();
HyperfieldPtr tropical();
HyperfieldPtr viro();
HyperfieldPtr phase();
HyperfieldPtr prime_field(int p);

/// Multiplication table of a finite abelian group with named elements.
struct CayleyTable {
  std::vector<std::string> names;           ///< names[i] is element i
  std::vector<std::vector<int>> product;    ///< product[i][j] = i*j
  int identity = 0;
};

/// Parses the text format: first line n, then an n x n grid of symbols,
/// then the symbol e. The first row belongs to the identity and lists the
/// symbols in the order used for both rows and columns.
CayleyTable parse_cayley_table(std::string_view text, std::string* e_symbol);
CayleyTable load_cayley_table(const std::string& path, std::string* e_symbol);

/// W(G,e): 0 ⊞ x = {x}, x ⊞ ex = G ∪ {0}, x ⊞ y = G otherwise.
/// Validates that G is an abelian group and e is self-inverse.
HyperfieldPtr weak_hyperfield(const CayleyTable& group, const std::string& e_symbol,
                              std::string label = "W(G,e)");

/// Finite hyperfield given by explicit operation tables over indices
/// 0..n-1. No axioms are checked, which makes it the tool for negative
/// controls in tests. add[i][j] must be sorted.
struct FiniteTables {
  std::string label;
  std::vector<std::string> names;
  int zero = 0;
  int one = 1;
  std::vector<std::vector<int>> mul;
  std::vector<std::vector<std::vector<int>>> add;
  std::vector<int> neg;
  std::vector<int> inv;  ///< inv[zero] is ignored
};
HyperfieldPtr table_hyperfield(FiniteTables tables);
/// Exposes the tables behind K, S, W so tests can perturb them.
FiniteTables tables_of(const Hyperfield& finite);

}  // namespace hyperpoly
