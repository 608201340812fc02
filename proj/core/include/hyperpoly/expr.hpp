#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "hyperpoly/polynomial.hpp"

namespace hyperpoly {

/// Upper bound on expression degrees: HYPERPOLY_MAX_DEGREE, default 6.
std::size_t max_degree();

/// Immutable tree of ⊡ / ⊞ applications over polynomials. Copies share
/// structure.
class ProductExpr {
 public:
  enum class Kind { Leaf, Product, Sum, Scalar };

  static ProductExpr leaf(Polynomial p);
  /// A degree-0 operand turns the product into a Scalar node.
  static ProductExpr product(ProductExpr l, ProductExpr r);
  static ProductExpr sum(ProductExpr l, ProductExpr r);
  static ProductExpr scalar(Element a, ProductExpr x);

  Kind kind() const;
  const HyperfieldPtr& field() const;
  const Polynomial& poly() const;          ///< Leaf only
  const Element& factor() const;           ///< Scalar only
  const ProductExpr& left() const;         ///< Product/Sum; the operand of Scalar
  const ProductExpr& right() const;        ///< Product/Sum

  /// Largest degree any member can have.
  std::size_t degree_bound() const;
  /// The degree shared by every member, when the tree pins it down.
  std::optional<std::size_t> exact_degree() const;

  /// Parenthesised text that parse_expr reads back to the same tree.
  std::string str() const;

  bool operator==(const ProductExpr& o) const;

 private:
  struct Node;
  explicit ProductExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// expr := term ('+' term)*, term := factor ('*' factor)*,
/// factor := '(' expr ')' | polynomial. A parenthesised group counts as a
/// polynomial unless it has a top-level '*' or consists only of
/// parenthesised summands, so "(T+1)*(T+3)" is a product of two leaves and
/// "(T+1)+(T+2)" is a set-level sum. Throws LimitExceeded above max_degree().
ProductExpr parse_expr(std::string_view text, const HyperfieldPtr& hf);

/// The exact member set as one box, when the tree has that shape: leaves,
/// scalar multiples of boxes, and ⊡ / ⊞ of two determined operands.
std::optional<PolyBox> resolve_box(const ProductExpr& e);
/// The single member of a tree whose member set is a singleton box.
std::optional<Polynomial> determined(const ProductExpr& e);

}  // namespace hyperpoly
