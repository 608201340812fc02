#include "hyperpoly/expr.hpp"

#include <cstdlib>
#include <vector>

#include "carrier_util.hpp"
#include "hyperpoly/error.hpp"

namespace hyperpoly {

std::size_t max_degree() {
  if (const char* env = std::getenv("HYPERPOLY_MAX_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 6;
}

struct ProductExpr::Node {
  Kind kind;
  HyperfieldPtr hf;
  std::optional<Polynomial> poly;
  std::optional<Element> factor;
  std::optional<ProductExpr> left;
  std::optional<ProductExpr> right;
  std::size_t bound = 0;
  std::optional<std::size_t> exact;
};

ProductExpr ProductExpr::leaf(Polynomial p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Leaf;
  n->hf = p.field();
  n->bound = p.degree();
  n->exact = p.degree();
  n->poly = std::move(p);
  return ProductExpr(std::move(n));
}

ProductExpr ProductExpr::product(ProductExpr l, ProductExpr r) {
  require_same(*l.field(), *r.field());
  if (l.kind() == Kind::Leaf && l.poly().degree() == 0) return scalar(l.poly().coeff(0), r);
  if (r.kind() == Kind::Leaf && r.poly().degree() == 0) return scalar(r.poly().coeff(0), l);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->hf = l.field();
  n->bound = l.degree_bound() + r.degree_bound();
  if (l.exact_degree() && r.exact_degree()) n->exact = *l.exact_degree() + *r.exact_degree();
  n->left = std::move(l);
  n->right = std::move(r);
  return ProductExpr(std::move(n));
}

ProductExpr ProductExpr::sum(ProductExpr l, ProductExpr r) {
  require_same(*l.field(), *r.field());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->hf = l.field();
  n->bound = std::max(l.degree_bound(), r.degree_bound());
  // Unequal exact degrees cannot cancel at the top.
  if (l.exact_degree() && r.exact_degree() && *l.exact_degree() != *r.exact_degree()) {
    n->exact = n->bound;
  }
  n->left = std::move(l);
  n->right = std::move(r);
  return ProductExpr(std::move(n));
}

ProductExpr ProductExpr::scalar(Element a, ProductExpr x) {
  x.field()->validate(a);
  if (x.field()->is_zero(a)) throw DomainError("scalar factor is zero");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scalar;
  n->hf = x.field();
  n->bound = x.degree_bound();
  n->exact = x.exact_degree();
  n->factor = std::move(a);
  n->left = std::move(x);
  return ProductExpr(std::move(n));
}

ProductExpr::Kind ProductExpr::kind() const { return node_->kind; }
const HyperfieldPtr& ProductExpr::field() const { return node_->hf; }

const Polynomial& ProductExpr::poly() const {
  if (!node_->poly) throw DomainError("not a leaf");
  return *node_->poly;
}
const Element& ProductExpr::factor() const {
  if (!node_->factor) throw DomainError("not a scalar node");
  return *node_->factor;
}
const ProductExpr& ProductExpr::left() const {
  if (!node_->left) throw DomainError("leaf has no operands");
  return *node_->left;
}
const ProductExpr& ProductExpr::right() const {
  if (!node_->right) throw DomainError("node has no right operand");
  return *node_->right;
}

std::size_t ProductExpr::degree_bound() const { return node_->bound; }
std::optional<std::size_t> ProductExpr::exact_degree() const { return node_->exact; }

bool ProductExpr::operator==(const ProductExpr& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Leaf:
      return poly() == o.poly();
    case Kind::Scalar:
      return factor() == o.factor() && left() == o.left();
    default:
      return left() == o.left() && right() == o.right();
  }
}

namespace {

bool single_term(const Polynomial& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs()) nonzero += p.hf().is_zero(c) ? 0 : 1;
  return nonzero == 1;
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

}  // namespace

std::string ProductExpr::str() const {
  switch (kind()) {
    case Kind::Leaf: {
      const std::string s = format_poly(poly());
      return single_term(poly()) && !s.starts_with("-") ? s : wrap(s);
    }
    case Kind::Scalar: {
      const std::string a = format_poly(Polynomial(field(), {factor()}));
      const std::string x = left().str();
      return wrap(a) + "*" + (left().kind() == Kind::Leaf ? x : wrap(x));
    }
    case Kind::Product: {
      auto side = [](const ProductExpr& e) {
        return e.kind() == Kind::Leaf ? e.str() : wrap(e.str());
      };
      return side(left()) + "*" + side(right());
    }
    case Kind::Sum: {
      auto side = [](const ProductExpr& e) {
        if (e.kind() == Kind::Leaf) return wrap(format_poly(e.poly()));
        return wrap(e.str());
      };
      return side(left()) + "+" + side(right());
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

struct Part {
  char sep = '+';  // separator in front of the part
  std::string_view text;
};

std::vector<Part> split_top(std::string_view s, std::string_view seps) {
  std::vector<Part> out;
  int depth = 0;
  std::size_t start = 0;
  char sep = '+';
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(s) + "'");
    if (depth == 0 && seps.find(c) != std::string_view::npos) {
      out.push_back({sep, detail::trim(s.substr(start, i - start))});
      sep = c;
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(s) + "'");
  out.push_back({sep, detail::trim(s.substr(start))});
  return out;
}

bool wrapped(std::string_view s) {
  return s.size() >= 2 && s.front() == '(' && detail::strip_parens(s).size() < s.size();
}

ProductExpr parse_node(std::string_view s, const HyperfieldPtr& hf);

ProductExpr parse_term(std::string_view s, const HyperfieldPtr& hf) {
  const auto factors = split_top(s, "*");
  std::optional<ProductExpr> acc;
  for (const Part& f : factors) {
    if (f.text.empty()) throw ParseError("missing factor in '" + std::string(s) + "'");
    ProductExpr x = parse_node(f.text, hf);
    acc = acc ? ProductExpr::product(*acc, x) : x;
  }
  return *acc;
}

ProductExpr parse_node(std::string_view s, const HyperfieldPtr& hf) {
  s = detail::trim(s);
  if (s.empty()) throw ParseError("empty expression");
  if (wrapped(s)) {
    try {
      return ProductExpr::leaf(parse_poly(s, hf));
    } catch (const ParseError&) {
      return parse_node(s.substr(1, s.size() - 2), hf);
    }
  }
  const bool has_star = split_top(s, "*").size() > 1;
  const auto summands = split_top(s, "+-");
  bool all_wrapped = summands.size() > 1;
  for (const Part& p : summands) all_wrapped = all_wrapped && wrapped(p.text);
  if (!has_star && !all_wrapped) return ProductExpr::leaf(parse_poly(s, hf));

  for (const Part& p : summands) {
    if (p.sep == '-') {
      throw ParseError("'-' between products has no meaning in '" + std::string(s) +
                       "'; parenthesise the polynomial");
    }
  }
  std::optional<ProductExpr> acc;
  for (const Part& p : split_top(s, "+")) {
    if (p.text.empty()) throw ParseError("missing summand in '" + std::string(s) + "'");
    ProductExpr x = parse_term(p.text, hf);
    acc = acc ? ProductExpr::sum(*acc, x) : x;
  }
  return *acc;
}

void check_degrees(const ProductExpr& e, std::size_t cap) {
  if (e.degree_bound() > cap) {
    throw LimitExceeded("expression degree " + std::to_string(e.degree_bound()) +
                        " exceeds HYPERPOLY_MAX_DEGREE=" + std::to_string(cap));
  }
}

}  // namespace

ProductExpr parse_expr(std::string_view text, const HyperfieldPtr& hf) {
  ProductExpr e = parse_node(text, hf);
  check_degrees(e, max_degree());
  return e;
}

std::optional<PolyBox> resolve_box(const ProductExpr& e) {
  switch (e.kind()) {
    case ProductExpr::Kind::Leaf:
      return PolyBox::of(e.poly());
    case ProductExpr::Kind::Scalar: {
      auto inner = resolve_box(e.left());
      if (!inner) return std::nullopt;
      std::vector<ElementSet> sets;
      for (const auto& s : inner->sets()) sets.push_back(e.field()->scale(e.factor(), s));
      return PolyBox(e.field(), std::move(sets));
    }
    case ProductExpr::Kind::Product:
    case ProductExpr::Kind::Sum: {
      auto l = determined(e.left());
      auto r = determined(e.right());
      if (!l || !r) return std::nullopt;
      return e.kind() == ProductExpr::Kind::Product ? boxprod(*l, *r) : boxsum(*l, *r);
    }
  }
  return std::nullopt;
}

std::optional<Polynomial> determined(const ProductExpr& e) {
  if (e.kind() == ProductExpr::Kind::Leaf) return e.poly();
  auto box = resolve_box(e);
  if (!box) return std::nullopt;
  return box->only();
}

}  // namespace hyperpoly
