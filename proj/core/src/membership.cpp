#include "hyperpoly/membership.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hyperpoly/error.hpp"

namespace hyperpoly {

namespace {

std::string var_name(std::size_t j) { return "d" + std::to_string(j); }

struct Term {
  Element coeff;
  std::size_t var;
};

// p_i ∈ constants ⊞ (⊞ coeff·d_var over the free terms)
struct Constraint {
  std::size_t index = 0;
  ElementSet constants;
  bool has_constants = false;
  std::vector<Term> free;
};

std::string term_text(const Hyperfield& hf, const Term& t) {
  if (t.coeff == hf.one()) return var_name(t.var);
  return hf.format_element(t.coeff) + "·" + var_name(t.var);
}

std::string constraint_text(const Hyperfield& hf, const Element& target, const Constraint& c) {
  std::string rhs;
  if (c.has_constants || c.free.empty()) rhs = hf.format_set(c.constants);
  for (const Term& t : c.free) rhs += (rhs.empty() ? "" : " ⊞ ") + term_text(hf, t);
  return hf.format_element(target) + " ∈ " + rhs;
}

}  // namespace

FactorResult factor_through(const Polynomial& p, const Polynomial& l, const PolyBox& box) {
  require_same(p.hf(), l.hf());
  require_same(p.hf(), *box.field());
  const Hyperfield& hf = p.hf();
  const Element zero = hf.zero();
  FactorResult r;
  auto fail = [&r](std::string method, TraceStep step) {
    r.verdict = Verdict::No;
    r.method = std::move(method);
    r.trace.push_back(std::move(step));
    return r;
  };

  const std::size_t n = p.degree();
  const std::size_t m = l.degree();
  if (n < m) {
    return fail("degree", {"degree", std::nullopt,
                           "deg p = " + std::to_string(n) + " < " + std::to_string(m), ""});
  }
  const std::size_t k = n - m;
  if (k > box.nominal_degree()) {
    return fail("degree", {"degree", std::nullopt,
                           "a quotient of degree " + std::to_string(k) + " is not in the box",
                           ""});
  }
  for (std::size_t j = k + 1; j <= box.nominal_degree(); ++j) {
    if (!box.at(j).contains(zero)) {
      return fail("degree", {"degree", j, var_name(j) + " must vanish but 0 ∉ its set",
                             hf.format_set(box.at(j))});
    }
  }
  std::vector<ElementSet> dom;
  for (std::size_t j = 0; j < k; ++j) dom.push_back(box.at(j));
  dom.push_back(hf.remove_zero(box.at(k)));
  if (dom[k].empty()) {
    return fail("degree", {"degree", k, "leading unknown " + var_name(k) + " must be nonzero",
                           hf.format_set(box.at(k))});
  }

  std::vector<Constraint> cons;
  for (std::size_t i = 0; i <= n; ++i) {
    Constraint c;
    c.index = i;
    std::vector<Element> consts;
    for (std::size_t b = i >= m ? i - m : 0; b <= std::min(i, k); ++b) {
      const Element& coef = l.coeff(i - b);
      if (hf.is_zero(coef)) continue;
      if (auto v = dom[b].only()) {
        consts.push_back(hf.mul(coef, *v));
      } else {
        c.free.push_back({coef, b});
      }
    }
    c.has_constants = !consts.empty();
    c.constants = consts.empty() ? hf.singleton(zero) : hf.hypersum(consts);
    cons.push_back(std::move(c));
  }

  // Constraints without unknowns.
  for (const Constraint& c : cons) {
    if (!c.free.empty() || c.constants.contains(p.coeff(c.index))) continue;
    return fail("coefficient-exclusion",
                {"check", c.index, constraint_text(hf, p.coeff(c.index), c) + " fails",
                 hf.format_set(c.constants)});
  }

  // One unknown: d ∈ c^{-1}(p_i ⊞ -S_i), by reversibility.
  for (const Constraint& c : cons) {
    if (c.free.size() != 1) continue;
    const Term& t = c.free[0];
    const Element& target = p.coeff(c.index);
    const ElementSet allowed = hf.scale(
        hf.inv(t.coeff), hf.set_hyperadd(hf.singleton(target), hf.negate(c.constants)));
    const ElementSet before = dom[t.var];
    const ElementSet after = before.intersect(allowed);
    if (after.empty()) {
      const ElementSet reach = hf.set_hyperadd(c.constants, hf.scale(t.coeff, before));
      return fail("chain-trace",
                  {"unary", c.index,
                   constraint_text(hf, target, c) + " with " + var_name(t.var) + " ∈ " +
                       hf.format_set(before) + ": reachable " + hf.format_set(reach) + " ∌ " +
                       hf.format_element(target),
                   hf.format_set(reach)});
    }
    if (after != before) {
      r.trace.push_back({"unary", c.index,
                         constraint_text(hf, target, c) + " ⇒ " + var_name(t.var) + " ∈ " +
                             hf.format_set(after),
                         hf.format_set(after)});
      dom[t.var] = after;
    }
  }

  // Two unknowns: a forest, rooted at the largest index of each component.
  bool complete = true;
  std::vector<std::size_t> uf(k + 1);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return uf[x] == x ? x : uf[x] = find(uf[x]);
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(k + 1);  // (other var, constraint)
  for (std::size_t ci = 0; ci < cons.size(); ++ci) {
    const Constraint& c = cons[ci];
    if (c.free.size() > 2) complete = false;
    if (c.free.size() != 2) continue;
    const std::size_t a = c.free[0].var, b = c.free[1].var;
    if (find(a) == find(b)) {
      complete = false;
      continue;
    }
    uf[find(a)] = find(b);
    adj[a].push_back({b, ci});
    adj[b].push_back({a, ci});
  }

  struct Visit {
    std::size_t var;
    std::optional<std::size_t> parent;
    std::size_t constraint = 0;
  };
  std::vector<Visit> order;
  std::vector<bool> seen(k + 1, false);
  for (std::size_t root = k + 1; root-- > 0;) {
    if (seen[root]) continue;
    seen[root] = true;
    std::size_t head = order.size();
    order.push_back({root, std::nullopt, 0});
    while (head < order.size()) {
      const std::size_t x = order[head++].var;
      for (const auto& [y, ci] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        order.push_back({y, x, ci});
      }
    }
  }

  auto coeff_of = [](const Constraint& c, std::size_t var) {
    return c.free[0].var == var ? c.free[0].coeff : c.free[1].coeff;
  };

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!it->parent) continue;
    const Constraint& c = cons[it->constraint];
    const std::size_t x = it->var, y = *it->parent;
    const Element cx = coeff_of(c, x), cy = coeff_of(c, y);
    const Element& target = p.coeff(c.index);
    const ElementSet sx = hf.set_hyperadd(c.constants, hf.scale(cx, dom[x]));
    const ElementSet msg =
        hf.scale(hf.inv(cy), hf.set_hyperadd(hf.singleton(target), hf.negate(sx)));
    const ElementSet before = dom[y];
    const ElementSet after = before.intersect(msg);
    const std::string given = " with " + var_name(x) + " ∈ " + hf.format_set(dom[x]);
    if (after.empty()) {
      const ElementSet reach = hf.set_hyperadd(sx, hf.scale(cy, before));
      return fail("chain-trace",
                  {"edge", c.index,
                   constraint_text(hf, target, c) + given + ", " + var_name(y) + " ∈ " +
                       hf.format_set(before) + ": reachable " + hf.format_set(reach) + " ∌ " +
                       hf.format_element(target),
                   hf.format_set(reach)});
    }
    if (after != before) {
      r.trace.push_back({"edge", c.index,
                         constraint_text(hf, target, c) + given + " ⇒ " + var_name(y) + " ∈ " +
                             hf.format_set(after),
                         hf.format_set(after)});
      dom[y] = after;
    }
  }

  // Witness, top-down.
  std::vector<std::optional<Element>> val(k + 1);
  for (const Visit& v : order) {
    if (!v.parent) {
      val[v.var] = hf.representative(dom[v.var]);
      continue;
    }
    const Constraint& c = cons[v.constraint];
    const Element cx = coeff_of(c, v.var), cy = coeff_of(c, *v.parent);
    const ElementSet s = hf.set_hyperadd(c.constants, hf.singleton(hf.mul(cy, *val[*v.parent])));
    const ElementSet allowed =
        hf.scale(hf.inv(cx), hf.set_hyperadd(hf.singleton(p.coeff(c.index)), hf.negate(s)))
            .intersect(dom[v.var]);
    val[v.var] = hf.representative(allowed.empty() ? dom[v.var] : allowed);
  }
  std::vector<Element> coeffs;
  for (auto& v : val) coeffs.push_back(*v);
  auto q = Polynomial::trimmed(p.field(), std::move(coeffs));
  if (q && box.contains(*q) && boxprod(l, *q).contains(p)) {
    r.verdict = Verdict::Yes;
    r.method = "chain-solve";
    r.quotient = std::move(q);
    return r;
  }
  r.verdict = Verdict::Undecided;
  r.method = complete ? "witness-check-failed" : "outside-forest";
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Polynomial> enumerate_members(const ProductExpr& e, std::size_t limit) {
  if (!e.field()->is_finite()) throw DomainError("enumeration needs a finite carrier");
  switch (e.kind()) {
    case ProductExpr::Kind::Leaf:
      return {e.poly()};
    case ProductExpr::Kind::Scalar: {
      std::vector<Polynomial> out;
      for (const auto& q : enumerate_members(e.left(), limit)) out.push_back(scalar_prod(e.factor(), q));
      std::sort(out.begin(), out.end());
      return out;
    }
    default:
      break;
  }
  const auto ls = enumerate_members(e.left(), limit);
  const auto rs = enumerate_members(e.right(), limit);
  std::set<Polynomial> acc;
  for (const auto& a : ls) {
    for (const auto& b : rs) {
      const PolyBox box = e.kind() == ProductExpr::Kind::Product ? boxprod(a, b) : boxsum(a, b);
      for (auto& x : box.enumerate(limit)) acc.insert(std::move(x));
      if (acc.size() > limit) {
        throw LimitExceeded("member set exceeds " + std::to_string(limit) + " polynomials");
      }
    }
  }
  return {acc.begin(), acc.end()};
}

namespace {

// Sampled coefficient choices of a box, index 0 varying fastest.
void box_corners(const PolyBox& box, std::size_t limit, std::vector<Polynomial>& out,
                 std::set<Polynomial>& seen) {
  const Hyperfield& hf = *box.field();
  std::vector<std::vector<Element>> axes;
  for (const auto& s : box.sets()) axes.push_back(hf.samples(s, 3));
  std::vector<std::size_t> digit(axes.size(), 0);
  while (out.size() < limit) {
    std::vector<Element> coeffs;
    for (std::size_t i = 0; i < axes.size(); ++i) coeffs.push_back(axes[i][digit[i]]);
    if (auto p = Polynomial::trimmed(box.field(), std::move(coeffs))) {
      if (seen.insert(*p).second) out.push_back(std::move(*p));
    }
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == axes[i].size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
}

}  // namespace

std::vector<Polynomial> sample_members(const ProductExpr& e, std::size_t limit) {
  std::vector<Polynomial> out;
  std::set<Polynomial> seen;
  switch (e.kind()) {
    case ProductExpr::Kind::Leaf:
      return {e.poly()};
    case ProductExpr::Kind::Scalar:
      for (const auto& q : sample_members(e.left(), limit)) {
        auto x = scalar_prod(e.factor(), q);
        if (seen.insert(x).second) out.push_back(std::move(x));
      }
      return out;
    default:
      break;
  }
  const auto ls = sample_members(e.left(), limit);
  const auto rs = sample_members(e.right(), limit);
  for (const auto& a : ls) {
    for (const auto& b : rs) {
      if (out.size() >= limit) return out;
      box_corners(e.kind() == ProductExpr::Kind::Product ? boxprod(a, b) : boxsum(a, b), limit,
                  out, seen);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Outcome {
  Verdict verdict = Verdict::Undecided;
  std::string method;
  std::vector<TraceStep> trace;
  std::vector<NodeValue> assignment;
  std::map<std::string, std::string> stats;
};

constexpr std::size_t kPairLimit = 2'000'000;

Outcome no(std::string method, std::vector<TraceStep> trace) {
  Outcome o;
  o.verdict = Verdict::No;
  o.method = std::move(method);
  o.trace = std::move(trace);
  return o;
}

Outcome undecided(std::string method) {
  Outcome o;
  o.method = std::move(method);
  return o;
}

Outcome member_rec(const Polynomial& p, const ProductExpr& e, const std::string& path);

// Combines the assignments of two YES sub-results under `path`.
Outcome yes(const std::string& path, const Polynomial& p, std::string method,
            std::initializer_list<const Outcome*> parts) {
  Outcome o;
  o.verdict = Verdict::Yes;
  o.method = std::move(method);
  o.assignment.push_back({path, format_poly(p)});
  for (const Outcome* part : parts) {
    o.assignment.insert(o.assignment.end(), part->assignment.begin(), part->assignment.end());
  }
  return o;
}

std::optional<std::size_t> first_excluded(const PolyBox& box, const Polynomial& p) {
  const Element zero = p.hf().zero();
  for (std::size_t i = 0; i < box.sets().size(); ++i) {
    const Element c = i <= p.degree() ? p.coeff(i) : zero;
    if (!box.at(i).contains(c)) return i;
  }
  return std::nullopt;
}

Outcome exclusion(const PolyBox& box, const Polynomial& p) {
  const Hyperfield& hf = p.hf();
  if (p.degree() > box.nominal_degree()) {
    return no("degree", {{"degree", std::nullopt,
                          "deg p = " + std::to_string(p.degree()) + " exceeds " +
                              std::to_string(box.nominal_degree()),
                          ""}});
  }
  const std::size_t i = *first_excluded(box, p);
  const Element c = i <= p.degree() ? p.coeff(i) : hf.zero();
  return no("coefficient-exclusion",
            {{"check", i, hf.format_element(c) + " ∉ " + hf.format_set(box.at(i)),
              hf.format_set(box.at(i))}});
}

// Both operands enumerated over a finite carrier.
Outcome finite_search(const Polynomial& p, const ProductExpr& e, const std::string& path,
                      const std::optional<Polynomial>& lfix,
                      const std::optional<Polynomial>& rfix) {
  const bool product = e.kind() == ProductExpr::Kind::Product;
  try {
    const auto ls = lfix ? std::vector<Polynomial>{*lfix} : enumerate_members(e.left());
    const auto rs = rfix ? std::vector<Polynomial>{*rfix} : enumerate_members(e.right());
    if (ls.size() * rs.size() > kPairLimit) return undecided("search-limit");
    std::size_t checked = 0;
    for (const auto& a : ls) {
      for (const auto& b : rs) {
        if (product && a.degree() + b.degree() != p.degree()) continue;
        if (!product && std::max(a.degree(), b.degree()) < p.degree()) continue;
        ++checked;
        const PolyBox box = product ? boxprod(a, b) : boxsum(a, b);
        if (!box.contains(p)) continue;
        const Outcome lo = member_rec(a, e.left(), path + ".left");
        const Outcome ro = member_rec(b, e.right(), path + ".right");
        return yes(path, p, "enumeration", {&lo, &ro});
      }
    }
    Outcome o = no("exhaustive", {{"exhaustive", std::nullopt,
                                   "no operand pair of matching degree yields p", ""}});
    o.stats["operand_pairs"] = std::to_string(checked);
    return o;
  } catch (const LimitExceeded&) {
    return undecided("search-limit");
  }
}

Outcome product_rec(const Polynomial& p, const ProductExpr& e, const std::string& path) {
  const Hyperfield& hf = p.hf();
  const auto lfix = determined(e.left());
  const auto rfix = determined(e.right());
  if (lfix && rfix) {
    const PolyBox box = boxprod(*lfix, *rfix);
    if (!box.contains(p)) return exclusion(box, p);
    const Outcome lo = member_rec(*lfix, e.left(), path + ".left");
    const Outcome ro = member_rec(*rfix, e.right(), path + ".right");
    return yes(path, p, "box", {&lo, &ro});
  }
  if (lfix || rfix) {
    const bool fixed_left = lfix.has_value();
    const Polynomial& l = fixed_left ? *lfix : *rfix;
    const ProductExpr& fixed_node = fixed_left ? e.left() : e.right();
    const ProductExpr& other = fixed_left ? e.right() : e.left();
    const std::string fixed_path = path + (fixed_left ? ".left" : ".right");
    const std::string other_path = path + (fixed_left ? ".right" : ".left");

    std::vector<TraceStep> obstruction;
    std::map<std::string, std::string> stats;
    if (l.degree() == 1) {
      const Element a = hf.neg(hf.mul(l.coeff(0), hf.inv(l.coeff(1))));
      const ElementSet value = eval(p, a);
      if (!value.contains(hf.zero())) {
        obstruction.push_back({"root-obstruction", std::nullopt,
                               "0 ∉ p(" + hf.format_element(a) + ") = " + hf.format_set(value) +
                                   ", yet " + hf.format_element(a) + " is the root of " +
                                   format_poly(l),
                               hf.format_set(value)});
        stats["root"] = hf.format_element(a);
      }
    }
    auto with_obstruction = [&](Outcome o) {
      if (obstruction.empty()) return o;
      o.method = "root-obstruction";
      o.trace.insert(o.trace.begin(), obstruction.begin(), obstruction.end());
      o.stats.insert(stats.begin(), stats.end());
      return o;
    };

    if (auto box = resolve_box(other)) {
      FactorResult fr = factor_through(p, l, *box);
      if (fr.verdict == Verdict::Yes) {
        const Outcome fo = member_rec(l, fixed_node, fixed_path);
        const Outcome so = member_rec(*fr.quotient, other, other_path);
        Outcome o = yes(path, p, "chain-solve", {&fo, &so});
        o.trace = std::move(fr.trace);
        return o;
      }
      if (fr.verdict == Verdict::No) return with_obstruction(no(fr.method, std::move(fr.trace)));
    }
    if (!obstruction.empty()) return with_obstruction(no("root-obstruction", {}));
    if (hf.is_finite()) return finite_search(p, e, path, lfix, rfix);
    return undecided("outside-scope");
  }
  if (hf.is_finite()) return finite_search(p, e, path, std::nullopt, std::nullopt);
  return undecided("outside-scope");
}

Outcome member_rec(const Polynomial& p, const ProductExpr& e, const std::string& path) {
  require_same(p.hf(), *e.field());
  if (p.degree() > e.degree_bound() || (e.exact_degree() && *e.exact_degree() != p.degree())) {
    return no("degree", {{"degree", std::nullopt,
                          "deg p = " + std::to_string(p.degree()) + " but members of " +
                              e.str() + " have degree " +
                              (e.exact_degree() ? std::to_string(*e.exact_degree())
                                                : "at most " + std::to_string(e.degree_bound())),
                          ""}});
  }
  switch (e.kind()) {
    case ProductExpr::Kind::Leaf:
      if (p == e.poly()) return yes(path, p, "leaf", {});
      return no("leaf", {{"leaf", std::nullopt, format_poly(p) + " ≠ " + format_poly(e.poly()), ""}});
    case ProductExpr::Kind::Scalar: {
      const Polynomial inner = scalar_prod(p.hf().inv(e.factor()), p);
      Outcome sub = member_rec(inner, e.left(), path + ".operand");
      if (sub.verdict != Verdict::Yes) return sub;
      return yes(path, p, sub.method, {&sub});
    }
    case ProductExpr::Kind::Product:
      return product_rec(p, e, path);
    case ProductExpr::Kind::Sum: {
      const auto lfix = determined(e.left());
      const auto rfix = determined(e.right());
      if (lfix && rfix) {
        const PolyBox box = boxsum(*lfix, *rfix);
        if (!box.contains(p)) return exclusion(box, p);
        const Outcome lo = member_rec(*lfix, e.left(), path + ".left");
        const Outcome ro = member_rec(*rfix, e.right(), path + ".right");
        return yes(path, p, "box", {&lo, &ro});
      }
      if (p.hf().is_finite()) return finite_search(p, e, path, lfix, rfix);
      return undecided("outside-scope");
    }
  }
  return undecided("outside-scope");
}

Certificate to_certificate(const Polynomial& p, const ProductExpr& e, Outcome o) {
  Certificate c;
  c.kind = "membership";
  c.verdict = o.verdict;
  c.hyperfield = p.hf().name();
  c.method = std::move(o.method);
  c.subjects = {{"poly", format_poly(p)}, {"expr", e.str()}};
  c.assignment = std::move(o.assignment);
  c.trace = std::move(o.trace);
  c.stats = std::move(o.stats);
  return c;
}

}  // namespace

Certificate expr_member(const Polynomial& p, const ProductExpr& e) {
  return to_certificate(p, e, member_rec(p, e, "root"));
}

// ---------------------------------------------------------------------------

namespace {

bool check_assignment(const ProductExpr& e, const std::string& path,
                      const std::map<std::string, Polynomial>& values) {
  const auto it = values.find(path);
  if (it == values.end()) return false;
  const Polynomial& v = it->second;
  auto child = [&](const std::string& suffix) -> const Polynomial* {
    const auto c = values.find(path + suffix);
    return c == values.end() ? nullptr : &c->second;
  };
  switch (e.kind()) {
    case ProductExpr::Kind::Leaf:
      return v == e.poly();
    case ProductExpr::Kind::Scalar: {
      const Polynomial* x = child(".operand");
      return x && scalar_prod(e.factor(), *x) == v && check_assignment(e.left(), path + ".operand", values);
    }
    case ProductExpr::Kind::Product:
    case ProductExpr::Kind::Sum: {
      const Polynomial* l = child(".left");
      const Polynomial* r = child(".right");
      if (!l || !r) return false;
      const PolyBox box = e.kind() == ProductExpr::Kind::Product ? boxprod(*l, *r) : boxsum(*l, *r);
      return box.contains(v) && check_assignment(e.left(), path + ".left", values) &&
             check_assignment(e.right(), path + ".right", values);
    }
  }
  return false;
}

}  // namespace

bool replay_membership(const Certificate& c, const HyperfieldPtr& hf) {
  if (c.kind != "membership") return false;
  const Polynomial p = parse_poly(c.subjects.at("poly"), hf);
  const ProductExpr e = parse_expr(c.subjects.at("expr"), hf);
  if (c.verdict == Verdict::Yes) {
    std::map<std::string, Polynomial> values;
    for (const auto& a : c.assignment) values.emplace(a.path, parse_poly(a.poly, hf));
    const auto root = values.find("root");
    return root != values.end() && root->second == p && check_assignment(e, "root", values);
  }
  if (c.verdict == Verdict::No && c.method == "root-obstruction") {
    const Element a = hf->parse_element(c.stats.at("root"));
    if (eval(p, a).contains(hf->zero())) return false;
  }
  if (c.verdict == Verdict::No) return expr_member(p, e).verdict == Verdict::No;
  return false;
}

// ---------------------------------------------------------------------------

namespace {

std::string guarded_element(const Hyperfield& hf, const Element& x) {
  std::string s = hf.format_element(x);
  if (s.starts_with("-") || s.find('/') != std::string::npos) {
    if (!s.starts_with("ph(")) s = "(" + s + ")";
  }
  return s;
}

std::string monomial(const std::string& coeff, std::size_t i) {
  std::string s = coeff;
  if (i > 0) s += "T";
  if (i > 1) s += "^" + std::to_string(i);
  return s;
}

// ℓ ⊡ q with q ranging over a box, as coefficient expressions in the free
// coordinates of the box.
std::string coupled_text(const Polynomial& l, const PolyBox& box) {
  const Hyperfield& hf = l.hf();
  const std::size_t k = box.nominal_degree();
  const std::size_t n = l.degree() + k;
  std::vector<std::string> terms;
  std::set<std::size_t> used;
  for (std::size_t i = n + 1; i-- > 0;) {
    std::vector<Element> consts;
    std::vector<Term> free;
    for (std::size_t b = i >= l.degree() ? i - l.degree() : 0; b <= std::min(i, k); ++b) {
      const Element& coef = l.coeff(i - b);
      if (hf.is_zero(coef)) continue;
      if (auto v = box.at(b).only()) {
        consts.push_back(hf.mul(coef, *v));
      } else {
        free.push_back({coef, b});
        used.insert(b);
      }
    }
    std::string text;
    if (free.empty()) {
      if (consts.empty()) continue;
      const ElementSet s = hf.hypersum(consts);
      if (auto x = s.only()) {
        if (hf.is_zero(*x)) continue;
        // Unit coefficients are implicit, except over T where the unit is 0.
        const bool implicit = *x == hf.one() && i > 0 && hf.carrier() != CarrierKind::Tropical;
        text = implicit ? "" : guarded_element(hf, *x);
      } else {
        text = hf.format_set(s);
      }
    } else if (consts.empty() && free.size() == 1) {
      text = term_text(hf, free[0]);
    } else {
      std::vector<std::string> bits;
      if (!consts.empty()) bits.push_back(hf.format_set(hf.hypersum(consts)));
      for (const Term& t : free) bits.push_back(term_text(hf, t));
      text = "(" + bits[0];
      for (std::size_t j = 1; j < bits.size(); ++j) text += " ⊞ " + bits[j];
      text += ")";
    }
    terms.push_back(monomial(text, i));
  }
  std::string out = "{";
  for (std::size_t j = 0; j < terms.size(); ++j) out += (j ? "+" : "") + terms[j];
  out += " | ";
  bool first = true;
  for (std::size_t j : used) {
    out += (first ? "" : ", ") + var_name(j) + " ∈ " + hf.format_set(box.at(j));
    first = false;
  }
  return out + "}";
}

std::string list_text(const std::vector<Polynomial>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + format_poly(ps[i]);
  return out + "}";
}

}  // namespace

PolySetDescription expr_set(const ProductExpr& e) {
  PolySetDescription d;
  d.box = resolve_box(e);
  if (e.field()->is_finite()) {
    d.members = enumerate_members(e);
    d.described = true;
    d.text = list_text(d.members);
    return d;
  }
  if (d.box) {
    d.described = true;
    d.text = "{" + d.box->str() + "}";
    return d;
  }
  if (e.kind() == ProductExpr::Kind::Product) {
    const auto lfix = determined(e.left());
    const auto rfix = determined(e.right());
    const std::optional<PolyBox> other =
        lfix ? resolve_box(e.right()) : (rfix ? resolve_box(e.left()) : std::nullopt);
    if (other) {
      d.described = true;
      d.text = coupled_text(lfix ? *lfix : *rfix, *other);
      return d;
    }
  }
  d.text = "outside the supported shapes";
  return d;
}

// ---------------------------------------------------------------------------

namespace {

Certificate inequality(const ProductExpr& a, const ProductExpr& b, const Polynomial& w,
                       bool in_left, std::string method) {
  Certificate c;
  c.kind = "equality";
  c.verdict = Verdict::No;
  c.hyperfield = a.field()->name();
  c.method = std::move(method);
  c.subjects = {{"left", a.str()}, {"right", b.str()}};
  c.witness = format_poly(w);
  c.note = std::string("witness lies in the ") + (in_left ? "left" : "right") + " set only";
  c.children.push_back(expr_member(w, a));
  c.children.push_back(expr_member(w, b));
  return c;
}

}  // namespace

Certificate expr_equal(const ProductExpr& a, const ProductExpr& b) {
  require_same(*a.field(), *b.field());
  Certificate c;
  c.kind = "equality";
  c.hyperfield = a.field()->name();
  c.subjects = {{"left", a.str()}, {"right", b.str()}};

  if (a.field()->is_finite()) {
    std::vector<Polynomial> ea, eb;
    try {
      ea = enumerate_members(a);
      eb = enumerate_members(b);
    } catch (const LimitExceeded& ex) {
      c.method = "search-limit";
      c.note = ex.what();
      return c;
    }
    std::vector<Polynomial> only_a, only_b;
    std::set_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(only_a));
    std::set_difference(eb.begin(), eb.end(), ea.begin(), ea.end(), std::back_inserter(only_b));
    if (only_a.empty() && only_b.empty()) {
      c.verdict = Verdict::Yes;
      c.method = "exhaustive";
      c.stats = {{"left_size", std::to_string(ea.size())}, {"right_size", std::to_string(eb.size())}};
      return c;
    }
    const bool left = only_b.empty() || (!only_a.empty() && only_b.back() < only_a.back());
    Certificate out = inequality(a, b, left ? only_a.back() : only_b.back(), left, "exhaustive");
    out.stats = {{"left_size", std::to_string(ea.size())},
                 {"right_size", std::to_string(eb.size())},
                 {"left_only", std::to_string(only_a.size())},
                 {"right_only", std::to_string(only_b.size())}};
    return out;
  }

  const auto ba = resolve_box(a);
  const auto bb = resolve_box(b);
  if (ba && bb && *ba == *bb) {
    c.verdict = Verdict::Yes;
    c.method = "box-compare";
    return c;
  }
  for (int dir = 0; dir < 2; ++dir) {
    const ProductExpr& from = dir == 0 ? a : b;
    const ProductExpr& to = dir == 0 ? b : a;
    for (const Polynomial& w : sample_members(from)) {
      if (expr_member(w, to).verdict != Verdict::No) continue;
      if (expr_member(w, from).verdict != Verdict::Yes) continue;
      return inequality(a, b, w, dir == 0, "sampled-witness");
    }
  }
  c.method = ba && bb ? "boxes-differ-unsampled" : "no-sampled-witness";
  c.note = "no separating polynomial among the sampled members";
  return c;
}

}  // namespace hyperpoly
