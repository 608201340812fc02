#include "hyperpoly/assoc.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hyperpoly/error.hpp"
#include "hyperpoly/membership.hpp"

namespace hyperpoly {

std::vector<ProductExpr> bracketings(const Polynomial& p, const Polynomial& q,
                                     const Polynomial& r) {
  using E = ProductExpr;
  return {E::product(E::leaf(p), E::product(E::leaf(q), E::leaf(r))),
          E::product(E::product(E::leaf(p), E::leaf(q)), E::leaf(r)),
          E::product(E::leaf(q), E::product(E::leaf(p), E::leaf(r)))};
}

Certificate assoc_check(const Polynomial& p, const Polynomial& q, const Polynomial& r,
                        bool all_bracketings) {
  require_same(p.hf(), q.hf());
  require_same(p.hf(), r.hf());
  const auto exprs = bracketings(p, q, r);
  const std::size_t compared = all_bracketings ? 3 : 2;

  Certificate out;
  out.hyperfield = p.hf().name();
  out.subjects = {{"p", format_poly(p)}, {"q", format_poly(q)}, {"r", format_poly(r)}};
  bool undecided = false;
  for (std::size_t k = 1; k < compared; ++k) {
    Certificate eq = expr_equal(exprs[0], exprs[k]);
    if (eq.verdict == Verdict::No) {
      out.kind = "counterexample";
      out.verdict = Verdict::No;
      out.method = eq.method;
      out.subjects["left"] = exprs[0].str();
      out.subjects["right"] = exprs[k].str();
      out.witness = eq.witness;
      out.stats = eq.stats;
      out.children = std::move(eq.children);
      out.note = eq.note;
      return out;
    }
    if (eq.verdict != Verdict::Yes) undecided = true;
  }
  out.kind = undecided ? "undecided" : "assoc-holds";
  out.verdict = undecided ? Verdict::Undecided : Verdict::Yes;
  out.method = p.hf().is_finite() ? "exhaustive" : "box-compare";
  out.stats["bracketings"] = std::to_string(compared);
  return out;
}

std::vector<Polynomial> all_polynomials(const HyperfieldPtr& hf, std::size_t deg, bool monic_only) {
  const auto elems = hf->elements();
  std::vector<Element> leads;
  for (const auto& x : elems) {
    if (!hf->is_zero(x) && (!monic_only || x == hf->one())) leads.push_back(x);
  }
  std::vector<Polynomial> out;
  std::vector<std::size_t> digit(deg, 0);
  for (;;) {
    for (const auto& lead : leads) {
      std::vector<Element> c;
      for (std::size_t i = 0; i < deg; ++i) c.push_back(elems[digit[i]]);
      c.push_back(lead);
      out.emplace_back(hf, std::move(c));
    }
    std::size_t i = 0;
    while (i < deg && ++digit[i] == elems.size()) digit[i++] = 0;
    if (i == deg) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScanResult assoc_scan(const HyperfieldPtr& hf, std::size_t max_deg, bool monic_only) {
  if (!hf->is_finite()) throw DomainError("assoc_scan needs a finite carrier");
  std::vector<Polynomial> polys;
  for (std::size_t d = 1; d <= max_deg; ++d) {
    auto more = all_polynomials(hf, d, monic_only);
    polys.insert(polys.end(), more.begin(), more.end());
  }
  const std::size_t n = polys.size();

  // One work unit per smallest factor; results merge in unit order.
  struct Unit {
    std::size_t triples = 0;
    std::size_t undecided = 0;
    std::vector<Certificate> found;
  };
  std::vector<Unit> units(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      Unit& u = units[i];
      for (std::size_t j = i; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
          ++u.triples;
          Certificate c = assoc_check(polys[i], polys[j], polys[k]);
          if (c.verdict == Verdict::No) u.found.push_back(std::move(c));
          if (c.verdict == Verdict::Undecided) ++u.undecided;
        }
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ScanResult r;
  r.polynomials = n;
  for (auto& u : units) {
    r.triples += u.triples;
    r.undecided += u.undecided;
    for (auto& c : u.found) r.counterexamples.push_back(std::move(c));
  }
  return r;
}

Certificate one_plus_one_criterion(const HyperfieldPtr& hf) {
  using E = ProductExpr;
  const Element zero = hf->zero();
  const Element one = hf->one();
  const Polynomial lin(hf, {one, one});
  const Polynomial quad(hf, {one, zero, one});
  const E left = E::product(E::leaf(quad), E::product(E::leaf(lin), E::leaf(lin)));
  const E right = E::product(E::leaf(lin), E::product(E::leaf(quad), E::leaf(lin)));

  const ElementSet s = hf->hyperadd(one, one);
  Certificate c;
  c.kind = "one-plus-one";
  c.hyperfield = hf->name();
  c.method = "criterion";
  c.subjects = {{"one_plus_one", hf->format_set(s)}, {"left", left.str()}, {"right", right.str()}};
  c.stats["singleton"] = s.only() ? "yes" : "no";
  if (s.only()) {
    c.verdict = Verdict::NotApplicable;
    c.note = "1⊞1 is a singleton";
    return c;
  }
  const Element d1 = hf->representative(s);
  const Element d2 = *hf->other_member(s, d1);
  const Polynomial w(hf, {one, d2, d1, d1, one});
  c.witness = format_poly(w);
  c.children.push_back(expr_member(w, left));
  c.children.push_back(expr_member(w, right));
  const bool separated = c.children[0].verdict == Verdict::No && c.children[1].verdict == Verdict::Yes;
  c.verdict = separated ? Verdict::No : Verdict::Undecided;
  c.note = separated ? "witness lies in the right set only" : "witness not separated";
  return c;
}

bool replay_counterexample(const Certificate& c, const HyperfieldPtr& hf) {
  if (c.verdict != Verdict::No || c.children.size() != 2) return false;
  const Certificate& a = c.children[0];
  const Certificate& b = c.children[1];
  if (!c.witness || a.subjects.at("poly") != *c.witness || b.subjects.at("poly") != *c.witness) {
    return false;
  }
  if (a.subjects.at("expr") != c.subjects.at("left") || b.subjects.at("expr") != c.subjects.at("right")) {
    return false;
  }
  const bool split = (a.verdict == Verdict::Yes && b.verdict == Verdict::No) ||
                     (a.verdict == Verdict::No && b.verdict == Verdict::Yes);
  return split && replay_membership(a, hf) && replay_membership(b, hf);
}

bool PointwiseReport::all_equal() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.equal; });
}

PointwiseReport pointwise_products_equal(const Polynomial& p, const Polynomial& q,
                                         const Polynomial& r, std::vector<Element> region) {
  require_same(p.hf(), q.hf());
  require_same(p.hf(), r.hf());
  const Hyperfield& hf = p.hf();
  if (region.empty()) {
    if (!hf.is_finite()) throw DomainError("pointwise comparison needs explicit points");
    region = hf.elements();
  }
  PointwiseReport report;
  for (const auto& a : region) {
    PointwiseEntry e;
    e.at = a;
    const ElementSet pa = eval(p, a), qa = eval(q, a), ra = eval(r, a);
    e.values = {pa, qa, ra};
    e.bracketed = {hf.set_mul(pa, hf.set_mul(qa, ra)), hf.set_mul(hf.set_mul(pa, qa), ra),
                   hf.set_mul(qa, hf.set_mul(pa, ra))};
    e.equal = e.bracketed[0] == e.bracketed[1] && e.bracketed[0] == e.bracketed[2];
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace hyperpoly
