#include "hyperpoly/tropical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hyperpoly/assoc.hpp"
#include "hyperpoly/divide.hpp"
#include "hyperpoly/error.hpp"

namespace hyperpoly {

namespace {

void require_tropical(const Hyperfield& hf) {
  if (hf.carrier() != CarrierKind::Tropical) throw CarrierMismatch(hf.name() + " is not T");
}

std::string join(std::span<const Element> xs, const Hyperfield& hf) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + hf.format_element(xs[i]);
  return out;
}

}  // namespace

ElementSet trop_hypersum_sorted(std::span<const Element> ascending) {
  if (ascending.empty()) throw DomainError("hypersum of an empty list");
  const HyperfieldPtr t = tropical();
  for (const auto& x : ascending) t->validate(x);
  for (std::size_t i = 1; i < ascending.size(); ++i) {
    if (ascending[i] < ascending[i - 1]) throw DomainError("list is not ascending");
  }
  const Element& top = ascending.back();
  if (ascending.size() == 1 || ascending[ascending.size() - 2] < top) return t->singleton(top);
  return t->hyperadd(top, top);
}

PolyBox linear_product_box(std::span<const Element> roots) {
  if (roots.empty()) throw DomainError("no linear factors");
  const HyperfieldPtr t = tropical();
  const std::size_t n = roots.size();
  // The best s-subset is the s largest roots; a second subset reaches the
  // same sum exactly when the s-th and (s+1)-th largest tie.
  std::vector<Element> desc(roots.begin(), roots.end());
  std::sort(desc.begin(), desc.end(), [](const Element& a, const Element& b) { return b < a; });
  std::vector<ElementSet> sets(n + 1);
  Element top = t->one();
  for (std::size_t s = 0; s <= n; ++s) {
    if (s > 0) top = t->mul(top, desc[s - 1]);
    const bool tie = s > 0 && s < n && desc[s - 1] == desc[s];
    sets[n - s] = tie ? t->hyperadd(top, top) : t->singleton(top);
  }
  return PolyBox(t, std::move(sets));
}

ProductExpr linear_chain(std::span<const Element> roots) {
  if (roots.empty()) throw DomainError("no linear factors");
  const HyperfieldPtr t = tropical();
  auto lin = [&](const Element& a) { return ProductExpr::leaf(Polynomial(t, {a, t->one()})); };
  ProductExpr acc = lin(roots[0]);
  for (std::size_t k = 1; k < roots.size(); ++k) acc = ProductExpr::product(lin(roots[k]), acc);
  return acc;
}

namespace {

// Peels p down to 0T+a_1 by dividing out a_k, a_{k-1}, ... in turn, each
// quotient staying inside the box of the remaining factors.
bool peel(const Polynomial& p, std::span<const Element> roots, std::vector<Polynomial>& chain) {
  const std::size_t k = roots.size();
  if (k == 1) return p == Polynomial(p.field(), {roots[0], p.hf().one()});
  const PolyBox inner = linear_product_box(roots.first(k - 1));
  const QuotientSet qs(p, roots[k - 1]);
  for (const auto& q : qs.choices(2'000, inner.sets())) {
    if (!inner.contains(q)) continue;
    chain.push_back(q);
    if (peel(q, roots.first(k - 1), chain)) return true;
    chain.pop_back();
  }
  return false;
}

// Box corners, lowest index varying fastest.
std::vector<Polynomial> corners(const PolyBox& box, std::size_t per_set) {
  const Hyperfield& hf = *box.field();
  std::vector<std::vector<Element>> axes;
  for (const auto& s : box.sets()) axes.push_back(hf.samples(s, per_set));
  std::vector<Polynomial> out;
  std::vector<std::size_t> digit(axes.size(), 0);
  for (;;) {
    std::vector<Element> c;
    for (std::size_t i = 0; i < axes.size(); ++i) c.push_back(axes[i][digit[i]]);
    if (auto p = Polynomial::trimmed(box.field(), std::move(c))) out.push_back(std::move(*p));
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == axes[i].size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

}  // namespace

Certificate box_equivalence(std::span<const Element> roots, std::size_t samples_per_set) {
  const HyperfieldPtr t = tropical();
  const std::size_t n = roots.size();
  if (n == 0) throw DomainError("no linear factors");
  if (n > max_degree()) {
    throw LimitExceeded(std::to_string(n) + " factors exceed HYPERPOLY_MAX_DEGREE=" +
                        std::to_string(max_degree()));
  }
  const PolyBox box = linear_product_box(roots);
  Certificate c;
  c.kind = "box-equivalence";
  c.hyperfield = t->name();
  c.method = "inclusion+peeling";
  c.subjects = {{"roots", join(roots, *t)}, {"expr", linear_chain(roots).str()}, {"box", box.str()}};

  // (i) S_k ⊆ box_k, given S_{k-1} ⊆ box_{k-1}.
  for (std::size_t k = 2; k <= n; ++k) {
    const PolyBox prev = linear_product_box(roots.first(k - 1));
    const PolyBox cur = linear_product_box(roots.first(k));
    const Element& a = roots[k - 1];
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<ElementSet> terms;
      if (i >= 1) terms.push_back(prev.at(i - 1));
      if (i <= k - 1) terms.push_back(t->scale(a, prev.at(i)));
      const ElementSet reach = t->hypersum_sets(terms);
      if (cur.at(i).includes(reach)) continue;
      c.verdict = Verdict::No;
      c.trace.push_back({"inclusion", i,
                         "factor " + std::to_string(k) + " reaches " + t->format_set(reach) +
                             " outside " + t->format_set(cur.at(i)),
                         t->format_set(reach)});
      return c;
    }
  }

  // (ii) box ⊆ S_n on sampled members.
  std::size_t peeled = 0;
  const auto members = corners(box, samples_per_set);
  for (const auto& p : members) {
    std::vector<Polynomial> chain;
    if (!peel(p, roots, chain)) {
      c.verdict = Verdict::Undecided;
      c.note = "no quotient chain found for " + format_poly(p);
      c.stats = {{"samples", std::to_string(members.size())}, {"peeled", std::to_string(peeled)}};
      return c;
    }
    if (peeled == 0) {
      c.witness = format_poly(p);
      for (std::size_t j = 0; j < chain.size(); ++j) {
        c.trace.push_back({"quotient", std::nullopt,
                           "divide by 0T+" + t->format_element(roots[n - 1 - j]) + ": " +
                               format_poly(chain[j]),
                           ""});
      }
    }
    ++peeled;
  }
  c.verdict = Verdict::Yes;
  c.stats = {{"samples", std::to_string(members.size())}, {"peeled", std::to_string(peeled)}};
  return c;
}

PolySetDescription iterated_linear_product(std::span<const Element> roots) {
  PolySetDescription d;
  const Certificate c = box_equivalence(roots);
  d.box = linear_product_box(roots);
  d.described = c.verdict == Verdict::Yes;
  d.text = d.described ? "{" + d.box->str() + "}" : "outside the supported shapes";
  return d;
}

// ---------------------------------------------------------------------------

RootMultiset root_multiset(const Polynomial& p, bool check_multiplicities) {
  const Hyperfield& hf = p.hf();
  require_tropical(hf);
  if (!p.is_monic()) throw DomainError("root_multiset needs a monic polynomial (leading 0)");
  RootMultiset out;
  const std::size_t n = p.degree();
  std::size_t low = 0;
  while (low < n && hf.is_zero(p.coeff(low))) ++low;

  struct Pt {
    long x;
    Rational y;
  };
  std::vector<Pt> hull;
  for (std::size_t i = low; i <= n; ++i) {
    if (hf.is_zero(p.coeff(i))) continue;
    const Pt pt{static_cast<long>(i), p.coeff(i).as_tropical().value.value()};
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // Drop b unless a -> b -> pt turns clockwise.
      const Rational cross = Rational(b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * Rational(pt.x - a.x);
      if (cross.sign() < 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  for (std::size_t e = 1; e < hull.size(); ++e) {
    const long len = hull[e].x - hull[e - 1].x;
    const Rational root = (hull[e - 1].y - hull[e].y) / Rational(len);
    for (long k = 0; k < len; ++k) out.roots.push_back(Element::tropical(root));
  }
  for (std::size_t k = 0; k < low; ++k) out.roots.push_back(hf.zero());
  std::sort(out.roots.begin(), out.roots.end(), [](const Element& a, const Element& b) { return b < a; });

  out.in_box = linear_product_box(out.roots).contains(p);
  if (check_multiplicities) {
    out.mult_agrees = true;
    for (std::size_t i = 0; i < out.roots.size();) {
      std::size_t j = i;
      while (j < out.roots.size() && out.roots[j] == out.roots[i]) ++j;
      if (mult_at(p, out.roots[i]) != j - i) out.mult_agrees = false;
      i = j;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Σ a_j x_j < b (strict) or ≤ b.
struct Lin {
  std::vector<Rational> a;
  Rational b;
  bool strict = false;
};

// Fourier-Motzkin elimination with a witness point, or nullopt.
std::optional<std::vector<Rational>> solve(std::vector<Lin> sys, std::size_t vars) {
  std::vector<std::vector<Lin>> levels(vars);
  for (std::size_t v = vars; v-- > 0;) {
    levels[v] = sys;
    std::vector<Lin> pos, neg, next;
    for (auto& l : sys) {
      const int s = l.a[v].sign();
      (s > 0 ? pos : s < 0 ? neg : next).push_back(std::move(l));
    }
    for (const auto& u : pos) {
      for (const auto& w : neg) {
        // u/a_u + w/(-a_w) drops x_v.
        const Rational fu = Rational(1) / u.a[v];
        const Rational fw = Rational(1) / -w.a[v];
        Lin c{std::vector<Rational>(vars, Rational(0)), u.b * fu + w.b * fw, u.strict || w.strict};
        for (std::size_t j = 0; j < vars; ++j) c.a[j] = u.a[j] * fu + w.a[j] * fw;
        c.a[v] = Rational(0);
        next.push_back(std::move(c));
      }
    }
    sys = std::move(next);
  }
  for (const auto& l : sys) {
    if (l.strict ? !(Rational(0) < l.b) : l.b < Rational(0)) return std::nullopt;
  }
  std::vector<Rational> x(vars, Rational(0));
  for (std::size_t v = 0; v < vars; ++v) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& l : levels[v]) {
      const int s = l.a[v].sign();
      if (s == 0) continue;
      Rational rest = l.b;
      for (std::size_t j = 0; j < v; ++j) rest -= l.a[j] * x[j];
      const Rational bound = rest / l.a[v];
      if (s > 0 && (!hi || bound < *hi || (bound == *hi && l.strict))) {
        hi = bound;
        hi_strict = l.strict;
      }
      if (s < 0 && (!lo || *lo < bound || (bound == *lo && l.strict))) {
        lo = bound;
        lo_strict = l.strict;
      }
    }
    if (lo && hi) {
      if (*hi < *lo || (*lo == *hi && (lo_strict || hi_strict))) return std::nullopt;
      x[v] = *lo == *hi ? *lo : (*lo + *hi) / Rational(2);
    } else if (lo) {
      x[v] = *lo + Rational(1);
    } else if (hi) {
      x[v] = *hi - Rational(1);
    }
  }
  return x;
}

struct Split {
  std::size_t d, e;  // deg q, deg r
};

class TropicalFactorSearch {
 public:
  explicit TropicalFactorSearch(const Polynomial& p) : p_(p), hf_(p.hf()) {}

  // Decides one degree split. Returns q, r on success; appends the
  // refutation to `trace` otherwise.
  std::optional<std::pair<Polynomial, Polynomial>> run(Split s, std::vector<TraceStep>& trace,
                                                       bool& forced_out) {
    s_ = s;
    const std::size_t slots = s.d + s.e + 2;
    // Slot layout: q_0..q_d then r_0..r_e. +1 finite, -1 -inf, 0 open.
    state_.assign(slots, 0);
    state_[qi(s.d)] = 1;
    state_[ri(s.e)] = 1;
    forced_out = false;
    if (!propagate(trace)) {
      forced_out = true;
      return std::nullopt;
    }
    std::vector<std::size_t> open;
    for (std::size_t k = 0; k < slots; ++k) {
      if (state_[k] == 0) open.push_back(k);
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << open.size()); ++mask) {
      std::vector<int> pattern = state_;
      for (std::size_t b = 0; b < open.size(); ++b) pattern[open[b]] = (mask >> b & 1) ? 1 : -1;
      if (auto f = solve_pattern(pattern)) return f;
    }
    trace.push_back({"case-analysis", std::nullopt,
                     "split " + std::to_string(s.d) + "+" + std::to_string(s.e) +
                         ": no -inf pattern and choice of maximal terms is feasible",
                     ""});
    return std::nullopt;
  }

 private:
  std::size_t qi(std::size_t k) const { return k; }
  std::size_t ri(std::size_t l) const { return s_.d + 1 + l; }
  std::string name(std::size_t slot) const {
    return slot <= s_.d ? "q" + std::to_string(slot) : "r" + std::to_string(slot - s_.d - 1);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs(std::size_t i) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k <= s_.d; ++k) {
      if (i >= k && i - k <= s_.e) out.push_back({qi(k), ri(i - k)});
    }
    return out;
  }
  bool finite_coeff(std::size_t i) const { return !hf_.is_zero(p_.coeff(i)); }

  // A -inf coefficient needs a -inf factor in every term; a finite one
  // needs some term with both factors finite.
  bool propagate(std::vector<TraceStep>& trace) {
    const std::string split = "split " + std::to_string(s_.d) + "+" + std::to_string(s_.e) + ": ";
    for (bool changed = true; changed;) {
      changed = false;
      // -inf coefficients first, so forced -inf factors are found before
      // finite coefficients are consulted.
      for (std::size_t step = 0; step < 2 * (p_.degree() + 1) && !changed; ++step) {
        const std::size_t i = step % (p_.degree() + 1);
        if (finite_coeff(i) != (step > p_.degree())) continue;
        const auto ps = pairs(i);
        if (!finite_coeff(i)) {
          for (auto [x, y] : ps) {
            for (auto [known, other] : {std::pair{x, y}, std::pair{y, x}}) {
              if (state_[known] != 1) continue;
              if (state_[other] == 1) {
                trace.push_back({"forced", i,
                                 split + "coefficient is -inf yet " + name(known) + "·" +
                                     name(other) + " is finite",
                                 ""});
                return false;
              }
              if (state_[other] == 0) {
                state_[other] = -1;
                changed = true;
                trace.push_back({"forced", i,
                                 split + "coefficient -inf with " + name(known) +
                                     " finite forces " + name(other) + " = -inf",
                                 "{-inf}"});
              }
            }
          }
        } else {
          std::vector<std::pair<std::size_t, std::size_t>> alive;
          for (auto pr : ps) {
            if (state_[pr.first] != -1 && state_[pr.second] != -1) alive.push_back(pr);
          }
          if (alive.empty()) {
            std::string terms;
            for (auto [x, y] : ps) terms += (terms.empty() ? "" : " ⊞ ") + name(x) + "·" + name(y);
            trace.push_back({"forced", i,
                             split + "every term of " + terms + " is -inf but the coefficient is " +
                                 hf_.format_element(p_.coeff(i)),
                             "{-inf}"});
            return false;
          }
          if (alive.size() == 1) {
            for (std::size_t v : {alive[0].first, alive[0].second}) {
              if (state_[v] == 0) {
                state_[v] = 1;
                changed = true;
              }
            }
          }
        }
      }
    }
    return true;
  }

  std::optional<std::pair<Polynomial, Polynomial>> solve_pattern(const std::vector<int>& pat) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> live(p_.degree() + 1);
    for (std::size_t i = 0; i <= p_.degree(); ++i) {
      for (auto pr : pairs(i)) {
        if (pat[pr.first] == 1 && pat[pr.second] == 1) live[i].push_back(pr);
      }
      if (finite_coeff(i) == live[i].empty()) return std::nullopt;
    }
    // Variables: finite slots other than the normalised leading ones.
    std::map<std::size_t, std::size_t> var;
    for (std::size_t k = 0; k < pat.size(); ++k) {
      if (pat[k] == 1 && k != qi(s_.d) && k != ri(s_.e)) var.emplace(k, var.size());
    }
    const std::size_t nv = var.size();
    const Rational lead_r = p_.leading().as_tropical().value.value();
    // slot value = Σ coeffs·x + constant
    auto term = [&](std::size_t x, std::size_t y, std::vector<Rational>& a, Rational& c) {
      for (std::size_t v : {x, y}) {
        if (auto it = var.find(v); it != var.end()) {
          a[it->second] += Rational(1);
        } else if (v == ri(s_.e)) {
          c += lead_r;
        }
      }
    };

    std::vector<std::size_t> choice(p_.degree() + 1, 0);
    for (;;) {
      std::vector<Lin> sys;
      for (std::size_t i = 0; i <= p_.degree(); ++i) {
        if (live[i].empty()) continue;
        const Rational ci = p_.coeff(i).as_tropical().value.value();
        for (std::size_t t = 0; t < live[i].size(); ++t) {
          std::vector<Rational> a(nv, Rational(0));
          Rational c(0);
          term(live[i][t].first, live[i][t].second, a, c);
          if (t == choice[i]) {
            std::vector<Rational> na(nv, Rational(0));
            for (std::size_t j = 0; j < nv; ++j) na[j] = -a[j];
            sys.push_back({a, ci - c, false});
            sys.push_back({na, c - ci, false});
          } else {
            sys.push_back({a, ci - c, true});
          }
        }
      }
      if (auto x = solve(sys, nv)) {
        auto coeff = [&](std::size_t slot) {
          if (pat[slot] != 1) return hf_.zero();
          if (slot == qi(s_.d)) return hf_.one();
          if (slot == ri(s_.e)) return p_.leading();
          return Element::tropical((*x)[var.at(slot)]);
        };
        std::vector<Element> q, r;
        for (std::size_t k = 0; k <= s_.d; ++k) q.push_back(coeff(qi(k)));
        for (std::size_t l = 0; l <= s_.e; ++l) r.push_back(coeff(ri(l)));
        Polynomial pq(p_.field(), q), pr(p_.field(), r);
        const auto only = boxprod(pq, pr).only();
        if (only && *only == p_) return std::pair{pq, pr};
      }
      std::size_t i = 0;
      while (i < choice.size() && (live[i].empty() || ++choice[i] == live[i].size())) {
        choice[i++] = 0;
      }
      if (i == choice.size()) return std::nullopt;
    }
  }

  const Polynomial& p_;
  const Hyperfield& hf_;
  Split s_{};
  std::vector<int> state_;
};

}  // namespace

Certificate is_reducible(const Polynomial& p, std::size_t search_bound) {
  const Hyperfield& hf = p.hf();
  const std::size_t n = p.degree();
  if (n < 2) throw DomainError("reducibility needs degree at least 2");
  Certificate c;
  c.kind = "reducibility";
  c.hyperfield = hf.name();
  c.subjects = {{"poly", format_poly(p)}};
  auto found = [&](const Polynomial& q, const Polynomial& r, std::string method) {
    c.verdict = Verdict::Yes;
    c.method = std::move(method);
    c.trace.clear();
    c.witness = "(" + format_poly(q) + ")*(" + format_poly(r) + ")";
    c.assignment = {{"q", format_poly(q)}, {"r", format_poly(r)}};
    return c;
  };

  if (hf.is_finite()) {
    std::size_t pairs = 0;
    for (std::size_t d = 1; d <= n / 2; ++d) {
      const auto qs = all_polynomials(p.field(), d, false);
      const auto rs = all_polynomials(p.field(), n - d, false);
      if (pairs + qs.size() * rs.size() > search_bound) {
        c.method = "search-limit";
        return c;
      }
      for (const auto& q : qs) {
        for (const auto& r : rs) {
          ++pairs;
          if (hf.mul(q.leading(), r.leading()) != p.leading()) continue;
          const auto only = boxprod(q, r).only();
          if (only && *only == p) return found(q, r, "exhaustive");
        }
      }
    }
    c.verdict = Verdict::No;
    c.method = "exhaustive";
    c.stats["factor_pairs"] = std::to_string(pairs);
    return c;
  }

  if (hf.carrier() != CarrierKind::Tropical) {
    c.method = "outside-scope";
    c.note = "reducibility is decided over finite carriers and T only";
    return c;
  }
  if (n > 4) {
    c.method = "degree-limit";
    c.note = "T is decided up to degree 4";
    return c;
  }
  TropicalFactorSearch search(p);
  bool all_forced = true;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    bool forced = false;
    if (auto f = search.run({d, n - d}, c.trace, forced)) return found(f->first, f->second, "case-analysis");
    all_forced = all_forced && forced;
  }
  c.verdict = Verdict::No;
  c.method = all_forced ? "forced-contradiction" : "case-analysis";
  return c;
}

}  // namespace hyperpoly
