#include "hyperpoly/divide.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hyperpoly/error.hpp"

namespace hyperpoly {

namespace {

void push_unique(std::vector<Element>& out, const Element& x) {
  if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
}

}  // namespace

QuotientSet::QuotientSet(Polynomial p, Element a) : p_(std::move(p)), a_(std::move(a)) {
  const Hyperfield& hf = p_.hf();
  hf.validate(a_);
  const std::size_t n = p_.degree();
  if (n == 0) return;

  // Values of d_j reachable from the top condition d_{n-1} = c_n.
  std::vector<ElementSet> fwd(n);
  fwd[n - 1] = hf.singleton(p_.coeff(n));
  for (std::size_t i = n - 1; i >= 1; --i) {
    fwd[i - 1] = hf.set_hyperadd(hf.singleton(p_.coeff(i)), hf.scale(a_, fwd[i]));
  }

  // Restrict to values that extend down to c_0 = (-a)d_0.
  std::vector<ElementSet> back(n);
  const Element na = hf.neg(a_);
  if (hf.is_zero(a_)) {
    back[0] = hf.is_zero(p_.coeff(0)) ? fwd[0] : ElementSet::empty_like(fwd[0]);
  } else {
    back[0] = fwd[0].intersect(hf.singleton(hf.div(p_.coeff(0), na)));
  }
  if (back[0].empty()) return;
  for (std::size_t i = 1; i < n; ++i) {
    // d_{i-1} ∈ c_i ⊞ a·d_i  ⟺  a·d_i ∈ d_{i-1} ⊞ (-c_i)
    if (hf.is_zero(a_)) {
      back[i] = back[i - 1].contains(p_.coeff(i)) ? fwd[i] : ElementSet::empty_like(fwd[i]);
    } else {
      back[i] = fwd[i].intersect(hf.scale(
          hf.inv(a_), hf.set_hyperadd(back[i - 1], hf.singleton(hf.neg(p_.coeff(i))))));
    }
    if (back[i].empty()) return;
  }
  marginals_ = PolyBox(p_.field(), std::move(back));

  if (!hf.is_finite() && !hf.is_zero(a_)) {
    const Element ia = hf.inv(a_);
    for (const auto& c : p_.coeffs()) {
      if (hf.is_zero(c)) continue;
      for (std::size_t k = 0; k <= n; ++k) {
        push_unique(structural_, hf.mul(c, hf.pow(a_, k)));
        push_unique(structural_, hf.mul(c, hf.pow(ia, k)));
      }
    }
  }
}

bool QuotientSet::contains(const Polynomial& q) const {
  require_same(p_.hf(), q.hf());
  if (q.degree() + 1 != p_.degree()) return false;
  return boxprod(Polynomial::linear(p_.field(), a_), q).contains(p_);
}

std::vector<Polynomial> QuotientSet::choices(std::size_t limit,
                                             std::span<const ElementSet> hints) const {
  std::vector<Polynomial> out;
  if (empty()) return out;
  const Hyperfield& hf = p_.hf();
  const std::size_t n = p_.degree();
  std::set<Polynomial> seen;
  std::vector<Element> d(n, hf.zero());
  d[n - 1] = p_.coeff(n);

  auto candidates = [&](const ElementSet& allowed, std::size_t j) {
    if (hf.is_finite()) return hf.samples(allowed, 0);
    std::vector<Element> c;
    if (j < hints.size()) {
      const ElementSet h = allowed.intersect(hints[j]);
      if (!h.empty()) {
        for (const auto& x : hf.samples(h, 3)) push_unique(c, x);
      }
    }
    for (const auto& x : structural_) {
      if (allowed.contains(x)) push_unique(c, x);
    }
    for (const auto& x : hf.samples(allowed, 3)) push_unique(c, x);
    return c;
  };

  std::function<void(std::size_t)> descend = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == 0) {
      Polynomial q(p_.field(), d);
      if (seen.insert(q).second) out.push_back(std::move(q));
      return;
    }
    const ElementSet allowed =
        hf.hyperadd(p_.coeff(i), hf.mul(a_, d[i])).intersect(marginals_->at(i - 1));
    for (const auto& x : candidates(allowed, i - 1)) {
      d[i - 1] = x;
      descend(i - 1);
    }
  };
  descend(n - 1);
  if (hf.is_finite()) std::sort(out.begin(), out.end());
  return out;
}

bool is_root(const Polynomial& p, const Element& a) {
  return eval(p, a).contains(p.hf().zero());
}

QuotientSet quotients(const Polynomial& p, const Element& a) { return QuotientSet(p, a); }

std::size_t mult_at(const Polynomial& p, const Element& a) {
  std::map<Polynomial, std::size_t> memo;
  std::function<std::size_t(const Polynomial&)> rec = [&](const Polynomial& f) -> std::size_t {
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    std::size_t m = 0;
    if (is_root(f, a)) {
      std::size_t best = 0;
      for (const auto& q : QuotientSet(f, a).choices()) {
        best = std::max(best, rec(q));
        if (best == q.degree()) break;
      }
      m = 1 + best;
    }
    memo.emplace(f, m);
    return m;
  };
  return rec(p);
}

std::vector<Element> root_candidates(const Polynomial& p, const ElementSet& region) {
  const Hyperfield& hf = p.hf();
  hf.validate(region);
  if (hf.is_finite()) return hf.samples(region, 0);
  std::vector<Element> out;
  for (const auto& x : hf.samples(region, 3)) push_unique(out, x);
  const auto& c = p.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t k = j + 1; k < c.size(); ++k) {
      if (hf.is_zero(c[j]) || hf.is_zero(c[k])) continue;
      if (k == j + 1) {
        const Element r = hf.div(c[j], c[k]);
        push_unique(out, r);
        push_unique(out, hf.neg(r));
      }
      if (hf.carrier() == CarrierKind::Tropical) {
        // Breakpoint of c_j + jx = c_k + kx.
        const Rational slope = (c[j].as_tropical().value.value() - c[k].as_tropical().value.value()) /
                               Rational(static_cast<long>(k - j));
        push_unique(out, Element::tropical(slope));
      }
    }
  }
  std::erase_if(out, [&](const Element& x) { return !region.contains(x); });
  return out;
}

std::size_t mult_set(const Polynomial& p, const ElementSet& region) {
  std::map<Polynomial, std::size_t> memo;
  std::function<std::size_t(const Polynomial&)> rec = [&](const Polynomial& f) -> std::size_t {
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    std::optional<std::size_t> best;
    for (const auto& a : root_candidates(f, region)) {
      if (!is_root(f, a)) continue;
      if (!best) best = 0;
      for (const auto& q : QuotientSet(f, a).choices()) {
        best = std::max(best.value_or(0), rec(q));
        if (*best == q.degree()) break;
      }
      if (best && *best + 1 == f.degree()) break;
    }
    const std::size_t m = best ? 1 + *best : 0;
    memo.emplace(f, m);
    return m;
  };
  return rec(p);
}

}  // namespace hyperpoly
