#pragma once

// Reference implementations written directly from the carrier definitions.
// They share no code with the library beyond the value types.

#include <algorithm>
#include <random>
#include <vector>

#include "hyperpoly/hyperfield.hpp"
#include "hyperpoly/polynomial.hpp"

namespace oracle {

using namespace hyperpoly;

// Sign indices used by S and W: 0 -> -1, 1 -> 0, 2 -> 1.
inline int sign_of(const Element& x) { return x.as_symbol().index - 1; }
inline Element sign_el(int s) { return Element::symbol(s + 1); }

inline ElementSet finite_set(std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return ElementSet(FiniteSet{idx});
}

inline ElementSet krasner_add(const Element& x, const Element& y) {
  const int a = x.as_symbol().index, b = y.as_symbol().index;
  if (a == 0) return finite_set({b});
  if (b == 0) return finite_set({a});
  return finite_set({0, 1});
}

inline ElementSet signs_add(const Element& x, const Element& y, bool weak) {
  const int a = sign_of(x), b = sign_of(y);
  if (a == 0) return finite_set({b + 1});
  if (b == 0) return finite_set({a + 1});
  if (a == -b) return finite_set({0, 1, 2});
  return weak ? finite_set({0, 2}) : finite_set({a + 1});
}

inline ElementSet gf_add(const Element& x, const Element& y, int p) {
  return finite_set({(x.as_symbol().index + y.as_symbol().index) % p});
}

inline ElementSet trop_closed(const ExtRational& lo, const ExtRational& hi) {
  return ElementSet(TropicalSet{IntervalUnion({Interval::closed(lo, hi)})});
}

inline ElementSet viro_closed(const Rational& lo, const Rational& hi) {
  return ElementSet(ViroSet{IntervalUnion({Interval::closed(lo, hi)})});
}

/// Hypersum of many tropical values: {M} for a unique maximum, else [-inf, M].
inline ElementSet trop_sum(const std::vector<ExtRational>& xs) {
  const ExtRational m = *std::max_element(xs.begin(), xs.end());
  const auto hits = std::count(xs.begin(), xs.end(), m);
  if (hits == 1 || m.is_neg_inf()) return ElementSet::of(Element::tropical(m));
  return trop_closed(ExtRational::neg_inf(), m);
}

/// Hypersum of many Viro values: [max(0, 2 max - total), total].
inline ElementSet viro_sum(const std::vector<Rational>& xs) {
  Rational total(0), m(0);
  for (const auto& x : xs) {
    total = total + x;
    if (m < x) m = x;
  }
  Rational lo = Rational(2) * m - total;
  if (lo < Rational(0)) lo = Rational(0);
  return viro_closed(lo, total);
}

/// Hypersum of many signs: the common sign, or everything when mixed.
inline ElementSet signs_sum(const std::vector<int>& xs) {
  const bool pos = std::count(xs.begin(), xs.end(), 1) > 0;
  const bool neg = std::count(xs.begin(), xs.end(), -1) > 0;
  if (pos && neg) return finite_set({0, 1, 2});
  return finite_set({pos ? 2 : neg ? 0 : 1});
}

inline ElementSet phase_add(const Element& x, const Element& y) {
  const auto a = x.as_phase().turn, b = y.as_phase().turn;
  if (!a) return ElementSet::of(y);
  if (!b) return ElementSet::of(x);
  if (*a == *b) return ElementSet::of(x);
  Rational d = *b - *a;
  if (d < Rational(0)) d = d + Rational(2);
  if (d == Rational(1)) {
    return ElementSet(PhaseSet{true, wrap_turns(IntervalUnion({Interval::point(*a), Interval::point(*b)}))});
  }
  const Rational from = d < Rational(1) ? *a : *b;
  const Rational len = d < Rational(1) ? d : Rational(2) - d;
  return ElementSet(PhaseSet{false, wrap_turns(IntervalUnion({Interval::open(from, from + len)}))});
}

inline std::vector<std::vector<Element>> random_coeffs(std::mt19937_64& rng, const Hyperfield& hf,
                                                       const std::vector<Element>& pool,
                                                       std::size_t count, std::size_t max_deg) {
  std::vector<std::vector<Element>> out;
  std::uniform_int_distribution<std::size_t> deg(0, max_deg), pick(0, pool.size() - 1);
  while (out.size() < count) {
    std::vector<Element> c(deg(rng) + 1);
    for (auto& x : c) x = pool[pick(rng)];
    if (hf.is_zero(c.back())) continue;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace oracle
