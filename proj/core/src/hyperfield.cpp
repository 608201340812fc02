#include "hyperpoly/hyperfield.hpp"

#include <charconv>

#include "carrier_util.hpp"
#include "hyperpoly/error.hpp"

namespace hyperpoly {

std::vector<Element> Hyperfield::elements() const {
  throw DomainError(name() + " is not a finite carrier");
}

std::optional<Element> Hyperfield::other_member(const ElementSet& s,
                                                const Element& first) const {
  for (const auto& x : samples(s, 3)) {
    if (x != first) return x;
  }
  return std::nullopt;
}

ElementSet Hyperfield::singleton(const Element& x) const {
  validate(x);
  return ElementSet::of(x);
}

ElementSet Hyperfield::remove_zero(const ElementSet& s) const {
  validate(s);
  const Interval above_neg_inf{ExtRational::neg_inf(), ExtRational::pos_inf(), false, false};
  const Interval positive{ExtRational(0), ExtRational::pos_inf(), false, false};
  return std::visit(
      [&](const auto& v) -> ElementSet {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          std::vector<int> items = v.items;
          std::erase(items, zero().as_symbol().index);
          return ElementSet(FiniteSet{std::move(items)});
        } else if constexpr (std::is_same_v<T, TropicalSet>) {
          return ElementSet(TropicalSet{v.parts.intersect(IntervalUnion{above_neg_inf})});
        } else if constexpr (std::is_same_v<T, ViroSet>) {
          return ElementSet(ViroSet{v.parts.intersect(IntervalUnion{positive})});
        } else {
          return ElementSet(PhaseSet{false, v.turns});
        }
      },
      s.value());
}

ElementSet Hyperfield::hypersum(std::span<const Element> xs) const {
  if (xs.empty()) throw DomainError("hypersum of an empty list");
  ElementSet acc = singleton(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) acc = set_hyperadd(acc, singleton(xs[i]));
  return acc;
}

ElementSet Hyperfield::hypersum_sets(std::span<const ElementSet> xs) const {
  if (xs.empty()) throw DomainError("hypersum of an empty list");
  ElementSet acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = set_hyperadd(acc, xs[i]);
  return acc;
}

Element Hyperfield::pow(const Element& x, std::size_t k) const {
  Element acc = one();
  for (std::size_t i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

void require_same(const Hyperfield& a, const Hyperfield& b) {
  if (&a != &b && a.name() != b.name()) {
    throw CarrierMismatch("values over " + a.name() + " and " + b.name() + " were combined");
  }
}

HyperfieldPtr make_hyperfield(std::string_view selector) {
  const std::string_view s = detail::trim(selector);
  if (s == "K") return krasner();
  if (s == "S") return signs();
  if (s == "W") return weak_signs();
  if (s == "T") return tropical();
  if (s == "V") return viro();
  if (s == "P") return phase();
  if (s.starts_with("GF(") && s.ends_with(")")) {
    const std::string_view digits = s.substr(3, s.size() - 4);
    int p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("bad prime in selector '" + std::string(s) + "'");
    }
    return prime_field(p);
  }
  if (s.starts_with("W(G,e):")) {
    const std::string path(detail::trim(s.substr(7)));
    std::string e;
    const CayleyTable table = load_cayley_table(path, &e);
    return weak_hyperfield(table, e);
  }
  throw ParseError("unknown hyperfield selector '" + std::string(s) +
                   "' (expected K, S, W, T, V, P, GF(p) or W(G,e):<file>)");
}

}  // namespace hyperpoly
