#include <algorithm>

#include "hyperpoly/element.hpp"
#include "hyperpoly/element_set.hpp"
#include "hyperpoly/error.hpp"

namespace hyperpoly {

const char* to_string(CarrierKind kind) {
  switch (kind) {
    case CarrierKind::Finite:
      return "finite";
    case CarrierKind::Tropical:
      return "tropical";
    case CarrierKind::Viro:
      return "viro";
    case CarrierKind::Phase:
      return "phase";
  }
  return "?";
}

Rational reduce_turn(const Rational& turn) {
  const Rational two(2);
  Rational q = (turn / two).floor();
  return turn - q * two;
}

Element Element::tropical(ExtRational v) {
  if (v.is_pos_inf()) throw DomainError("+inf is not a tropical element");
  return Element(TropicalValue{std::move(v)});
}

Element Element::viro(Rational v) {
  if (v.sign() < 0) throw DomainError("Viro elements are nonnegative");
  return Element(ViroValue{std::move(v)});
}

Element Element::phase(Rational turn) {
  return Element(PhaseValue{reduce_turn(turn)});
}

CarrierKind Element::kind() const {
  switch (value_.index()) {
    case 0:
      return CarrierKind::Finite;
    case 1:
      return CarrierKind::Tropical;
    case 2:
      return CarrierKind::Viro;
    default:
      return CarrierKind::Phase;
  }
}

namespace {
template <typename T>
const T& get_or_throw(const Element::Value& v, const char* what) {
  if (const T* p = std::get_if<T>(&v)) return *p;
  throw CarrierMismatch(std::string("expected a ") + what + " element");
}
}  // namespace

const FiniteSymbol& Element::as_symbol() const {
  return get_or_throw<FiniteSymbol>(value_, "finite-carrier");
}
const TropicalValue& Element::as_tropical() const {
  return get_or_throw<TropicalValue>(value_, "tropical");
}
const ViroValue& Element::as_viro() const {
  return get_or_throw<ViroValue>(value_, "Viro");
}
const PhaseValue& Element::as_phase() const {
  return get_or_throw<PhaseValue>(value_, "phase");
}

// ---------------------------------------------------------------------------

IntervalUnion wrap_turns(const IntervalUnion& raw) {
  std::vector<Interval> out;
  const ExtRational zero(0), two(2);
  for (const auto& part : raw.parts()) {
    if (!part.lo.is_finite() || !part.hi.is_finite()) {
      throw DomainError("phase arcs need finite endpoints");
    }
    // Reduce so that lo lies in [0,2); an arc longer than 2 is the circle.
    const Rational len = part.hi.value() - part.lo.value();
    if (len > Rational(2)) {
      return IntervalUnion{Interval{zero, two, true, false}};
    }
    const Rational lo = reduce_turn(part.lo.value());
    const Rational hi = lo + len;
    Interval shifted{lo, hi, part.lo_closed, part.hi_closed};
    const Interval first = intersect(shifted, Interval{zero, two, true, false});
    if (!first.empty()) out.push_back(first);
    const Interval spill = intersect(shifted, Interval{two, ExtRational(4), true, false});
    if (!spill.empty()) {
      out.push_back({spill.lo.value() - Rational(2), spill.hi.value() - Rational(2),
                     spill.lo_closed, spill.hi_closed});
    }
  }
  return IntervalUnion(std::move(out));
}

ElementSet::ElementSet(Value v) : value_(std::move(v)) {
  if (auto* f = std::get_if<FiniteSet>(&value_)) {
    std::sort(f->items.begin(), f->items.end());
    f->items.erase(std::unique(f->items.begin(), f->items.end()), f->items.end());
  }
}

ElementSet ElementSet::of(const Element& x) {
  return std::visit(
      [](const auto& v) -> ElementSet {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSymbol>) {
          return ElementSet(FiniteSet{{v.index}});
        } else if constexpr (std::is_same_v<T, TropicalValue>) {
          return ElementSet(TropicalSet{IntervalUnion::point(v.value)});
        } else if constexpr (std::is_same_v<T, ViroValue>) {
          return ElementSet(ViroSet{IntervalUnion::point(v.value)});
        } else {
          if (!v.turn) return ElementSet(PhaseSet{true, {}});
          return ElementSet(PhaseSet{false, IntervalUnion::point(*v.turn)});
        }
      },
      x.value());
}

ElementSet ElementSet::empty_like(const ElementSet& shape) {
  switch (shape.value_.index()) {
    case 0:
      return ElementSet(FiniteSet{});
    case 1:
      return ElementSet(TropicalSet{});
    case 2:
      return ElementSet(ViroSet{});
    default:
      return ElementSet(PhaseSet{});
  }
}

CarrierKind ElementSet::kind() const {
  switch (value_.index()) {
    case 0:
      return CarrierKind::Finite;
    case 1:
      return CarrierKind::Tropical;
    case 2:
      return CarrierKind::Viro;
    default:
      return CarrierKind::Phase;
  }
}

bool ElementSet::empty() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          return v.items.empty();
        } else if constexpr (std::is_same_v<T, PhaseSet>) {
          return !v.zero && v.turns.empty();
        } else {
          return v.parts.empty();
        }
      },
      value_);
}

bool ElementSet::is_singleton() const { return only().has_value(); }

std::optional<Element> ElementSet::only() const {
  return std::visit(
      [](const auto& v) -> std::optional<Element> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          if (v.items.size() == 1) return Element::symbol(v.items[0]);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, TropicalSet>) {
          if (v.parts.is_point()) return Element::tropical(v.parts.parts()[0].lo);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ViroSet>) {
          if (v.parts.is_point()) return Element::viro(v.parts.parts()[0].lo.value());
          return std::nullopt;
        } else {
          if (v.zero && v.turns.empty()) return Element::phase_zero();
          if (!v.zero && v.turns.is_point()) {
            return Element::phase(v.turns.parts()[0].lo.value());
          }
          return std::nullopt;
        }
      },
      value_);
}

bool ElementSet::contains(const Element& x) const {
  if (x.kind() != kind()) throw CarrierMismatch("element and set from different carriers");
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          return std::binary_search(v.items.begin(), v.items.end(), x.as_symbol().index);
        } else if constexpr (std::is_same_v<T, TropicalSet>) {
          return v.parts.contains(x.as_tropical().value);
        } else if constexpr (std::is_same_v<T, ViroSet>) {
          return v.parts.contains(x.as_viro().value);
        } else {
          const auto& t = x.as_phase().turn;
          return t ? v.turns.contains(*t) : v.zero;
        }
      },
      value_);
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  if (other.kind() != kind()) throw CarrierMismatch("union of sets from different carriers");
  return std::visit(
      [&](const auto& v) -> ElementSet {
        using T = std::decay_t<decltype(v)>;
        const T& w = std::get<T>(other.value_);
        if constexpr (std::is_same_v<T, FiniteSet>) {
          std::vector<int> all = v.items;
          all.insert(all.end(), w.items.begin(), w.items.end());
          return ElementSet(FiniteSet{std::move(all)});
        } else if constexpr (std::is_same_v<T, PhaseSet>) {
          return ElementSet(PhaseSet{v.zero || w.zero, v.turns.unite(w.turns)});
        } else {
          return ElementSet(T{v.parts.unite(w.parts)});
        }
      },
      value_);
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  if (other.kind() != kind()) {
    throw CarrierMismatch("intersection of sets from different carriers");
  }
  return std::visit(
      [&](const auto& v) -> ElementSet {
        using T = std::decay_t<decltype(v)>;
        const T& w = std::get<T>(other.value_);
        if constexpr (std::is_same_v<T, FiniteSet>) {
          std::vector<int> both;
          std::set_intersection(v.items.begin(), v.items.end(), w.items.begin(),
                                w.items.end(), std::back_inserter(both));
          return ElementSet(FiniteSet{std::move(both)});
        } else if constexpr (std::is_same_v<T, PhaseSet>) {
          return ElementSet(PhaseSet{v.zero && w.zero, v.turns.intersect(w.turns)});
        } else {
          return ElementSet(T{v.parts.intersect(w.parts)});
        }
      },
      value_);
}

bool ElementSet::includes(const ElementSet& other) const {
  return intersect(other) == other;
}

}  // namespace hyperpoly
