#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hyperpoly/element.hpp"
#include "hyperpoly/interval_set.hpp"

namespace hyperpoly {

/// Explicit subset of a finite carrier: sorted, duplicate-free indices.
struct FiniteSet {
  std::vector<int> items;
  bool operator==(const FiniteSet&) const = default;
};

/// Subset of the tropical carrier; -inf is a member iff some part has a
/// closed -inf endpoint.
struct TropicalSet {
  IntervalUnion parts;
  bool operator==(const TropicalSet&) const = default;
};

/// Subset of the nonnegative rationals.
struct ViroSet {
  IntervalUnion parts;
  bool operator==(const ViroSet&) const = default;
};

/// Subset of the phase carrier: the zero symbol plus a union of arcs.
/// Arcs live in turn coordinates on [0,2), always cut at turn 0, so an arc
/// through angle 0 is stored as two pieces [0,b) and (a,2). The cut keeps
/// the representation canonical.
struct PhaseSet {
  bool zero = false;
  IntervalUnion turns;
  bool operator==(const PhaseSet&) const = default;
};

/// A subset of one hyperfield carrier in canonical form. Equality is
/// structural and coincides with set equality.
class ElementSet {
 public:
  using Value = std::variant<FiniteSet, TropicalSet, ViroSet, PhaseSet>;

  ElementSet() = default;
  explicit ElementSet(Value v);

  /// The singleton {x}.
  static ElementSet of(const Element& x);
  static ElementSet empty_like(const ElementSet& shape);

  const Value& value() const { return value_; }
  CarrierKind kind() const;

  bool empty() const;
  bool is_singleton() const;
  /// The unique member of a singleton set.
  std::optional<Element> only() const;
  bool contains(const Element& x) const;
  /// this ⊇ other
  bool includes(const ElementSet& other) const;

  ElementSet unite(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  bool operator==(const ElementSet&) const = default;

 private:
  Value value_;
};

/// Canonical form of an arbitrary interval union inside the turn domain
/// [0,2); parts outside are wrapped around.
IntervalUnion wrap_turns(const IntervalUnion& raw);

}  // namespace hyperpoly
