#pragma once

#include <compare>
#include <optional>
#include <variant>

#include "hyperpoly/rational.hpp"

namespace hyperpoly {

/// Index into a finite carrier (Krasner, signs, weak signs, W(G,e), GF(p)).
/// The owning hyperfield gives the index its meaning: a residue for GF(p),
/// a group word for W(G,e), a sign for S and W.
struct FiniteSymbol {
  int index = 0;
  auto operator<=>(const FiniteSymbol&) const = default;
};

/// Element of the tropical carrier: a rational or -inf.
struct TropicalValue {
  ExtRational value;
  auto operator<=>(const TropicalValue&) const = default;
};

/// Element of the Viro carrier: a nonnegative rational.
struct ViroValue {
  Rational value;
  auto operator<=>(const ViroValue&) const = default;
};

/// Element of the phase carrier: either the zero symbol or the unit
/// complex number exp(i*pi*turn) with turn reduced into [0,2).
struct PhaseValue {
  std::optional<Rational> turn;
  auto operator<=>(const PhaseValue&) const = default;
};

enum class CarrierKind { Finite, Tropical, Viro, Phase };

const char* to_string(CarrierKind kind);

class Element {
 public:
  using Value = std::variant<FiniteSymbol, TropicalValue, ViroValue, PhaseValue>;

  Element() = default;
  explicit Element(Value v) : value_(std::move(v)) {}

  static Element symbol(int index) { return Element(FiniteSymbol{index}); }
  static Element tropical(ExtRational v);
  static Element viro(Rational v);
  static Element phase(Rational turn);
  static Element phase_zero() { return Element(PhaseValue{std::nullopt}); }

  CarrierKind kind() const;
  const Value& value() const { return value_; }

  /// Typed accessors; throw CarrierMismatch on the wrong alternative.
  const FiniteSymbol& as_symbol() const;
  const TropicalValue& as_tropical() const;
  const ViroValue& as_viro() const;
  const PhaseValue& as_phase() const;

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;

 private:
  Value value_;
};

/// Reduce an arbitrary rational turn into [0,2).
Rational reduce_turn(const Rational& turn);

}  // namespace hyperpoly
