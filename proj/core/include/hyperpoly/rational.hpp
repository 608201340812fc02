#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperpoly {

/// Exact rational number backed by GMP. Always kept in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Accepts "7", "-7", "5/2", "-5/2" and decimals such as "0.25".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational floor() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

 private:
  mpq_class value_;
};

Rational midpoint(const Rational& a, const Rational& b);

/// A rational extended by -inf and +inf. The tropical carrier uses the
/// finite values plus -inf; interval endpoints may additionally be +inf.
class ExtRational {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtRational() : kind_(Kind::NegInf) {}
  ExtRational(Rational value)  // NOLINT(google-explicit-constructor)
      : kind_(Kind::Finite), value_(std::move(value)) {}
  ExtRational(long value) : ExtRational(Rational(value)) {}  // NOLINT

  static ExtRational neg_inf() { return ExtRational(); }
  static ExtRational pos_inf() {
    ExtRational e;
    e.kind_ = Kind::PosInf;
    return e;
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  /// Precondition: is_finite().
  const Rational& value() const;

  /// Sum with -inf absorbing (tropical product). +inf + -inf is rejected.
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  ExtRational operator-() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b);

  /// "-inf", "+inf", or the rational.
  std::string str() const;
  /// Accepts the rational syntax plus "-inf" / "+inf" / "inf".
  static ExtRational parse(std::string_view text);

 private:
  Kind kind_;
  Rational value_;
};

ExtRational max(const ExtRational& a, const ExtRational& b);
ExtRational min(const ExtRational& a, const ExtRational& b);

}  // namespace hyperpoly
