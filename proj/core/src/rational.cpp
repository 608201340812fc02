#include "hyperpoly/rational.hpp"

#include <cctype>

#include "hyperpoly/error.hpp"

namespace hyperpoly {

namespace {

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_signed_digits(num) || !is_signed_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(num), d));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !is_signed_digits(whole)) ||
        (!frac.empty() && !is_signed_digits(frac)) ||
        (!frac.empty() && (frac.front() == '-' || frac.front() == '+'))) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class num = whole.empty() ? mpz_class(0) : parse_integer(whole);
    num = num * scale + (frac.empty() ? mpz_class(0) : parse_integer(frac));
    if (negative) num = -num;
    return Rational(mpq_class(num, scale));
  }
  if (!is_signed_digits(text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  return Rational(mpq_class(parse_integer(text)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / Rational(2);
}

const Rational& ExtRational::value() const {
  if (kind_ != Kind::Finite) throw DomainError("value() of an infinite endpoint");
  return value_;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  using K = ExtRational::Kind;
  if ((a.kind_ == K::NegInf && b.kind_ == K::PosInf) ||
      (a.kind_ == K::PosInf && b.kind_ == K::NegInf)) {
    throw DomainError("-inf + +inf is undefined");
  }
  if (a.kind_ == K::NegInf || b.kind_ == K::NegInf) return ExtRational::neg_inf();
  if (a.kind_ == K::PosInf || b.kind_ == K::PosInf) return ExtRational::pos_inf();
  return ExtRational(a.value_ + b.value_);
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::NegInf:
      return pos_inf();
    case Kind::PosInf:
      return neg_inf();
    case Kind::Finite:
      break;
  }
  return ExtRational(-value_);
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtRational::Kind::Finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != ExtRational::Kind::Finite) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

std::string ExtRational::str() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "+inf";
    case Kind::Finite:
      break;
  }
  return value_.str();
}

ExtRational ExtRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text == "-inf") return neg_inf();
  if (text == "+inf" || text == "inf") return pos_inf();
  return ExtRational(Rational::parse(text));
}

ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }
ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }

}  // namespace hyperpoly
