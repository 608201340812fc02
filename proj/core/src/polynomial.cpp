#include "hyperpoly/polynomial.hpp"

#include <algorithm>
#include <charconv>

#include "carrier_util.hpp"
#include "hyperpoly/error.hpp"

namespace hyperpoly {

namespace {
constexpr std::size_t kMaxParsedDegree = 4096;
}  // namespace

Polynomial::Polynomial(HyperfieldPtr hf, std::vector<Element> coeffs)
    : hf_(std::move(hf)), coeffs_(std::move(coeffs)) {
  if (!hf_) throw DomainError("polynomial without a hyperfield");
  if (coeffs_.empty()) throw DomainError("polynomial without coefficients");
  for (const auto& c : coeffs_) hf_->validate(c);
  if (hf_->is_zero(coeffs_.back())) throw DomainError("leading coefficient is zero");
}

std::optional<Polynomial> Polynomial::trimmed(HyperfieldPtr hf, std::vector<Element> coeffs) {
  while (!coeffs.empty() && hf->is_zero(coeffs.back())) coeffs.pop_back();
  if (coeffs.empty()) return std::nullopt;
  return Polynomial(std::move(hf), std::move(coeffs));
}

Polynomial Polynomial::unit(HyperfieldPtr hf) {
  Element one = hf->one();
  return Polynomial(std::move(hf), {std::move(one)});
}

Polynomial Polynomial::linear(HyperfieldPtr hf, const Element& a) {
  std::vector<Element> c{hf->neg(a), hf->one()};
  return Polynomial(std::move(hf), std::move(c));
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  require_same(*a.hf_, *b.hf_);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    const auto c = a.coeffs_[i] <=> b.coeffs_[i];
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.hf_->name() == b.hf_->name() && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct RawTerm {
  bool negated = false;
  std::string_view text;
};

std::vector<RawTerm> split_terms(std::string_view text) {
  std::vector<RawTerm> out;
  int depth = 0;
  std::size_t start = 0;
  bool negated = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    if (depth != 0 || (c != '+' && c != '-')) continue;
    const std::string_view piece = detail::trim(text.substr(start, i - start));
    if (!piece.empty()) {
      out.push_back({negated, piece});
    } else if (start != 0 || negated) {
      // Only the very first term may carry a bare sign.
      throw ParseError("missing term in '" + std::string(text) + "'");
    }
    negated = c == '-';
    start = i + 1;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
  const std::string_view last = detail::trim(text.substr(start));
  if (last.empty()) throw ParseError("missing term in '" + std::string(text) + "'");
  out.push_back({negated, last});
  return out;
}

std::size_t parse_power(std::string_view rest, std::string_view term) {
  rest = detail::trim(rest);
  if (rest.empty()) return 1;
  if (rest.front() != '^') throw ParseError("unexpected text after T in '" + std::string(term) + "'");
  rest = detail::trim(rest.substr(1));
  if (rest.size() >= 2 && rest.front() == '{' && rest.back() == '}') {
    rest = detail::trim(rest.substr(1, rest.size() - 2));
  }
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) {
    throw ParseError("bad exponent in '" + std::string(term) + "'");
  }
  if (n > kMaxParsedDegree) throw LimitExceeded("exponent too large in '" + std::string(term) + "'");
  return n;
}

}  // namespace

Polynomial parse_poly(std::string_view text, const HyperfieldPtr& hf) {
  const std::string_view body = detail::trim(text);
  if (body.empty()) throw ParseError("empty polynomial");
  std::vector<std::optional<Element>> slots;
  for (const RawTerm& term : split_terms(body)) {
    int depth = 0;
    std::size_t var = std::string_view::npos;
    for (std::size_t i = 0; i < term.text.size(); ++i) {
      const char c = term.text[i];
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
      if (depth == 0 && c == 'T') {
        if (var != std::string_view::npos) {
          throw ParseError("more than one T in term '" + std::string(term.text) + "'");
        }
        var = i;
      }
    }
    std::size_t power = 0;
    Element coeff;
    if (var == std::string_view::npos) {
      coeff = hf->parse_element(term.text);
    } else {
      power = parse_power(term.text.substr(var + 1), term.text);
      const std::string_view c = detail::trim(term.text.substr(0, var));
      coeff = c.empty() ? hf->one() : hf->parse_element(c);
    }
    if (term.negated) coeff = hf->neg(coeff);
    if (slots.size() <= power) slots.resize(power + 1);
    if (slots[power]) {
      throw ParseError("power T^" + std::to_string(power) + " appears twice in '" +
                       std::string(body) + "'");
    }
    slots[power] = coeff;
  }
  std::vector<Element> coeffs;
  coeffs.reserve(slots.size());
  for (auto& s : slots) coeffs.push_back(s ? *s : hf->zero());
  if (hf->is_zero(coeffs.back())) {
    throw ParseError("leading coefficient of '" + std::string(body) + "' is zero");
  }
  return Polynomial(hf, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

struct TermText {
  bool minus = false;
  std::string coeff;  // empty for a unit coefficient
};

std::string guarded(std::string s) {
  const bool needs = s.find('/') != std::string::npos || s.starts_with("-") ||
                     s.starts_with("+");
  if (needs && !s.starts_with("ph(")) return "(" + s + ")";
  return s;
}

TermText term_text(const Hyperfield& hf, const Element& c) {
  if (hf.carrier() == CarrierKind::Tropical) return {false, guarded(hf.format_element(c))};
  const Element one = hf.one();
  if (c == one) return {false, ""};
  const Element minus_one = hf.neg(one);
  if (minus_one != one && c == minus_one) return {true, ""};
  if (hf.carrier() == CarrierKind::Phase && *c.as_phase().turn >= Rational(1)) {
    const Element flipped = hf.neg(c);
    return {true, flipped == one ? "" : hf.format_element(flipped)};
  }
  return {false, guarded(hf.format_element(c))};
}

}  // namespace

std::string format_poly(const Polynomial& p) {
  const Hyperfield& hf = p.hf();
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Element& c = p.coeff(k);
    if (hf.is_zero(c)) continue;
    TermText t = term_text(hf, c);
    std::string body;
    if (k == 0) {
      body = t.coeff.empty() ? "1" : t.coeff;
    } else {
      body = t.coeff + "T";
      if (k > 1) body += "^" + std::to_string(k);
    }
    if (out.empty()) {
      out = (t.minus ? "-" : "") + body;
    } else {
      out += (t.minus ? "-" : "+") + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ElementSet eval(const Polynomial& p, const Element& a) {
  const Hyperfield& hf = p.hf();
  hf.validate(a);
  std::vector<Element> terms;
  Element power = hf.one();
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    terms.push_back(hf.mul(p.coeff(k), power));
    power = hf.mul(power, a);
  }
  return hf.hypersum(terms);
}

PolyBox::PolyBox(HyperfieldPtr hf, std::vector<ElementSet> sets)
    : hf_(std::move(hf)), sets_(std::move(sets)) {
  if (sets_.empty()) throw DomainError("box without coefficient sets");
  for (const auto& s : sets_) {
    hf_->validate(s);
    if (s.empty()) throw DomainError("box with an empty coefficient set");
  }
}

PolyBox PolyBox::of(const Polynomial& p) {
  std::vector<ElementSet> sets;
  for (const auto& c : p.coeffs()) sets.push_back(ElementSet::of(c));
  return PolyBox(p.field(), std::move(sets));
}

bool PolyBox::contains(const Polynomial& p) const {
  require_same(*hf_, p.hf());
  if (p.degree() > nominal_degree()) return false;
  const Element zero = hf_->zero();
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!sets_[i].contains(i <= p.degree() ? p.coeff(i) : zero)) return false;
  }
  return true;
}

std::optional<Polynomial> PolyBox::only() const {
  std::vector<Element> coeffs;
  for (const auto& s : sets_) {
    auto x = s.only();
    if (!x) return std::nullopt;
    coeffs.push_back(*x);
  }
  return Polynomial::trimmed(hf_, std::move(coeffs));
}

bool PolyBox::zero_excluded() const {
  const Element zero = hf_->zero();
  return std::all_of(sets_.begin(), sets_.end(),
                     [&](const ElementSet& s) { return s.contains(zero); });
}

namespace {
const std::vector<int>& finite_items(const ElementSet& s) {
  const auto* f = std::get_if<FiniteSet>(&s.value());
  if (f == nullptr) throw DomainError("enumeration needs a finite carrier");
  return f->items;
}
}  // namespace

std::size_t PolyBox::count() const {
  std::size_t n = 1;
  for (const auto& s : sets_) n *= finite_items(s).size();
  return zero_excluded() ? n - 1 : n;
}

std::vector<Polynomial> PolyBox::enumerate(std::size_t limit) const {
  if (count() > limit) throw LimitExceeded("box has more than " + std::to_string(limit) + " members");
  std::vector<const std::vector<int>*> axes;
  for (const auto& s : sets_) axes.push_back(&finite_items(s));
  std::vector<std::size_t> digit(axes.size(), 0);
  std::vector<Polynomial> out;
  while (true) {
    std::vector<Element> coeffs;
    for (std::size_t i = 0; i < axes.size(); ++i) coeffs.push_back(Element::symbol((*axes[i])[digit[i]]));
    if (auto p = Polynomial::trimmed(hf_, std::move(coeffs))) out.push_back(std::move(*p));
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == axes[i]->size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string PolyBox::str() const {
  std::string out;
  for (std::size_t k = sets_.size(); k-- > 0;) {
    if (!out.empty()) out += " + ";
    out += hf_->format_set(sets_[k]);
    if (k > 0) out += "T";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

PolyBox boxprod(const Polynomial& p, const Polynomial& q) {
  require_same(p.hf(), q.hf());
  const Hyperfield& hf = p.hf();
  const std::size_t n = p.degree() + q.degree();
  std::vector<ElementSet> sets;
  sets.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Element> terms;
    for (std::size_t k = 0; k <= p.degree(); ++k) {
      if (i >= k && i - k <= q.degree()) terms.push_back(hf.mul(p.coeff(k), q.coeff(i - k)));
    }
    sets.push_back(hf.hypersum(terms));
  }
  return PolyBox(p.field(), std::move(sets));
}

PolyBox boxsum(const Polynomial& p, const Polynomial& q) {
  require_same(p.hf(), q.hf());
  const Hyperfield& hf = p.hf();
  const std::size_t n = std::max(p.degree(), q.degree());
  std::vector<ElementSet> sets;
  for (std::size_t i = 0; i <= n; ++i) {
    const Element a = i <= p.degree() ? p.coeff(i) : hf.zero();
    const Element b = i <= q.degree() ? q.coeff(i) : hf.zero();
    sets.push_back(hf.hyperadd(a, b));
  }
  return PolyBox(p.field(), std::move(sets));
}

Polynomial scalar_prod(const Element& a, const Polynomial& p) {
  const Hyperfield& hf = p.hf();
  hf.validate(a);
  if (hf.is_zero(a)) throw DomainError("scalar product with zero");
  std::vector<Element> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(hf.mul(a, c));
  return Polynomial(p.field(), std::move(coeffs));
}

std::pair<Element, Polynomial> monic_decompose(const Polynomial& p) {
  const Element c = p.leading();
  return {c, scalar_prod(p.hf().inv(c), p)};
}

Polynomial monomial_shift(const Polynomial& p, std::size_t n) {
  std::vector<Element> coeffs(n, p.hf().zero());
  coeffs.insert(coeffs.end(), p.coeffs().begin(), p.coeffs().end());
  return Polynomial(p.field(), std::move(coeffs));
}

}  // namespace hyperpoly
