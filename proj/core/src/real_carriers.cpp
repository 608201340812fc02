// Tropical and Viro carriers: subsets are interval unions over the
// extended rationals.

#include "carrier_util.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/hyperfield.hpp"

namespace hyperpoly {
namespace {

const IntervalUnion& parts_of(const ElementSet& s, CarrierKind kind) {
  if (s.kind() != kind) {
    throw CarrierMismatch(std::string("expected a ") + to_string(kind) + " set");
  }
  if (kind == CarrierKind::Tropical) return std::get<TropicalSet>(s.value()).parts;
  return std::get<ViroSet>(s.value()).parts;
}

// ---------------------------------------------------------------------------

class TropicalHyperfield final : public Hyperfield {
 public:
  std::string name() const override { return "T"; }
  CarrierKind carrier() const override { return CarrierKind::Tropical; }
  Element zero() const override { return Element::tropical(ExtRational::neg_inf()); }
  Element one() const override { return Element::tropical(ExtRational(0)); }

  Element mul(const Element& x, const Element& y) const override {
    return Element::tropical(val(x) + val(y));
  }
  Element neg(const Element& x) const override {
    validate(x);
    return x;
  }
  Element inv(const Element& x) const override {
    const ExtRational& v = val(x);
    if (v.is_neg_inf()) throw DomainError("inverse of zero");
    return Element::tropical(-v);
  }

  ElementSet hyperadd(const Element& x, const Element& y) const override {
    const ExtRational& a = val(x);
    const ExtRational& b = val(y);
    if (a != b) return wrap(IntervalUnion::point(max(a, b)));
    return wrap(IntervalUnion{Interval::closed(ExtRational::neg_inf(), a)});
  }

  ElementSet set_hyperadd(const ElementSet& a, const ElementSet& b) const override {
    const IntervalUnion& as = parts(a);
    const IntervalUnion& bs = parts(b);
    if (as.empty() || bs.empty()) throw DomainError("hypersum of an empty set");
    std::vector<Interval> out;
    for (const Interval& i : as.parts()) {
      for (const Interval& j : bs.parts()) {
        // a > b gives {a}; a = b gives [-inf, a].
        out.push_back(intersect(i, above(j.lo)));
        out.push_back(intersect(j, above(i.lo)));
        const Interval both = intersect(i, j);
        if (!both.empty()) out.push_back({ExtRational::neg_inf(), both.hi, true, both.hi_closed});
      }
    }
    return wrap(IntervalUnion(std::move(out)));
  }

  ElementSet set_mul(const ElementSet& a, const ElementSet& b) const override {
    std::vector<Interval> out;
    for (const Interval& i : parts(a).parts()) {
      for (const Interval& j : parts(b).parts()) {
        const bool i_zero = i.lo.is_neg_inf() && i.lo_closed;
        const bool j_zero = j.lo.is_neg_inf() && j.lo_closed;
        if (i_zero || j_zero) out.push_back(Interval::point(ExtRational::neg_inf()));
        if (i.hi.is_neg_inf() || j.hi.is_neg_inf()) continue;  // a {-inf} factor
        Interval s{i.lo + j.lo, i.hi + j.hi, i.lo_closed && j.lo_closed,
                   i.hi_closed && j.hi_closed};
        if (s.lo.is_neg_inf()) s.lo_closed = false;
        out.push_back(s);
      }
    }
    return wrap(IntervalUnion(std::move(out)));
  }

  ElementSet scale(const Element& a, const ElementSet& s) const override {
    const ExtRational& v = val(a);
    const IntervalUnion& p = parts(s);
    if (v.is_neg_inf()) {
      return p.empty() ? s : wrap(IntervalUnion::point(ExtRational::neg_inf()));
    }
    return wrap(p.shift(v.value()));
  }

  ElementSet negate(const ElementSet& s) const override {
    validate(s);
    return s;
  }

  void validate(const Element& x) const override { (void)val(x); }
  void validate(const ElementSet& s) const override { (void)parts(s); }

  Element parse_element(std::string_view text) const override {
    const std::string_view t = detail::strip_parens(text);
    const ExtRational v = ExtRational::parse(t);
    if (v.is_pos_inf()) throw ParseError("+inf is not a tropical element");
    return Element::tropical(v);
  }

  std::string format_element(const Element& x) const override { return val(x).str(); }
  std::string format_set(const ElementSet& s) const override { return parts(s).str(); }

  Element representative(const ElementSet& s) const override {
    return Element::tropical(detail::interval_representative(parts(s)));
  }

  std::vector<Element> samples(const ElementSet& s, std::size_t per) const override {
    std::vector<Element> out;
    for (auto& v : detail::interval_samples(parts(s), per)) out.push_back(Element::tropical(v));
    return out;
  }

  std::vector<Element> default_probe() const override {
    std::vector<Element> out;
    out.push_back(zero());
    for (const Rational& r : {Rational(-2), Rational(-1), Rational(0), Rational(1, 2),
                              Rational(1), Rational(3)}) {
      out.push_back(Element::tropical(r));
    }
    return out;
  }

 private:
  static const ExtRational& val(const Element& x) { return x.as_tropical().value; }
  static const IntervalUnion& parts(const ElementSet& s) {
    return parts_of(s, CarrierKind::Tropical);
  }
  static ElementSet wrap(IntervalUnion u) { return ElementSet(TropicalSet{std::move(u)}); }
  // Everything strictly above the lower end of another component.
  static Interval above(const ExtRational& lo) {
    return {lo, ExtRational::pos_inf(), false, false};
  }
};

// ---------------------------------------------------------------------------

class ViroHyperfield final : public Hyperfield {
 public:
  std::string name() const override { return "V"; }
  CarrierKind carrier() const override { return CarrierKind::Viro; }
  Element zero() const override { return Element::viro(0); }
  Element one() const override { return Element::viro(1); }

  Element mul(const Element& x, const Element& y) const override {
    return Element::viro(val(x) * val(y));
  }
  Element neg(const Element& x) const override {
    validate(x);
    return x;
  }
  Element inv(const Element& x) const override {
    if (val(x).is_zero()) throw DomainError("inverse of zero");
    return Element::viro(Rational(1) / val(x));
  }

  ElementSet hyperadd(const Element& x, const Element& y) const override {
    const Rational& a = val(x);
    const Rational& b = val(y);
    return wrap(IntervalUnion{Interval::closed((a - b).abs(), a + b)});
  }

  ElementSet set_hyperadd(const ElementSet& a, const ElementSet& b) const override {
    const IntervalUnion& as = parts(a);
    const IntervalUnion& bs = parts(b);
    if (as.empty() || bs.empty()) throw DomainError("hypersum of an empty set");
    std::vector<Interval> out;
    for (const Interval& i : as.parts()) {
      for (const Interval& j : bs.parts()) {
        // Union of [|x-y|, x+y]: from dist(I,J) up to sup I + sup J.
        Interval r;
        if (!intersect(i, j).empty()) {
          r.lo = ExtRational(0);
          r.lo_closed = true;
        } else if (i.hi <= j.lo) {
          r.lo = ExtRational(j.lo.value() - i.hi.value());
          r.lo_closed = i.hi_closed && j.lo_closed;
        } else {
          r.lo = ExtRational(i.lo.value() - j.hi.value());
          r.lo_closed = j.hi_closed && i.lo_closed;
        }
        r.hi = i.hi + j.hi;
        r.hi_closed = i.hi_closed && j.hi_closed;
        out.push_back(r);
      }
    }
    return wrap(IntervalUnion(std::move(out)));
  }

  ElementSet set_mul(const ElementSet& a, const ElementSet& b) const override {
    std::vector<Interval> out;
    const ExtRational zero(0);
    for (const Interval& i : parts(a).parts()) {
      for (const Interval& j : parts(b).parts()) {
        const bool i_zero = i.lo == zero && i.lo_closed;
        const bool j_zero = j.lo == zero && j.lo_closed;
        if (i.is_point() && i.lo == zero) {
          out.push_back(Interval::point(zero));
          continue;
        }
        if (j.is_point() && j.lo == zero) {
          out.push_back(Interval::point(zero));
          continue;
        }
        Interval r;
        r.lo = ExtRational(i.lo.value() * j.lo.value());
        r.lo_closed = (i.lo_closed && j.lo_closed) || i_zero || j_zero;
        r.hi = (i.hi.is_finite() && j.hi.is_finite())
                   ? ExtRational(i.hi.value() * j.hi.value())
                   : ExtRational::pos_inf();
        r.hi_closed = i.hi_closed && j.hi_closed;
        out.push_back(r);
      }
    }
    return wrap(IntervalUnion(std::move(out)));
  }

  ElementSet scale(const Element& a, const ElementSet& s) const override {
    const IntervalUnion& p = parts(s);
    if (val(a).is_zero()) return p.empty() ? s : wrap(IntervalUnion::point(ExtRational(0)));
    return wrap(p.scale(val(a)));
  }

  ElementSet negate(const ElementSet& s) const override {
    validate(s);
    return s;
  }

  void validate(const Element& x) const override { (void)val(x); }
  void validate(const ElementSet& s) const override {
    const auto lo = parts(s).inf();
    if (lo && *lo < ExtRational(0)) throw CarrierMismatch("Viro set reaches below 0");
  }

  Element parse_element(std::string_view text) const override {
    const Rational r = Rational::parse(detail::strip_parens(text));
    if (r.sign() < 0) throw ParseError("Viro elements are nonnegative");
    return Element::viro(r);
  }

  std::string format_element(const Element& x) const override { return val(x).str(); }
  std::string format_set(const ElementSet& s) const override { return parts(s).str(); }

  Element representative(const ElementSet& s) const override {
    return Element::viro(detail::interval_representative(parts(s)).value());
  }

  std::vector<Element> samples(const ElementSet& s, std::size_t per) const override {
    std::vector<Element> out;
    for (auto& v : detail::interval_samples(parts(s), per)) {
      out.push_back(Element::viro(v.value()));
    }
    return out;
  }

  std::vector<Element> default_probe() const override {
    std::vector<Element> out;
    for (const Rational& r : {Rational(0), Rational(1, 2), Rational(1), Rational(2),
                              Rational(3)}) {
      out.push_back(Element::viro(r));
    }
    return out;
  }

 private:
  static const Rational& val(const Element& x) { return x.as_viro().value; }
  static const IntervalUnion& parts(const ElementSet& s) {
    return parts_of(s, CarrierKind::Viro);
  }
  static ElementSet wrap(IntervalUnion u) { return ElementSet(ViroSet{std::move(u)}); }
};

}  // namespace

HyperfieldPtr tropical() {
  static const HyperfieldPtr hf = std::make_shared<TropicalHyperfield>();
  return hf;
}

HyperfieldPtr viro() {
  static const HyperfieldPtr hf = std::make_shared<ViroHyperfield>();
  return hf;
}

}  // namespace hyperpoly
