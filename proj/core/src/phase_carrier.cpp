// Phase carrier. Nonzero elements are turns t in [0,2) standing for
// exp(i*pi*t); subsets are the zero flag plus arcs cut at turn 0.

#include <algorithm>

#include "carrier_util.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/hyperfield.hpp"

namespace hyperpoly {
namespace {

const Rational kOne(1);
const Rational kTwo(2);

IntervalUnion rotate(const IntervalUnion& arcs, const Rational& by) {
  return wrap_turns(arcs.shift(by));
}

// True when some x in X, y in Y have z strictly inside the open minor arc
// between them, with x on the counterclockwise side of z. After rotating z
// to 0 that means x in (0,1), y in (1,2) and y - x > 1.
bool cone(const IntervalUnion& x, const IntervalUnion& y, const Rational& z) {
  const IntervalUnion u = rotate(x, -z).intersect(IntervalUnion{Interval::open(0, 1)});
  const IntervalUnion l = rotate(y, -z).intersect(IntervalUnion{Interval::open(1, 2)});
  if (u.empty() || l.empty()) return false;
  return *l.sup() + (-*u.inf()) > ExtRational(1);
}

// z != 0 belongs to A ⊞ B through a pair of nonzero summands.
bool nonzero_pair_reaches(const IntervalUnion& a, const IntervalUnion& b, const Rational& z) {
  const Rational anti = reduce_turn(z + kOne);
  if (a.contains(z) && b.contains(z)) return true;
  if (a.contains(z) && b.contains(anti)) return true;
  if (a.contains(anti) && b.contains(z)) return true;
  return cone(a, b, z) || cone(b, a, z);
}

class PhaseHyperfield final : public Hyperfield {
 public:
  std::string name() const override { return "P"; }
  CarrierKind carrier() const override { return CarrierKind::Phase; }
  Element zero() const override { return Element::phase_zero(); }
  Element one() const override { return Element::phase(0); }

  Element mul(const Element& x, const Element& y) const override {
    const auto& a = turn(x);
    const auto& b = turn(y);
    if (!a || !b) return zero();
    return Element::phase(*a + *b);
  }
  Element neg(const Element& x) const override {
    const auto& a = turn(x);
    return a ? Element::phase(*a + kOne) : zero();
  }
  Element inv(const Element& x) const override {
    const auto& a = turn(x);
    if (!a) throw DomainError("inverse of zero");
    return Element::phase(-*a);
  }

  ElementSet hyperadd(const Element& x, const Element& y) const override {
    const auto& a = turn(x);
    const auto& b = turn(y);
    if (!a) return ElementSet::of(y);
    if (!b) return ElementSet::of(x);
    if (*a == *b) return ElementSet::of(x);
    const Rational d = reduce_turn(*b - *a);
    if (d == kOne) {
      return wrap(true, IntervalUnion{Interval::point(*a), Interval::point(*b)});
    }
    // Open minor arc, walked counterclockwise from its start.
    const Rational& start = d < kOne ? *a : *b;
    const Rational len = d < kOne ? d : kTwo - d;
    return wrap(false, wrap_turns(IntervalUnion{Interval::open(start, start + len)}));
  }

  ElementSet set_hyperadd(const ElementSet& sa, const ElementSet& sb) const override {
    const PhaseSet& a = parts(sa);
    const PhaseSet& b = parts(sb);
    if (sa.empty() || sb.empty()) throw DomainError("hypersum of an empty set");

    const bool has_zero =
        (a.zero && b.zero) || !a.turns.intersect(rotate(b.turns, kOne)).empty();
    IntervalUnion out;
    if (a.zero) out = out.unite(b.turns);
    if (b.zero) out = out.unite(a.turns);

    // Membership of nonzero z only changes at endpoints, their antipodes,
    // and the cut points 0 and 1. Test every candidate and every open cell.
    std::vector<Rational> cuts{Rational(0), kOne};
    for (const IntervalUnion* s : {&a.turns, &b.turns}) {
      for (const Interval& p : s->parts()) {
        for (const ExtRational& e : {p.lo, p.hi}) {
          cuts.push_back(reduce_turn(e.value()));
          cuts.push_back(reduce_turn(e.value() + kOne));
        }
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Interval> found;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      const Rational& c = cuts[k];
      const Rational next = k + 1 < cuts.size() ? cuts[k + 1] : kTwo;
      if (nonzero_pair_reaches(a.turns, b.turns, c)) found.push_back(Interval::point(c));
      if (nonzero_pair_reaches(a.turns, b.turns, midpoint(c, next))) {
        found.push_back(Interval::open(c, next));
      }
    }
    out = out.unite(IntervalUnion(std::move(found)));
    return wrap(has_zero, std::move(out));
  }

  ElementSet set_mul(const ElementSet& sa, const ElementSet& sb) const override {
    const PhaseSet& a = parts(sa);
    const PhaseSet& b = parts(sb);
    const bool has_zero = (a.zero && !sb.empty()) || (b.zero && !sa.empty());
    std::vector<Interval> sums;
    for (const Interval& i : a.turns.parts()) {
      for (const Interval& j : b.turns.parts()) {
        sums.push_back({i.lo + j.lo, i.hi + j.hi, i.lo_closed && j.lo_closed,
                        i.hi_closed && j.hi_closed});
      }
    }
    return wrap(has_zero, wrap_turns(IntervalUnion(std::move(sums))));
  }

  ElementSet scale(const Element& x, const ElementSet& s) const override {
    const PhaseSet& p = parts(s);
    const auto& a = turn(x);
    if (!a) return s.empty() ? s : ElementSet::of(zero());
    return wrap(p.zero, rotate(p.turns, *a));
  }

  ElementSet negate(const ElementSet& s) const override {
    const PhaseSet& p = parts(s);
    return wrap(p.zero, rotate(p.turns, kOne));
  }

  void validate(const Element& x) const override { (void)turn(x); }
  void validate(const ElementSet& s) const override {
    const PhaseSet& p = parts(s);
    if (!p.turns.empty() &&
        (*p.turns.inf() < ExtRational(0) || *p.turns.sup() > ExtRational(kTwo))) {
      throw CarrierMismatch("phase arcs must lie in [0,2)");
    }
  }

  /// "0", "1", "-1", "i", "-i", "ph(a)", "e^{i a pi}", "e^{i pi/8}",
  /// "e^{i 5pi/24}", "-ph(a)", with "π" accepted for "pi".
  Element parse_element(std::string_view text) const override {
    std::string t(detail::strip_parens(text));
    std::erase_if(t, [](char c) { return c == ' ' || c == '\t'; });
    for (std::size_t at; (at = t.find("π")) != std::string::npos;) t.replace(at, 2, "pi");
    bool negated = false;
    if (t.size() > 1 && t.front() == '-') {
      negated = true;
      t.erase(0, 1);
    } else if (t.size() > 1 && t.front() == '+') {
      t.erase(0, 1);
    }
    Element x;
    if (t == "0") {
      if (negated) throw ParseError("'-0' is not a phase literal");
      return zero();
    } else if (t == "1") {
      x = one();
    } else if (t == "i") {
      x = Element::phase(Rational(1, 2));
    } else if (t.starts_with("ph(") && t.ends_with(")")) {
      x = Element::phase(Rational::parse(t.substr(3, t.size() - 4)));
    } else if (t.starts_with("e^{i") && t.ends_with("}")) {
      x = Element::phase(parse_angle(t.substr(4, t.size() - 5), text));
    } else if (t.starts_with("exp(i") && t.ends_with(")")) {
      x = Element::phase(parse_angle(t.substr(5, t.size() - 6), text));
    } else {
      throw ParseError("'" + std::string(text) + "' is not a phase literal");
    }
    return negated ? neg(x) : x;
  }

  std::string format_element(const Element& x) const override {
    const auto& a = turn(x);
    return a ? "ph(" + a->str() + ")" : "0";
  }

  // Arcs through turn 0 are shown as one arc with the upper end lifted by 2.
  std::string format_set(const ElementSet& s) const override {
    const PhaseSet& p = parts(s);
    std::vector<Interval> arcs(p.turns.parts().begin(), p.turns.parts().end());
    if (arcs.size() >= 2 && arcs.front().lo == ExtRational(0) && arcs.front().lo_closed &&
        arcs.back().hi == ExtRational(kTwo)) {
      Interval merged = arcs.back();
      merged.hi = arcs.front().hi.value() + kTwo;
      merged.hi_closed = arcs.front().hi_closed;
      arcs.erase(arcs.begin());
      arcs.back() = merged;
    }
    if (!p.zero && arcs.empty()) return "{}";
    std::string out;
    if (p.zero) out = "{0}";
    for (const Interval& i : arcs) {
      if (!out.empty()) out += " u ";
      if (i.is_point()) {
        out += "{ph(" + i.lo.str() + ")}";
      } else {
        out += std::string("ph") + (i.lo_closed ? "[" : "(") + i.lo.str() + "," + i.hi.str() +
               (i.hi_closed ? "]" : ")");
      }
    }
    return out;
  }

  Element representative(const ElementSet& s) const override {
    const PhaseSet& p = parts(s);
    if (!p.turns.empty()) return Element::phase(detail::interval_representative(p.turns).value());
    if (p.zero) return zero();
    throw DomainError("representative of an empty set");
  }

  std::vector<Element> samples(const ElementSet& s, std::size_t per) const override {
    const PhaseSet& p = parts(s);
    std::vector<Element> out;
    for (auto& v : detail::interval_samples(p.turns, per)) out.push_back(Element::phase(v.value()));
    if (p.zero) out.push_back(zero());
    return out;
  }

  std::vector<Element> default_probe() const override {
    std::vector<Element> out{zero()};
    for (const Rational& r : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1),
                              Rational(4, 3), Rational(7, 4)}) {
      out.push_back(Element::phase(r));
    }
    return out;
  }

 private:
  static const std::optional<Rational>& turn(const Element& x) { return x.as_phase().turn; }
  static const PhaseSet& parts(const ElementSet& s) {
    if (s.kind() != CarrierKind::Phase) throw CarrierMismatch("expected a phase set");
    return std::get<PhaseSet>(s.value());
  }
  static ElementSet wrap(bool zero, IntervalUnion turns) {
    return ElementSet(PhaseSet{zero, std::move(turns)});
  }

  // Body of "e^{i ...}" without the leading i: "a pi", "pi/8", "5pi/24", "pi".
  static Rational parse_angle(std::string_view body, std::string_view whole) {
    const auto at = body.find("pi");
    if (at == std::string_view::npos) {
      throw ParseError("phase literal '" + std::string(whole) + "' needs a multiple of pi");
    }
    std::string_view coeff = body.substr(0, at);
    std::string_view rest = body.substr(at + 2);
    if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
    Rational r = coeff.empty() ? Rational(1) : Rational::parse(coeff);
    if (!rest.empty()) {
      if (rest.front() != '/') {
        throw ParseError("malformed phase literal '" + std::string(whole) + "'");
      }
      r = r / Rational::parse(rest.substr(1));
    }
    return r;
  }
};

}  // namespace

HyperfieldPtr phase() {
  static const HyperfieldPtr hf = std::make_shared<PhaseHyperfield>();
  return hf;
}

}  // namespace hyperpoly
