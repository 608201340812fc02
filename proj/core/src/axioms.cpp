#include "hyperpoly/axioms.hpp"

#include <algorithm>
#include <functional>

#include "hyperpoly/error.hpp"

namespace hyperpoly {

ProbeSpec exhaustive_probe() { return {true, {}}; }

ProbeSpec probe_grid(const Hyperfield& hf, std::span<const Element> seeds, std::size_t cap) {
  std::vector<Element> pts;
  auto add = [&](const Element& x) {
    if (pts.size() < cap && std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  };
  for (const auto& x : seeds) add(x);
  add(hf.zero());
  add(hf.one());
  add(hf.neg(hf.one()));
  for (const auto& x : hf.default_probe()) add(x);
  const std::size_t base = pts.size();
  for (std::size_t i = 0; i < base && pts.size() < cap; ++i) {
    for (std::size_t j = i; j < base && pts.size() < cap; ++j) {
      add(hf.mul(pts[i], pts[j]));
      add(hf.representative(hf.hyperadd(pts[i], pts[j])));
    }
  }
  return {false, std::move(pts)};
}

ProbeSpec default_probe_spec(const Hyperfield& hf) {
  return hf.is_finite() ? exhaustive_probe() : probe_grid(hf);
}

std::vector<Element> probe_points(const Hyperfield& hf, const ProbeSpec& spec) {
  if (spec.exhaustive) return hf.elements();
  for (const auto& x : spec.points) hf.validate(x);
  return spec.points;
}

bool AxiomReport::ok() const {
  return std::all_of(findings.begin(), findings.end(), [](const auto& f) { return f.holds; });
}

const AxiomFinding& AxiomReport::finding(const std::string& axiom) const {
  for (const auto& f : findings) {
    if (f.axiom == axiom) return f;
  }
  throw DomainError("no finding named '" + axiom + "'");
}

namespace {

class Checker {
 public:
  Checker(const Hyperfield& hf, std::vector<Element> pts) : hf_(hf), pts_(std::move(pts)) {}

  std::string el(const Element& x) const { return hf_.format_element(x); }
  std::string set(const ElementSet& s) const { return hf_.format_set(s); }

  void unary(const std::string& name, const std::function<std::string(const Element&)>& law) {
    AxiomFinding f;
    f.axiom = name;
    for (const auto& x : pts_) run(f, law(x));
    out_.push_back(std::move(f));
  }
  void binary(const std::string& name,
              const std::function<std::string(const Element&, const Element&)>& law) {
    AxiomFinding f;
    f.axiom = name;
    for (const auto& x : pts_) {
      for (const auto& y : pts_) run(f, law(x, y));
    }
    out_.push_back(std::move(f));
  }
  void ternary(const std::string& name,
               const std::function<std::string(const Element&, const Element&, const Element&)>& law) {
    AxiomFinding f;
    f.axiom = name;
    for (const auto& x : pts_) {
      for (const auto& y : pts_) {
        for (const auto& z : pts_) run(f, law(x, y, z));
      }
    }
    out_.push_back(std::move(f));
  }
  void single(const std::string& name, std::string failure) {
    AxiomFinding f;
    f.axiom = name;
    run(f, std::move(failure));
    out_.push_back(std::move(f));
  }

  std::vector<AxiomFinding> take() { return std::move(out_); }

 private:
  // A law returns "" when it holds and a description of the failure otherwise.
  static void run(AxiomFinding& f, std::string failure) {
    ++f.checked;
    if (!failure.empty() && f.holds) {
      f.holds = false;
      f.counterexample = std::move(failure);
    }
  }

  const Hyperfield& hf_;
  std::vector<Element> pts_;
  std::vector<AxiomFinding> out_;
};

}  // namespace

AxiomReport check_axioms(const Hyperfield& hf, const ProbeSpec& probe) {
  const auto pts = probe_points(hf, probe);
  Checker c(hf, pts);
  const Element zero = hf.zero();
  const Element one = hf.one();

  c.single("zero-ne-one", zero == one ? "0 = 1" : "");
  c.unary("absorbing-zero", [&](const Element& x) {
    return hf.mul(zero, x) == zero && hf.mul(x, zero) == zero ? "" : "0·" + c.el(x) + " ≠ 0";
  });
  c.unary("multiplicative-identity", [&](const Element& x) {
    return hf.mul(one, x) == x ? "" : "1·" + c.el(x) + " ≠ " + c.el(x);
  });
  c.unary("multiplicative-inverse", [&](const Element& x) -> std::string {
    if (hf.is_zero(x)) return "";
    return hf.mul(x, hf.inv(x)) == one ? "" : c.el(x) + "·" + c.el(x) + "⁻¹ ≠ 1";
  });
  c.binary("multiplicative-commutativity", [&](const Element& x, const Element& y) {
    return hf.mul(x, y) == hf.mul(y, x) ? "" : c.el(x) + "·" + c.el(y) + " ≠ " + c.el(y) + "·" + c.el(x);
  });
  c.ternary("multiplicative-associativity",
            [&](const Element& x, const Element& y, const Element& z) {
              return hf.mul(x, hf.mul(y, z)) == hf.mul(hf.mul(x, y), z)
                         ? ""
                         : "(" + c.el(x) + "·" + c.el(y) + ")·" + c.el(z);
            });
  c.binary("additive-commutativity", [&](const Element& x, const Element& y) -> std::string {
    const ElementSet a = hf.hyperadd(x, y);
    if (a.empty()) return c.el(x) + "⊞" + c.el(y) + " is empty";
    const ElementSet b = hf.hyperadd(y, x);
    return a == b ? "" : c.el(x) + "⊞" + c.el(y) + " = " + c.set(a) + " but reversed " + c.set(b);
  });
  c.unary("additive-identity", [&](const Element& x) {
    const ElementSet s = hf.hyperadd(zero, x);
    return s == hf.singleton(x) ? "" : "0⊞" + c.el(x) + " = " + c.set(s);
  });
  c.ternary("additive-associativity", [&](const Element& x, const Element& y, const Element& z) {
    const ElementSet l = hf.set_hyperadd(hf.singleton(x), hf.hyperadd(y, z));
    const ElementSet r = hf.set_hyperadd(hf.hyperadd(x, y), hf.singleton(z));
    return l == r ? ""
                  : c.el(x) + "⊞(" + c.el(y) + "⊞" + c.el(z) + ") = " + c.set(l) + " but (" +
                        c.el(x) + "⊞" + c.el(y) + ")⊞" + c.el(z) + " = " + c.set(r);
  });
  c.binary("unique-inverse", [&](const Element& x, const Element& y) -> std::string {
    const bool has_zero = hf.hyperadd(x, y).contains(zero);
    const bool is_neg = y == hf.neg(x);
    if (has_zero == is_neg) return "";
    return "0 " + std::string(has_zero ? "∈ " : "∉ ") + c.el(x) + "⊞" + c.el(y) + " while -" +
           c.el(x) + " = " + c.el(hf.neg(x));
  });
  c.ternary("reversibility", [&](const Element& x, const Element& y, const Element& z) -> std::string {
    const bool l = hf.hyperadd(y, z).contains(x);
    const bool r = hf.hyperadd(x, hf.neg(y)).contains(z);
    if (l == r) return "";
    return c.el(x) + (l ? " ∈ " : " ∉ ") + c.el(y) + "⊞" + c.el(z) + " but " + c.el(z) +
           (r ? " ∈ " : " ∉ ") + c.el(x) + "⊞" + c.el(hf.neg(y));
  });
  c.ternary("left-distributivity", [&](const Element& a, const Element& x, const Element& y) {
    const ElementSet l = hf.scale(a, hf.hyperadd(x, y));
    const ElementSet r = hf.hyperadd(hf.mul(a, x), hf.mul(a, y));
    return l == r ? ""
                  : c.el(a) + "(" + c.el(x) + "⊞" + c.el(y) + ") = " + c.set(l) + " ≠ " + c.set(r);
  });
  c.ternary("right-distributivity", [&](const Element& a, const Element& x, const Element& y) {
    const ElementSet prod = hf.set_mul(hf.hyperadd(x, y), hf.singleton(a));
    const ElementSet r = hf.hyperadd(hf.mul(x, a), hf.mul(y, a));
    return prod == r ? ""
                     : "(" + c.el(x) + "⊞" + c.el(y) + ")" + c.el(a) + " = " + c.set(prod) +
                           " ≠ " + c.set(r);
  });

  return {hf.name(), probe.exhaustive, pts.size(), c.take()};
}

AxiomReport is_doubly_distributive(const Hyperfield& hf, const ProbeSpec& probe) {
  const auto pts = probe_points(hf, probe);
  AxiomFinding f;
  f.axiom = "double-distributivity";
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      const ElementSet ab = hf.hyperadd(a, b);
      for (const auto& c : pts) {
        for (const auto& d : pts) {
          ++f.checked;
          if (!f.holds) continue;
          const ElementSet l = hf.set_mul(ab, hf.hyperadd(c, d));
          const Element terms[] = {hf.mul(a, c), hf.mul(a, d), hf.mul(b, c), hf.mul(b, d)};
          const ElementSet r = hf.hypersum(terms);
          if (l == r) continue;
          f.holds = false;
          auto e = [&](const Element& x) { return hf.format_element(x); };
          f.counterexample = "(" + e(a) + "⊞" + e(b) + ")(" + e(c) + "⊞" + e(d) + ") = " +
                             hf.format_set(l) + " but the four-term hypersum is " + hf.format_set(r);
        }
      }
    }
  }
  return {hf.name(), probe.exhaustive, pts.size(), {std::move(f)}};
}

}  // namespace hyperpoly
