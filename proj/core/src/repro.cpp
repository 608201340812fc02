#include "hyperpoly/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "hyperpoly/assoc.hpp"
#include "hyperpoly/axioms.hpp"
#include "hyperpoly/divide.hpp"
#include "hyperpoly/membership.hpp"
#include "hyperpoly/tropical.hpp"

namespace hyperpoly {

namespace {

constexpr const char* kZ3 = "3\n1 a b\na b 1\nb 1 a\n1\n";

HyperfieldPtr z3_weak() {
  std::string e;
  return weak_hyperfield(parse_cayley_table(kZ3, &e), e, "W(Z3,1)");
}

Element el(const HyperfieldPtr& hf, const char* text) { return hf->parse_element(text); }
Polynomial poly(const HyperfieldPtr& hf, const char* text) { return parse_poly(text, hf); }
ProductExpr expr(const HyperfieldPtr& hf, const char* text) { return parse_expr(text, hf); }

bool fail(std::string& detail, std::string why) {
  detail = std::move(why);
  return false;
}

bool has_step(const Certificate& c, std::size_t coefficient, const std::string& set,
              const std::string& fragment) {
  return std::any_of(c.trace.begin(), c.trace.end(), [&](const TraceStep& t) {
    return t.coefficient == coefficient && t.set == set &&
           t.statement.find(fragment) != std::string::npos;
  });
}

Element random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
  return Element::tropical(Rational(num(rng)) / Rational(den(rng)));
}

// ---------------------------------------------------------------------------

bool axioms(std::string& detail) {
  for (const auto& hf : {krasner(), signs(), weak_signs(), z3_weak()}) {
    const AxiomReport r = check_axioms(*hf, exhaustive_probe());
    if (!r.ok()) return fail(detail, hf->name() + " exhaustive check failed");
  }
  for (const auto& hf : {tropical(), viro(), phase(), prime_field(5)}) {
    const AxiomReport r = check_axioms(*hf, probe_grid(*hf));
    if (!r.ok()) return fail(detail, hf->name() + " probe found a violation");
  }
  detail = "K, S, W, W(Z3,1) exhaustive; T, V, P, GF(5) probed";
  return true;
}

bool double_distributivity(std::string& detail) {
  const AxiomReport s = is_doubly_distributive(*signs(), exhaustive_probe());
  const AxiomReport w = is_doubly_distributive(*weak_signs(), exhaustive_probe());
  if (!s.ok()) return fail(detail, "S reported not doubly distributive");
  if (w.ok() || w.findings[0].counterexample.empty()) {
    return fail(detail, "W reported doubly distributive");
  }
  detail = "S yes; W no: " + w.findings[0].counterexample;
  return true;
}

bool tropical_eval(std::string& detail) {
  const auto t = tropical();
  const Polynomial p = poly(t, "1T^3+(-2)");
  for (const char* a : {"-10", "-3", "-5/2", "-2", "-3/2"}) {
    if (eval(p, el(t, a)) != t->singleton(el(t, "-2"))) return fail(detail, std::string("p(") + a + ") ≠ {-2}");
  }
  if (eval(p, el(t, "-1")) != t->hyperadd(el(t, "-2"), el(t, "-2"))) {
    return fail(detail, "p(-1) ≠ [-inf,-2]");
  }
  for (const char* a : {"-1/2", "0", "1", "7/3"}) {
    const Rational x = Rational::parse(a);
    const Element expect = Element::tropical(Rational(1) + Rational(3) * x);
    if (eval(p, el(t, a)) != t->singleton(expect)) return fail(detail, std::string("p(") + a + ") ≠ {1a^3}");
  }
  detail = "{-2} below -1, [-inf,-2] at -1, {1+3a} above";
  return true;
}

bool viro_counterexample(std::string& detail) {
  const auto v = viro();
  const Polynomial p = poly(v, "T^3+2T^2+11T+6");
  const Certificate yes = expr_member(p, expr(v, "(T+2)*((T+1)*(T+3))"));
  const Certificate no = expr_member(p, expr(v, "(T+1)*((T+2)*(T+3))"));
  if (yes.verdict != Verdict::Yes) return fail(detail, "YES side not accepted");
  const bool intermediate = std::any_of(yes.assignment.begin(), yes.assignment.end(), [](const NodeValue& n) {
    return n.path == "root.right" && n.poly == "T^2+4T+3";
  });
  if (!intermediate) return fail(detail, "intermediate T^2+4T+3 missing");
  if (no.verdict != Verdict::No) return fail(detail, "NO side not refuted");
  if (!has_step(no, 1, "{5}", "d1 ∈ {5}")) return fail(detail, "trace lacks d1 = 5");
  if (!has_step(no, 2, "[4,6]", "∌ 2")) return fail(detail, "trace lacks 2 ∉ [4,6]");
  if (!replay_membership(yes, v) || !replay_membership(no, v)) return fail(detail, "replay failed");
  detail = "yes via T^2+4T+3; no: d1 ∈ {5}, then 2 ∉ [4,6]";
  return true;
}

bool phase_counterexample(std::string& detail) {
  const auto ph = phase();
  const Polynomial p = poly(ph, "T^3-e^{i pi/8}T^2+e^{i 5pi/24}T-e^{i pi/3}");
  const Element a12 = el(ph, "e^{i pi/12}");
  const Element a6 = el(ph, "e^{i pi/6}");
  if (eval(p, a12).contains(ph->zero()) || is_root(p, a12)) return fail(detail, "e^{iπ/12} is a root");
  const Polynomial q = poly(ph, "T^2-e^{i pi/12}T+e^{i pi/6}");
  if (!quotients(p, a6).contains(q)) return fail(detail, "q not among the quotients at e^{iπ/6}");
  const std::size_t m = mult_at(q, a12);
  if (m != 2) return fail(detail, "mult = " + std::to_string(m));
  detail = "0 ∉ p(e^{iπ/12}); q is a quotient at e^{iπ/6}; mult of q at e^{iπ/12} is 2";
  return true;
}

bool weak_counterexample(std::string& detail) {
  const auto w = weak_signs();
  const Polynomial p = poly(w, "T^3-1");
  const Certificate yes = expr_member(p, expr(w, "(T-1)*((T+1)*(T+1))"));
  const Certificate no = expr_member(p, expr(w, "(T+1)*((T-1)*(T+1))"));
  if (yes.verdict != Verdict::Yes) return fail(detail, "YES side not accepted");
  if (no.verdict != Verdict::No || no.method != "root-obstruction") {
    return fail(detail, "NO side lacks the root obstruction");
  }
  if (eval(p, el(w, "-1")) != w->hyperadd(el(w, "-1"), el(w, "-1"))) return fail(detail, "p(-1) ≠ (-1)⊞(-1)");
  if (!replay_membership(yes, w) || !replay_membership(no, w)) return fail(detail, "replay failed");
  detail = "yes; no since 0 ∉ p(-1) = " + no.stats.at("root") + "⊞" + no.stats.at("root") + " = " +
           w->format_set(eval(p, el(w, "-1")));
  return true;
}

bool signs_counterexample(std::string& detail) {
  const auto s = signs();
  const Polynomial p = poly(s, "T^3+T^2+T+1");
  const Certificate yes = expr_member(p, expr(s, "(T+1)*((T-1)*(T-1))"));
  if (yes.verdict != Verdict::Yes || !replay_membership(yes, s)) return fail(detail, "membership not shown");
  if (eval(p, el(s, "1")) != s->singleton(el(s, "1"))) return fail(detail, "p(1) ≠ {1}");
  const Certificate eq = expr_equal(expr(s, "(T+1)*((T-1)*(T-1))"), expr(s, "(T-1)*((T+1)*(T-1))"));
  if (eq.verdict != Verdict::No || !eq.witness) return fail(detail, "bracketings not separated");
  detail = "member; p(1) = {1}; unequal, witness " + *eq.witness;
  return true;
}

bool krasner_counterexample(std::string& detail) {
  const auto k = krasner();
  const Certificate eq = expr_equal(expr(k, "(T+1)*((T^2+1)*(T+1))"), expr(k, "(T^2+1)*((T+1)*(T+1))"));
  if (eq.verdict != Verdict::No || !eq.witness) return fail(detail, "not separated");
  if (eq.children.size() != 2 || eq.children[0].verdict != Verdict::Yes ||
      eq.children[1].verdict != Verdict::No) {
    return fail(detail, "witness is not in the first set only");
  }
  const ScanResult scan = assoc_scan(k, 2);
  if (scan.counterexamples.empty()) return fail(detail, "scan found nothing");
  detail = "witness " + *eq.witness + "; scan: " + std::to_string(scan.counterexamples.size()) +
           " of " + std::to_string(scan.triples) + " triples";
  return true;
}

// Enumerated left bracketing equals {T^4+dT^3+sT^2+dT+1 : d, s ∈ 1⊞1} and
// the right one is the box with 1⊞1 at T^3, T^2, T.
bool criterion_shapes(const HyperfieldPtr& hf, const Certificate& c) {
  const Element one = hf->one();
  const ElementSet s = hf->hyperadd(one, one);
  const ProductExpr left = parse_expr(c.subjects.at("left"), hf);
  const ProductExpr right = parse_expr(c.subjects.at("right"), hf);
  const auto box = resolve_box(right);
  if (!box || box->nominal_degree() != 4) return false;
  for (std::size_t i = 1; i <= 3; ++i) {
    if (box->at(i) != s) return false;
  }
  if (hf->is_finite()) {
    std::set<Polynomial> oracle;
    for (const auto& d : hf->samples(s, 0)) {
      for (const auto& m : hf->samples(s, 0)) oracle.insert(Polynomial(hf, {one, d, m, d, one}));
    }
    const auto members = enumerate_members(left);
    return std::set<Polynomial>(members.begin(), members.end()) == oracle;
  }
  const std::string lead = hf->carrier() == CarrierKind::Tropical ? hf->format_element(one) : "";
  const std::string expect = "{" + lead + "T^4+d1T^3+" + hf->format_set(s) + "T^2+d1T+" +
                             hf->format_element(one) + " | d1 ∈ " + hf->format_set(s) + "}";
  return expr_set(left).text == expect;
}

bool one_plus_one(std::string& detail) {
  std::string summary;
  std::set<std::string> non_singleton;
  for (const auto& hf : {krasner(), signs(), weak_signs(), z3_weak(), tropical(), viro(), phase(),
                         prime_field(2), prime_field(3), prime_field(5)}) {
    const Certificate c = one_plus_one_criterion(hf);
    const bool singleton = c.stats.at("singleton") == "yes";
    if (singleton != (c.verdict == Verdict::NotApplicable)) return fail(detail, hf->name() + ": verdict mismatch");
    if (!singleton) {
      if (!replay_counterexample(c, hf)) return fail(detail, hf->name() + ": certificate does not replay");
      if (!criterion_shapes(hf, c)) return fail(detail, hf->name() + ": set shapes differ");
      non_singleton.insert(hf->name());
    }
    summary += (summary.empty() ? "" : ", ") + hf->name() + (singleton ? " n/a" : " separated");
  }
  for (const char* name : {"K", "W", "T", "V"}) {
    if (!non_singleton.contains(name)) return fail(detail, std::string(name) + " not separated");
  }
  detail = summary;
  return true;
}

bool linear_products(std::string& detail) {
  std::mt19937_64 rng(20240611);
  std::size_t trials = 0;
  for (const std::size_t n : {3u, 4u}) {
    const int count = n == 3 ? 100 : 50;
    for (int t = 0; t < count; ++t, ++trials) {
      std::vector<Element> as;
      for (std::size_t i = 0; i < n; ++i) as.push_back(random_rational(rng));
      const Certificate c = box_equivalence(as);
      if (c.verdict != Verdict::Yes) return fail(detail, "box equivalence failed for " + c.subjects.at("roots"));
      const PolyBox box = linear_product_box(as);
      std::sort(as.begin(), as.end());
      do {
        if (linear_product_box(as) != box) return fail(detail, "box depends on factor order");
      } while (std::next_permutation(as.begin(), as.end()));
    }
  }
  detail = std::to_string(trials) + " random root lists, all orders";
  return true;
}

bool factorization_roundtrip(std::string& detail) {
  std::mt19937_64 rng(1105);
  const auto t = tropical();
  std::uniform_int_distribution<int> degree(1, 5);
  std::uniform_int_distribution<long> value(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Element> as;
    const int n = degree(rng);
    for (int i = 0; i < n; ++i) {
      // Repeats are common so that multiplicities above 1 occur.
      as.push_back(value(rng) == 6 ? t->zero() : Element::tropical(Rational(value(rng) / 2)));
    }
    const PolyBox box = linear_product_box(as);
    std::vector<Element> coeffs;
    for (const auto& s : box.sets()) {
      const auto pts = t->samples(s, 3);
      coeffs.push_back(pts[rng() % pts.size()]);
    }
    const Polynomial p(t, coeffs);
    const RootMultiset rm = root_multiset(p);
    std::sort(as.begin(), as.end(), [](const Element& a, const Element& b) { return b < a; });
    if (rm.roots != as) return fail(detail, "roots of " + format_poly(p) + " differ");
    if (!rm.in_box) return fail(detail, format_poly(p) + " not in the box of its roots");
    if (!rm.mult_agrees) return fail(detail, "multiplicity mismatch for " + format_poly(p));
  }
  detail = "100 sampled polynomials, degree ≤ 5";
  return true;
}

bool irreducibility(std::string& detail) {
  const auto t = tropical();
  const Certificate irr = is_reducible(poly(t, "0T^2+2"));
  if (irr.verdict != Verdict::No) return fail(detail, "0T^2+2 not shown irreducible");
  if (irr.trace.size() < 3 || irr.trace.back().statement.find("every term") == std::string::npos ||
      irr.trace.back().coefficient != 0) {
    return fail(detail, "forced-contradiction trace missing");
  }
  const Polynomial q = poly(t, "0T+0"), r = poly(t, "0T+5");
  const auto p = boxprod(q, r).only();
  if (!p) return fail(detail, "distinct-root product is not a singleton");
  const Certificate red = is_reducible(*p);
  if (red.verdict != Verdict::Yes) return fail(detail, format_poly(*p) + " not shown reducible");
  detail = "0T^2+2 irreducible (" + irr.method + "); " + format_poly(*p) + " = " + *red.witness;
  return true;
}

bool multiplicities(std::string& detail) {
  const auto s = signs();
  const std::size_t m0 = mult_at(poly(s, "T^3-T"), el(s, "0"));
  if (m0 != 1) return fail(detail, "mult_0(T^3-T) = " + std::to_string(m0));
  const auto v = viro();
  const ElementSet region(ViroSet{IntervalUnion{Interval{ExtRational(1), ExtRational::pos_inf(), true, false}}});
  const std::size_t ms = mult_set(poly(v, "T^2+3T+1"), region);
  if (ms != 1) return fail(detail, "mult_[1,∞)(T^2+3T+1) = " + std::to_string(ms));
  detail = "S: 1; V: 1";
  return true;
}

bool pointwise(std::string& detail) {
  const auto s = signs();
  const PointwiseReport r = pointwise_products_equal(poly(s, "T+1"), poly(s, "T-1"), poly(s, "T-1"));
  if (r.entries.size() != 3) return fail(detail, "expected three points");
  if (!r.all_equal()) return fail(detail, "bracketed products differ");
  detail = "equal at -1, 0, 1";
  return true;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list = {
      {1, "Axioms", 5, axioms},
      {2, "Double distributivity", 1, double_distributivity},
      {3, "Tropical evaluation", 1, tropical_eval},
      {4, "V counterexample", 1, viro_counterexample},
      {5, "P counterexample", 1, phase_counterexample},
      {6, "W counterexample", 1, weak_counterexample},
      {7, "S counterexample", 1, signs_counterexample},
      {8, "K counterexample", 5, krasner_counterexample},
      {9, "1+1 criterion", 5, one_plus_one},
      {10, "Tropical linear products", 20, linear_products},
      {11, "Tropical factorization round-trip", 20, factorization_roundtrip},
      {12, "Irreducibility", 1, irreducibility},
      {13, "Multiplicity examples", 1, multiplicities},
      {14, "Pointwise evaluation", 1, pointwise},
  };
  return list;
}

CriterionResult run_criterion(const Criterion& c) {
  CriterionResult r;
  r.id = c.id;
  r.title = c.title;
  r.budget_seconds = c.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.checked = c.check(r.detail);
  } catch (const std::exception& e) {
    r.checked = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.checked && r.seconds <= r.budget_seconds;
  if (r.checked && !r.passed) r.detail += " (over budget)";
  return r;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.2fs / %gs)", r.seconds, r.budget_seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.title +
         "  " + timing + "  " + r.detail;
}

}  // namespace hyperpoly
