#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "hyperpoly/assoc.hpp"
#include "hyperpoly/axioms.hpp"
#include "hyperpoly/divide.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/membership.hpp"
#include "hyperpoly/repro.hpp"
#include "hyperpoly/tropical.hpp"

namespace hyperpoly::cli {

namespace {

struct Options {
  std::string format = "human";
  std::string hf = "T";
  std::string poly, expr, left, right, p, q, r, at, region, probe, roots;
  std::size_t max_deg = 2;
  std::size_t limit = 20;
  bool monic_only = true;
  bool exhaustive = false;
  bool two = false;
  bool check = false;
  bool list = false;
  bool all = false;
  std::vector<int> ids;
};

struct Outcome {
  Certificate cert;
  std::string human;
  int code = kOk;
};

int decided(const Certificate& c) { return c.verdict == Verdict::Undecided ? kUndecided : kOk; }

int property(const Certificate& c) {
  switch (c.verdict) {
    case Verdict::No:
      return kPropertyFailed;
    case Verdict::Undecided:
      return kUndecided;
    default:
      return kOk;
  }
}

Outcome from_cert(Certificate c, int (*code)(const Certificate&)) {
  Outcome o;
  o.code = code(c);
  o.human = to_human(c);
  o.cert = std::move(c);
  return o;
}

Certificate base(const std::string& kind, const Hyperfield& hf) {
  Certificate c;
  c.kind = kind;
  c.hyperfield = hf.name();
  c.verdict = Verdict::Yes;
  return c;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// Splits on commas outside (), [], {}.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

std::vector<Element> parse_elements(const Hyperfield& hf, std::string_view text) {
  std::vector<Element> out;
  for (const auto& item : split_top(text)) {
    if (item.empty()) throw ParseError("empty element in list '" + std::string(text) + "'");
    out.push_back(hf.parse_element(item));
  }
  return out;
}

ElementSet parse_interval(const Hyperfield& hf, const std::string& item) {
  const bool lo_closed = item.front() == '[';
  const bool hi_closed = item.back() == ']';
  const auto ends = split_top(item.substr(1, item.size() - 2));
  if (ends.size() != 2) throw ParseError("interval needs two endpoints: '" + item + "'");
  switch (hf.carrier()) {
    case CarrierKind::Tropical: {
      const Interval iv{ExtRational::parse(ends[0]), ExtRational::parse(ends[1]), lo_closed, hi_closed};
      if (iv.hi.is_pos_inf()) throw ParseError("T has no +inf");
      return ElementSet(TropicalSet{IntervalUnion({iv})});
    }
    case CarrierKind::Viro: {
      const Interval iv{ExtRational::parse(ends[0]), ExtRational::parse(ends[1]), lo_closed, hi_closed};
      if (iv.lo < ExtRational(0)) throw ParseError("V holds nonnegative values only");
      return ElementSet(ViroSet{IntervalUnion({iv})});
    }
    case CarrierKind::Phase: {
      // Counterclockwise arc from the first phase to the second.
      const auto a = hf.parse_element(ends[0]).as_phase().turn;
      const auto b = hf.parse_element(ends[1]).as_phase().turn;
      if (!a || !b) throw ParseError("arc endpoints must be nonzero phases");
      const Rational hi = *b < *a ? *b + Rational(2) : *b;
      return ElementSet(PhaseSet{false, wrap_turns(IntervalUnion({Interval{*a, hi, lo_closed, hi_closed}}))});
    }
    case CarrierKind::Finite:
      break;
  }
  throw ParseError("intervals need an ordered carrier: '" + item + "'");
}

// region := item (',' item)*; item := element | interval | '{' region '}'
ElementSet parse_region(const Hyperfield& hf, std::string_view text) {
  std::optional<ElementSet> acc;
  for (const auto& item : split_top(text)) {
    if (item.empty()) throw ParseError("empty region item");
    ElementSet part;
    if (item.front() == '{' && item.back() == '}') {
      part = parse_region(hf, std::string_view(item).substr(1, item.size() - 2));
    } else if ((item.front() == '[' || item.front() == '(') && (item.back() == ']' || item.back() == ')') &&
               item.find(',') != std::string::npos) {
      part = parse_interval(hf, item);
    } else {
      part = hf.singleton(hf.parse_element(item));
    }
    acc = acc ? acc->unite(part) : part;
  }
  if (!acc) throw ParseError("empty region");
  return *acc;
}

std::string join_elements(const Hyperfield& hf, const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + hf.format_element(xs[i]);
  return s + "}";
}

ProbeSpec probe_for(const Hyperfield& hf, const Options& o) {
  std::vector<Element> seeds;
  if (!o.probe.empty()) seeds = parse_elements(hf, o.probe);
  if (hf.is_finite() && (o.exhaustive || seeds.empty())) return exhaustive_probe();
  if (o.exhaustive) throw DomainError("exhaustive checks need a finite carrier");
  return probe_grid(hf, seeds);
}

Outcome axiom_outcome(const AxiomReport& report, const std::string& kind) {
  Certificate c;
  c.kind = kind;
  c.hyperfield = report.hyperfield;
  c.method = report.exhaustive ? "exhaustive" : "probe";
  c.verdict = report.ok() ? Verdict::Yes : Verdict::No;
  c.stats["points"] = std::to_string(report.points);
  std::ostringstream human;
  human << report.hyperfield << (report.exhaustive ? " (exhaustive, " : " (probe, ") << report.points
        << " points)\n";
  for (const auto& f : report.findings) {
    TraceStep t;
    t.rule = f.axiom;
    t.statement = f.holds ? "holds" : f.counterexample;
    t.set = std::to_string(f.checked);
    c.trace.push_back(t);
    human << "  " << (f.holds ? "ok    " : "FAILS ") << f.axiom << "  (" << f.checked << " checked)";
    if (!f.holds) human << "  " << f.counterexample;
    human << "\n";
  }
  Outcome o;
  o.code = property(c);
  o.human = human.str();
  o.cert = std::move(c);
  return o;
}

using Handler = std::function<Outcome(const Options&)>;

Outcome cmd_eval(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  const Polynomial p = parse_poly(o.poly, hf);
  const Element a = hf->parse_element(o.at);
  const std::string value = hf->format_set(eval(p, a));
  Certificate c = base("evaluation", *hf);
  c.method = "hypersum";
  c.subjects = {{"poly", format_poly(p)}, {"at", hf->format_element(a)}};
  c.stats["value"] = value;
  return {c, value + "\n", kOk};
}

Outcome box_outcome(const std::string& op, const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  const Polynomial p = parse_poly(o.p, hf);
  const Polynomial q = parse_poly(o.q, hf);
  const PolyBox box = op == "prod" ? boxprod(p, q) : boxsum(p, q);
  Certificate c = base("box", *hf);
  c.method = op == "prod" ? "boxprod" : "boxsum";
  c.subjects = {{"p", format_poly(p)}, {"q", format_poly(q)}};
  c.stats["box"] = box.str();
  std::string human = box.str() + "\n";
  if (hf->is_finite()) {
    c.stats["count"] = std::to_string(box.count());
    if (o.list) {
      for (const auto& m : box.enumerate()) {
        c.assignment.push_back({"member", format_poly(m)});
        human += "  " + format_poly(m) + "\n";
      }
    }
  }
  return {c, human, kOk};
}

Outcome cmd_member(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  return from_cert(expr_member(parse_poly(o.poly, hf), parse_expr(o.expr, hf)), decided);
}

Outcome cmd_equal(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  return from_cert(expr_equal(parse_expr(o.left, hf), parse_expr(o.right, hf)), decided);
}

Outcome cmd_quotients(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  const Polynomial p = parse_poly(o.poly, hf);
  const Element a = hf->parse_element(o.at);
  const QuotientSet qs = quotients(p, a);
  Certificate c = base("quotients", *hf);
  c.method = hf->is_finite() ? "exhaustive" : "sampled";
  c.subjects = {{"poly", format_poly(p)}, {"at", hf->format_element(a)}};
  if (qs.empty()) {
    c.verdict = Verdict::No;
    c.note = "not a root";
    return {c, "none: " + hf->format_element(a) + " is not a root\n", kOk};
  }
  c.stats["marginals"] = qs.marginals()->str();
  std::string human = "marginals: " + qs.marginals()->str() + "\n";
  const auto qs_list = qs.choices(o.limit);
  for (const auto& q : qs_list) {
    c.assignment.push_back({"quotient", format_poly(q)});
    human += "  " + format_poly(q) + "\n";
  }
  c.stats["listed"] = std::to_string(qs_list.size());
  return {c, human, kOk};
}

Outcome mult_outcome(const Hyperfield& hf, Certificate c, std::size_t m) {
  c.method = hf.is_finite() ? "exact" : "sampled";
  c.stats["mult"] = std::to_string(m);
  return {c, std::to_string(m) + "\n", kOk};
}

Outcome cmd_mult(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  const Polynomial p = parse_poly(o.poly, hf);
  const Element a = hf->parse_element(o.at);
  Certificate c = base("multiplicity", *hf);
  c.subjects = {{"poly", format_poly(p)}, {"at", hf->format_element(a)}};
  return mult_outcome(*hf, c, mult_at(p, a));
}

Outcome cmd_mult_set(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  const Polynomial p = parse_poly(o.poly, hf);
  const ElementSet region = parse_region(*hf, o.region);
  Certificate c = base("multiplicity", *hf);
  c.subjects = {{"poly", format_poly(p)}, {"region", hf->format_set(region)}};
  return mult_outcome(*hf, c, mult_set(p, region));
}

Outcome cmd_assoc_check(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  return from_cert(assoc_check(parse_poly(o.p, hf), parse_poly(o.q, hf), parse_poly(o.r, hf), !o.two),
                   property);
}

Outcome cmd_assoc_scan(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  const ScanResult scan = assoc_scan(hf, o.max_deg, o.monic_only);
  Certificate c = base("assoc-scan", *hf);
  c.method = "exhaustive";
  c.verdict = !scan.counterexamples.empty() ? Verdict::No
              : scan.undecided            ? Verdict::Undecided
                                          : Verdict::Yes;
  c.stats = {{"max_deg", std::to_string(o.max_deg)},
             {"monic_only", o.monic_only ? "yes" : "no"},
             {"polynomials", std::to_string(scan.polynomials)},
             {"triples", std::to_string(scan.triples)},
             {"undecided", std::to_string(scan.undecided)},
             {"counterexamples", std::to_string(scan.counterexamples.size())}};
  std::ostringstream human;
  human << hf->name() << ": " << scan.polynomials << " polynomials, " << scan.triples << " triples, "
        << scan.counterexamples.size() << " counterexamples, " << scan.undecided << " undecided\n";
  for (std::size_t i = 0; i < scan.counterexamples.size() && i < o.limit; ++i) {
    const Certificate& x = scan.counterexamples[i];
    c.children.push_back(x);
    human << "  " << x.subjects.at("left") << "  vs  " << x.subjects.at("right") << "  witness "
          << x.witness.value_or("?") << "\n";
  }
  return {c, human.str(), property(c)};
}

Outcome cmd_one_one(const Options& o) {
  return from_cert(one_plus_one_criterion(make_hyperfield(o.hf)), decided);
}

Outcome cmd_pointwise(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  const Polynomial p = parse_poly(o.p, hf), q = parse_poly(o.q, hf), r = parse_poly(o.r, hf);
  const auto region = o.at.empty() ? std::vector<Element>{} : parse_elements(*hf, o.at);
  const PointwiseReport report = pointwise_products_equal(p, q, r, region);
  Certificate c = base("pointwise", *hf);
  c.method = "evaluation";
  c.subjects = {{"p", format_poly(p)}, {"q", format_poly(q)}, {"r", format_poly(r)}};
  c.verdict = report.all_equal() ? Verdict::Yes : Verdict::No;
  std::string human;
  for (const auto& e : report.entries) {
    TraceStep t;
    t.rule = e.equal ? "equal" : "differ";
    t.statement = "a=" + hf->format_element(e.at) + ": p(q r)=" + hf->format_set(e.bracketed[0]) +
                  ", (p q)r=" + hf->format_set(e.bracketed[1]) + ", q(p r)=" + hf->format_set(e.bracketed[2]);
    human += "  " + t.statement + (e.equal ? "" : "  differ") + "\n";
    c.trace.push_back(std::move(t));
  }
  human += report.all_equal() ? "all equal\n" : "not all equal\n";
  return {c, human, property(c)};
}

Outcome cmd_axioms(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  return axiom_outcome(check_axioms(*hf, probe_for(*hf, o)), "axioms");
}

Outcome cmd_ddist(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  return axiom_outcome(is_doubly_distributive(*hf, probe_for(*hf, o)), "double-distributivity");
}

HyperfieldPtr tropical_only(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  if (hf->carrier() != CarrierKind::Tropical) throw CarrierMismatch("this command needs --hf T");
  return hf;
}

Outcome cmd_trop_roots(const Options& o) {
  const auto hf = tropical_only(o);
  const Polynomial p = parse_poly(o.poly, hf);
  const RootMultiset rm = root_multiset(p);
  Certificate c = base("tropical-roots", *hf);
  c.method = "upper-hull";
  c.subjects = {{"poly", format_poly(p)}};
  c.stats = {{"roots", join_elements(*hf, rm.roots)},
             {"in_box", rm.in_box ? "yes" : "no"},
             {"mult_agrees", rm.mult_agrees ? "yes" : "no"}};
  if (!rm.in_box || !rm.mult_agrees) c.verdict = Verdict::No;
  std::string human = join_elements(*hf, rm.roots) + "\n";
  if (!rm.in_box) human += "p is not in the box of its roots\n";
  if (!rm.mult_agrees) human += "multiplicities disagree with the root counts\n";
  return {c, human, property(c)};
}

Outcome cmd_trop_box(const Options& o) {
  const auto hf = tropical_only(o);
  const auto roots = parse_elements(*hf, o.roots);
  if (o.check) return from_cert(box_equivalence(roots), property);
  const PolyBox box = linear_product_box(roots);
  Certificate c = base("box", *hf);
  c.method = "linear-product";
  c.subjects = {{"roots", join_elements(*hf, roots)}};
  c.stats["box"] = box.str();
  return {c, box.str() + "\n", kOk};
}

Outcome cmd_reducible(const Options& o) {
  const auto hf = make_hyperfield(o.hf);
  return from_cert(is_reducible(parse_poly(o.poly, hf)), decided);
}

Outcome cmd_repro(const Options& o) {
  if (!o.all && o.ids.empty()) throw ParseError("repro needs --all or --id");
  Certificate c;
  c.kind = "repro";
  c.method = "acceptance-suite";
  c.verdict = Verdict::Yes;
  std::string human;
  std::size_t passed = 0, run = 0;
  for (const auto& crit : acceptance_criteria()) {
    if (!o.all && std::find(o.ids.begin(), o.ids.end(), crit.id) == o.ids.end()) continue;
    const CriterionResult r = run_criterion(crit);
    ++run;
    passed += r.passed;
    human += format_result(r) + "\n";
    // Timings are left out so that structured output is byte-stable.
    Certificate child;
    child.kind = "criterion";
    child.verdict = r.passed ? Verdict::Yes : Verdict::No;
    child.subjects = {{"id", std::to_string(r.id)}, {"title", r.title}};
    child.stats["budget_seconds"] = std::to_string(static_cast<int>(r.budget_seconds));
    child.note = r.detail;
    c.children.push_back(std::move(child));
    if (!r.passed) c.verdict = Verdict::No;
  }
  c.stats = {{"passed", std::to_string(passed)}, {"run", std::to_string(run)}};
  human += std::to_string(passed) + "/" + std::to_string(run) + " passed\n";
  return {c, human, property(c)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Polynomials over hyperfields: evaluation, hyperproducts, membership and roots", "hyperpoly"};
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();

  std::map<CLI::App*, Handler> handlers;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "structured"}));
    handlers[s] = std::move(h);
    return s;
  };
  auto hf_opt = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--hf", o.hf, "K, S, W, T, V, P, GF(p) or W(G,e):<table-file>");
    if (required) opt->required();
  };
  auto pqr = [&](CLI::App* s, bool with_r) {
    s->add_option("-p,--p", o.p, "First polynomial")->required();
    s->add_option("-q,--q", o.q, "Second polynomial")->required();
    if (with_r) s->add_option("-r,--r", o.r, "Third polynomial")->required();
  };

  auto* eval_cmd = sub("eval", "Evaluate p at a point", cmd_eval);
  hf_opt(eval_cmd);
  eval_cmd->add_option("--poly", o.poly)->required();
  eval_cmd->add_option("--at", o.at)->required();

  auto* prod_cmd = sub("prod", "Coefficient box of p ⊡ q", [](const Options& x) { return box_outcome("prod", x); });
  hf_opt(prod_cmd);
  pqr(prod_cmd, false);
  prod_cmd->add_flag("--list", o.list, "List members (finite carriers)");

  auto* sum_cmd = sub("sum", "Coefficient box of p ⊞ q", [](const Options& x) { return box_outcome("sum", x); });
  hf_opt(sum_cmd);
  pqr(sum_cmd, false);
  sum_cmd->add_flag("--list", o.list, "List members (finite carriers)");

  auto* member_cmd = sub("member", "Decide p ∈ expr", cmd_member);
  hf_opt(member_cmd);
  member_cmd->add_option("--poly", o.poly)->required();
  member_cmd->add_option("--expr", o.expr)->required();

  auto* equal_cmd = sub("equal", "Decide whether two expressions denote the same set", cmd_equal);
  hf_opt(equal_cmd);
  equal_cmd->add_option("--left", o.left)->required();
  equal_cmd->add_option("--right", o.right)->required();

  auto* quot_cmd = sub("quotients", "Quotients q with p ∈ (T-a) ⊡ q", cmd_quotients);
  hf_opt(quot_cmd);
  quot_cmd->add_option("--poly", o.poly)->required();
  quot_cmd->add_option("--at", o.at)->required();
  quot_cmd->add_option("--limit", o.limit, "Maximum quotients listed")->capture_default_str();

  auto* mult_cmd = sub("mult", "Multiplicity of a root", cmd_mult);
  hf_opt(mult_cmd);
  mult_cmd->add_option("--poly", o.poly)->required();
  mult_cmd->add_option("--at", o.at)->required();

  auto* mset_cmd = sub("mult-set", "Multiplicity over a region such as \"[1,inf)\" or \"{-1,1}\"", cmd_mult_set);
  hf_opt(mset_cmd);
  mset_cmd->add_option("--poly", o.poly)->required();
  mset_cmd->add_option("--region", o.region)->required();

  auto* ac_cmd = sub("assoc-check", "Compare p⊡(q⊡r), (p⊡q)⊡r and q⊡(p⊡r)", cmd_assoc_check);
  hf_opt(ac_cmd);
  pqr(ac_cmd, true);
  ac_cmd->add_flag("--two", o.two, "Compare only the first two bracketings");

  auto* scan_cmd = sub("assoc-scan", "Check all triples up to a degree (finite carriers)", cmd_assoc_scan);
  hf_opt(scan_cmd);
  scan_cmd->add_option("--max-deg", o.max_deg)->capture_default_str();
  scan_cmd->add_flag("--monic-only,!--all-leads", o.monic_only, "Restrict to monic polynomials")
      ->capture_default_str();
  scan_cmd->add_option("--limit", o.limit, "Counterexamples shown")->capture_default_str();

  auto* oo_cmd = sub("one-one", "Non-associativity test through 1 ⊞ 1", cmd_one_one);
  hf_opt(oo_cmd);

  auto* pw_cmd = sub("pointwise", "Compare bracketed products of evaluation sets", cmd_pointwise);
  hf_opt(pw_cmd);
  pqr(pw_cmd, true);
  pw_cmd->add_option("--at", o.at, "Comma-separated points (default: all, finite carriers)");

  auto* ax_cmd = sub("axioms", "Check the hyperfield axioms", cmd_axioms);
  hf_opt(ax_cmd);
  ax_cmd->add_option("--probe", o.probe, "Comma-separated seed elements");
  ax_cmd->add_flag("--exhaustive", o.exhaustive);

  auto* dd_cmd = sub("ddist", "Check double distributivity", cmd_ddist);
  hf_opt(dd_cmd);
  dd_cmd->add_option("--probe", o.probe, "Comma-separated seed elements");
  dd_cmd->add_flag("--exhaustive", o.exhaustive);

  auto* tr_cmd = sub("trop-roots", "Root multiset of a monic tropical polynomial", cmd_trop_roots);
  hf_opt(tr_cmd, false);
  tr_cmd->add_option("--poly", o.poly)->required();

  auto* tb_cmd = sub("trop-box", "Box of (0T+a1)⊡...⊡(0T+an)", cmd_trop_box);
  hf_opt(tb_cmd, false);
  tb_cmd->add_option("--roots", o.roots, "Comma-separated roots")->required();
  tb_cmd->add_flag("--check", o.check, "Verify the box equals the iterated product");

  auto* red_cmd = sub("reducible", "Decide whether {p} = q⊡r for some q, r", cmd_reducible);
  hf_opt(red_cmd);
  red_cmd->add_option("--poly", o.poly)->required();

  auto* repro_cmd = sub("repro", "Run the acceptance suite", cmd_repro);
  repro_cmd->add_flag("--all", o.all);
  repro_cmd->add_option("--id", o.ids, "Criterion numbers");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  for (auto& [s, handler] : handlers) {
    if (!s->parsed()) continue;
    try {
      const Outcome r = handler(o);
      out << (o.format == "structured" ? to_json(r.cert) + "\n" : r.human);
      return r.code;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kInvalid;
    }
  }
  return kInvalid;
}

}  // namespace hyperpoly::cli
