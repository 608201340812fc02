#include "hyperpoly/certificate.hpp"

#include <nlohmann/json.hpp>

#include "hyperpoly/error.hpp"

namespace hyperpoly {

using nlohmann::json;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Undecided:
      return "undecided";
    case Verdict::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "yes") return Verdict::Yes;
  if (s == "no") return Verdict::No;
  if (s == "undecided") return Verdict::Undecided;
  if (s == "not-applicable") return Verdict::NotApplicable;
  throw ParseError("unknown verdict '" + std::string(s) + "'");
}

namespace {

json encode(const Certificate& c) {
  json j;
  j["kind"] = c.kind;
  j["verdict"] = to_string(c.verdict);
  j["hyperfield"] = c.hyperfield;
  j["method"] = c.method;
  j["subjects"] = c.subjects;
  j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
  j["assignment"] = json::array();
  for (const auto& a : c.assignment) j["assignment"].push_back({{"path", a.path}, {"poly", a.poly}});
  j["trace"] = json::array();
  for (const auto& t : c.trace) {
    j["trace"].push_back({{"rule", t.rule},
                          {"coefficient", t.coefficient ? json(*t.coefficient) : json(nullptr)},
                          {"statement", t.statement},
                          {"set", t.set}});
  }
  j["stats"] = c.stats;
  j["children"] = json::array();
  for (const auto& child : c.children) j["children"].push_back(encode(child));
  j["note"] = c.note;
  return j;
}

Certificate decode(const json& j) {
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  c.hyperfield = j.at("hyperfield").get<std::string>();
  c.method = j.at("method").get<std::string>();
  c.subjects = j.at("subjects").get<std::map<std::string, std::string>>();
  if (!j.at("witness").is_null()) c.witness = j.at("witness").get<std::string>();
  for (const auto& a : j.at("assignment")) {
    c.assignment.push_back({a.at("path").get<std::string>(), a.at("poly").get<std::string>()});
  }
  for (const auto& t : j.at("trace")) {
    TraceStep s;
    s.rule = t.at("rule").get<std::string>();
    if (!t.at("coefficient").is_null()) s.coefficient = t.at("coefficient").get<std::size_t>();
    s.statement = t.at("statement").get<std::string>();
    s.set = t.at("set").get<std::string>();
    c.trace.push_back(std::move(s));
  }
  c.stats = j.at("stats").get<std::map<std::string, std::string>>();
  for (const auto& child : j.at("children")) c.children.push_back(decode(child));
  c.note = j.at("note").get<std::string>();
  return c;
}

void render(const Certificate& c, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out += pad + c.kind + " over " + c.hyperfield + ": " + to_string(c.verdict);
  if (!c.method.empty()) out += " (" + c.method + ")";
  out += "\n";
  for (const auto& [k, v] : c.subjects) out += pad + "  " + k + ": " + v + "\n";
  if (c.witness) out += pad + "  witness: " + *c.witness + "\n";
  if (!c.assignment.empty()) {
    out += pad + "  assignment:\n";
    for (const auto& a : c.assignment) out += pad + "    " + a.path + " = " + a.poly + "\n";
  }
  if (!c.trace.empty()) {
    out += pad + "  trace:\n";
    for (const auto& t : c.trace) {
      out += pad + "    ";
      if (t.coefficient) out += "T^" + std::to_string(*t.coefficient) + ": ";
      out += t.statement;
      if (!t.set.empty()) out += "  [" + t.set + "]";
      out += "\n";
    }
  }
  for (const auto& [k, v] : c.stats) out += pad + "  " + k + " = " + v + "\n";
  if (!c.note.empty()) out += pad + "  note: " + c.note + "\n";
  for (const auto& child : c.children) render(child, depth + 1, out);
}

}  // namespace

std::string to_json(const Certificate& c) { return encode(c).dump(2); }

Certificate certificate_from_json(std::string_view text) {
  try {
    return decode(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

std::string to_human(const Certificate& c) {
  std::string out;
  render(c, 0, out);
  return out;
}

}  // namespace hyperpoly
