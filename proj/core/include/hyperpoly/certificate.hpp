#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperpoly {

enum class Verdict { Yes, No, Undecided, NotApplicable };

const char* to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// One step of a justification: a constraint on coefficient T^i and the
/// set it leaves (or the set that fails to contain the target).
struct TraceStep {
  std::string rule;
  std::optional<std::size_t> coefficient;
  std::string statement;
  std::string set;

  bool operator==(const TraceStep&) const = default;
};

/// Polynomial chosen at one node of an expression tree. Paths are "root",
/// "root.left", "root.right", "root.operand", ...
struct NodeValue {
  std::string path;
  std::string poly;

  bool operator==(const NodeValue&) const = default;
};

/// Replayable outcome of a decision procedure. Text fields hold values in
/// the CLI's input syntax, so a certificate can be checked again from its
/// serialised form alone.
struct Certificate {
  std::string kind;
  Verdict verdict = Verdict::Undecided;
  std::string hyperfield;
  std::string method;
  std::map<std::string, std::string> subjects;
  std::optional<std::string> witness;
  std::vector<NodeValue> assignment;
  std::vector<TraceStep> trace;
  std::map<std::string, std::string> stats;
  std::vector<Certificate> children;
  std::string note;

  bool operator==(const Certificate&) const = default;
};

/// Stable JSON: sorted keys, fixed indentation.
std::string to_json(const Certificate& c);
Certificate certificate_from_json(std::string_view text);
/// Indented plain-text rendering for terminals.
std::string to_human(const Certificate& c);

}  // namespace hyperpoly
