#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hyperpoly/hyperfield.hpp"

namespace hyperpoly {

/// Points at which laws are checked. Exhaustive mode decides a law over a
/// finite carrier; a grid can only falsify.
struct ProbeSpec {
  bool exhaustive = false;
  std::vector<Element> points;
};

ProbeSpec exhaustive_probe();
/// Grid built from `seeds`, the carrier's default probe and {0, 1, -1},
/// closed under pairwise products and sum representatives up to `cap`
/// points.
ProbeSpec probe_grid(const Hyperfield& hf, std::span<const Element> seeds = {},
                     std::size_t cap = 14);
/// Exhaustive for finite carriers, the default grid otherwise.
ProbeSpec default_probe_spec(const Hyperfield& hf);
std::vector<Element> probe_points(const Hyperfield& hf, const ProbeSpec& spec);

struct AxiomFinding {
  std::string axiom;
  bool holds = true;
  std::size_t checked = 0;
  std::string counterexample;
};

struct AxiomReport {
  std::string hyperfield;
  bool exhaustive = false;
  std::size_t points = 0;
  std::vector<AxiomFinding> findings;

  bool ok() const;
  const AxiomFinding& finding(const std::string& axiom) const;
};

/// Hypergroup, hyperring and hyperfield laws: commutativity, associativity,
/// identity, unique inverses and reversibility of ⊞; the monoid laws of ⊙;
/// both distributive laws; absorbing zero; inverses; 0 ≠ 1.
AxiomReport check_axioms(const Hyperfield& hf, const ProbeSpec& probe);

/// (a⊞b)(c⊞d) = ac⊞ad⊞bc⊞bd for all probed quadruples. One finding,
/// "double-distributivity", whose counterexample names the first failure.
AxiomReport is_doubly_distributive(const Hyperfield& hf, const ProbeSpec& probe);

}  // namespace hyperpoly
