#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acdkit/automaton.hpp"
#include "acdkit/caps.hpp"
#include "acdkit/colours.hpp"
#include "acdkit/conditions.hpp"

namespace acdkit {

/// A generalised Horn clause x₁ ∧ … ∧ xₙ ⟹ y₁ ∧ … ∧ yₘ, or the negative
/// clause x₁ ∧ … ∧ xₙ ⟹ ⊥. Variables are indices into the formula's
/// universe.
struct GHClause {
  ColourSet premises;
  /// Ignored for negative clauses.
  ColourSet conclusions;
  bool negative = false;

  /// Throws DomainError when a positive clause has no conclusion.
  static GHClause implication(ColourSet premises, ColourSet conclusions);
  static GHClause bottom(ColourSet premises);

  bool operator==(const GHClause&) const = default;
};

/// A conjunction of GH clauses over a variable universe.
class GHFormula {
 public:
  /// Throws DomainError when a clause mentions a variable outside
  /// `variables` or a positive clause has no conclusion.
  GHFormula(ColourAlphabet variables, std::vector<GHClause> clauses);

  const ColourAlphabet& variables() const { return variables_; }
  const std::vector<GHClause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  /// True when no clause is negative.
  bool is_simple() const;

  bool operator==(const GHFormula&) const = default;

 private:
  ColourAlphabet variables_;
  std::vector<GHClause> clauses_;
};

/// Truth of φ under the valuation mapping exactly the members of ν to true.
/// Throws DomainError when ν is not a set of variables of φ.
bool gh_eval(const GHFormula& phi, ColourSet nu);

/// The Streett condition with one pair ({y…}, {x…}) per clause. Throws
/// DomainError on a formula with a negative clause.
RabinCondition gh_to_streett(const GHFormula& phi);

/// The simple formula with one clause R ⟹ G per pair (G, R). Pairs with an
/// empty green set are always satisfied and give no clause.
GHFormula streett_to_gh(const RabinCondition& cond);

/// Removes conclusions repeated among the premises and drops the clauses
/// left without a conclusion.
GHFormula normalise_gh(const GHFormula& phi);

/// An equivalent formula with the least number of clauses.
GHFormula minimise_gh_clauses(const GHFormula& phi);

/// Truth table of φ: bit ν is set iff ν satisfies φ. Throws CapExceeded when
/// the universe exceeds 16 variables.
std::vector<bool> gh_truth_table(const GHFormula& phi);

/// An automaton whose acceptance is a GH formula over its colours: a run is
/// accepting iff the colours it sees infinitely often satisfy the formula.
struct GhAutomaton {
  TransitionGraph graph;
  GHFormula formula;
};

/// Whether no reachable cycle ℓ satisfies gh_eval(φ, col(ℓ)), by
/// enumerating cycles. Throws DomainError when the formula universe differs
/// from the colour alphabet and CapExceeded beyond caps.cycle_edges edges.
bool gh_automaton_empty_bruteforce(const GhAutomaton& a, const Caps& caps = default_caps());

/// Parses the text format: optional `vars: a b c` line, then one clause per
/// line (`x & y -> z & w`, `x -> _|_`, `-> z` for no premise). `#` starts a
/// comment. Without a `vars:` line the universe is the variables in order of
/// first occurrence. Throws ParseError.
GHFormula parse_gh(const std::string& text);
/// Writes the text format, `vars:` line included.
std::string write_gh(const GHFormula& phi);
/// One clause in the text format.
std::string format_gh_clause(const GHFormula& phi, const GHClause& clause);

}  // namespace acdkit
