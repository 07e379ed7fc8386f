#pragma once

#include <variant>

#include "lctrs/problem.hpp"
#include "lctrs/smt/solver.hpp"

namespace lctrs {

/// A contractible occurrence: either a rule step with its respecting match
/// or a calculation step with the computed value.
struct Redex {
  struct RuleStep {
    int rule_index;
    Substitution gamma;
  };
  struct CalcStep {
    TheoryValue value;
  };
  Position pos;
  std::variant<RuleStep, CalcStep> kind;

  bool is_rule_step() const { return std::holds_alternative<RuleStep>(kind); }
  const RuleStep& rule_step() const { return std::get<RuleStep>(kind); }
  const CalcStep& calc_step() const { return std::get<CalcStep>(kind); }
};

/// Syntactic matching: the substitution gamma with apply(pattern, gamma) ==
/// subject, if any. Nonlinear patterns require equal matches.
std::optional<Substitution> match(const Term& pattern, const Term& subject);

/// The rewrite relation ->_R = ->_rule u ->_calc. The solver settles
/// non-ground constraint instantiation; without one (nullptr), such redexes
/// are omitted (the documented under-approximation).
class RewriteEngine {
 public:
  RewriteEngine(const LctrsProblem& problem, smt::SmtSolver* solver = nullptr)
      : problem_(problem), solver_(solver) {}

  /// gamma(x) a value for all x in LVar(rho), and phi-gamma valid (by
  /// evaluation when ground, by SMT validity otherwise).
  bool respects(const Substitution& gamma, const Rule& rho) const;

  std::vector<Redex> find_redexes(const Term& s) const;

  /// Contracts the redex; throws InvalidRedexError if it does not apply.
  Term step(const Term& s, const Redex& r) const;

  struct NormalizeResult {
    Term term;
    bool budget_exhausted;
    int steps_taken;
  };
  /// Leftmost-innermost stepping until normal form or fuel runs out.
  NormalizeResult normalize(const Term& s, int fuel) const;

 private:
  std::optional<Redex> redex_at(const Term& subterm, const Position& pos) const;
  Term default_value_term(const Sort& sort) const;
  const LctrsProblem& problem_;
  smt::SmtSolver* solver_;
};

}  // namespace lctrs
