#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lctrs/value.hpp"

namespace lctrs::smt {

/// Logic fragments we emit; mapped to SMT-LIB (set-logic ...) tags.
enum class Logic { LinearInts, NonlinearInts, QuantifiedInts, BitVectors };

std::string logic_name(Logic l);

struct SortedConst {
  std::string name;  // SMT-side symbol (unquoted)
  std::string sort;  // SMT-side sort text, e.g. "Int", "Bool", "(_ BitVec 16)"
};

/// A self-contained query: declarations, boolean assertions, and the goal.
struct SmtQuery {
  Logic logic = Logic::LinearInts;
  std::vector<SortedConst> decls;
  std::vector<std::string> assertions;
  bool want_model = false;
  std::vector<SortedConst> model_names;  // constants queried via get-value on sat

  std::string to_smtlib() const;
};

using Model = std::map<std::string, TheoryValue>;

struct SmtVerdict {
  enum Kind { Sat, Unsat, Unknown } kind = Unknown;
  Model model;         // populated for Sat when the query asked for one
  std::string reason;  // Unknown only

  bool is_sat() const { return kind == Sat; }
  bool is_unsat() const { return kind == Unsat; }
  bool is_unknown() const { return kind == Unknown; }

  static SmtVerdict sat(Model m = {}) { return {Sat, std::move(m), ""}; }
  static SmtVerdict unsat() { return {Unsat, {}, ""}; }
  static SmtVerdict unknown(std::string reason) { return {Unknown, {}, std::move(reason)}; }
};

struct SolverConfig {
  std::string path;
  std::vector<std::string> args;
  std::chrono::milliseconds query_timeout{10000};
  bool session_reuse = false;  // one process per query unless enabled
};

/// Locates a solver: explicit path, else $LCTRS_SOLVER, else z3 / cvc5 on
/// PATH, else the bundled lctrs-z3 shim next to the running executable.
/// Throws SolverNotFoundError when nothing is found.
SolverConfig discover_solver(const std::optional<std::string>& explicit_path = std::nullopt,
                             const std::vector<std::string>& extra_args = {});

/// Satisfiability backend. Implementations must never turn Unknown into
/// Sat or Unsat.
class SmtSolver {
 public:
  virtual ~SmtSolver() = default;
  virtual SmtVerdict check_sat(const SmtQuery& q) = 0;
  virtual SmtVerdict check_sat(const SmtQuery& q, std::chrono::milliseconds timeout) = 0;
};

/// Spawns the configured solver binary and talks SMT-LIB 2 over its
/// stdin/stdout; one subprocess per query, or one long-lived session with
/// (reset) separation when session reuse is on.
std::unique_ptr<SmtSolver> make_external_solver(SolverConfig config);

/// Validity of a constraint: unsat(not phi) => valid. The returned verdict
/// is the raw verdict on the *negation*: Unsat means valid, Sat means
/// invalid (with countermodel), Unknown passes through.
SmtVerdict check_validity(SmtSolver& solver, const SmtQuery& negated_query);

}  // namespace lctrs::smt
