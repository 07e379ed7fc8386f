#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lctrs/subst.hpp"
#include "lctrs/term.hpp"
#include "lctrs/theory.hpp"

namespace lctrs {

/// l -> r [phi]. Invariants (enforced by the parser / checker): lhs and rhs
/// have the same sort, lhs is not a logical term, phi is a logical term of
/// sort bool.
struct Rule {
  Term lhs;
  Term rhs;
  Term constraint;

  bool operator==(const Rule&) const = default;
};

/// LVar(rho) = Var(phi) u (Var(r) \ Var(l)); the variables a respecting
/// substitution must map to values.
VarSet lvar(const Rule& rho);

/// A checked problem: theory, user signature merged with the theory table,
/// and the rule set.
class LctrsProblem {
 public:
  LctrsProblem(TheorySpec theory, std::vector<FunSymbol> user_symbols, std::vector<Rule> rules);

  const TheorySpec& theory() const { return theory_; }
  const std::vector<FunSymbol>& user_symbols() const { return user_symbols_; }
  const std::vector<Rule>& rules() const { return rules_; }

  /// Lookup across the merged signature: user symbols first, then the
  /// theory's calculation symbols.
  std::optional<FunSymbol> find_symbol(const std::string& name, std::size_t arity) const;

 private:
  TheorySpec theory_;
  std::vector<FunSymbol> user_symbols_;
  std::vector<Rule> rules_;
};

/// Validates the Rule invariants against a theory; throws SortError with the
/// rule index on violation.
void check_rule(const Rule& rho, const TheorySpec& theory, int rule_index);

}  // namespace lctrs
