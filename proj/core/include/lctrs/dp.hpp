#pragma once

#include <memory>
#include <set>

#include "lctrs/problem.hpp"

namespace lctrs {

/// f# -> f#(l1..ln) -> p# [phi]: both sides headed by marked symbols of the
/// fresh sort dpsort, recording where in which rule the pair came from.
struct DependencyPair {
  Term lhs;
  Term rhs;
  Term constraint;
  int origin_rule = -1;
  Position origin_pos;

  Rule as_rule() const { return Rule{lhs, rhs, constraint}; }
  bool operator==(const DependencyPair& o) const {
    return lhs == o.lhs && rhs == o.rhs && constraint == o.constraint;
  }
};

inline VarSet lvar(const DependencyPair& dp) { return lvar(dp.as_rule()); }

/// A set of dependency pairs relative to a fixed rule set R. Chain-freeness
/// is the semantic property a processor chain establishes about it.
class DpProblem {
 public:
  DpProblem(std::vector<DependencyPair> pairs, std::shared_ptr<const LctrsProblem> rules)
      : pairs_(std::move(pairs)), rules_(std::move(rules)) {}

  const std::vector<DependencyPair>& pairs() const { return pairs_; }
  const LctrsProblem& rules() const { return *rules_; }
  std::shared_ptr<const LctrsProblem> rules_ptr() const { return rules_; }
  bool empty() const { return pairs_.empty(); }

  /// Chains are minimal (strict subterms of instantiated lhss terminate);
  /// carried per the DP-framework convention, not exploited by any
  /// processor here.
  bool minimality_assumed() const { return true; }

  DpProblem restricted_to(const std::vector<int>& indices) const;
  bool same_pairs(const DpProblem& o) const { return pairs_ == o.pairs_; }

 private:
  std::vector<DependencyPair> pairs_;
  std::shared_ptr<const LctrsProblem> rules_;
};

/// Head symbols of rule lhss.
std::set<FunSymbol> defined_symbols(const LctrsProblem& r);

/// f# with the same argument sorts and result sort dpsort. Injective since
/// '#' cannot occur in user identifiers.
FunSymbol marked_symbol(const FunSymbol& f);

/// #(f(s1..sn)) = f#(s1..sn); requires a defined-headed term.
Term mark(const Term& t);

/// One pair per defined-headed subterm occurrence in a rule's rhs;
/// calculation-headed and constructor-headed subterms produce nothing.
DpProblem generate_dps(std::shared_ptr<const LctrsProblem> r);

/// Variables renamed to v1, v2, ... in order of first occurrence across
/// (lhs, rhs, constraint); used for set comparison up to renaming.
DependencyPair canonicalize(const DependencyPair& dp);

/// Renames a pair's variables apart from `avoid` by priming.
DependencyPair rename_apart(const DependencyPair& dp, const VarSet& avoid);

}  // namespace lctrs
