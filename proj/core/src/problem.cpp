#include "lctrs/problem.hpp"

#include "lctrs/errors.hpp"

namespace lctrs {

VarSet lvar(const Rule& rho) {
  VarSet out = rho.constraint.vars();
  VarSet lhs_vars = rho.lhs.vars();
  for (const Var& v : rho.rhs.vars())
    if (!lhs_vars.count(v)) out.insert(v);
  return out;
}

LctrsProblem::LctrsProblem(TheorySpec theory, std::vector<FunSymbol> user_symbols,
                           std::vector<Rule> rules)
    : theory_(std::move(theory)),
      user_symbols_(std::move(user_symbols)),
      rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i)
    check_rule(rules_[i], theory_, static_cast<int>(i));
}

std::optional<FunSymbol> LctrsProblem::find_symbol(const std::string& name,
                                                   std::size_t arity) const {
  for (const FunSymbol& f : user_symbols_)
    if (f.name() == name && f.arity() == arity) return f;
  return theory_.find_builtin(name, arity);
}

void check_rule(const Rule& rho, const TheorySpec& theory, int rule_index) {
  (void)theory;
  std::string where = "rule " + std::to_string(rule_index + 1) + ": ";
  if (rho.lhs.sort() != rho.rhs.sort())
    throw SortError(where + "lhs sort " + rho.lhs.sort().name + " differs from rhs sort " +
                        rho.rhs.sort().name,
                    rule_index);
  if (is_logical_term(rho.lhs))
    throw SortError(where + "lhs is a logical term", rule_index);
  if (rho.constraint.sort() != kBoolSort)
    throw SortError(where + "constraint has sort " + rho.constraint.sort().name, rule_index);
  if (!is_logical_term(rho.constraint))
    throw SortError(where + "constraint is not a logical term", rule_index);
}

}  // namespace lctrs
