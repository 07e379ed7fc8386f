#include "lctrs/dp.hpp"

#include "lctrs/errors.hpp"

namespace lctrs {

DpProblem DpProblem::restricted_to(const std::vector<int>& indices) const {
  std::vector<DependencyPair> kept;
  kept.reserve(indices.size());
  for (int i : indices) kept.push_back(pairs_[i]);
  return DpProblem(std::move(kept), rules_);
}

std::set<FunSymbol> defined_symbols(const LctrsProblem& r) {
  std::set<FunSymbol> out;
  for (const Rule& rule : r.rules()) {
    if (rule.lhs.is_app()) out.insert(rule.lhs.symbol());
  }
  return out;
}

FunSymbol marked_symbol(const FunSymbol& f) {
  return FunSymbol(f.name() + "#", f.arg_sorts(), kDpSort, /*in_theory=*/false,
                   /*in_terms=*/true);
}

Term mark(const Term& t) {
  if (t.is_var()) throw SortError("cannot mark a variable");
  return Term::app(marked_symbol(t.symbol()), t.args());
}

DpProblem generate_dps(std::shared_ptr<const LctrsProblem> r) {
  std::set<FunSymbol> defined = defined_symbols(*r);
  std::vector<DependencyPair> pairs;
  for (std::size_t i = 0; i < r->rules().size(); ++i) {
    const Rule& rule = r->rules()[i];
    Term marked_lhs = mark(rule.lhs);
    for (const auto& [pos, sub] : subterms_with_positions(rule.rhs)) {
      if (!sub.is_app() || !defined.count(sub.symbol())) continue;
      pairs.push_back(
          DependencyPair{marked_lhs, mark(sub), rule.constraint, static_cast<int>(i), pos});
    }
  }
  return DpProblem(std::move(pairs), std::move(r));
}

namespace {

void collect_renaming(const Term& t, Substitution& renaming, int& counter) {
  if (t.is_var()) {
    if (!renaming.contains(t.as_var()))
      renaming.bind(t.as_var(), Term::var("v" + std::to_string(++counter), t.as_var().sort));
    return;
  }
  for (const Term& a : t.args()) collect_renaming(a, renaming, counter);
}

}  // namespace

DependencyPair canonicalize(const DependencyPair& dp) {
  Substitution renaming;
  int counter = 0;
  collect_renaming(dp.lhs, renaming, counter);
  collect_renaming(dp.rhs, renaming, counter);
  collect_renaming(dp.constraint, renaming, counter);
  return DependencyPair{apply_subst(dp.lhs, renaming), apply_subst(dp.rhs, renaming),
                        apply_subst(dp.constraint, renaming), dp.origin_rule, dp.origin_pos};
}

DependencyPair rename_apart(const DependencyPair& dp, const VarSet& avoid) {
  VarSet own = dp.lhs.vars();
  for (const Var& v : dp.rhs.vars()) own.insert(v);
  for (const Var& v : dp.constraint.vars()) own.insert(v);

  Substitution renaming;
  VarSet taken = avoid;
  for (const Var& v : own) {
    Var fresh = v;
    while (taken.count(fresh) || (!(fresh == v) && own.count(fresh))) fresh.name += "'";
    if (avoid.count(v) || !(fresh == v)) {
      renaming.bind(v, Term::var(fresh));
      taken.insert(fresh);
    }
  }
  if (renaming.empty()) return dp;
  return DependencyPair{apply_subst(dp.lhs, renaming), apply_subst(dp.rhs, renaming),
                        apply_subst(dp.constraint, renaming), dp.origin_rule, dp.origin_pos};
}

}  // namespace lctrs
