#include "lctrs/rewrite.hpp"

#include <functional>

#include "lctrs/errors.hpp"
#include "lctrs/smt/encoder.hpp"

namespace lctrs {

namespace {

bool match_into(const Term& pattern, const Term& subject, Substitution& gamma) {
  if (pattern.is_var()) {
    if (auto bound = gamma.lookup(pattern.as_var())) return *bound == subject;
    if (subject.sort() != pattern.sort()) return false;
    gamma.bind(pattern.as_var(), subject);
    return true;
  }
  if (subject.is_var() || !(pattern.symbol() == subject.symbol())) return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_into(pattern.args()[i], subject.args()[i], gamma)) return false;
  return true;
}

bool is_calculation_symbol(const FunSymbol& f) { return f.in_theory() && !f.is_value(); }

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  Substitution gamma;
  if (!match_into(pattern, subject, gamma)) return std::nullopt;
  return gamma;
}

bool RewriteEngine::respects(const Substitution& gamma, const Rule& rho) const {
  for (const Var& x : lvar(rho)) {
    auto t = gamma.lookup(x);
    if (!t || !t->is_value()) return false;
  }
  Term instantiated = apply_subst(rho.constraint, gamma);
  if (instantiated.vars().empty())
    return evaluate(instantiated, problem_.theory()).as_bool();
  if (!solver_) return false;
  smt::SmtVerdict v = solver_->check_sat(smt::validity_query(instantiated, problem_.theory()));
  return v.is_unsat();
}

std::optional<Redex> RewriteEngine::redex_at(const Term& subterm, const Position& pos) const {
  if (subterm.is_var()) return std::nullopt;

  // Calculation: a non-value theory head applied to values only.
  if (is_calculation_symbol(subterm.symbol())) {
    bool all_values = true;
    for (const Term& a : subterm.args())
      if (!a.is_value()) all_values = false;
    if (all_values && !subterm.args().empty())
      return Redex{pos, Redex::CalcStep{evaluate(subterm, problem_.theory())}};
    return std::nullopt;
  }

  for (std::size_t i = 0; i < problem_.rules().size(); ++i) {
    const Rule& rule = problem_.rules()[i];
    auto gamma = match(rule.lhs, subterm);
    if (!gamma) continue;

    // Matched LVar variables must already be values.
    VarSet lv = lvar(rule);
    bool ok = true;
    VarSet unbound;
    for (const Var& x : lv) {
      if (auto t = gamma->lookup(x)) {
        if (!t->is_value()) ok = false;
      } else {
        unbound.insert(x);
      }
    }
    if (!ok) continue;

    Term constraint = apply_subst(rule.constraint, *gamma);
    if (constraint.vars().empty()) {
      if (!evaluate(constraint, problem_.theory()).as_bool()) continue;
      // rhs-fresh LVar variables outside the constraint take a default value.
      for (const Var& x : unbound)
        gamma->bind(x, default_value_term(x.sort));
      return Redex{pos, Redex::RuleStep{static_cast<int>(i), std::move(*gamma)}};
    }

    // Non-ground constraint: ask the solver for respecting values; omit the
    // redex on unknown (sound under-approximation of ->_R).
    if (!solver_) continue;
    smt::SmtQuery q = smt::sat_query(constraint, problem_.theory(), /*want_model=*/true);
    smt::SmtVerdict v = solver_->check_sat(q);
    if (!v.is_sat()) continue;
    bool complete = true;
    for (const Var& x : constraint.vars()) {
      auto it = v.model.find(smt::smt_var_name(x));
      if (it == v.model.end() && x.name == smt::smt_var_name(x)) it = v.model.find(x.name);
      if (it == v.model.end()) {
        complete = false;
        break;
      }
      gamma->bind(x, problem_.theory().value_term(it->second));
    }
    if (!complete) continue;
    for (const Var& x : unbound)
      if (!gamma->contains(x)) gamma->bind(x, default_value_term(x.sort));
    return Redex{pos, Redex::RuleStep{static_cast<int>(i), std::move(*gamma)}};
  }
  return std::nullopt;
}

Term RewriteEngine::default_value_term(const Sort& sort) const {
  const TheorySpec& th = problem_.theory();
  if (sort == kBoolSort) return th.value_term(TheoryValue::boolean(false));
  return th.literal(0);
}

std::vector<Redex> RewriteEngine::find_redexes(const Term& s) const {
  std::vector<Redex> out;
  for (const auto& [pos, sub] : subterms_with_positions(s))
    if (auto r = redex_at(sub, pos)) out.push_back(std::move(*r));
  return out;
}

Term RewriteEngine::step(const Term& s, const Redex& r) const {
  Term sub = subterm_at(s, r.pos);
  if (r.is_rule_step()) {
    const auto& rs = r.rule_step();
    if (rs.rule_index < 0 || static_cast<std::size_t>(rs.rule_index) >= problem_.rules().size())
      throw InvalidRedexError("rule index out of range");
    const Rule& rule = problem_.rules()[rs.rule_index];
    if (apply_subst(rule.lhs, rs.gamma) != sub)
      throw InvalidRedexError("substitution does not match the subterm");
    for (const Var& x : lvar(rule)) {
      auto t = rs.gamma.lookup(x);
      if (!t || !t->is_value()) throw InvalidRedexError("LVar variable not mapped to a value");
    }
    Term c = apply_subst(rule.constraint, rs.gamma);
    if (!c.vars().empty() || !evaluate(c, problem_.theory()).as_bool())
      throw InvalidRedexError("constraint not satisfied");
    return replace_at(s, r.pos, apply_subst(rule.rhs, rs.gamma));
  }
  const auto& cs = r.calc_step();
  if (sub.is_var() || !is_calculation_symbol(sub.symbol()) ||
      !(evaluate(sub, problem_.theory()) == cs.value))
    throw InvalidRedexError("not a calculation redex");
  return replace_at(s, r.pos, problem_.theory().value_term(cs.value));
}

RewriteEngine::NormalizeResult RewriteEngine::normalize(const Term& s, int fuel) const {
  Term current = s;
  int steps = 0;
  while (true) {
    // Leftmost-innermost: deepest redex first, scanning arguments
    // left-to-right before the head.
    std::function<std::optional<Term>(const Term&, Position&)> reduce_once =
        [&](const Term& t, Position& path) -> std::optional<Term> {
      if (t.is_app()) {
        for (std::size_t i = 0; i < t.args().size(); ++i) {
          path.push_back(static_cast<int>(i) + 1);
          if (auto reduced = reduce_once(t.args()[i], path)) {
            path.pop_back();
            std::vector<Term> args = t.args();
            args[i] = std::move(*reduced);
            return Term::app(t.symbol(), std::move(args));
          }
          path.pop_back();
        }
      }
      if (auto r = redex_at(t, path)) {
        Redex local{{}, r->kind};
        return step(t, local);
      }
      return std::nullopt;
    };
    if (steps >= fuel) {
      // Check for a remaining redex before declaring exhaustion.
      Position root;
      bool has_redex = false;
      std::function<bool(const Term&, Position&)> any = [&](const Term& t, Position& p) {
        if (redex_at(t, p)) return true;
        if (t.is_app())
          for (std::size_t i = 0; i < t.args().size(); ++i) {
            p.push_back(static_cast<int>(i) + 1);
            bool found = any(t.args()[i], p);
            p.pop_back();
            if (found) return true;
          }
        return false;
      };
      has_redex = any(current, root);
      return {current, has_redex, steps};
    }
    Position root;
    auto next = reduce_once(current, root);
    if (!next) return {current, false, steps};
    current = std::move(*next);
    ++steps;
  }
}

}  // namespace lctrs
