#include "lctrs/subst.hpp"

#include "lctrs/errors.hpp"

namespace lctrs {

void Substitution::bind(Var v, Term t) {
  if (t.sort() != v.sort)
    throw SortError("binding for " + v.name + " : " + v.sort.name + " has sort " + t.sort().name);
  map_.insert_or_assign(std::move(v), std::move(t));
}

std::optional<Term> Substitution::lookup(const Var& v) const {
  auto it = map_.find(v);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

Term apply_subst(const Term& s, const Substitution& gamma) {
  if (gamma.empty()) return s;
  if (s.is_var()) {
    if (auto t = gamma.lookup(s.as_var())) return *t;
    return s;
  }
  bool changed = false;
  std::vector<Term> args;
  args.reserve(s.args().size());
  for (const Term& a : s.args()) {
    Term b = apply_subst(a, gamma);
    if (b != a) changed = true;
    args.push_back(std::move(b));
  }
  if (!changed) return s;
  return Term::app(s.symbol(), std::move(args));
}

Substitution compose(const Substitution& gamma, const Substitution& delta) {
  Substitution out;
  for (const auto& [v, t] : gamma.bindings()) out.bind(v, apply_subst(t, delta));
  for (const auto& [v, t] : delta.bindings())
    if (!out.contains(v) && !gamma.contains(v)) out.bind(v, t);
  return out;
}

}  // namespace lctrs
