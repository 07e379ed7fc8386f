#pragma once

#include <map>
#include <optional>

#include "lctrs/term.hpp"

namespace lctrs {

/// A finite, sort-preserving map from variables to terms.
class Substitution {
 public:
  Substitution() = default;

  /// Throws SortError if t's sort differs from v's.
  void bind(Var v, Term t);

  std::optional<Term> lookup(const Var& v) const;
  bool contains(const Var& v) const { return map_.count(v) != 0; }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }

  const std::map<Var, Term>& bindings() const { return map_; }

 private:
  std::map<Var, Term> map_;
};

/// Simultaneous replacement; variables outside dom(gamma) are unchanged.
Term apply_subst(const Term& s, const Substitution& gamma);

/// gamma;delta — the substitution with apply(s, gamma;delta) =
/// apply(apply(s, gamma), delta).
Substitution compose(const Substitution& gamma, const Substitution& delta);

}  // namespace lctrs
