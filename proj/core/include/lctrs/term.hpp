#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lctrs/value.hpp"

namespace lctrs {

struct Sort {
  std::string name;
  auto operator<=>(const Sort&) const = default;
};

/// The reserved result sort of marked symbols; never user-declared.
inline const Sort kDpSort{"dpsort"};
inline const Sort kBoolSort{"bool"};

/// An immutable function symbol of a split signature. Symbols belong to
/// Sigma_terms, Sigma_theory, or (values only) both. Values are nullary
/// theory symbols carrying the carrier element they denote.
class FunSymbol {
 public:
  FunSymbol(std::string name, std::vector<Sort> arg_sorts, Sort result_sort, bool in_theory,
            bool in_terms, std::optional<TheoryValue> value = std::nullopt);

  const std::string& name() const { return d_->name; }
  const std::vector<Sort>& arg_sorts() const { return d_->arg_sorts; }
  const Sort& result_sort() const { return d_->result_sort; }
  std::size_t arity() const { return d_->arg_sorts.size(); }
  bool in_theory() const { return d_->in_theory; }
  bool in_terms() const { return d_->in_terms; }
  bool is_value() const { return d_->value.has_value(); }
  const TheoryValue& value() const { return *d_->value; }

  bool operator==(const FunSymbol& o) const;
  bool operator<(const FunSymbol& o) const;
  std::size_t hash() const { return d_->hash; }

 private:
  struct Data {
    std::string name;
    std::vector<Sort> arg_sorts;
    Sort result_sort;
    bool in_theory;
    bool in_terms;
    std::optional<TheoryValue> value;
    std::size_t hash;
  };
  std::shared_ptr<const Data> d_;
};

/// A sorted variable. Identity is (name, sort): same-named variables of
/// different sorts are distinct.
struct Var {
  std::string name;
  Sort sort;
  auto operator<=>(const Var&) const = default;
};

using VarSet = std::set<Var>;

/// An immutable, well-sorted first-order term. Copies share structure;
/// equality is structural.
class Term {
 public:
  static Term var(Var v);
  static Term var(std::string name, Sort sort) { return var(Var{std::move(name), std::move(sort)}); }
  /// Throws SortError unless |args| and their sorts match the symbol.
  static Term app(FunSymbol f, std::vector<Term> args = {});

  bool is_var() const { return n_->is_var; }
  bool is_app() const { return !n_->is_var; }
  const Var& as_var() const { return n_->var; }
  const FunSymbol& symbol() const { return *n_->symbol; }
  const std::vector<Term>& args() const { return n_->args; }
  const Sort& sort() const;

  /// App of a value symbol (a value c identified with the term c()).
  bool is_value() const { return is_app() && symbol().is_value(); }

  VarSet vars() const;
  std::size_t size() const { return n_->size; }

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }
  std::size_t hash() const { return n_->hash; }

 private:
  struct Node {
    bool is_var;
    Var var;                              // is_var only
    std::optional<FunSymbol> symbol;      // app only
    std::vector<Term> args;               // app only
    std::size_t hash;
    std::size_t size;
  };
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Position paths are sequences of 1-based argument indices; the empty path
/// is the root.
using Position = std::vector<int>;

std::string position_to_string(const Position& p);

/// All subterms outside-in, left-to-right, each with its position.
std::vector<std::pair<Position, Term>> subterms_with_positions(const Term& s);

Term subterm_at(const Term& s, const Position& p);

/// Replaces the subterm at p; throws SortError if the replacement's sort
/// differs from the replaced subterm's.
Term replace_at(const Term& s, const Position& p, const Term& replacement);

/// True iff every symbol of s is a theory symbol and Var(s) is contained in
/// allowed_vars; decides membership in Terms(Sigma_theory, L).
bool is_logical_term(const Term& s, const VarSet& allowed_vars);

/// Membership in Terms(Sigma_theory, V): all variables allowed.
bool is_logical_term(const Term& s);

}  // namespace lctrs
