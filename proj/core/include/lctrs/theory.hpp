#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lctrs/term.hpp"

namespace lctrs {

enum class TheoryKind { Ints, BitVectors };

/// A built-in theory: the sorts it provides, the calculation-symbol table
/// with total interpretations J_f, and the value <-> value-symbol bijection.
///
/// `ints` provides sort "int" over unbounded integers. `bitvectors w`
/// provides sort "int<w>" over width-w two's-complement bitvectors with
/// wrapping arithmetic and signed comparisons. Both provide "bool".
class TheorySpec {
 public:
  static TheorySpec ints();
  static TheorySpec bitvectors(int width);

  TheoryKind kind() const { return kind_; }
  int width() const { return width_; }
  std::string name() const;

  const Sort& numeric_sort() const { return numeric_sort_; }
  const Sort& bool_sort() const { return kBoolSort; }
  std::vector<Sort> sorts() const { return {numeric_sort_, kBoolSort}; }
  bool has_sort(const Sort& s) const { return s == numeric_sort_ || s == kBoolSort; }

  /// The calculation symbols: arithmetic and comparisons on the numeric
  /// sort, connectives and equality on bool. Nothing else is user-visible.
  const std::vector<FunSymbol>& builtin_symbols() const { return builtins_; }
  std::optional<FunSymbol> find_builtin(const std::string& name, std::size_t arity) const;
  /// Overload resolution for = and comparisons by first argument sort.
  std::optional<FunSymbol> find_builtin(const std::string& name, std::size_t arity,
                                        const Sort& first_arg_sort) const;

  /// The value symbol corresponding to a carrier element (the bijection).
  FunSymbol value_symbol(const TheoryValue& v) const;
  Term value_term(const TheoryValue& v) const { return Term::app(value_symbol(v)); }
  /// Parses an integer literal into a value of the numeric sort. Bitvector
  /// literals wrap into the width.
  Term literal(const Int& n) const;

  /// J_f on carrier elements; total on well-sorted inputs.
  TheoryValue apply(const FunSymbol& f, const std::vector<TheoryValue>& args) const;

  bool operator==(const TheorySpec& o) const {
    return kind_ == o.kind_ && width_ == o.width_;
  }

 private:
  TheorySpec(TheoryKind kind, int width);
  TheoryKind kind_;
  int width_;
  Sort numeric_sort_;
  std::vector<FunSymbol> builtins_;
};

/// [[s]] for ground logical terms; throws NotGroundLogicalError on variables
/// or non-theory symbols.
TheoryValue evaluate(const Term& s, const TheorySpec& theory);

}  // namespace lctrs
