#include "lctrs/theory.hpp"

#include "lctrs/errors.hpp"

namespace lctrs {

namespace {

FunSymbol calc(const std::string& name, std::vector<Sort> args, Sort res) {
  return FunSymbol(name, std::move(args), std::move(res), /*in_theory=*/true, /*in_terms=*/false);
}

}  // namespace

TheorySpec::TheorySpec(TheoryKind kind, int width)
    : kind_(kind),
      width_(width),
      numeric_sort_(kind == TheoryKind::Ints ? Sort{"int"} : Sort{"int" + std::to_string(width)}) {
  const Sort& num = numeric_sort_;
  const Sort& b = kBoolSort;
  builtins_ = {
      calc("+", {num, num}, num),
      calc("-", {num, num}, num),
      calc("-", {num}, num),
      calc("*", {num, num}, num),
      calc("<=", {num, num}, b),
      calc("<", {num, num}, b),
      calc(">=", {num, num}, b),
      calc(">", {num, num}, b),
      calc("=", {num, num}, b),
      calc("!=", {num, num}, b),
      calc("and", {b, b}, b),
      calc("or", {b, b}, b),
      calc("not", {b}, b),
      calc("=>", {b, b}, b),
      calc("=", {b, b}, b),
  };
}

TheorySpec TheorySpec::ints() { return TheorySpec(TheoryKind::Ints, 0); }

TheorySpec TheorySpec::bitvectors(int width) {
  if (width < 1 || width > 64) throw ConfigError("bitvector width must be in 1..64");
  return TheorySpec(TheoryKind::BitVectors, width);
}

std::string TheorySpec::name() const {
  return kind_ == TheoryKind::Ints ? "ints" : "bitvectors " + std::to_string(width_);
}

std::optional<FunSymbol> TheorySpec::find_builtin(const std::string& name,
                                                  std::size_t arity) const {
  for (const FunSymbol& f : builtins_)
    if (f.name() == name && f.arity() == arity) return f;
  return std::nullopt;
}

std::optional<FunSymbol> TheorySpec::find_builtin(const std::string& name, std::size_t arity,
                                                  const Sort& first_arg_sort) const {
  for (const FunSymbol& f : builtins_)
    if (f.name() == name && f.arity() == arity && f.arg_sorts()[0] == first_arg_sort) return f;
  return std::nullopt;
}

FunSymbol TheorySpec::value_symbol(const TheoryValue& v) const {
  Sort sort;
  if (v.is_bool()) {
    sort = kBoolSort;
  } else if (v.is_int()) {
    if (kind_ != TheoryKind::Ints)
      throw SortError("unbounded integer value in a bitvector theory");
    sort = numeric_sort_;
  } else {
    if (kind_ != TheoryKind::BitVectors || v.as_bitvec().width != width_)
      throw SortError("bitvector value width mismatch");
    sort = numeric_sort_;
  }
  // Values sit in the overlap of Sigma_theory and Sigma_terms.
  return FunSymbol(v.to_string(), {}, sort, /*in_theory=*/true, /*in_terms=*/true, v);
}

Term TheorySpec::literal(const Int& n) const {
  if (kind_ == TheoryKind::Ints) return value_term(TheoryValue::integer(n));
  return value_term(TheoryValue::bitvec(BitVec::from_signed(width_, n)));
}

TheoryValue TheorySpec::apply(const FunSymbol& f, const std::vector<TheoryValue>& args) const {
  if (f.is_value()) return f.value();
  const std::string& op = f.name();
  if (f.arg_sorts().empty()) throw NotGroundLogicalError("nullary non-value theory symbol");

  if (f.arg_sorts()[0] == kBoolSort) {
    bool a = args[0].as_bool();
    if (op == "not") return TheoryValue::boolean(!a);
    bool b = args[1].as_bool();
    if (op == "and") return TheoryValue::boolean(a && b);
    if (op == "or") return TheoryValue::boolean(a || b);
    if (op == "=>") return TheoryValue::boolean(!a || b);
    if (op == "=") return TheoryValue::boolean(a == b);
    throw NotGroundLogicalError("unknown boolean symbol: " + op);
  }

  if (kind_ == TheoryKind::Ints) {
    const Int& a = args[0].as_int();
    if (op == "-" && args.size() == 1) return TheoryValue::integer(-a);
    const Int& b = args[1].as_int();
    if (op == "+") return TheoryValue::integer(a + b);
    if (op == "-") return TheoryValue::integer(a - b);
    if (op == "*") return TheoryValue::integer(a * b);
    if (op == "<=") return TheoryValue::boolean(a <= b);
    if (op == "<") return TheoryValue::boolean(a < b);
    if (op == ">=") return TheoryValue::boolean(a >= b);
    if (op == ">") return TheoryValue::boolean(a > b);
    if (op == "=") return TheoryValue::boolean(a == b);
    if (op == "!=") return TheoryValue::boolean(a != b);
    throw NotGroundLogicalError("unknown integer symbol: " + op);
  }

  // Bitvectors: wrapping arithmetic, signed comparisons.
  const BitVec& a = args[0].as_bitvec();
  auto wrap = [&](std::uint64_t bits) { return TheoryValue::bitvec(BitVec::from_bits(width_, bits)); };
  if (op == "-" && args.size() == 1) return wrap(0 - a.bits);
  const BitVec& b = args[1].as_bitvec();
  if (op == "+") return wrap(a.bits + b.bits);
  if (op == "-") return wrap(a.bits - b.bits);
  if (op == "*") return wrap(a.bits * b.bits);
  if (op == "<=") return TheoryValue::boolean(a.to_signed() <= b.to_signed());
  if (op == "<") return TheoryValue::boolean(a.to_signed() < b.to_signed());
  if (op == ">=") return TheoryValue::boolean(a.to_signed() >= b.to_signed());
  if (op == ">") return TheoryValue::boolean(a.to_signed() > b.to_signed());
  if (op == "=") return TheoryValue::boolean(a.bits == b.bits);
  if (op == "!=") return TheoryValue::boolean(a.bits != b.bits);
  throw NotGroundLogicalError("unknown bitvector symbol: " + op);
}

TheoryValue evaluate(const Term& s, const TheorySpec& theory) {
  if (s.is_var()) throw NotGroundLogicalError("term contains variable " + s.as_var().name);
  const FunSymbol& f = s.symbol();
  if (!f.in_theory()) throw NotGroundLogicalError("non-theory symbol " + f.name());
  if (f.is_value()) return f.value();
  std::vector<TheoryValue> args;
  args.reserve(s.args().size());
  for (const Term& a : s.args()) args.push_back(evaluate(a, theory));
  return theory.apply(f, args);
}

}  // namespace lctrs
