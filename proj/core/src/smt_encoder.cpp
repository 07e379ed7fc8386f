#include "lctrs/smt/encoder.hpp"

#include <sstream>

#include "lctrs/errors.hpp"

namespace lctrs::smt {

namespace {

bool plain_smt_symbol(const std::string& name) {
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '!'))
      return false;
  }
  return true;
}

std::string encode_value(const TheoryValue& v) {
  if (v.is_bool()) return v.as_bool() ? "true" : "false";
  if (v.is_int()) {
    const Int& n = v.as_int();
    if (n < 0) return "(- " + (-n).str() + ")";
    return n.str();
  }
  const BitVec& b = v.as_bitvec();
  std::ostringstream os;
  os << "(_ bv" << b.bits << " " << b.width << ")";
  return os.str();
}

// Operator spelling per theory kind; signed comparisons for bitvectors.
std::string op_name(const FunSymbol& f, const TheorySpec& theory) {
  const std::string& n = f.name();
  bool numeric = !f.arg_sorts().empty() && f.arg_sorts()[0] == theory.numeric_sort();
  bool bv = numeric && theory.kind() == TheoryKind::BitVectors;
  if (n == "+") return bv ? "bvadd" : "+";
  if (n == "-" && f.arity() == 2) return bv ? "bvsub" : "-";
  if (n == "*") return bv ? "bvmul" : "*";
  if (n == "<=") return bv ? "bvsle" : "<=";
  if (n == "<") return bv ? "bvslt" : "<";
  if (n == ">=") return bv ? "bvsge" : ">=";
  if (n == ">") return bv ? "bvsgt" : ">";
  if (n == "=") return "=";
  if (n == "and") return "and";
  if (n == "or") return "or";
  if (n == "not") return "not";
  if (n == "=>") return "=>";
  throw SortError("cannot encode theory symbol '" + n + "'");
}

}  // namespace

std::string sort_to_smt(const Sort& s, const TheorySpec& theory) {
  if (s == kBoolSort) return "Bool";
  if (s == theory.numeric_sort()) {
    if (theory.kind() == TheoryKind::Ints) return "Int";
    return "(_ BitVec " + std::to_string(theory.width()) + ")";
  }
  throw SortError("sort " + s.name + " has no SMT encoding");
}

std::string smt_var_name(const Var& v) {
  if (plain_smt_symbol(v.name)) return v.name;
  return "|" + v.name + "|";
}

std::string encode_term(const Term& t, const TheorySpec& theory) {
  if (t.is_var()) return smt_var_name(t.as_var());
  const FunSymbol& f = t.symbol();
  if (!f.in_theory()) throw SortError("non-theory symbol '" + f.name() + "' in SMT encoding");
  if (f.is_value()) return encode_value(f.value());

  // Unary minus: subtraction from zero over ints, bvneg over bitvectors.
  if (f.name() == "-" && f.arity() == 1) {
    std::string arg = encode_term(t.args()[0], theory);
    if (theory.kind() == TheoryKind::BitVectors) return "(bvneg " + arg + ")";
    return "(- 0 " + arg + ")";
  }
  if (f.name() == "!=") {
    return "(not (= " + encode_term(t.args()[0], theory) + " " +
           encode_term(t.args()[1], theory) + "))";
  }
  std::string out = "(" + op_name(f, theory);
  for (const Term& a : t.args()) out += " " + encode_term(a, theory);
  return out + ")";
}

bool has_nonlinear_mult(const Term& t) {
  if (t.is_var()) return false;
  if (t.symbol().name() == "*" && t.args().size() == 2 && !t.args()[0].is_value() &&
      !t.args()[1].is_value())
    return true;
  for (const Term& a : t.args())
    if (has_nonlinear_mult(a)) return true;
  return false;
}

namespace {

Logic logic_for(const Term& formula, const TheorySpec& theory) {
  if (theory.kind() == TheoryKind::BitVectors) return Logic::BitVectors;
  return has_nonlinear_mult(formula) ? Logic::NonlinearInts : Logic::LinearInts;
}

}  // namespace

SmtQuery sat_query(const Term& formula, const TheorySpec& theory, bool want_model) {
  if (formula.sort() != kBoolSort) throw SortError("sat query on non-boolean term");
  SmtQuery q;
  q.logic = logic_for(formula, theory);
  for (const Var& v : formula.vars())
    q.decls.push_back({smt_var_name(v), sort_to_smt(v.sort, theory)});
  q.assertions.push_back(encode_term(formula, theory));
  q.want_model = want_model;
  if (want_model) q.model_names = q.decls;
  return q;
}

SmtQuery validity_query(const Term& formula, const TheorySpec& theory) {
  if (formula.sort() != kBoolSort) throw SortError("validity query on non-boolean term");
  SmtQuery q;
  q.logic = logic_for(formula, theory);
  for (const Var& v : formula.vars())
    q.decls.push_back({smt_var_name(v), sort_to_smt(v.sort, theory)});
  q.assertions.push_back("(not " + encode_term(formula, theory) + ")");
  q.want_model = true;  // countermodel on invalid
  q.model_names = q.decls;
  return q;
}

}  // namespace lctrs::smt
