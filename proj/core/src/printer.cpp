#include "lctrs/printer.hpp"

#include <map>
#include <sstream>

namespace lctrs {

namespace {

enum Assoc { Left, Right, None };

struct OpInfo {
  int prec;
  Assoc assoc;
};

// Tighter binding = higher precedence; unary operators sit above all infix.
const std::map<std::string, OpInfo> kInfix = {
    {"=>", {1, Right}}, {"or", {2, Left}},  {"and", {3, Left}}, {"=", {4, None}},
    {"!=", {4, None}},  {"<=", {4, None}},  {"<", {4, None}},   {">=", {4, None}},
    {">", {4, None}},   {"+", {5, Left}},   {"-", {5, Left}},   {"*", {6, Left}},
};
constexpr int kUnaryPrec = 7;
constexpr int kAtomPrec = 9;

bool is_infix(const Term& t) {
  return t.is_app() && t.symbol().in_theory() && t.args().size() == 2 &&
         kInfix.count(t.symbol().name());
}

bool is_unary_op(const Term& t) {
  return t.is_app() && t.symbol().in_theory() && t.args().size() == 1 &&
         (t.symbol().name() == "-" || t.symbol().name() == "not");
}

void print(std::ostream& os, const Term& t, int parent_prec) {
  if (t.is_var()) {
    os << t.as_var().name;
    return;
  }
  if (t.is_value()) {
    os << t.symbol().value().to_string();
    return;
  }
  if (is_unary_op(t)) {
    bool parens = kUnaryPrec < parent_prec;
    if (parens) os << '(';
    os << t.symbol().name();
    if (t.symbol().name() == "not") os << ' ';
    print(os, t.args()[0], kUnaryPrec + 1);
    if (parens) os << ')';
    return;
  }
  if (is_infix(t)) {
    const OpInfo& op = kInfix.at(t.symbol().name());
    bool parens = op.prec < parent_prec;
    if (parens) os << '(';
    int lhs_min = op.assoc == Left ? op.prec : op.prec + 1;
    int rhs_min = op.assoc == Right ? op.prec : op.prec + 1;
    print(os, t.args()[0], lhs_min);
    os << ' ' << t.symbol().name() << ' ';
    print(os, t.args()[1], rhs_min);
    if (parens) os << ')';
    return;
  }
  os << t.symbol().name();
  if (!t.args().empty()) {
    os << '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) os << ", ";
      print(os, t.args()[i], 0);
    }
    os << ')';
  }
}

bool is_true(const Term& t) {
  return t.is_value() && t.symbol().value().is_bool() && t.symbol().value().as_bool();
}

}  // namespace

std::string print_term(const Term& t) {
  std::ostringstream os;
  print(os, t, 0);
  return os.str();
}

std::string print_rule(const Rule& r) {
  std::ostringstream os;
  print(os, r.lhs, 0);
  os << " -> ";
  print(os, r.rhs, 0);
  if (!is_true(r.constraint)) {
    os << " [ ";
    print(os, r.constraint, 0);
    os << " ]";
  }
  os << " ;";
  return os.str();
}

std::string print_problem(const LctrsProblem& p) {
  std::ostringstream os;
  os << "THEORY\n  " << p.theory().name() << "\n";
  os << "SIGNATURE\n";
  for (const FunSymbol& f : p.user_symbols()) {
    os << "  " << f.name() << " : ";
    for (std::size_t i = 0; i < f.arg_sorts().size(); ++i) {
      if (i) os << " * ";
      os << f.arg_sorts()[i].name;
    }
    if (!f.arg_sorts().empty()) os << ' ';
    os << "-> " << f.result_sort().name << " ;\n";
  }
  os << "RULES\n";
  for (const Rule& r : p.rules()) os << "  " << print_rule(r) << "\n";
  return os.str();
}

}  // namespace lctrs
