#pragma once

#include <string>

#include "lctrs/problem.hpp"

namespace lctrs {

/// Text rendering matching the parser's grammar: infix operators with
/// minimal parentheses, values by their canonical names.
std::string print_term(const Term& t);

/// "lhs -> rhs [ phi ] ;" with the constraint omitted when it is `true`.
std::string print_rule(const Rule& r);

/// Full problem file; parse(print(parse(text))) = parse(text).
std::string print_problem(const LctrsProblem& p);

}  // namespace lctrs
