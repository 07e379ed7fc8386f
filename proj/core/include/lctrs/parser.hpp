#pragma once

#include <map>
#include <string>

#include "lctrs/problem.hpp"

namespace lctrs {

/// Parses the textual LCTRS format:
///
///   THEORY
///     ints | bitvectors <width>
///   SIGNATURE
///     name : sort * ... * sort -> sort ;      (nullary: name : -> sort ;)
///   RULES
///     term -> term [ constraint ] ;           ([ ... ] optional, default true)
///
/// Section keywords stand on their own line. Infix theory operators use the
/// ASCII spellings not and or => = != <= < >= > + - * with conventional
/// precedence; identifiers are [a-zA-Z_][a-zA-Z0-9_']*; integer literals are
/// values; '#' starts a line comment.
///
/// Throws SyntaxError, SortError, UnknownSymbolError.
LctrsProblem parse_problem(const std::string& text);

/// Parses a single term against a problem's signature. Variable sorts are
/// inferred from context; `var_sorts` pins sorts up front and receives the
/// inferred bindings. Intended for tests and tools.
Term parse_term(const LctrsProblem& problem, const std::string& text,
                std::map<std::string, Sort>* var_sorts = nullptr);

}  // namespace lctrs
