#pragma once

#include <string>

#include "lctrs/smt/solver.hpp"
#include "lctrs/term.hpp"
#include "lctrs/theory.hpp"

namespace lctrs::smt {

/// SMT-LIB sort for a theory sort: Int, Bool, or (_ BitVec w).
std::string sort_to_smt(const Sort& s, const TheorySpec& theory);

/// SMT-side symbol for a variable; |...|-quoted when the name is not a
/// plain SMT-LIB symbol (primed copies like x' need this).
std::string smt_var_name(const Var& v);

/// Encodes a logical term. Unary minus becomes subtraction from zero over
/// ints and bvneg over bitvectors; comparisons are signed over bitvectors.
/// Throws SortError on non-theory symbols.
std::string encode_term(const Term& t, const TheorySpec& theory);

/// True if the term multiplies two non-value subterms (pushes the query
/// out of the linear fragment).
bool has_nonlinear_mult(const Term& t);

/// check-sat query for a boolean logical term; free variables become
/// declared constants. `model_vars` asks for their values on sat.
SmtQuery sat_query(const Term& formula, const TheorySpec& theory, bool want_model = false);

/// Query whose unsat-ness means "formula is valid" (asserts the negation).
SmtQuery validity_query(const Term& formula, const TheorySpec& theory);

}  // namespace lctrs::smt
