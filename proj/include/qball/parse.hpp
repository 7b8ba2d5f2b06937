#pragma once

#include <string>

#include "qball/ncpoly.hpp"

namespace qball {

/// Which algebra an expression lives in, inferred from its atoms.
enum class AtomFamily {
  scalar,    ///< only q, v and rationals
  pol,       ///< z, zs: Pol(Mat_n)_q
  boundary,  ///< zeta, zetas: the boundary copy
  square,    ///< t: C[Mat_2n]_q
};

const char* to_string(AtomFamily f) noexcept;

struct ParsedExpr {
  AtomFamily family = AtomFamily::scalar;
  AlgebraPtr algebra;  ///< null for scalars
  NCPoly value;
};

/// Parses and normalizes
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' signed-int)?
///   atom   := z[i,j] | zs[i,j] | zeta[i,j] | zetas[i,j] | t[i,j] | q | v | rational | '(' expr ')'
/// Negative exponents are allowed on scalars only. Throws ErrorKind::parse with
/// the character position, ErrorKind::index_range for indices outside 1..n
/// (1..2n for t).
ParsedExpr parse_expr(const std::string& text, int n);

/// Renders in the same grammar, so parse(render(x)) == x.
std::string render(const ParsedExpr& e);

}  // namespace qball
