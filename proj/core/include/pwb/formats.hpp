#pragma once

#include <string>
#include <string_view>

#include "pwb/families.hpp"
#include "pwb/symmetry.hpp"

namespace pwb {

// Text formats. Statements end in ';', '#' starts a comment, expressions may
// be quoted. Malformed structure throws FormatError; bad expressions throw
// SyntaxError or UnknownVariable.

// algebra A { vars: x, y, z; bracket{x,y} = "z^2"; }   unlisted pairs are 0.
PoissonAlgebra parse_pois(std::string_view text, bool defer_jacobi = false);
std::string emit_pois(const PoissonAlgebra& a);

// map g on A { x -> zeta(3)*x; y -> y; }   unlisted variables are fixed.
GradedMap parse_map(std::string_view text, const PoissonAlgebra& a);
std::string emit_map(const GradedMap& g, const PoissonAlgebra& a);

// lie g { dim: 2; bracket{1,2} = x2; }   optional "names: e, f, h;" replaces x1..xn.
LieData parse_lie(std::string_view text);
std::string emit_lie(const LieData& l, const std::string& name = "g");

// Whitespace-separated scalars, one row per line.
Matrix parse_mat(std::string_view text);
std::string emit_mat(const Matrix& m);

// Same ring variables and bracket table.
bool same_algebra(const PoissonAlgebra& a, const PoissonAlgebra& b);

}  // namespace pwb
