#pragma once

#include <string_view>

#include "pwb/poly.hpp"

namespace pwb {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*      division only by nonzero scalars
// factor := '-' factor | base ('^' uint)?
// base   := var | uint | 'zeta' '(' uint ')' | '(' expr ')'
// Whitespace is insignificant. Throws SyntaxError or UnknownVariable.
Poly parse_poly(const PolyRing& ring, std::string_view text);

// Same grammar with no variables.
Cyclo parse_scalar(std::string_view text);

}  // namespace pwb
