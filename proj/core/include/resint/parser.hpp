#pragma once

#include <string>

#include "resint/polynomial.hpp"

namespace resint {

// Polynomial expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coefficient | variable ('^' uint)? | '(' expr ')'
//   coefficient := uint ('/' uint)?
// Implicit multiplication is a syntax error. Errors carry line/column.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace resint
