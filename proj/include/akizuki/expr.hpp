#pragma once

#include "akizuki/ring_b.hpp"

namespace akizuki {

// Recursive-descent parser for elements of B (and C, via the y/w atoms):
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' nat)?
//   atom   := 't' | 'z'nat | 'a'nat | 'y'nat | 'w'nat | rational | '(' expr ')'
//
// y_i stands for (z_i - a_i)^2 and w_i for t^{n_i+1}(z_i - a_i), both expanded
// into B. Syntax errors carry a 1-based position; indices above r_max+1 raise
// UnknownIndex. Output of BElem::to_string over polynomial coefficients parses
// back to an equal element.
BElem parse_expression(const ParamsPtr& P, const std::string& text);

}  // namespace akizuki
