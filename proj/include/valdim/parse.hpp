#pragma once

#include <string>
#include <vector>

#include "valdim/poly.hpp"

namespace valdim {

/// Parses the textual polynomial syntax: identifiers from `vars`, integer and
/// numerator/denominator literals, `+ - * ^` and parentheses. Multiplication
/// is always explicit and `/` appears only inside numeric literals. Negative
/// exponents are accepted only when `laurent` is set, and only on single
/// monomials. Throws std::invalid_argument with a position message on bad
/// input.
Poly parse_poly(const std::string& text, const Field& field,
                const std::vector<std::string>& vars, bool laurent = false);

}  // namespace valdim
