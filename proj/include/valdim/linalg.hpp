#pragma once

#include <optional>
#include <vector>

#include "valdim/scalar.hpp"

namespace valdim {

/// Solves A·x = b exactly over the field by Gauss-Jordan elimination.
/// Returns the canonical solution — reduced row echelon form with every free
/// variable set to zero — or nullopt when the system is inconsistent. The
/// result is a deterministic function of the row/column layout.
std::optional<std::vector<Rat>> solve_canonical(const Field& field,
                                                std::vector<std::vector<Rat>> a,
                                                std::vector<Rat> b);

}  // namespace valdim
