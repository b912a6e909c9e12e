// Dense linear algebra over Q(qq, dd, q, t, ...).
#pragma once

#include <optional>
#include <vector>

#include "wmk/exact.hpp"

namespace wmk {

using RatMatrix = std::vector<std::vector<RatFunc>>;
using RatVector = std::vector<RatFunc>;

// Reduced row echelon form in place; returns pivot columns.
// Pivots are chosen with the fewest terms in each column.
std::vector<size_t> row_reduce(RatMatrix& a, size_t ncols);
// Basis of {x : a x = 0}.
std::vector<RatVector> nullspace(RatMatrix a, size_t ncols);
RatFunc determinant(RatMatrix a);
// Unique solution of a x = b, or nullopt when singular or inconsistent.
std::optional<RatVector> solve(RatMatrix a, const RatVector& b);

}  // namespace wmk
