#pragma once

#include <vector>

#include "skein/ratfn.hpp"

namespace skein {

using RatMatrix = std::vector<std::vector<RationalFn>>;
using RatVector = std::vector<RationalFn>;

struct LinearSolution {
    RatVector x;
    RationalFn det;
};

/// Determinant by fraction-field Gaussian elimination with the first
/// structurally nonzero entry as pivot (the matrices here are at most
/// 4x4, so no pivoting heuristics).
RationalFn determinant(const RatMatrix& m);

/// Solves m * x = b exactly; also reports det(m).
/// Throws SingularSystemError when the determinant vanishes.
LinearSolution solve_linear_system(const RatMatrix& m, const RatVector& b);

/// Simultaneous solve for several right-hand sides (columns).
/// Returns the solution columns in order, plus det(m).
std::pair<std::vector<RatVector>, RationalFn> solve_columns(const RatMatrix& m,
                                                            const std::vector<RatVector>& columns);

}  // namespace skein
