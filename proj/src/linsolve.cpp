#include "skein/linsolve.hpp"

#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

namespace {

void check_square(const RatMatrix& m) {
    if (m.empty()) throw std::invalid_argument("linear system: empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("linear system: matrix not square");
}

// Reduces (a copy of) m to upper triangular form, applying the same row
// operations to every column of rhs. Returns det(m).
RationalFn eliminate(RatMatrix m, std::vector<RatVector>& rhs, std::vector<RatVector>* out_solutions) {
    const std::size_t n = m.size();
    RationalFn det = RationalFn::one();
    bool negated = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return RationalFn::zero();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            for (auto& column : rhs) std::swap(column[pivot], column[col]);
            negated = !negated;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            RationalFn factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
            for (auto& column : rhs) column[row] -= factor * column[col];
        }
    }
    if (negated) det = -det;
    if (out_solutions) {
        out_solutions->clear();
        for (auto& column : rhs) {
            RatVector x(n);
            for (std::size_t row = n; row-- > 0;) {
                RationalFn acc = column[row];
                for (std::size_t j = row + 1; j < n; ++j) acc -= m[row][j] * x[j];
                x[row] = acc / m[row][row];
            }
            out_solutions->push_back(std::move(x));
        }
    }
    return det;
}

}  // namespace

RationalFn determinant(const RatMatrix& m) {
    check_square(m);
    std::vector<RatVector> none;
    return eliminate(m, none, nullptr);
}

LinearSolution solve_linear_system(const RatMatrix& m, const RatVector& b) {
    check_square(m);
    if (b.size() != m.size()) throw std::invalid_argument("linear system: rhs size mismatch");
    auto [solutions, det] = solve_columns(m, {b});
    return LinearSolution{std::move(solutions.front()), std::move(det)};
}

std::pair<std::vector<RatVector>, RationalFn> solve_columns(const RatMatrix& m,
                                                            const std::vector<RatVector>& columns) {
    check_square(m);
    for (const auto& c : columns)
        if (c.size() != m.size()) throw std::invalid_argument("linear system: rhs size mismatch");
    std::vector<RatVector> rhs = columns;
    std::vector<RatVector> solutions;
    RationalFn det = eliminate(m, rhs, &solutions);
    if (det.is_zero()) throw SingularSystemError("linear system: singular matrix");
    return {std::move(solutions), std::move(det)};
}

}  // namespace skein
