#pragma once

#include <optional>
#include <vector>

#include "farq/matrix.hpp"

namespace farq {

// Exact Gaussian elimination over Q. Deliberately separate from the simplex
// kernel in linprog: the cone oracle cross-checks LP results through these
// routines and must not run on the code path it is checking.

// Reduced row echelon form; pivot_cols (if given) receives the pivot column
// of each nonzero row, in order.
Matrix rref(Matrix a, std::vector<int>* pivot_cols = nullptr);

int rank(const Matrix& a);

// Basis of { x : a x = 0 }, one vector per free column, deterministic order.
std::vector<Vec> null_space(const Matrix& a);

// Any exact solution of a x = b, or nullopt when inconsistent.
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);

}  // namespace farq
