#pragma once

#include <optional>

#include "ptk/rational.hpp"

namespace ptk {

// Exact rank via fraction-free (Bareiss) elimination on a
// denominator-cleared integer copy of A.
int rank(const Mat& A);

// Determinant of a square matrix, Bareiss.
Q det(const Mat& A);

// Some x with A x = b, or nullopt when inconsistent. Underdetermined systems
// get free variables set to 0.
std::optional<Vec> solve_linear(const Mat& A, const Vec& b);

// Reduced row echelon form over Q (helper for bases; rank/det stay on the
// fraction-free path). Zero rows are dropped.
Mat rref(const Mat& A);

// Basis of {x | A x = 0}, one vector per non-pivot column, deterministic.
Mat nullspace(const Mat& A);

// Inverse of a square matrix. Throws when singular.
Mat inverse(const Mat& A);

// -1 for empty input, else rank of {p_i - p_0}.
int affine_dimension(const std::vector<Vec>& points);

// (lambda, lambda^2, ..., lambda^d)
Vec perturbation_vector(const Q& lambda, int d);

// Exact phase-1 simplex (Dantzig pricing, Bland fallback on degenerate
// streaks): is the target a nonnegative combination of the generator rows?
// Backbone of the redundancy pruning in the elimination pipelines.
bool cone_member(const Mat& gens, const Vec& target);

// Keep mask for rows that are NOT nonnegative combinations of the other
// rows plus `extra`; the survivors generate the same cone as the input.
std::vector<bool> cone_irredundant_mask(const Mat& rows, const Mat& extra);

}  // namespace ptk
