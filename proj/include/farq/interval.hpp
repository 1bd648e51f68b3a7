#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "farq/errors.hpp"
#include "farq/exec.hpp"
#include "farq/lattice.hpp"
#include "farq/matrix.hpp"

namespace farq {

// An order interval of operators. In this finite setting every interval
// operator is adapted: the width splits into its single-entry addends, see
// adapted_decomposition.
struct IntervalOperator {
    Matrix lower;
    Matrix upper;
};

// P(x) = upper x_+ - lower x_-; the sublinear envelope of the interval.
Vec sublinear_apply(const IntervalOperator& t, const Vec& x);

// The single-nonzero-entry matrices of upper - lower, row-major order;
// pairwise disjoint, summing back to the width exactly.
std::vector<Matrix> adapted_decomposition(const IntervalOperator& t);

// A selection B_sel = sum_k diag(alpha_k) A_sel_k with every selection drawn
// from its interval and alpha_k nonnegative diagonal.
struct WeakSolution {
    std::vector<DiagOrtho> alphas;
    std::vector<Matrix> a_selections;
    Matrix b_selection;
};

struct NoWeakSolution {
    int stratum;  // first coordinate whose selection system is infeasible
};

using WeakSolutionResult = std::variant<WeakSolution, NoWeakSolution>;

WeakSolutionResult find_weak_solution(const std::vector<IntervalOperator>& a_intervals,
                                      const IntervalOperator& b_interval,
                                      const ExecPolicy& exec = {});

// Inclusion test for the equivalent sublinear condition: on every band,
// wherever all P_{A_k}(-x) fall nonpositive, P_B(x) must be nonnegative.
struct InclusionHolds {};

struct InclusionViolation {
    Vec x;
    Band b;  // singleton {i}: (P_{A_k}(-x))_i <= 0 for all k, (P_B(x))_i < 0
};

using InclusionResult = std::variant<InclusionHolds, InclusionViolation>;

// Enumerates the 2^n orthants of the domain; throws BudgetError when n
// exceeds orthant_budget rather than silently attempting it.
InclusionResult check_interval_inclusion(const std::vector<IntervalOperator>& a_intervals,
                                         const IntervalOperator& b_interval,
                                         int orthant_budget = 12, const ExecPolicy& exec = {});

}  // namespace farq
