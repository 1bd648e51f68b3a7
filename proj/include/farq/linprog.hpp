#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "farq/lattice.hpp"
#include "farq/matrix.hpp"

namespace farq {

// Exact rational linear programming: two-phase primal simplex with Bland's
// anti-cycling rule. Every outcome carries enough data to be re-verified by
// plain arithmetic with zero tolerance.

struct Constraint {
    Vec coeffs;
    Rel rel = Rel::le;
    Rat rhs = 0;
};

enum class Sense { minimize, maximize };

struct Objective {
    Vec coeffs;
    Sense sense = Sense::minimize;
};

struct LinearProgram {
    int num_vars = 0;
    std::vector<Constraint> constraints;
    std::optional<Objective> objective;
    std::vector<bool> nonneg;  // per variable; empty means all free
};

struct SolveStats {
    long pivots = 0;
};

struct Feasible {
    Vec point;
};

// `duals` holds one multiplier per constraint and certifies optimality:
// for minimize, duals_i <= 0 on <=-rows, >= 0 on >=-rows, free on =-rows,
// the reduced vector c - A^T y is >= 0 on nonnegative variables and 0 on
// free ones, and y^T rhs equals `value` (strong duality); for maximize the
// row signs and the reduced-vector sign flip.
struct Optimal {
    Vec point;
    Rat value;
    Vec duals;
};

// One multiplier per constraint: >= 0 on <=-rows, <= 0 on >=-rows, free on
// =-rows; the aggregated row sum_i y_i * coeffs_i vanishes on free variables,
// is >= 0 on nonnegative ones, and sum_i y_i * rhs_i < 0.
struct Infeasible {
    Vec multipliers;
};

struct Unbounded {
    Vec point;  // feasible
    Vec ray;    // recession direction strictly improving the objective
};

using LPOutcome = std::variant<Feasible, Optimal, Infeasible, Unbounded>;

LPOutcome solve(const LinearProgram& lp, SolveStats* stats = nullptr);

// Exact membership of `target` in the conic hull of `generators`:
// either multipliers alpha >= 0 with sum alpha_k generators[k] = target,
// or a separating y with generators[k] . y <= 0 for all k and target . y > 0.
struct ConicMultipliers {
    Vec alphas;
};

struct SeparatingVector {
    Vec y;
};

using ConicResult = std::variant<ConicMultipliers, SeparatingVector>;

ConicResult conic_membership(const std::vector<Vec>& generators, const Vec& target,
                             SolveStats* stats = nullptr);

}  // namespace farq
