#pragma once

#include <variant>
#include <vector>

#include "farq/exec.hpp"
#include "farq/lattice.hpp"
#include "farq/linprog.hpp"

namespace farq {

// Homogeneous dominance. The question: on every band where A_1 x, ..., A_N x
// are all <= 0, is Bx <= 0 too? Decided one stratum (coordinate) at a time;
// a certificate aggregates per-stratum conic multipliers into diagonal
// operators, a failed stratum yields a separating point.
struct HomogeneousInstance {
    std::vector<Matrix> a_list;  // N operators, each m x n
    Matrix b;                    // m x n
};

struct DominanceCertificate {
    std::vector<DiagOrtho> alphas;  // nonnegative; sum_k diag(alpha_k) A_k = B
};

struct AlternativeWitness {
    Vec x;
    Band b;        // (A_k x)_i <= 0 for all k on this band
    Band b_prime;  // subset of b; Bx >= 0 here with > 0 on some member
};

using DominanceResult = std::variant<DominanceCertificate, AlternativeWitness>;

DominanceResult decide_dominance(const HomogeneousInstance& inst, const ExecPolicy& exec = {});

// Inhomogeneous version: A_k x <= u_k simultaneously, conclusion Bx <= v.
struct InhomogeneousInstance {
    HomogeneousInstance base;
    std::vector<Vec> u_list;  // N points of length m
    Vec v;                    // length m
};

struct InhomogeneousCertificate {
    // Nonnegative; sum_k diag(alpha_k) A_k = B and sum_k diag(alpha_k) u_k <= v.
    std::vector<DiagOrtho> alphas;
};

struct InhomogeneousWitness {
    Vec x;
    Band b;  // singleton {i}: (A_k x)_i <= u_{k,i} for all k but (Bx)_i > v_i
};

// Strata whose own inequality systems are unsatisfiable. The certificate and
// witness branches are only equivalent over satisfiable strata, so these are
// surfaced as a separate outcome, each with an aggregation proof:
// y >= 0 with sum_k y_k row_i(A_k) = 0 and sum_k y_k u_{k,i} < 0.
struct InconsistentStratum {
    Band where;
    std::vector<Vec> proofs;  // one per member of `where`, in ascending order
};

using InhomogeneousResult =
    std::variant<InhomogeneousCertificate, InhomogeneousWitness, InconsistentStratum>;

InhomogeneousResult decide_inhomogeneous(const InhomogeneousInstance& inst,
                                         const ExecPolicy& exec = {});

// Signed reconstruction: a diagonal alpha with diag(alpha) A = B, plus the
// band kappa collecting the coordinates where alpha is nonnegative.
struct ReconstructionResult {
    DiagOrtho alpha;
    Band kappa;
};

struct NoReconstruction {
    int stratum;  // first row where no single ratio maps row(A) onto row(B)
};

std::variant<ReconstructionResult, NoReconstruction> reconstruct(const Matrix& a, const Matrix& b);

// Blockwise dominance: an s x t grid X of nonnegative diagonal multipliers
// with X A = B blockwise and X u <= v. Dimensional reading: the t blocks of A
// map into Y^t, the s blocks of B into Y^s, u lives in Y^t and v in Y^s.
struct MatrixInstance {
    std::vector<Matrix> a_blocks;  // t operators, m x n
    std::vector<Matrix> b_blocks;  // s operators, m x n
    std::vector<Vec> u;            // t points
    std::vector<Vec> v;            // s points
};

struct MatrixCertificate {
    std::vector<std::vector<DiagOrtho>> grid;  // grid[j][l], s x t, nonnegative
};

struct MatrixWitness {
    Vec x;
    Band b;     // singleton {i}
    int block;  // violated output block j: (B_j x)_i > v_{j,i}
};

using MatrixResult = std::variant<MatrixCertificate, MatrixWitness, InconsistentStratum>;

MatrixResult decide_matrix_dominance(const MatrixInstance& inst, const ExecPolicy& exec = {});

// One-generator scalar case: g = alpha f with alpha >= 0, or x with
// f.x <= 0 < g.x.
struct ScalarMultiplier {
    Rat alpha;
};
struct ScalarWitness {
    Vec x;
};

std::variant<ScalarMultiplier, ScalarWitness> scalar_single(const Vec& f, const Vec& g);

// Unrestricted factorization X A = B; solvable exactly when ker A is
// contained in ker B, and the obstruction is a kernel vector of A that B
// does not annihilate.
struct FactorObstruction {
    Vec x;    // A x = 0, (B x)_row != 0 (normalized to > 0)
    int row;
};

std::variant<Matrix, FactorObstruction> factor_through(const Matrix& a, const Matrix& b);

// Nonnegative factorization X A = B with X >= 0 entrywise; the witness
// breaks the inclusion {x : Ax <= 0} subset of {x : Bx <= 0} at `row`.
struct PositiveFactorWitness {
    Vec x;  // A x <= 0 componentwise, (B x)_row > 0
    int row;
};

std::variant<Matrix, PositiveFactorWitness> factor_positive(const Matrix& a, const Matrix& b);

}  // namespace farq
