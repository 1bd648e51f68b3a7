#pragma once

#include <vector>

#include "farq/farkas.hpp"
#include "farq/interval.hpp"
#include "farq/matrix.hpp"

namespace farq {

// Independent re-verification of every certificate and witness the engines
// emit. These are plain arithmetic checks — no simplex, no search — so an
// accepted object stands on its own. All return false (never throw) on
// malformed result shapes; instance validity is the caller's business.

bool verify_dominance_certificate(const HomogeneousInstance& inst,
                                  const DominanceCertificate& cert);
bool verify_alternative_witness(const HomogeneousInstance& inst, const AlternativeWitness& wit);

bool verify_inhomogeneous_certificate(const InhomogeneousInstance& inst,
                                      const InhomogeneousCertificate& cert);
bool verify_inhomogeneous_witness(const InhomogeneousInstance& inst,
                                  const InhomogeneousWitness& wit);

// Works for both the inhomogeneous and the blockwise engine: a_list/u_list
// are the premise operators and their bounds.
bool verify_inconsistency(const std::vector<Matrix>& a_list, const std::vector<Vec>& u_list,
                          const InconsistentStratum& inc);

bool verify_reconstruction(const Matrix& a, const Matrix& b, const ReconstructionResult& rec);
bool verify_no_reconstruction(const Matrix& a, const Matrix& b, int stratum);

bool verify_matrix_certificate(const MatrixInstance& inst, const MatrixCertificate& cert);
bool verify_matrix_witness(const MatrixInstance& inst, const MatrixWitness& wit);

bool verify_weak_solution(const std::vector<IntervalOperator>& a_intervals,
                          const IntervalOperator& b_interval, const WeakSolution& sol);
bool verify_inclusion_violation(const std::vector<IntervalOperator>& a_intervals,
                                const IntervalOperator& b_interval,
                                const InclusionViolation& viol);

bool verify_factorization(const Matrix& a, const Matrix& b, const Matrix& x,
                          bool require_nonneg);
bool verify_factor_obstruction(const Matrix& a, const Matrix& b, const FactorObstruction& obs);
bool verify_positive_factor_witness(const Matrix& a, const Matrix& b,
                                    const PositiveFactorWitness& wit);

// Cross-checks the cone oracle's positive answer through the LP kernel: a
// conic representation of c by the rows of m is demanded and re-checked.
bool verify_oracle_holds(const Matrix& m, const Vec& c);
bool verify_oracle_direction(const Matrix& m, const Vec& c, const Vec& d);

}  // namespace farq
