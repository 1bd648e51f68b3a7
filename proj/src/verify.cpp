#include "farq/verify.hpp"

#include "farq/linprog.hpp"

namespace farq {

namespace {

bool diag_fits(const DiagOrtho& d, int m) { return static_cast<int>(d.diag.size()) == m; }

bool band_fits(const Band& b, int m) {
    if (b.ambient_dim != m) return false;
    for (int i : b.members)
        if (i < 0 || i >= m) return false;
    return true;
}

bool within(const Matrix& lo, const Matrix& mid, const Matrix& up) {
    for (int i = 0; i < lo.rows(); ++i)
        for (int j = 0; j < lo.cols(); ++j)
            if (mid.at(i, j) < lo.at(i, j) || mid.at(i, j) > up.at(i, j)) return false;
    return true;
}

}  // namespace

bool verify_dominance_certificate(const HomogeneousInstance& inst,
                                  const DominanceCertificate& cert) {
    const int m = inst.b.rows();
    if (cert.alphas.size() != inst.a_list.size()) return false;
    Matrix sum(m, inst.b.cols());
    for (std::size_t k = 0; k < cert.alphas.size(); ++k) {
        if (inst.a_list[k].rows() != m || inst.a_list[k].cols() != inst.b.cols()) return false;
        if (!diag_fits(cert.alphas[k], m) || !cert.alphas[k].is_positive()) return false;
        sum = sum + scale_rows(cert.alphas[k], inst.a_list[k]);
    }
    return sum == inst.b;
}

bool verify_alternative_witness(const HomogeneousInstance& inst, const AlternativeWitness& wit) {
    const int m = inst.b.rows();
    if (static_cast<int>(wit.x.size()) != inst.b.cols()) return false;
    if (!band_fits(wit.b, m) || !band_fits(wit.b_prime, m)) return false;
    if (wit.b_prime.members.empty() || !band_leq(wit.b_prime, wit.b)) return false;
    for (const auto& a : inst.a_list) {
        if (a.rows() != m || a.cols() != inst.b.cols()) return false;
        const Vec ax = a.apply(wit.x);
        for (int i : wit.b.members)
            if (ax[i] > 0) return false;
    }
    const Vec bx = inst.b.apply(wit.x);
    bool strict = false;
    for (int i : wit.b_prime.members) {
        if (bx[i] < 0) return false;
        if (bx[i] > 0) strict = true;
    }
    return strict;
}

bool verify_inhomogeneous_certificate(const InhomogeneousInstance& inst,
                                      const InhomogeneousCertificate& cert) {
    if (!verify_dominance_certificate(inst.base, DominanceCertificate{cert.alphas}))
        return false;
    const int m = inst.base.b.rows();
    if (inst.u_list.size() != inst.base.a_list.size()) return false;
    if (static_cast<int>(inst.v.size()) != m) return false;
    for (const auto& u : inst.u_list)
        if (static_cast<int>(u.size()) != m) return false;
    for (int i = 0; i < m; ++i) {
        Rat used = 0;
        for (std::size_t k = 0; k < cert.alphas.size(); ++k)
            used += cert.alphas[k].diag[i] * inst.u_list[k][i];
        if (used > inst.v[i]) return false;
    }
    return true;
}

bool verify_inhomogeneous_witness(const InhomogeneousInstance& inst,
                                  const InhomogeneousWitness& wit) {
    const int m = inst.base.b.rows();
    if (static_cast<int>(wit.x.size()) != inst.base.b.cols()) return false;
    if (!band_fits(wit.b, m) || wit.b.members.empty()) return false;
    if (inst.u_list.size() != inst.base.a_list.size()) return false;
    if (static_cast<int>(inst.v.size()) != m) return false;
    for (std::size_t k = 0; k < inst.base.a_list.size(); ++k) {
        const Vec ax = inst.base.a_list[k].apply(wit.x);
        for (int i : wit.b.members)
            if (ax[i] > inst.u_list[k][i]) return false;
    }
    const Vec bx = inst.base.b.apply(wit.x);
    for (int i : wit.b.members)
        if (bx[i] <= inst.v[i]) return false;
    return true;
}

bool verify_inconsistency(const std::vector<Matrix>& a_list, const std::vector<Vec>& u_list,
                          const InconsistentStratum& inc) {
    if (a_list.empty() || a_list.size() != u_list.size()) return false;
    const int m = a_list[0].rows(), n = a_list[0].cols();
    if (!band_fits(inc.where, m) || inc.where.members.empty()) return false;
    if (inc.proofs.size() != inc.where.members.size()) return false;
    std::size_t p = 0;
    for (int i : inc.where.members) {  // set iteration order is ascending
        const Vec& y = inc.proofs[p++];
        if (y.size() != a_list.size()) return false;
        Vec agg(n, rat(0));
        Rat budget = 0;
        for (std::size_t k = 0; k < a_list.size(); ++k) {
            if (y[k] < 0) return false;
            agg = add(agg, scale(y[k], a_list[k].row(i)));
            budget += y[k] * u_list[k][i];
        }
        if (!is_zero(agg) || budget >= 0) return false;
    }
    return true;
}

bool verify_reconstruction(const Matrix& a, const Matrix& b, const ReconstructionResult& rec) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (!diag_fits(rec.alpha, a.rows()) || !band_fits(rec.kappa, a.rows())) return false;
    if (!(scale_rows(rec.alpha, a) == b)) return false;
    for (int i = 0; i < a.rows(); ++i) {
        const bool in_kappa = rec.kappa.members.count(i) > 0;
        if (in_kappa && rec.alpha.diag[i] < 0) return false;
        if (!in_kappa && rec.alpha.diag[i] > 0) return false;
    }
    return true;
}

bool verify_no_reconstruction(const Matrix& a, const Matrix& b, int stratum) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (stratum < 0 || stratum >= a.rows()) return false;
    const Vec ra = a.row(stratum), rb = b.row(stratum);
    int lead = -1;
    for (int j = 0; j < static_cast<int>(ra.size()); ++j)
        if (ra[j] != 0) {
            lead = j;
            break;
        }
    if (lead < 0) return !is_zero(rb);
    return !(scale(rb[lead] / ra[lead], ra) == rb);
}

bool verify_matrix_certificate(const MatrixInstance& inst, const MatrixCertificate& cert) {
    const std::size_t s = inst.b_blocks.size(), t = inst.a_blocks.size();
    if (s == 0 || inst.v.size() != s || inst.u.size() != t) return false;
    const int m = inst.b_blocks[0].rows(), n = inst.b_blocks[0].cols();
    for (const auto& blk : inst.a_blocks)
        if (blk.rows() != m || blk.cols() != n) return false;
    for (const auto& blk : inst.b_blocks)
        if (blk.rows() != m || blk.cols() != n) return false;
    if (cert.grid.size() != s) return false;
    for (std::size_t j = 0; j < s; ++j) {
        if (cert.grid[j].size() != t) return false;
        if (static_cast<int>(inst.v[j].size()) != m) return false;
        Matrix sum(m, n);
        for (std::size_t l = 0; l < t; ++l) {
            if (static_cast<int>(inst.u[l].size()) != m) return false;
            if (!diag_fits(cert.grid[j][l], m) || !cert.grid[j][l].is_positive()) return false;
            sum = sum + scale_rows(cert.grid[j][l], inst.a_blocks[l]);
        }
        if (!(sum == inst.b_blocks[j])) return false;
        for (int i = 0; i < m; ++i) {
            Rat used = 0;
            for (std::size_t l = 0; l < t; ++l) used += cert.grid[j][l].diag[i] * inst.u[l][i];
            if (used > inst.v[j][i]) return false;
        }
    }
    return true;
}

bool verify_matrix_witness(const MatrixInstance& inst, const MatrixWitness& wit) {
    if (inst.b_blocks.empty() || inst.u.size() != inst.a_blocks.size()) return false;
    if (inst.v.size() != inst.b_blocks.size()) return false;
    const int m = inst.b_blocks[0].rows();
    if (wit.block < 0 || wit.block >= static_cast<int>(inst.b_blocks.size())) return false;
    if (static_cast<int>(wit.x.size()) != inst.b_blocks[0].cols()) return false;
    if (!band_fits(wit.b, m) || wit.b.members.empty()) return false;
    for (std::size_t l = 0; l < inst.a_blocks.size(); ++l) {
        const Vec ax = inst.a_blocks[l].apply(wit.x);
        for (int i : wit.b.members)
            if (ax[i] > inst.u[l][i]) return false;
    }
    const Vec bx = inst.b_blocks[wit.block].apply(wit.x);
    for (int i : wit.b.members)
        if (bx[i] <= inst.v[wit.block][i]) return false;
    return true;
}

bool verify_weak_solution(const std::vector<IntervalOperator>& a_intervals,
                          const IntervalOperator& b_interval, const WeakSolution& sol) {
    const int m = b_interval.lower.rows(), n = b_interval.lower.cols();
    if (sol.alphas.size() != a_intervals.size()) return false;
    if (sol.a_selections.size() != a_intervals.size()) return false;
    if (sol.b_selection.rows() != m || sol.b_selection.cols() != n) return false;
    Matrix sum(m, n);
    for (std::size_t k = 0; k < a_intervals.size(); ++k) {
        if (!diag_fits(sol.alphas[k], m) || !sol.alphas[k].is_positive()) return false;
        if (sol.a_selections[k].rows() != m || sol.a_selections[k].cols() != n) return false;
        if (!within(a_intervals[k].lower, sol.a_selections[k], a_intervals[k].upper))
            return false;
        sum = sum + scale_rows(sol.alphas[k], sol.a_selections[k]);
    }
    if (!within(b_interval.lower, sol.b_selection, b_interval.upper)) return false;
    return sum == sol.b_selection;
}

bool verify_inclusion_violation(const std::vector<IntervalOperator>& a_intervals,
                                const IntervalOperator& b_interval,
                                const InclusionViolation& viol) {
    const int m = b_interval.lower.rows();
    if (static_cast<int>(viol.x.size()) != b_interval.lower.cols()) return false;
    if (!band_fits(viol.b, m) || viol.b.members.empty()) return false;
    const Vec flip = neg(viol.x);
    for (const auto& a : a_intervals) {
        const Vec pa = sublinear_apply(a, flip);
        for (int i : viol.b.members)
            if (pa[i] > 0) return false;
    }
    const Vec pb = sublinear_apply(b_interval, viol.x);
    for (int i : viol.b.members)
        if (pb[i] >= 0) return false;
    return true;
}

bool verify_factorization(const Matrix& a, const Matrix& b, const Matrix& x,
                          bool require_nonneg) {
    if (a.cols() != b.cols()) return false;
    if (x.rows() != b.rows() || x.cols() != a.rows()) return false;
    if (require_nonneg)
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j)
                if (x.at(i, j) < 0) return false;
    return x * a == b;
}

bool verify_factor_obstruction(const Matrix& a, const Matrix& b, const FactorObstruction& obs) {
    if (a.cols() != b.cols() || static_cast<int>(obs.x.size()) != a.cols()) return false;
    if (obs.row < 0 || obs.row >= b.rows()) return false;
    return is_zero(a.apply(obs.x)) && b.apply(obs.x)[obs.row] > 0;
}

bool verify_positive_factor_witness(const Matrix& a, const Matrix& b,
                                    const PositiveFactorWitness& wit) {
    if (a.cols() != b.cols() || static_cast<int>(wit.x.size()) != a.cols()) return false;
    if (wit.row < 0 || wit.row >= b.rows()) return false;
    for (const auto& e : a.apply(wit.x))
        if (e > 0) return false;
    return b.apply(wit.x)[wit.row] > 0;
}

bool verify_oracle_holds(const Matrix& m, const Vec& c) {
    std::vector<Vec> gens;
    gens.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) gens.push_back(m.row(i));
    const auto res = conic_membership(gens, c);
    const auto* mult = std::get_if<ConicMultipliers>(&res);
    if (!mult || mult->alphas.size() != gens.size()) return false;
    Vec agg(c.size(), rat(0));
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (mult->alphas[k] < 0) return false;
        agg = add(agg, scale(mult->alphas[k], gens[k]));
    }
    return agg == c;
}

bool verify_oracle_direction(const Matrix& m, const Vec& c, const Vec& d) {
    if (d.size() != c.size() || static_cast<int>(d.size()) != m.cols()) return false;
    if (is_zero(d)) return false;
    for (const auto& e : m.apply(d))
        if (e > 0) return false;
    return dot(c, d) > 0;
}

}  // namespace farq
