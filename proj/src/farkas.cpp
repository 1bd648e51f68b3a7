#include "farq/farkas.hpp"

#include <optional>
#include <stdexcept>

#include "farq/gauss.hpp"

namespace farq {

namespace {

void check_operator(const Matrix& op, int m, int n, const char* what) {
    if (op.rows() != m || op.cols() != n)
        throw std::invalid_argument(std::string(what) + ": operator dimension mismatch");
}

void check_homogeneous(const HomogeneousInstance& inst) {
    if (inst.b.rows() < 1 || inst.b.cols() < 1)
        throw std::invalid_argument("dominance instance needs positive dimensions");
    for (const auto& a : inst.a_list)
        check_operator(a, inst.b.rows(), inst.b.cols(), "dominance instance");
}

// Is { x : rows[k] . x <= bounds[k] } empty? Returns the aggregation proof
// when it is: y >= 0, sum y_k rows[k] = 0, sum y_k bounds[k] < 0.
std::optional<Vec> stratum_inconsistency(const std::vector<Vec>& rows, const Vec& bounds, int n) {
    if (rows.empty()) return std::nullopt;
    LinearProgram lp;
    lp.num_vars = n;
    for (size_t k = 0; k < rows.size(); ++k)
        lp.constraints.push_back({rows[k], Rel::le, bounds[k]});
    auto out = solve(lp);
    if (auto* inf = std::get_if<Infeasible>(&out)) return std::move(inf->multipliers);
    return std::nullopt;
}

// Nonnegative multipliers with sum_k alpha_k rows[k] = target and
// sum_k alpha_k bounds[k] <= budget, if any exist.
std::optional<Vec> stratum_multipliers(const std::vector<Vec>& rows, const Vec& bounds,
                                       const Vec& target, const Rat& budget) {
    const int count = static_cast<int>(rows.size());
    const int n = static_cast<int>(target.size());
    if (count == 0) {
        if (is_zero(target) && 0 <= budget) return Vec{};
        return std::nullopt;
    }
    LinearProgram lp;
    lp.num_vars = count;
    lp.nonneg.assign(count, true);
    for (int j = 0; j < n; ++j) {
        Constraint con;
        con.coeffs.resize(count);
        for (int k = 0; k < count; ++k) con.coeffs[k] = rows[k][j];
        con.rel = Rel::eq;
        con.rhs = target[j];
        lp.constraints.push_back(std::move(con));
    }
    Constraint blg;
    blg.coeffs = bounds;
    blg.rel = Rel::le;
    blg.rhs = budget;
    lp.constraints.push_back(std::move(blg));
    auto out = solve(lp);
    if (auto* feas = std::get_if<Feasible>(&out)) return std::move(feas->point);
    return std::nullopt;
}

// A point of { x : rows[k] . x <= bounds[k] } with target . x > threshold.
// Callers guarantee the region is nonempty and that no multiplier bound
// exists, so by duality the maximum of target . x exceeds threshold (or is
// unbounded, in which case a finite step along the ray is taken).
Vec stratum_violation(const std::vector<Vec>& rows, const Vec& bounds, const Vec& target,
                      const Rat& threshold, int n) {
    LinearProgram lp;
    lp.num_vars = n;
    for (size_t k = 0; k < rows.size(); ++k)
        lp.constraints.push_back({rows[k], Rel::le, bounds[k]});
    lp.objective = Objective{target, Sense::maximize};
    auto out = solve(lp);
    if (auto* opt = std::get_if<Optimal>(&out)) {
        if (opt->value > threshold) return std::move(opt->point);
        throw std::logic_error("violation search contradicts duality");
    }
    auto& ub = std::get<Unbounded>(out);
    const Rat at_point = dot(target, ub.point);
    const Rat drift = dot(target, ub.ray);  // > 0 along an improving ray
    Rat step = (threshold - at_point) / drift;
    if (step < 0) step = 0;
    step += 1;
    return add(ub.point, scale(step, ub.ray));
}

}  // namespace

DominanceResult decide_dominance(const HomogeneousInstance& inst, const ExecPolicy& exec) {
    check_homogeneous(inst);
    const int m = inst.b.rows();
    const int count = static_cast<int>(inst.a_list.size());

    std::vector<ConicResult> per_stratum(m, ConicMultipliers{});
    for_each_index(m, exec, [&](int i) {
        std::vector<Vec> gens(count);
        for (int k = 0; k < count; ++k) gens[k] = inst.a_list[k].row(i);
        per_stratum[i] = conic_membership(gens, inst.b.row(i));
    });

    for (int i = 0; i < m; ++i)
        if (auto* sep = std::get_if<SeparatingVector>(&per_stratum[i]))
            return AlternativeWitness{std::move(sep->y), band_singleton(m, i),
                                      band_singleton(m, i)};

    DominanceCertificate cert;
    cert.alphas.assign(count, DiagOrtho{Vec(m, rat(0))});
    for (int i = 0; i < m; ++i) {
        const auto& mult = std::get<ConicMultipliers>(per_stratum[i]);
        for (int k = 0; k < count; ++k) cert.alphas[k].diag[i] = mult.alphas[k];
    }
    return cert;
}

namespace {

void check_inhomogeneous(const InhomogeneousInstance& inst) {
    check_homogeneous(inst.base);
    const int m = inst.base.b.rows();
    if (inst.u_list.size() != inst.base.a_list.size())
        throw std::invalid_argument("inhomogeneous instance: one bound per operator required");
    for (const auto& u : inst.u_list)
        if (static_cast<int>(u.size()) != m)
            throw std::invalid_argument("inhomogeneous instance: bound length mismatch");
    if (static_cast<int>(inst.v.size()) != m)
        throw std::invalid_argument("inhomogeneous instance: target bound length mismatch");
}

struct StratumDecision {
    std::optional<Vec> inconsistency;
    std::optional<Vec> multipliers;
    std::optional<Vec> violation;
};

}  // namespace

InhomogeneousResult decide_inhomogeneous(const InhomogeneousInstance& inst,
                                         const ExecPolicy& exec) {
    check_inhomogeneous(inst);
    const int m = inst.base.b.rows();
    const int n = inst.base.b.cols();
    const int count = static_cast<int>(inst.base.a_list.size());

    std::vector<StratumDecision> per_stratum(m);
    for_each_index(m, exec, [&](int i) {
        std::vector<Vec> rows(count);
        Vec bounds(count);
        for (int k = 0; k < count; ++k) {
            rows[k] = inst.base.a_list[k].row(i);
            bounds[k] = inst.u_list[k][i];
        }
        auto& slot = per_stratum[i];
        slot.inconsistency = stratum_inconsistency(rows, bounds, n);
        if (slot.inconsistency) return;
        slot.multipliers = stratum_multipliers(rows, bounds, inst.base.b.row(i), inst.v[i]);
        if (slot.multipliers) return;
        slot.violation = stratum_violation(rows, bounds, inst.base.b.row(i), inst.v[i], n);
    });

    InconsistentStratum bad{band_empty(m), {}};
    for (int i = 0; i < m; ++i)
        if (per_stratum[i].inconsistency) {
            bad.where.members.insert(i);
            bad.proofs.push_back(std::move(*per_stratum[i].inconsistency));
        }
    if (!bad.where.members.empty()) return bad;

    for (int i = 0; i < m; ++i)
        if (per_stratum[i].violation)
            return InhomogeneousWitness{std::move(*per_stratum[i].violation),
                                        band_singleton(m, i)};

    InhomogeneousCertificate cert;
    cert.alphas.assign(count, DiagOrtho{Vec(m, rat(0))});
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < count; ++k) cert.alphas[k].diag[i] = (*per_stratum[i].multipliers)[k];
    return cert;
}

std::variant<ReconstructionResult, NoReconstruction> reconstruct(const Matrix& a,
                                                                 const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("reconstruct: dimension mismatch");
    const int m = a.rows();
    const int n = a.cols();

    ReconstructionResult res{DiagOrtho{Vec(m, rat(0))}, band_empty(m)};
    for (int i = 0; i < m; ++i) {
        int lead = -1;
        for (int j = 0; j < n; ++j)
            if (a.at(i, j) != 0) {
                lead = j;
                break;
            }
        Rat ratio = 0;  // zero rows of A pair with zero rows of B
        if (lead >= 0) ratio = b.at(i, lead) / a.at(i, lead);
        for (int j = 0; j < n; ++j)
            if (b.at(i, j) != ratio * a.at(i, j)) return NoReconstruction{i};
        res.alpha.diag[i] = ratio;
        if (ratio >= 0) res.kappa.members.insert(i);
    }
    return res;
}

namespace {

void check_matrix_instance(const MatrixInstance& inst) {
    if (inst.a_blocks.empty() || inst.b_blocks.empty())
        throw std::invalid_argument("matrix instance needs at least one block per side");
    const int m = inst.a_blocks[0].rows();
    const int n = inst.a_blocks[0].cols();
    if (m < 1 || n < 1) throw std::invalid_argument("matrix instance needs positive dimensions");
    for (const auto& blk : inst.a_blocks) check_operator(blk, m, n, "matrix instance");
    for (const auto& blk : inst.b_blocks) check_operator(blk, m, n, "matrix instance");
    if (inst.u.size() != inst.a_blocks.size() || inst.v.size() != inst.b_blocks.size())
        throw std::invalid_argument("matrix instance: one bound per block required");
    for (const auto& u : inst.u)
        if (static_cast<int>(u.size()) != m)
            throw std::invalid_argument("matrix instance: bound length mismatch");
    for (const auto& v : inst.v)
        if (static_cast<int>(v.size()) != m)
            throw std::invalid_argument("matrix instance: bound length mismatch");
}

}  // namespace

MatrixResult decide_matrix_dominance(const MatrixInstance& inst, const ExecPolicy& exec) {
    check_matrix_instance(inst);
    const int m = inst.a_blocks[0].rows();
    const int n = inst.a_blocks[0].cols();
    const int t = static_cast<int>(inst.a_blocks.size());
    const int s = static_cast<int>(inst.b_blocks.size());

    struct StratumGrid {
        std::optional<Vec> inconsistency;
        std::vector<std::optional<Vec>> block_multipliers;  // per output block
        std::optional<Vec> violation;
        int violated_block = -1;
    };
    std::vector<StratumGrid> per_stratum(m);

    for_each_index(m, exec, [&](int i) {
        std::vector<Vec> rows(t);
        Vec bounds(t);
        for (int l = 0; l < t; ++l) {
            rows[l] = inst.a_blocks[l].row(i);
            bounds[l] = inst.u[l][i];
        }
        auto& slot = per_stratum[i];
        slot.inconsistency = stratum_inconsistency(rows, bounds, n);
        if (slot.inconsistency) return;
        slot.block_multipliers.resize(s);
        for (int j = 0; j < s; ++j) {
            slot.block_multipliers[j] =
                stratum_multipliers(rows, bounds, inst.b_blocks[j].row(i), inst.v[j][i]);
            if (!slot.block_multipliers[j]) {
                slot.violation =
                    stratum_violation(rows, bounds, inst.b_blocks[j].row(i), inst.v[j][i], n);
                slot.violated_block = j;
                return;
            }
        }
    });

    InconsistentStratum bad{band_empty(m), {}};
    for (int i = 0; i < m; ++i)
        if (per_stratum[i].inconsistency) {
            bad.where.members.insert(i);
            bad.proofs.push_back(std::move(*per_stratum[i].inconsistency));
        }
    if (!bad.where.members.empty()) return bad;

    for (int i = 0; i < m; ++i)
        if (per_stratum[i].violation)
            return MatrixWitness{std::move(*per_stratum[i].violation), band_singleton(m, i),
                                 per_stratum[i].violated_block};

    MatrixCertificate cert;
    cert.grid.assign(s, std::vector<DiagOrtho>(t, DiagOrtho{Vec(m, rat(0))}));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < s; ++j)
            for (int l = 0; l < t; ++l)
                cert.grid[j][l].diag[i] = (*per_stratum[i].block_multipliers[j])[l];
    return cert;
}

std::variant<ScalarMultiplier, ScalarWitness> scalar_single(const Vec& f, const Vec& g) {
    if (f.size() != g.size()) throw std::invalid_argument("scalar_single: length mismatch");
    if (is_zero(f) && is_zero(g)) return ScalarMultiplier{rat(0)};
    auto res = conic_membership({f}, g);
    if (auto* mult = std::get_if<ConicMultipliers>(&res)) return ScalarMultiplier{mult->alphas[0]};
    return ScalarWitness{std::move(std::get<SeparatingVector>(res).y)};
}

std::variant<Matrix, FactorObstruction> factor_through(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("factor_through: domain mismatch");
    const Matrix at = a.transpose();
    Matrix x(b.rows(), a.rows());
    for (int j = 0; j < b.rows(); ++j) {
        auto w = solve_linear(at, b.row(j));
        if (!w) {
            // Row j of B is outside the row space of A, so some kernel basis
            // vector of A is not orthogonal to it.
            for (auto& z : null_space(a)) {
                const Rat val = dot(b.row(j), z);
                if (val == 0) continue;
                if (val < 0) z = neg(z);
                return FactorObstruction{std::move(z), j};
            }
            throw std::logic_error("unsolvable row with no kernel obstruction");
        }
        x.set_row(j, *w);
    }
    return x;
}

std::variant<Matrix, PositiveFactorWitness> factor_positive(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("factor_positive: domain mismatch");
    std::vector<Vec> gens(a.rows());
    for (int l = 0; l < a.rows(); ++l) gens[l] = a.row(l);
    Matrix x(b.rows(), a.rows());
    for (int j = 0; j < b.rows(); ++j) {
        auto res = conic_membership(gens, b.row(j));
        if (auto* sep = std::get_if<SeparatingVector>(&res))
            return PositiveFactorWitness{std::move(sep->y), j};
        x.set_row(j, std::get<ConicMultipliers>(res).alphas);
    }
    return x;
}

}  // namespace farq
