#include "farq/interval.hpp"

#include <optional>

#include "farq/linprog.hpp"

namespace farq {

namespace {

void check_interval(const IntervalOperator& t) {
    if (t.lower.rows() != t.upper.rows() || t.lower.cols() != t.upper.cols())
        throw std::invalid_argument("interval operator: bound shapes differ");
    for (int i = 0; i < t.lower.rows(); ++i)
        for (int j = 0; j < t.lower.cols(); ++j)
            if (t.lower.at(i, j) > t.upper.at(i, j))
                throw std::invalid_argument("interval operator: lower exceeds upper");
}

void check_family(const std::vector<IntervalOperator>& a_intervals,
                  const IntervalOperator& b_interval) {
    check_interval(b_interval);
    if (b_interval.lower.rows() < 1 || b_interval.lower.cols() < 1)
        throw std::invalid_argument("interval instance needs positive dimensions");
    for (const auto& t : a_intervals) {
        check_interval(t);
        if (t.lower.rows() != b_interval.lower.rows() ||
            t.lower.cols() != b_interval.lower.cols())
            throw std::invalid_argument("interval instance: operator shapes differ");
    }
}

}  // namespace

Vec sublinear_apply(const IntervalOperator& t, const Vec& x) {
    check_interval(t);
    const auto [pos, neg] = pos_neg_parts(x);
    return sub(t.upper.apply(pos), t.lower.apply(neg));
}

std::vector<Matrix> adapted_decomposition(const IntervalOperator& t) {
    check_interval(t);
    const Matrix width = t.upper - t.lower;
    std::vector<Matrix> addends;
    for (int i = 0; i < width.rows(); ++i)
        for (int j = 0; j < width.cols(); ++j) {
            if (width.at(i, j) == 0) continue;
            Matrix single(width.rows(), width.cols());
            single.at(i, j) = width.at(i, j);
            addends.push_back(std::move(single));
        }
    return addends;
}

WeakSolutionResult find_weak_solution(const std::vector<IntervalOperator>& a_intervals,
                                      const IntervalOperator& b_interval,
                                      const ExecPolicy& exec) {
    check_family(a_intervals, b_interval);
    const int m = b_interval.lower.rows();
    const int n = b_interval.lower.cols();
    const int count = static_cast<int>(a_intervals.size());

    // Per stratum i, a feasibility LP in (alpha_k, c_k, b): c_k stands for
    // alpha_k times the selected row of A_k, which linearizes the bilinear
    // selection because scaling an interval row by alpha >= 0 scales its
    // bounds. Variable layout: alphas, then the c_k blocks, then b.
    const int alpha_at = 0;
    const auto c_at = [&](int k, int j) { return count + k * n + j; };
    const auto b_at = [&](int j) { return count + count * n + j; };
    const int total = count + count * n + n;

    struct StratumOut {
        bool feasible = false;
        Vec point;
    };
    std::vector<StratumOut> per_stratum(m);

    for_each_index(m, exec, [&](int i) {
        LinearProgram lp;
        lp.num_vars = total;
        lp.nonneg.assign(total, false);
        for (int k = 0; k < count; ++k) lp.nonneg[alpha_at + k] = true;
        auto blank = [&] { return Vec(total, rat(0)); };
        for (int k = 0; k < count; ++k)
            for (int j = 0; j < n; ++j) {
                Vec lo = blank();  // alpha_k lowA_k[i][j] - c_kj <= 0
                lo[alpha_at + k] = a_intervals[k].lower.at(i, j);
                lo[c_at(k, j)] = rat(-1);
                lp.constraints.push_back({std::move(lo), Rel::le, rat(0)});
                Vec hi = blank();  // c_kj - alpha_k upA_k[i][j] <= 0
                hi[alpha_at + k] = -a_intervals[k].upper.at(i, j);
                hi[c_at(k, j)] = rat(1);
                lp.constraints.push_back({std::move(hi), Rel::le, rat(0)});
            }
        for (int j = 0; j < n; ++j) {
            Vec bounds = blank();
            bounds[b_at(j)] = rat(1);
            lp.constraints.push_back({bounds, Rel::ge, b_interval.lower.at(i, j)});
            lp.constraints.push_back({std::move(bounds), Rel::le, b_interval.upper.at(i, j)});
            Vec sum = blank();  // sum_k c_kj = b_j
            for (int k = 0; k < count; ++k) sum[c_at(k, j)] = rat(1);
            sum[b_at(j)] = rat(-1);
            lp.constraints.push_back({std::move(sum), Rel::eq, rat(0)});
        }
        auto out = solve(lp);
        if (auto* feas = std::get_if<Feasible>(&out)) {
            per_stratum[i].feasible = true;
            per_stratum[i].point = std::move(feas->point);
        }
    });

    for (int i = 0; i < m; ++i)
        if (!per_stratum[i].feasible) return NoWeakSolution{i};

    WeakSolution sol;
    sol.alphas.assign(count, DiagOrtho{Vec(m, rat(0))});
    sol.a_selections.assign(count, Matrix(m, n));
    sol.b_selection = Matrix(m, n);
    for (int i = 0; i < m; ++i) {
        const Vec& p = per_stratum[i].point;
        for (int k = 0; k < count; ++k) {
            const Rat& alpha = p[alpha_at + k];
            sol.alphas[k].diag[i] = alpha;
            for (int j = 0; j < n; ++j) {
                // c_k = alpha_k (selected row); with alpha_k = 0 the bounds
                // pin c_k to zero and the lower row is the canonical pick.
                if (alpha == 0)
                    sol.a_selections[k].at(i, j) = a_intervals[k].lower.at(i, j);
                else
                    sol.a_selections[k].at(i, j) = p[c_at(k, j)] / alpha;
            }
        }
        for (int j = 0; j < n; ++j) sol.b_selection.at(i, j) = p[b_at(j)];
    }
    return sol;
}

InclusionResult check_interval_inclusion(const std::vector<IntervalOperator>& a_intervals,
                                         const IntervalOperator& b_interval, int orthant_budget,
                                         const ExecPolicy& exec) {
    check_family(a_intervals, b_interval);
    const int m = b_interval.lower.rows();
    const int n = b_interval.lower.cols();
    const int count = static_cast<int>(a_intervals.size());
    if (orthant_budget < 0 || n > orthant_budget)
        throw BudgetError("orthant enumeration over " + std::to_string(n) +
                          " variables exceeds the budget of " + std::to_string(orthant_budget));

    // On the orthant with signs sigma, x_+ and x_- are linear in x, so both
    // sublinear conditions become rows: a violation is any x there with
    // (P_{A_k}(-x))_i <= 0 for all k and (P_B(x))_i <= -1 (scaling the
    // strict inequality to -1 is harmless by positive homogeneity).
    std::vector<std::optional<Vec>> per_stratum(m);
    for_each_index(m, exec, [&](int i) {
        for (long mask = 0; mask < (1L << n); ++mask) {
            const auto negative = [&](int j) { return (mask >> j) & 1; };
            LinearProgram lp;
            lp.num_vars = n;
            for (int k = 0; k < count; ++k) {
                Vec row(n);
                for (int j = 0; j < n; ++j)
                    row[j] = negative(j) ? -a_intervals[k].upper.at(i, j)
                                         : -a_intervals[k].lower.at(i, j);
                lp.constraints.push_back({std::move(row), Rel::le, rat(0)});
            }
            Vec brow(n);
            for (int j = 0; j < n; ++j)
                brow[j] = negative(j) ? b_interval.lower.at(i, j) : b_interval.upper.at(i, j);
            lp.constraints.push_back({std::move(brow), Rel::le, rat(-1)});
            for (int j = 0; j < n; ++j) {
                Vec axis(n, rat(0));
                axis[j] = rat(1);
                lp.constraints.push_back({std::move(axis), negative(j) ? Rel::le : Rel::ge,
                                          rat(0)});
            }
            auto out = solve(lp);
            if (auto* feas = std::get_if<Feasible>(&out)) {
                per_stratum[i] = std::move(feas->point);
                return;
            }
        }
    });

    for (int i = 0; i < m; ++i)
        if (per_stratum[i]) return InclusionViolation{std::move(*per_stratum[i]),
                                                      band_singleton(m, i)};
    return InclusionHolds{};
}

}  // namespace farq
