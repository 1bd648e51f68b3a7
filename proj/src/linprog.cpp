#include "farq/linprog.hpp"

#include <cassert>
#include <stdexcept>

namespace farq {

namespace {

// Column layout: structural variables first (a free variable is split into a
// positive and a negative part), then one slack per inequality row, then one
// artificial per row. Artificial columns are never allowed to enter a basis;
// they exist to seed phase one and to make the simplex multipliers readable
// from the reduced-cost row at the end of either phase.
struct Tableau {
    int rows = 0;
    int cols = 0;
    std::vector<Vec> t;       // rows x cols
    Vec rhs;                  // per row, kept >= 0
    std::vector<int> basis;   // per row: basic column
    std::vector<bool> active; // rows discovered to be redundant go inactive
    std::vector<int> art_col; // per row
    Vec cost;                 // current phase cost per column
    Vec zrow;                 // reduced costs
    int first_art = 0;        // columns >= first_art are artificial
    SolveStats* stats = nullptr;

    bool allowed(int c) const { return c < first_art; }

    void pivot(int r, int c) {
        const Rat p = t[r][c];
        assert(p != 0);
        for (int j = 0; j < cols; ++j) t[r][j] /= p;
        rhs[r] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || t[i][c] == 0) continue;
            const Rat f = t[i][c];
            for (int j = 0; j < cols; ++j) t[i][j] -= f * t[r][j];
            rhs[i] -= f * rhs[r];
        }
        if (zrow[c] != 0) {
            const Rat f = zrow[c];
            for (int j = 0; j < cols; ++j) zrow[j] -= f * t[r][j];
        }
        basis[r] = c;
        if (stats) ++stats->pivots;
    }

    void reset_costs(Vec new_cost) {
        cost = std::move(new_cost);
        zrow = cost;
        for (int i = 0; i < rows; ++i) {
            const Rat cb = cost[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j < cols; ++j) zrow[j] -= cb * t[i][j];
        }
    }

    Rat objective_value() const {
        Rat v = 0;
        for (int i = 0; i < rows; ++i) v += cost[basis[i]] * rhs[i];
        return v;
    }

    // Bland's rule: lowest-index entering column with negative reduced cost;
    // lowest-index basic variable among the minimum-ratio rows.
    // Returns true at optimality, false when the entering column is
    // unbounded (reported through *unbounded_col).
    bool run(int* unbounded_col) {
        for (;;) {
            int enter = -1;
            for (int c = 0; c < first_art; ++c)
                if (zrow[c] < 0) {
                    enter = c;
                    break;
                }
            if (enter < 0) return true;

            int leave = -1;
            Rat best_ratio = 0;
            for (int i = 0; i < rows; ++i) {
                if (!active[i] || t[i][enter] <= 0) continue;
                const Rat ratio = rhs[i] / t[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) {
                if (unbounded_col) *unbounded_col = enter;
                return false;
            }
            pivot(leave, enter);
        }
    }
};

struct Layout {
    int num_vars = 0;
    std::vector<int> var_plus;   // per variable
    std::vector<int> var_minus;  // -1 when the variable is nonnegative
    std::vector<int> slack_col;  // per row, -1 on equality rows
    std::vector<Rat> row_sign;   // +1 / -1 normalization per row
};

void validate(const LinearProgram& lp) {
    if (lp.num_vars < 0) throw std::invalid_argument("negative variable count");
    if (!lp.nonneg.empty() && static_cast<int>(lp.nonneg.size()) != lp.num_vars)
        throw std::invalid_argument("nonneg flag count mismatch");
    if (lp.constraints.empty() && !lp.objective)
        throw std::invalid_argument("linear program needs a constraint or an objective");
    for (const auto& c : lp.constraints)
        if (static_cast<int>(c.coeffs.size()) != lp.num_vars)
            throw std::invalid_argument("constraint length mismatch");
    if (lp.objective && static_cast<int>(lp.objective->coeffs.size()) != lp.num_vars)
        throw std::invalid_argument("objective length mismatch");
}

bool var_nonneg(const LinearProgram& lp, int j) {
    return !lp.nonneg.empty() && lp.nonneg[j];
}

Layout build(const LinearProgram& lp, Tableau& tab) {
    Layout lay;
    lay.num_vars = lp.num_vars;
    const int m = static_cast<int>(lp.constraints.size());

    int col = 0;
    lay.var_plus.resize(lp.num_vars);
    lay.var_minus.assign(lp.num_vars, -1);
    for (int j = 0; j < lp.num_vars; ++j) {
        lay.var_plus[j] = col++;
        if (!var_nonneg(lp, j)) lay.var_minus[j] = col++;
    }
    lay.slack_col.assign(m, -1);
    for (int i = 0; i < m; ++i)
        if (lp.constraints[i].rel != Rel::eq) lay.slack_col[i] = col++;
    tab.first_art = col;
    tab.art_col.resize(m);
    for (int i = 0; i < m; ++i) tab.art_col[i] = col++;

    tab.rows = m;
    tab.cols = col;
    tab.t.assign(m, Vec(col, Rat(0)));
    tab.rhs.assign(m, Rat(0));
    tab.basis.assign(m, -1);
    tab.active.assign(m, true);
    lay.row_sign.assign(m, Rat(1));

    for (int i = 0; i < m; ++i) {
        const auto& con = lp.constraints[i];
        const Rat sign = (con.rhs < 0) ? Rat(-1) : Rat(1);
        lay.row_sign[i] = sign;
        for (int j = 0; j < lp.num_vars; ++j) {
            const Rat a = sign * con.coeffs[j];
            tab.t[i][lay.var_plus[j]] = a;
            if (lay.var_minus[j] >= 0) tab.t[i][lay.var_minus[j]] = -a;
        }
        if (lay.slack_col[i] >= 0)
            tab.t[i][lay.slack_col[i]] = sign * ((con.rel == Rel::le) ? Rat(1) : Rat(-1));
        tab.t[i][tab.art_col[i]] = 1;
        tab.rhs[i] = sign * con.rhs;

        if (lay.slack_col[i] >= 0 && tab.t[i][lay.slack_col[i]] == 1)
            tab.basis[i] = lay.slack_col[i];
        else
            tab.basis[i] = tab.art_col[i];
    }
    return lay;
}

Vec extract_point(const LinearProgram& lp, const Layout& lay, const Tableau& tab) {
    Vec col_value(tab.cols, Rat(0));
    for (int i = 0; i < tab.rows; ++i) col_value[tab.basis[i]] = tab.rhs[i];
    Vec x(lp.num_vars, Rat(0));
    for (int j = 0; j < lp.num_vars; ++j) {
        x[j] = col_value[lay.var_plus[j]];
        if (lay.var_minus[j] >= 0) x[j] -= col_value[lay.var_minus[j]];
    }
    return x;
}

Vec extract_ray(const LinearProgram& lp, const Layout& lay, const Tableau& tab, int enter) {
    Vec col_dir(tab.cols, Rat(0));
    col_dir[enter] = 1;
    for (int i = 0; i < tab.rows; ++i)
        if (tab.active[i] && tab.t[i][enter] != 0) col_dir[tab.basis[i]] = -tab.t[i][enter];
    Vec d(lp.num_vars, Rat(0));
    for (int j = 0; j < lp.num_vars; ++j) {
        d[j] = col_dir[lay.var_plus[j]];
        if (lay.var_minus[j] >= 0) d[j] -= col_dir[lay.var_minus[j]];
    }
    return d;
}

// Simplex multipliers y with y_i = cost_B B^{-1} e_i, read off the reduced
// costs of the per-row artificial columns.
Vec simplex_multipliers(const Tableau& tab) {
    Vec y(tab.rows);
    for (int i = 0; i < tab.rows; ++i) y[i] = tab.cost[tab.art_col[i]] - tab.zrow[tab.art_col[i]];
    return y;
}

}  // namespace

LPOutcome solve(const LinearProgram& lp, SolveStats* stats) {
    validate(lp);
    Tableau tab;
    tab.stats = stats;
    const Layout lay = build(lp, tab);
    const int m = tab.rows;

    // Phase one: minimize the artificial total.
    Vec phase1_cost(tab.cols, Rat(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] == tab.art_col[i]) phase1_cost[tab.art_col[i]] = 1;
    tab.reset_costs(std::move(phase1_cost));
    {
        int unbounded = -1;
        const bool optimal = tab.run(&unbounded);
        assert(optimal);  // the artificial total is bounded below by zero
        (void)optimal;
    }

    if (tab.objective_value() > 0) {
        // y^T column <= 0 holds for every structural and slack column, and
        // y^T rhs > 0, so y is a Farkas certificate for the normalized
        // system; undo the row normalization and flip to the documented
        // per-constraint sign convention.
        const Vec y = simplex_multipliers(tab);
        Vec mult(m);
        for (int i = 0; i < m; ++i) mult[i] = -lay.row_sign[i] * y[i];
        return Infeasible{std::move(mult)};
    }

    if (!lp.objective) return Feasible{extract_point(lp, lay, tab)};

    // Pivot zero-level artificials out of the basis; a row offering no pivot
    // is a linear consequence of the others and drops out of the ratio test.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] != tab.art_col[i]) continue;
        int c = -1;
        for (int j = 0; j < tab.first_art; ++j)
            if (tab.t[i][j] != 0) {
                c = j;
                break;
            }
        if (c >= 0)
            tab.pivot(i, c);
        else
            tab.active[i] = false;
    }

    const bool maximize = lp.objective->sense == Sense::maximize;
    Vec phase2_cost(tab.cols, Rat(0));
    for (int j = 0; j < lp.num_vars; ++j) {
        const Rat g = maximize ? -lp.objective->coeffs[j] : lp.objective->coeffs[j];
        phase2_cost[lay.var_plus[j]] = g;
        if (lay.var_minus[j] >= 0) phase2_cost[lay.var_minus[j]] = -g;
    }
    tab.reset_costs(std::move(phase2_cost));

    int unbounded_col = -1;
    if (!tab.run(&unbounded_col)) {
        return Unbounded{extract_point(lp, lay, tab), extract_ray(lp, lay, tab, unbounded_col)};
    }

    const Rat min_value = tab.objective_value();
    const Vec y = simplex_multipliers(tab);
    Vec duals(m);
    for (int i = 0; i < m; ++i) duals[i] = (maximize ? Rat(-1) : Rat(1)) * lay.row_sign[i] * y[i];
    return Optimal{extract_point(lp, lay, tab), maximize ? Rat(-min_value) : min_value,
                   std::move(duals)};
}

ConicResult conic_membership(const std::vector<Vec>& generators, const Vec& target,
                             SolveStats* stats) {
    const int n = static_cast<int>(target.size());
    const int count = static_cast<int>(generators.size());
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("generator length mismatch");
    if (n == 0) return ConicMultipliers{Vec(count, Rat(0))};

    LinearProgram lp;
    lp.num_vars = count;
    lp.nonneg.assign(count, true);
    for (int d = 0; d < n; ++d) {
        Constraint con;
        con.coeffs.resize(count);
        for (int k = 0; k < count; ++k) con.coeffs[k] = generators[k][d];
        con.rel = Rel::eq;
        con.rhs = target[d];
        lp.constraints.push_back(std::move(con));
    }

    LPOutcome out = solve(lp, stats);
    if (auto* feas = std::get_if<Feasible>(&out)) return ConicMultipliers{std::move(feas->point)};
    auto& inf = std::get<Infeasible>(out);
    return SeparatingVector{neg(inf.multipliers)};
}

}  // namespace farq
