#include "farq/complexcert.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>

#include "farq/linprog.hpp"

namespace farq {

namespace {

// Refinement depth used when the searcher re-checks its own candidates.
constexpr int kSearchCheckDepth = 64;

struct FamilyShape {
    int m, n;
};

FamilyShape check_family(const std::vector<CMatrix>& a_list, const CMatrix& b,
                         const std::vector<Vec>& u_list, const Vec& v) {
    const int m = b.rows(), n = b.cols();
    if (m < 1 || n < 1) throw std::invalid_argument("complex family needs positive dimensions");
    if (a_list.size() != u_list.size())
        throw std::invalid_argument("operator/budget count mismatch");
    for (const auto& a : a_list)
        if (a.rows() != m || a.cols() != n)
            throw std::invalid_argument("complex operator shape mismatch");
    for (const auto& u : u_list) {
        if (static_cast<int>(u.size()) != m) throw std::invalid_argument("budget length mismatch");
        for (const auto& e : u)
            if (e < 0) throw std::invalid_argument("budgets must be nonnegative");
    }
    if (static_cast<int>(v.size()) != m)
        throw std::invalid_argument("target budget length mismatch");
    return {m, n};
}

Rat pow4_inverse(int r) {
    Int den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * static_cast<unsigned long>(r));
    return rat(Int(1), den);
}

}  // namespace

CMatrix scale_rows(const ComplexDiag& c, const CMatrix& a) {
    if (static_cast<int>(c.diag.size()) != a.rows())
        throw std::invalid_argument("diagonal length mismatch");
    CMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = c.diag[i] * a.at(i, j);
    return out;
}

ModulusEnclosure modulus_enclosure(const GaussRat& z, const Rat& precision) {
    if (precision <= 0) throw std::invalid_argument("precision must be positive");
    const Rat s = modulus_squared(z);
    const Int num = s.get_num(), den = s.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        const Rat exact = rat(rn, rd);
        return {exact, exact};
    }
    // k = ceil(1/precision); with F = floor(s k^2) and N = isqrt(F), the
    // bracket [N/k, (N+1)/k] pins |z| to width 1/k <= precision. Both ends
    // are strict here: s k^2 a perfect square would make s one as well.
    Int k;
    mpz_cdiv_q(k.get_mpz_t(), precision.get_den().get_mpz_t(), precision.get_num().get_mpz_t());
    const Rat scaled = s * k * k;
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    Int n;
    mpz_sqrt(n.get_mpz_t(), f.get_mpz_t());
    return {rat(n, k), rat(n + 1, k)};
}

CertCheck verify_complex_certificate(const std::vector<ComplexDiag>& c_list,
                                     const std::vector<CMatrix>& a_list, const CMatrix& b,
                                     const std::vector<Vec>& u_list, const Vec& v, int budget) {
    const auto [m, n] = check_family(a_list, b, u_list, v);
    (void)n;
    if (budget < 0) throw std::invalid_argument("refinement budget must be nonnegative");
    if (c_list.size() != a_list.size()) throw std::invalid_argument("multiplier count mismatch");
    for (const auto& c : c_list)
        if (static_cast<int>(c.diag.size()) != m)
            throw std::invalid_argument("multiplier length mismatch");

    CMatrix combo(m, b.cols());
    for (std::size_t k = 0; k < a_list.size(); ++k)
        combo = combo + scale_rows(c_list[k], a_list[k]);
    if (!(combo == b)) return CertCheck::Invalid;

    bool undecided = false;
    for (int i = 0; i < m; ++i) {
        bool settled = false;
        for (int r = 0; r <= budget && !settled; ++r) {
            const Rat eps = pow4_inverse(r);
            Rat lo = 0, hi = 0;
            for (std::size_t k = 0; k < c_list.size(); ++k) {
                const auto enc = modulus_enclosure(c_list[k].diag[i], eps);
                lo += enc.lower * u_list[k][i];
                hi += enc.upper * u_list[k][i];
            }
            if (hi <= v[i]) settled = true;
            else if (lo > v[i]) return CertCheck::Invalid;
        }
        if (!settled) undecided = true;
    }
    return undecided ? CertCheck::Undecided : CertCheck::Valid;
}

std::vector<GaussRat> polygon_vertices(int sides) {
    if (sides < 4 || sides % 2 != 0)
        throw std::invalid_argument("polygon needs an even number of sides, at least 4");
    const int half = sides / 2;
    std::vector<GaussRat> verts;
    verts.reserve(sides);
    for (int j = 0; j < half; ++j) {
        // t = tan(theta/2) swept over [-1, 1) parametrizes the right half of
        // the circle by rational points ((1-t^2)/(1+t^2), 2t/(1+t^2)).
        const Rat t = rat(2 * j - half, half);
        const Rat d = 1 + t * t;
        verts.push_back(GaussRat((1 - t * t) / d, 2 * t / d));
    }
    for (int j = 0; j < half; ++j) verts.push_back(-verts[j]);
    return verts;
}

ComplexSearchResult search_complex_certificate(const std::vector<CMatrix>& a_list,
                                               const CMatrix& b, const std::vector<Vec>& u_list,
                                               const Vec& v, int sides, ExecPolicy exec) {
    const auto [m, n] = check_family(a_list, b, u_list, v);
    const auto verts = polygon_vertices(sides);
    const int count = static_cast<int>(a_list.size());
    const int s = sides;

    // Slot i holds the multipliers c_{., i} of atom i once its LP succeeds.
    std::vector<std::optional<CVec>> per_atom(m);
    for_each_index(m, exec, [&, m = m, n = n](int i) {
        (void)m;
        if (count == 0) {
            for (int j = 0; j < n; ++j)
                if (b.at(i, j) != GaussRat()) return;
            if (v[i] >= 0) per_atom[i] = CVec{};
            return;
        }
        LinearProgram lp;
        lp.num_vars = count * s;
        lp.nonneg.assign(lp.num_vars, true);
        for (int j = 0; j < n; ++j) {
            Vec re_row(lp.num_vars), im_row(lp.num_vars);
            for (int k = 0; k < count; ++k)
                for (int q = 0; q < s; ++q) {
                    const GaussRat prod = verts[q] * a_list[k].at(i, j);
                    re_row[k * s + q] = prod.re;
                    im_row[k * s + q] = prod.im;
                }
            lp.constraints.push_back({std::move(re_row), Rel::eq, b.at(i, j).re});
            lp.constraints.push_back({std::move(im_row), Rel::eq, b.at(i, j).im});
        }
        // The vertex-weight sum of each multiplier is its polygon gauge, an
        // upper bound on the modulus; charging it against v_i keeps any
        // feasible point sound. Minimizing the charge leaves slack for the
        // enclosure check.
        Vec budget_row(lp.num_vars);
        for (int k = 0; k < count; ++k)
            for (int q = 0; q < s; ++q) budget_row[k * s + q] = u_list[k][i];
        lp.constraints.push_back({budget_row, Rel::le, v[i]});
        lp.objective = Objective{std::move(budget_row), Sense::minimize};
        const auto out = solve(lp);
        const auto* opt = std::get_if<Optimal>(&out);
        if (!opt) return;
        CVec c(count);
        for (int k = 0; k < count; ++k)
            for (int q = 0; q < s; ++q)
                c[k] += GaussRat(opt->point[k * s + q], rat(0)) * verts[q];
        per_atom[i] = std::move(c);
    });

    std::vector<ComplexDiag> cert(count, ComplexDiag{CVec(m)});
    for (int i = 0; i < m; ++i) {
        if (!per_atom[i]) return NotFound{};
        for (int k = 0; k < count; ++k) cert[k].diag[i] = (*per_atom[i])[k];
    }
    if (verify_complex_certificate(cert, a_list, b, u_list, v, kSearchCheckDepth) !=
        CertCheck::Valid)
        return NotFound{};
    return cert;
}

}  // namespace farq
