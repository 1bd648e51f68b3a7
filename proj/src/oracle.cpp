#include "farq/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "farq/gauss.hpp"

namespace farq {

namespace {

constexpr int kDimBudget = 4;

void check_dim(int n) {
    if (n < 1) throw std::invalid_argument("cone needs a positive dimension");
    if (n > kDimBudget) throw BudgetError("cone enumeration capped at dimension 4");
}

bool nonpositive(const Vec& v) {
    for (const auto& e : v)
        if (e > 0) return false;
    return true;
}

// Scale to a primitive integer vector, keeping the direction.
Vec primitive(const Vec& d) {
    Int lcm = 1;
    for (const auto& e : d) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den().get_mpz_t());
    Int gcd = 0;
    std::vector<Int> scaled(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
        const Rat w = d[j] * lcm;
        scaled[j] = w.get_num();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled[j].get_mpz_t());
    }
    Vec out(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) out[j] = rat(scaled[j] / gcd, Int(1));
    return out;
}

}  // namespace

ConeGenerators extreme_rays(const Matrix& m) {
    check_dim(m.cols());
    const int n = m.cols();
    ConeGenerators out;
    out.lineality_basis = null_space(m);
    const int ell = static_cast<int>(out.lineality_basis.size());
    const int r = n - 1 - ell;
    if (r < 0 || r > m.rows()) return out;

    std::vector<int> pick(r);
    for (int j = 0; j < r; ++j) pick[j] = j;
    while (true) {
        // The lineality rows pin candidates into the orthogonal complement;
        // the chosen rows of M cut the face. A one-dimensional solution with
        // Md <= 0 lies on a minimal face, i.e. is an extreme ray.
        Matrix stacked(ell + r, n);
        for (int i = 0; i < ell; ++i) stacked.set_row(i, out.lineality_basis[i]);
        for (int i = 0; i < r; ++i) stacked.set_row(ell + i, m.row(pick[i]));
        const auto dirs = null_space(stacked);
        if (dirs.size() == 1) {
            Vec d = primitive(dirs[0]);
            if (!nonpositive(m.apply(d))) d = neg(d);
            if (nonpositive(m.apply(d)) &&
                std::find(out.rays.begin(), out.rays.end(), d) == out.rays.end())
                out.rays.push_back(d);
        }
        int j = r - 1;
        while (j >= 0 && pick[j] == m.rows() - r + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int q = j + 1; q < r; ++q) pick[q] = pick[q - 1] + 1;
    }
    return out;
}

std::optional<Vec> inclusion_oracle(const Matrix& m, const Vec& c) {
    if (static_cast<int>(c.size()) != m.cols())
        throw std::invalid_argument("functional dimension mismatch");
    const auto gens = extreme_rays(m);
    for (const auto& ray : gens.rays)
        if (dot(c, ray) > 0) return ray;
    for (const auto& d : gens.lineality_basis) {
        if (dot(c, d) > 0) return d;
        if (dot(c, d) < 0) return neg(d);
    }
    return std::nullopt;
}

std::optional<Vec> falsify_by_sampling(const Matrix& m, const Vec& c, int trials,
                                       std::uint64_t seed) {
    if (static_cast<int>(c.size()) != m.cols())
        throw std::invalid_argument("functional dimension mismatch");
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    std::mt19937_64 rng(seed);
    const auto draw = [&rng](long lo, long hi) {
        return static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
    };
    for (int t = 0; t < trials; ++t) {
        Vec x(m.cols());
        for (auto& e : x) e = rat(draw(-9, 9), draw(1, 4));
        if (!nonpositive(m.apply(x))) continue;
        if (dot(c, x) > 0) return x;
    }
    return std::nullopt;
}

}  // namespace farq
