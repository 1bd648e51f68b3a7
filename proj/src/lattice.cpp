#include "farq/lattice.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace farq {

namespace {

void check_band(const Band& b) {
    if (b.ambient_dim <= 0) throw std::invalid_argument("band ambient dimension must be positive");
    for (int i : b.members)
        if (i < 0 || i >= b.ambient_dim) throw std::invalid_argument("band member out of range");
}

void check_same_dim(const Band& a, const Band& b) {
    check_band(a);
    check_band(b);
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("band dimension mismatch");
}

}  // namespace

Band band_empty(int ambient_dim) {
    Band b{ambient_dim, {}};
    check_band(b);
    return b;
}

Band band_full(int ambient_dim) {
    Band b{ambient_dim, {}};
    for (int i = 0; i < ambient_dim; ++i) b.members.insert(i);
    check_band(b);
    return b;
}

Band band_singleton(int ambient_dim, int index) {
    Band b{ambient_dim, {index}};
    check_band(b);
    return b;
}

bool operator==(const Band& a, const Band& b) {
    return a.ambient_dim == b.ambient_dim && a.members == b.members;
}

Band band_meet(const Band& a, const Band& b) {
    check_same_dim(a, b);
    Band out{a.ambient_dim, {}};
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::inserter(out.members, out.members.end()));
    return out;
}

Band band_join(const Band& a, const Band& b) {
    check_same_dim(a, b);
    Band out{a.ambient_dim, {}};
    std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                   std::inserter(out.members, out.members.end()));
    return out;
}

Band band_complement(const Band& a) {
    check_band(a);
    Band out{a.ambient_dim, {}};
    for (int i = 0; i < a.ambient_dim; ++i)
        if (!a.members.count(i)) out.members.insert(i);
    return out;
}

bool band_leq(const Band& a, const Band& b) {
    check_same_dim(a, b);
    return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

Vec apply_band(const Band& b, const Vec& y) {
    check_band(b);
    if (static_cast<int>(y.size()) != b.ambient_dim)
        throw std::invalid_argument("band/vector dimension mismatch");
    Vec out(y.size(), Rat(0));
    for (int i : b.members) out[i] = y[i];
    return out;
}

std::pair<Vec, Vec> pos_neg_parts(const Vec& y) {
    Vec pos(y.size(), Rat(0)), negp(y.size(), Rat(0));
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] > 0)
            pos[i] = y[i];
        else
            negp[i] = -y[i];
    }
    return {pos, negp};
}

Band truth_value(Rel rel, const Vec& y, const Vec& z) {
    if (y.size() != z.size()) throw std::invalid_argument("truth_value dimension mismatch");
    if (y.empty()) throw std::invalid_argument("truth_value on empty vectors");
    Band b{static_cast<int>(y.size()), {}};
    for (std::size_t i = 0; i < y.size(); ++i) {
        const bool holds = (rel == Rel::le)   ? y[i] <= z[i]
                           : (rel == Rel::eq) ? y[i] == z[i]
                                              : y[i] >= z[i];
        if (holds) b.members.insert(static_cast<int>(i));
    }
    return b;
}

Vec apply_diag(const DiagOrtho& alpha, const Vec& y) {
    if (alpha.diag.size() != y.size()) throw std::invalid_argument("diagonal/vector dimension mismatch");
    Vec out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = alpha.diag[i] * y[i];
    return out;
}

Matrix scale_rows(const DiagOrtho& alpha, const Matrix& a) {
    if (static_cast<int>(alpha.diag.size()) != a.rows())
        throw std::invalid_argument("diagonal/matrix dimension mismatch");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = alpha.diag[i] * a.at(i, j);
    return out;
}

void validate_partition(const PartitionOfUnity& p) {
    if (p.ambient_dim <= 0) throw std::invalid_argument("partition ambient dimension must be positive");
    std::set<int> seen;
    for (const auto& part : p.parts) {
        if (part.ambient_dim != p.ambient_dim)
            throw std::invalid_argument("partition part dimension mismatch");
        for (int i : part.members) {
            if (i < 0 || i >= p.ambient_dim) throw std::invalid_argument("partition member out of range");
            if (!seen.insert(i).second) throw std::invalid_argument("partition parts not disjoint");
        }
    }
    if (static_cast<int>(seen.size()) != p.ambient_dim)
        throw std::invalid_argument("partition does not cover the full band");
}

Vec mix(const PartitionOfUnity& p, const std::vector<Vec>& ys) {
    validate_partition(p);
    if (ys.size() != p.parts.size()) throw std::invalid_argument("mix: one vector per part required");
    for (const auto& y : ys)
        if (static_cast<int>(y.size()) != p.ambient_dim)
            throw std::invalid_argument("mix: vector dimension mismatch");
    Vec out(p.ambient_dim, Rat(0));
    for (std::size_t j = 0; j < p.parts.size(); ++j)
        for (int i : p.parts[j].members) out[i] = ys[j][i];
    return out;
}

}  // namespace farq
