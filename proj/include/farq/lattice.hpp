#pragma once

#include <set>
#include <utility>
#include <vector>

#include "farq/matrix.hpp"

namespace farq {

// Finite Kantorovich-space model: the ambient lattice is Q^m with the
// componentwise order. Its band projections are exactly the coordinate
// subsets, so the base is the (atomic) powerset Boolean algebra on
// {0,...,m-1}, and the orthomorphisms are the diagonal multipliers.
// Q^m is already universally complete in this finite setting, so the
// universal completion coincides with the space itself; the code never
// distinguishes the two.

enum class Rel { le, eq, ge };

// A band projection, stored extensionally as its coordinate set.
struct Band {
    int ambient_dim = 0;
    std::set<int> members;
};

Band band_empty(int ambient_dim);
Band band_full(int ambient_dim);
Band band_singleton(int ambient_dim, int index);

bool operator==(const Band& a, const Band& b);

Band band_meet(const Band& a, const Band& b);
Band band_join(const Band& a, const Band& b);
Band band_complement(const Band& a);
bool band_leq(const Band& a, const Band& b);

// Coordinates in b survive, the rest are zeroed.
Vec apply_band(const Band& b, const Vec& y);

// (y+, y-) with y = y+ - y- and inf(y+, y-) = 0 componentwise.
std::pair<Vec, Vec> pos_neg_parts(const Vec& y);

// The set of coordinates where "y rel z" holds.
Band truth_value(Rel rel, const Vec& y, const Vec& z);

// Diagonal multiplier; the concrete form an orthomorphism takes here.
struct DiagOrtho {
    Vec diag;

    bool is_positive() const {
        for (const auto& d : diag)
            if (d < 0) return false;
        return true;
    }
};

Vec apply_diag(const DiagOrtho& alpha, const Vec& y);
Matrix scale_rows(const DiagOrtho& alpha, const Matrix& a);  // diag(alpha) * a

struct PartitionOfUnity {
    int ambient_dim = 0;
    std::vector<Band> parts;
};

// Throws std::invalid_argument unless parts are pairwise disjoint and cover.
void validate_partition(const PartitionOfUnity& p);

// Piecewise assembly: the result agrees with ys[j] on parts[j].
Vec mix(const PartitionOfUnity& p, const std::vector<Vec>& ys);

}  // namespace farq
