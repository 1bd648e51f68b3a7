#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "farq/exec.hpp"
#include "farq/matrix.hpp"
#include "farq/rational.hpp"

namespace farq {

// Exact complex scalar with rational real and imaginary parts.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}  // NOLINT: scalars promote like Rat
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline GaussRat gauss(long re, long im) { return {rat(re), rat(im)}; }

// |z|^2 — always rational, unlike |z| itself.
inline Rat modulus_squared(const GaussRat& z) { return z.re * z.re + z.im * z.im; }

using CMatrix = BasicMatrix<GaussRat>;
using CVec = std::vector<GaussRat>;

// Per-atom complex multiplier; the complex counterpart of DiagOrtho.
struct ComplexDiag {
    CVec diag;
};

CMatrix scale_rows(const ComplexDiag& c, const CMatrix& a);

// Certified rational bracket around |z|: lower^2 <= |z|^2 <= upper^2.
struct ModulusEnclosure {
    Rat lower, upper;
    bool exact() const { return lower == upper; }
};

// Bracket of width <= precision; collapses to a point whenever |z| is
// rational. No floating point is involved at any stage.
ModulusEnclosure modulus_enclosure(const GaussRat& z, const Rat& precision);

enum class CertCheck { Valid, Invalid, Undecided };

// Checks B == sum_k diag(c_k) A_k exactly in Gaussian-rational arithmetic,
// then decides the per-atom budget sum_k |c_{k,i}| u_{k,i} <= v_i by
// refining modulus enclosures down to precision 4^-budget. Undecided means
// the budget ran out with the bracket still straddling v_i — which can
// persist only when the sum equals v_i at an irrational value.
CertCheck verify_complex_certificate(const std::vector<ComplexDiag>& c_list,
                                     const std::vector<CMatrix>& a_list, const CMatrix& b,
                                     const std::vector<Vec>& u_list, const Vec& v, int budget);

struct NotFound {};

using ComplexSearchResult = std::variant<std::vector<ComplexDiag>, NotFound>;

// `sides` rational points on the unit circle: sides/2 tangent-half-angle
// samples of the right half plus their antipodes. sides must be even, >= 4.
std::vector<GaussRat> polygon_vertices(int sides);

// Sound but incomplete search. Per atom, an LP over convex weights on the
// polygon vertices meets the linear identity exactly while the polygon gauge
// pays the modulus budget; the polygon sits inside the unit disc, so its
// gauge over-estimates the modulus and any candidate genuinely satisfies the
// budget. Candidates are still re-verified before being returned. NotFound
// does not refute existence — enlarge `sides` for sharper coverage.
ComplexSearchResult search_complex_certificate(const std::vector<CMatrix>& a_list,
                                               const CMatrix& b, const std::vector<Vec>& u_list,
                                               const Vec& v, int sides, ExecPolicy exec = {});

}  // namespace farq
