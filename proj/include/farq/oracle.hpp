#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "farq/errors.hpp"
#include "farq/matrix.hpp"

namespace farq {

// Brute-force cross-checks for the LP engine at desk scale. Everything here
// runs on exact Gaussian elimination and subset enumeration — deliberately
// none of the simplex code it is meant to check.

// Generators of {x : Mx <= 0}: the conic hull of `rays` plus the span of
// `lineality_basis`. Rays are primitive integer vectors ordered by the row
// subset that produced them; the basis follows the null-space convention.
struct ConeGenerators {
    std::vector<Vec> rays;
    std::vector<Vec> lineality_basis;
};

// Enumerates row subsets of size n-1-l (l = lineality dimension) stacked on
// the lineality basis; one-dimensional solution directions that satisfy
// Md <= 0 are the extreme rays. Throws BudgetError beyond dimension 4.
ConeGenerators extreme_rays(const Matrix& m);

// Does {x : c.x <= 0} contain {x : Mx <= 0}? Returns a violating direction
// from the generator check (a ray or signed lineality vector with c.d > 0),
// or nullopt when the inclusion holds. Same dimension budget as extreme_rays.
std::optional<Vec> inclusion_oracle(const Matrix& m, const Vec& c);

// Seeded random probe for a point with Mx <= 0 and c.x > 0. nullopt proves
// nothing; any returned point has been checked exactly.
std::optional<Vec> falsify_by_sampling(const Matrix& m, const Vec& c, int trials,
                                       std::uint64_t seed);

}  // namespace farq
