#ifndef TROPINV_GREENIFICATION_HPP
#define TROPINV_GREENIFICATION_HPP

#include <optional>
#include <vector>

#include "tropinv/tropical.hpp"

namespace tropinv {

// A finite family of weights to greenify against: explicit weight germs
// (optionally with a prescribed type value) and/or strictly positive
// directions standing for the corresponding directional weights.
struct WeightedGerm {
    TropicalGerm weight;
    std::optional<Rational> type_value;
};

struct WeightFamily {
    std::vector<RationalVec> directions;
    std::vector<WeightedGerm> weights;
};

// Intersection of {b >= 0 : <a, b> >= nu_u(0, a)} over the directions of A.
// Always contains P_u.
NewtonPolyhedron h_polytope(const TropicalGerm& u, const std::vector<RationalVec>& directions);

// The largest germ whose directional data at the listed directions matches u:
// the germ of h_polytope(u, A).
TropicalGerm greenify_directional(const TropicalGerm& u, const std::vector<RationalVec>& directions);

// n! * covolume of the H polytope; nullopt when the polytope is not
// convenient (the inequality then carries no finite information).
std::optional<Rational> mass_lower_bound(const TropicalGerm& u, const std::vector<RationalVec>& directions);

// Largest germ v with relative_type(v, phi) >= relative_type(u, phi) for all
// weights phi of the family: the intersection of the scaled polyhedra
// sigma(u, phi) * P_phi. Zero types contribute nothing and are skipped.
TropicalGerm greenify_weights(const TropicalGerm& u, const WeightFamily& family);

} // namespace tropinv

#endif
