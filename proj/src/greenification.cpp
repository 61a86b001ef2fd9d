#include "tropinv/greenification.hpp"

namespace tropinv {

namespace {

void check_directions(int n, const std::vector<RationalVec>& directions) {
    if (directions.empty()) throw InvalidDirection("empty direction family");
    for (const auto& a : directions) {
        if (a.size() != n) throw DimensionMismatch("direction has wrong dimension");
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a(i) <= 0) throw InvalidDirection("directions must be strictly positive");
    }
}

} // namespace

NewtonPolyhedron h_polytope(const TropicalGerm& u, const std::vector<RationalVec>& directions) {
    const int n = u.dimension();
    check_directions(n, directions);
    std::vector<Facet> constraints;
    constraints.reserve(directions.size());
    for (const auto& a : directions)
        constraints.push_back({a, directional_lelong(u, a)});
    return intersect_halfspaces(n, constraints);
}

TropicalGerm greenify_directional(const TropicalGerm& u, const std::vector<RationalVec>& directions) {
    return TropicalGerm(h_polytope(u, directions));
}

std::optional<Rational> mass_lower_bound(const TropicalGerm& u, const std::vector<RationalVec>& directions) {
    const NewtonPolyhedron h = h_polytope(u, directions);
    const ExtRational c = covolume(h);
    if (!c.is_finite()) return std::nullopt;
    return factorial(u.dimension()) * c.value();
}

TropicalGerm greenify_weights(const TropicalGerm& u, const WeightFamily& family) {
    const int n = u.dimension();
    std::vector<Facet> constraints;

    auto add_weight = [&](const TropicalGerm& phi, const std::optional<Rational>& prescribed) {
        if (phi.dimension() != n) throw DimensionMismatch("family weight has wrong dimension");
        if (!is_weight(phi)) throw NotAWeight("greenify_weights family member is not a weight");
        const Rational sigma = prescribed ? *prescribed : relative_type(u, phi);
        if (sigma == 0) return;  // trivial constraint: whole orthant
        for (const auto& f : phi.polyhedron().facets())
            constraints.push_back({f.normal, sigma * f.offset});
    };

    for (const auto& a : family.directions) {
        if (a.size() != n) throw DimensionMismatch("family direction has wrong dimension");
        add_weight(directional_weight(a), std::nullopt);
    }
    for (const auto& wg : family.weights) add_weight(wg.weight, wg.type_value);

    return TropicalGerm(intersect_halfspaces(n, constraints));
}

} // namespace tropinv
