#include "tropinv/tropical.hpp"

#include <cstdint>

namespace tropinv {

namespace {

bool is_zero_germ(const TropicalGerm& u) {
    const auto& gens = u.polyhedron().generators();
    return gens.size() == 1 && is_zero_vec(gens[0]);
}

} // namespace

TropicalGerm unit_simplex_germ(int n) {
    std::vector<RationalVec> gens;
    for (int k = 0; k < n; ++k) {
        RationalVec e = RationalVec::Zero(n);
        e(k) = 1;
        gens.push_back(e);
    }
    return TropicalGerm::from_generators(n, std::move(gens));
}

TropicalGerm directional_weight(const RationalVec& a) {
    const int n = static_cast<int>(a.size());
    std::vector<RationalVec> gens;
    for (int k = 0; k < n; ++k) {
        if (a(k) <= 0) throw InvalidDirection("directional weight needs a strictly positive direction");
        RationalVec e = RationalVec::Zero(n);
        e(k) = 1 / a(k);
        gens.push_back(e);
    }
    return TropicalGerm::from_generators(n, std::move(gens));
}

bool is_weight(const TropicalGerm& u) {
    for (const auto& g : u.polyhedron().generators())
        if (is_zero_vec(g)) return false;
    return true;
}

TropicalGerm oplus(const TropicalGerm& u, const TropicalGerm& v) {
    return TropicalGerm(union_hull(u.polyhedron(), v.polyhedron()));
}

TropicalGerm otimes(const TropicalGerm& u, const TropicalGerm& v) {
    return TropicalGerm(minkowski_sum(u.polyhedron(), v.polyhedron()));
}

TropicalGerm scale(const TropicalGerm& u, const Rational& c) {
    return TropicalGerm(scale(u.polyhedron(), c));
}

Rational directional_lelong(const TropicalGerm& u, const RationalVec& a) {
    return support_min(u.polyhedron(), a);
}

Rational relative_type(const TropicalGerm& u, const TropicalGerm& phi) {
    if (u.dimension() != phi.dimension()) throw DimensionMismatch("relative_type of different dimensions");
    if (!is_weight(phi)) throw NotAWeight("relative_type against a non-weight");
    if (is_zero_germ(u)) return 0;
    Rational best;
    bool first = true;
    for (const auto& v : u.polyhedron().generators()) {
        ExtRational g = gauge(phi.polyhedron(), v);
        // phi is a weight, so its gauge is finite away from the origin
        Rational s = g.value();
        if (first || s < best) {
            best = s;
            first = false;
        }
    }
    return best;
}

Rational lelong_number(const TropicalGerm& u) {
    return relative_type(u, unit_simplex_germ(u.dimension()));
}

ExtRational lojasiewicz_alpha(const TropicalGerm& u) {
    if (!is_weight(u)) throw NotAWeight("lojasiewicz_alpha of a non-weight");
    if (!is_convenient(u.polyhedron())) return ExtRational::infinity();
    Rational s = relative_type(unit_simplex_germ(u.dimension()), u);
    return Rational(1) / s;
}

ExtRational residual_mass(const TropicalGerm& u) {
    ExtRational c = covolume(u.polyhedron());
    if (!c.is_finite()) return c;
    return factorial(u.dimension()) * c.value();
}

Rational mixed_mass(const std::vector<TropicalGerm>& germs) {
    if (germs.empty()) throw DimensionMismatch("mixed_mass of an empty tuple");
    const int n = germs.front().dimension();
    if (static_cast<int>(germs.size()) != n)
        throw DimensionMismatch("mixed_mass needs exactly n germs in dimension n");
    for (const auto& g : germs) {
        if (g.dimension() != n) throw DimensionMismatch("mixed_mass of mixed dimensions");
        if (!is_convenient(g.polyhedron()))
            throw NonConvenientArgument("mixed_mass argument is not convenient");
    }

    // Polarization: sum over nonempty S of (-1)^(n-|S|) covol(sum_{i in S} P_i).
    const unsigned full = (1u << n) - 1;
    std::vector<NewtonPolyhedron> sums;
    sums.reserve(full + 1);
    sums.push_back(germs[0].polyhedron());  // placeholder for mask 0 (unused)
    Rational total = 0;
    for (unsigned mask = 1; mask <= full; ++mask) {
        unsigned low = mask & (mask - 1);
        int low_bit = 0;
        while (!(mask & (1u << low_bit))) ++low_bit;
        NewtonPolyhedron s = (low == 0)
            ? germs[low_bit].polyhedron()
            : minkowski_sum(sums[low], germs[low_bit].polyhedron());
        int bits = __builtin_popcount(mask);
        Rational c = covolume(s).value();
        total += ((n - bits) % 2 == 0) ? c : -c;
        sums.push_back(std::move(s));
    }
    return total;
}

Rational demailly_number(const TropicalGerm& u, const TropicalGerm& phi) {
    const int n = phi.dimension();
    if (u.dimension() != n) throw DimensionMismatch("demailly_number of different dimensions");
    if (!is_weight(phi)) throw NotAWeight("demailly_number against a non-weight");
    if (!is_convenient(phi.polyhedron())) throw NotConvenient("demailly_number weight is not convenient");

    auto polarized = [&](const TropicalGerm& v) {
        std::vector<TropicalGerm> tuple;
        tuple.reserve(n);
        tuple.push_back(v);
        for (int i = 1; i < n; ++i) tuple.push_back(phi);
        return mixed_mass(tuple);
    };

    if (is_convenient(u.polyhedron())) return polarized(u);

    const TropicalGerm ell = unit_simplex_germ(n);
    Rational prev = polarized(oplus(u, scale(ell, Rational(1))));
    for (std::int64_t big = 2; big <= 65536; big *= 2) {
        Rational cur = polarized(oplus(u, scale(ell, Rational(big))));
        if (cur == prev) return cur;
        prev = cur;
    }
    throw NoStabilization("truncated Lelong-Demailly values did not stabilize by N = 2^16");
}

WeightProfile weight_profile(const TropicalGerm& u) {
    WeightProfile w;
    w.lelong = lelong_number(u);
    w.mass = residual_mass(u);
    w.is_weight = is_weight(u);
    const bool conv = is_convenient(u.polyhedron());
    w.is_convenient = w.is_weight && conv;
    if (w.is_convenient) {
        Rational s = relative_type(unit_simplex_germ(u.dimension()), u);
        w.lojasiewicz = Rational(1) / s;
    } else {
        w.lojasiewicz = ExtRational::infinity();
    }
    return w;
}

WeightOrder weight_order(const TropicalGerm& phi, const TropicalGerm& psi) {
    if (!is_weight(phi) || !is_weight(psi)) throw NotAWeight("weight_order of a non-weight");
    const bool le = relative_type(phi, psi) >= 1;
    const bool ge = relative_type(psi, phi) >= 1;
    if (le && ge) return WeightOrder::equal;
    if (le) return WeightOrder::less_equal;
    if (ge) return WeightOrder::greater_equal;
    return WeightOrder::incomparable;
}

} // namespace tropinv
