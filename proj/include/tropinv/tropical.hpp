#ifndef TROPINV_TROPICAL_HPP
#define TROPINV_TROPICAL_HPP

#include <vector>

#include "tropinv/newton_polyhedron.hpp"

namespace tropinv {

// Toric singularity germ u(t) = max over generators <g, t> on t in R^n_-.
// Two germs are equal iff their polyhedra are equal; that equality stands for
// "same singularity up to O(1)".
class TropicalGerm {
public:
    explicit TropicalGerm(NewtonPolyhedron poly) : poly_(std::move(poly)) {}
    static TropicalGerm from_generators(int n, std::vector<RationalVec> generators) {
        return TropicalGerm(NewtonPolyhedron::from_generators(n, std::move(generators)));
    }

    int dimension() const { return poly_.dimension(); }
    const NewtonPolyhedron& polyhedron() const { return poly_; }

    friend bool operator==(const TropicalGerm& a, const TropicalGerm& b) {
        return a.poly_ == b.poly_;
    }

private:
    NewtonPolyhedron poly_;
};

// The germ of log|z - zeta|: generators e_1..e_n.
TropicalGerm unit_simplex_germ(int n);

// Kiselman's directional weight max_k a_k^{-1} log|x_k - zeta_k|:
// generators e_k / a_k. Requires a > 0 componentwise.
TropicalGerm directional_weight(const RationalVec& a);

// A germ is a weight iff its pole is genuine, i.e. 0 is not a generator.
bool is_weight(const TropicalGerm& u);

// Invariant triple plus class flags of a germ viewed as a weight.
struct WeightProfile {
    Rational lelong;
    ExtRational mass;
    ExtRational lojasiewicz;
    bool is_weight = false;
    bool is_convenient = false;
};

enum class WeightOrder { less_equal, greater_equal, equal, incomparable };

TropicalGerm oplus(const TropicalGerm& u, const TropicalGerm& v);   // max{u, v}
TropicalGerm otimes(const TropicalGerm& u, const TropicalGerm& v);  // u + v
TropicalGerm scale(const TropicalGerm& u, const Rational& c);

Rational directional_lelong(const TropicalGerm& u, const RationalVec& a);

// sigma(u, phi): the largest s with P_u inside s * P_phi.
Rational relative_type(const TropicalGerm& u, const TropicalGerm& phi);

Rational lelong_number(const TropicalGerm& u);
ExtRational lojasiewicz_alpha(const TropicalGerm& u);

// n! * covolume: the residual Monge-Ampere mass of the germ.
ExtRational residual_mass(const TropicalGerm& u);

// Mass of the mixed Monge-Ampere product of exactly n convenient germs,
// computed by Minkowski polarization of covolumes.
Rational mixed_mass(const std::vector<TropicalGerm>& germs);

// Lelong-Demailly number nu(u, phi): one u slot and n-1 phi slots; u with
// non-convenient polyhedron is truncated by N*ell with doubling N until the
// polarized value stabilizes.
Rational demailly_number(const TropicalGerm& u, const TropicalGerm& phi);

WeightProfile weight_profile(const TropicalGerm& u);

WeightOrder weight_order(const TropicalGerm& phi, const TropicalGerm& psi);

} // namespace tropinv

#endif
