#ifndef TROPINV_NEWTON_POLYHEDRON_HPP
#define TROPINV_NEWTON_POLYHEDRON_HPP

#include <vector>

#include "tropinv/rational.hpp"

namespace tropinv {

// Inequality <normal, b> >= offset with normal >= 0. Stored in primitive
// integer form (coprime integer entries), so equal facets compare equal.
struct Facet {
    RationalVec normal;
    Rational offset;
};

bool operator==(const Facet& a, const Facet& b);

// Up-closed convex region conv(generators) + R^n_+ over exact rationals.
// After construction the generator list is the unique lex-sorted vertex set
// and the facet list describes the same region; the coordinate constraints
// b_k >= 0 are implicit and never stored. Immutable; all operations on it
// are pure free functions.
class NewtonPolyhedron {
public:
    // canonicalize: hull the input down to its vertex set.
    static NewtonPolyhedron from_generators(int n, std::vector<RationalVec> generators);

    // vertex enumeration of {b >= 0 : <normal_j, b> >= offset_j for all j}.
    static NewtonPolyhedron from_halfspaces(int n, const std::vector<Facet>& constraints);

    int dimension() const { return n_; }
    const std::vector<RationalVec>& generators() const { return generators_; }
    const std::vector<Facet>& facets() const { return facets_; }

    friend bool operator==(const NewtonPolyhedron& a, const NewtonPolyhedron& b);

private:
    NewtonPolyhedron() = default;
    int n_ = 0;
    std::vector<RationalVec> generators_;
    std::vector<Facet> facets_;
};

// Same as from_halfspaces but tolerates non-positive offsets (dropped as
// trivial) and an empty constraint list (whole orthant). Used by the
// greenification constructions.
NewtonPolyhedron intersect_halfspaces(int n, const std::vector<Facet>& constraints);

NewtonPolyhedron canonicalize(int n, const std::vector<RationalVec>& generators);

// min over generators of <a, g>; the directional data of the region.
Rational support_min(const NewtonPolyhedron& p, const RationalVec& a);

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q);
NewtonPolyhedron union_hull(const NewtonPolyhedron& p, const NewtonPolyhedron& q);
NewtonPolyhedron scale(const NewtonPolyhedron& p, const Rational& c);

// sup{s > 0 : v in s*P} = min over facets of <n_F, v>/c_F; infinite only for
// the whole orthant.
ExtRational gauge(const NewtonPolyhedron& p, const RationalVec& v);

bool contains(const NewtonPolyhedron& p, const RationalVec& v);

// Meets every coordinate axis (equivalently: finite covolume).
bool is_convenient(const NewtonPolyhedron& p);

// Volume of R^n_+ \ P, exact; infinite iff not convenient.
ExtRational covolume(const NewtonPolyhedron& p);

// Exact volume of the convex hull of a point set (used by covolume and
// exposed for tests). `points` need not be irredundant.
Rational polytope_volume(std::vector<RationalVec> points, int dim);

} // namespace tropinv

#endif
