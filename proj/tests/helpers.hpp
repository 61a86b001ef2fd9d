#ifndef TROPINV_TEST_HELPERS_HPP
#define TROPINV_TEST_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "tropinv/greenification.hpp"
#include "tropinv/newton_polyhedron.hpp"
#include "tropinv/tropical.hpp"

namespace tropinv::test {

inline RationalVec rvec(std::initializer_list<Rational> xs) {
    RationalVec v(static_cast<int>(xs.size()));
    int i = 0;
    for (const auto& x : xs) v(i++) = x;
    return v;
}

inline RationalVec rveci(std::initializer_list<int> xs) {
    RationalVec v(static_cast<int>(xs.size()));
    int i = 0;
    for (int x : xs) v(i++) = x;
    return v;
}

inline NewtonPolyhedron poly(int n, std::vector<RationalVec> gens) {
    return NewtonPolyhedron::from_generators(n, std::move(gens));
}

inline TropicalGerm germ(int n, std::vector<RationalVec> gens) {
    return TropicalGerm::from_generators(n, std::move(gens));
}

// The weight of Remark 3.2(1)-type examples: max{3log|z1|, 3log|z2|, log|z1 z2|}.
inline TropicalGerm paper_weight() {
    return germ(2, {rveci({3, 0}), rveci({0, 3}), rveci({1, 1})});
}

struct RandomGermOptions {
    bool convenient = false;
    bool weight = true;   // exclude the origin from the generator set
    int max_generators = 4;
    int max_numerator = 8;
    int max_denominator = 2;
};

inline Rational random_rational(std::mt19937_64& rng, int max_num, int max_den, bool nonzero) {
    std::uniform_int_distribution<int> num(nonzero ? 1 : 0, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline RationalVec random_direction(std::mt19937_64& rng, int n, int max_num = 6,
                                    int max_den = 2) {
    RationalVec a(n);
    for (int k = 0; k < n; ++k) a(k) = random_rational(rng, max_num, max_den, true);
    return a;
}

inline TropicalGerm random_germ(std::mt19937_64& rng, int n, const RandomGermOptions& opt = {}) {
    std::uniform_int_distribution<int> count(1, opt.max_generators);
    std::vector<RationalVec> gens;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
        RationalVec g(n);
        bool zero = true;
        for (int k = 0; k < n; ++k) {
            g(k) = random_rational(rng, opt.max_numerator, opt.max_denominator, false);
            if (g(k) != 0) zero = false;
        }
        if (zero && opt.weight) g(std::uniform_int_distribution<int>(0, n - 1)(rng)) = 1;
        gens.push_back(g);
    }
    if (opt.convenient) {
        for (int k = 0; k < n; ++k) {
            RationalVec g = RationalVec::Zero(n);
            g(k) = random_rational(rng, opt.max_numerator, opt.max_denominator, true);
            gens.push_back(g);
        }
    }
    return TropicalGerm::from_generators(n, std::move(gens));
}

// Test-side oracle: support function straight off a raw generator set,
// independent of the hull pipeline.
inline Rational raw_support_min(const std::vector<RationalVec>& gens, const RationalVec& a) {
    Rational best;
    bool first = true;
    for (const auto& g : gens) {
        Rational v = 0;
        for (Eigen::Index i = 0; i < a.size(); ++i) v += a(i) * g(i);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

// Test-side oracle: shoelace area of the covolume region in n = 2, built by
// walking the staircase between axis intercepts through the sorted vertices.
inline Rational shoelace_covolume_2d(const NewtonPolyhedron& p) {
    std::vector<RationalVec> vs = p.generators();  // lex sorted: x asc
    std::vector<RationalVec> ring;
    ring.push_back(rveci({0, 0}));
    // descending in y (ascending x) from the y-axis intercept to the x-axis one
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) ring.push_back(*it);
    Rational twice = 0;
    for (size_t i = 0; i < ring.size(); ++i) {
        const auto& a = ring[i];
        const auto& b = ring[(i + 1) % ring.size()];
        twice += a(0) * b(1) - b(0) * a(1);
    }
    if (twice < 0) twice = -twice;
    return twice / 2;
}

} // namespace tropinv::test

#endif
