#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"

using namespace tropinv;
using namespace tropinv::test;

TEST_CASE("canonicalize removes dominated and hull-interior points") {
    auto p = poly(2, {rveci({3, 0}), rveci({0, 3}), rveci({1, 1}), rveci({2, 2})});
    REQUIRE(p.generators().size() == 3);
    CHECK(vec_eq(p.generators()[0], rveci({0, 3})));
    CHECK(vec_eq(p.generators()[1], rveci({1, 1})));
    CHECK(vec_eq(p.generators()[2], rveci({3, 0})));

    // (1,2) lies above the segment (2,0)-(0,3): 3*1 + 2*2 = 7 > 6
    auto q = poly(2, {rveci({2, 0}), rveci({0, 3}), rveci({1, 2})});
    REQUIRE(q.generators().size() == 2);
    CHECK(vec_eq(q.generators()[0], rveci({0, 3})));
    CHECK(vec_eq(q.generators()[1], rveci({2, 0})));

    // collinear midpoint is not a vertex
    auto r = poly(2, {rveci({2, 0}), rveci({1, 1}), rveci({0, 2})});
    CHECK(r.generators().size() == 2);

    auto single = poly(2, {rveci({1, 0})});
    CHECK(single.generators().size() == 1);
}

TEST_CASE("canonicalize validates input") {
    CHECK_THROWS_AS(poly(2, {}), EmptyGenerators);
    CHECK_THROWS_AS(poly(2, {rvec({Rational(-1), Rational(0)})}), InvalidExponent);
    CHECK_THROWS_AS(poly(2, {rveci({1, 0, 0})}), DimensionMismatch);
}

TEST_CASE("canonicalize is idempotent and order-insensitive") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 60; ++it) {
        const int n = 2 + static_cast<int>(it % 3);
        auto u = random_germ(rng, n, {.weight = false, .max_generators = 5});
        std::vector<RationalVec> gens = u.polyhedron().generators();
        auto again = poly(n, gens);
        CHECK(again == u.polyhedron());

        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(poly(n, gens) == u.polyhedron());
    }
}

TEST_CASE("canonical vertices come from the input set and support functions agree") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 80; ++it) {
        const int n = 2 + static_cast<int>(it % 3);
        std::uniform_int_distribution<int> count(1, 6);
        std::vector<RationalVec> raw;
        const int m = count(rng);
        for (int i = 0; i < m; ++i) {
            RationalVec g(n);
            for (int k = 0; k < n; ++k) g(k) = random_rational(rng, 6, 2, false);
            raw.push_back(g);
        }
        auto p = poly(n, raw);
        for (const auto& v : p.generators()) {
            bool found = false;
            for (const auto& g : raw)
                if (vec_eq(v, g)) found = true;
            CHECK(found);
        }
        for (int t = 0; t < 10; ++t) {
            RationalVec a(n);
            for (int k = 0; k < n; ++k) a(k) = random_rational(rng, 5, 2, false);
            CHECK(support_min(p, a) == raw_support_min(raw, a));
        }
    }
}

TEST_CASE("support_min examples") {
    auto p = poly(2, {rveci({3, 0}), rveci({0, 3}), rveci({1, 1})});
    CHECK(support_min(p, rveci({1, 1})) == 2);
    CHECK(support_min(p, rveci({1, 0})) == 0);
    auto single = poly(2, {rveci({1, 0})});
    CHECK(support_min(single, rvec({Rational(5, 2), Rational(7)})) == Rational(5, 2));
    CHECK_THROWS_AS(support_min(p, rvec({Rational(-1), Rational(0)})), InvalidDirection);
}

TEST_CASE("minkowski_sum examples and support additivity") {
    auto p = poly(2, {rveci({2, 0}), rveci({0, 1})});
    auto phi = poly(2, {rveci({3, 0}), rveci({0, 3}), rveci({1, 1})});
    auto s = minkowski_sum(p, phi);
    REQUIRE(s.generators().size() == 3);
    CHECK(vec_eq(s.generators()[0], rveci({0, 4})));
    CHECK(vec_eq(s.generators()[1], rveci({1, 2})));
    CHECK(vec_eq(s.generators()[2], rveci({5, 0})));

    auto zero = poly(2, {rveci({0, 0})});
    CHECK(minkowski_sum(p, zero) == p);
    CHECK(minkowski_sum(poly(2, {rveci({1, 0})}), poly(2, {rveci({0, 1})})) ==
          poly(2, {rveci({1, 1})}));
    CHECK_THROWS_AS(minkowski_sum(p, poly(3, {rveci({1, 0, 0})})), DimensionMismatch);

    std::mt19937_64 rng(3);
    for (int it = 0; it < 40; ++it) {
        const int n = 2 + (it % 3);
        auto u = random_germ(rng, n, {.weight = false});
        auto v = random_germ(rng, n, {.weight = false});
        auto sum = minkowski_sum(u.polyhedron(), v.polyhedron());
        for (int t = 0; t < 8; ++t) {
            RationalVec a = random_direction(rng, n, 5, 2);
            CHECK(support_min(sum, a) ==
                  support_min(u.polyhedron(), a) + support_min(v.polyhedron(), a));
        }
    }
}

TEST_CASE("union_hull examples and min rule") {
    auto a = poly(2, {rveci({1, 0})});
    auto b = poly(2, {rveci({0, 1})});
    CHECK(union_hull(a, b).generators().size() == 2);
    CHECK(union_hull(a, a) == a);
    auto c = union_hull(poly(2, {rveci({2, 0})}), poly(2, {rveci({0, 3}), rveci({1, 1})}));
    CHECK(c.generators().size() == 3);

    std::mt19937_64 rng(5);
    for (int it = 0; it < 40; ++it) {
        const int n = 2 + (it % 3);
        auto u = random_germ(rng, n, {.weight = false});
        auto v = random_germ(rng, n, {.weight = false});
        auto uh = union_hull(u.polyhedron(), v.polyhedron());
        for (int t = 0; t < 8; ++t) {
            RationalVec d = random_direction(rng, n, 5, 2);
            CHECK(support_min(uh, d) ==
                  std::min(support_min(u.polyhedron(), d), support_min(v.polyhedron(), d)));
        }
    }
}

TEST_CASE("facets examples") {
    auto p = poly(2, {rveci({3, 0}), rveci({0, 3}), rveci({1, 1})});
    REQUIRE(p.facets().size() == 2);
    CHECK(vec_eq(p.facets()[0].normal, rveci({1, 2})));
    CHECK(p.facets()[0].offset == 3);
    CHECK(vec_eq(p.facets()[1].normal, rveci({2, 1})));
    CHECK(p.facets()[1].offset == 3);

    auto simplex = poly(3, {rveci({4, 0, 0}), rveci({0, 4, 0}), rveci({0, 0, 4})});
    REQUIRE(simplex.facets().size() == 1);
    CHECK(vec_eq(simplex.facets()[0].normal, rveci({1, 1, 1})));
    CHECK(simplex.facets()[0].offset == 4);

    auto corner = poly(2, {rveci({1, 1})});
    REQUIRE(corner.facets().size() == 2);
    CHECK(corner.facets()[0].offset == 1);
    CHECK(corner.facets()[1].offset == 1);

    auto orthant = poly(2, {rveci({0, 0}), rveci({2, 1})});
    CHECK(orthant.facets().empty());
    CHECK(orthant.generators().size() == 1);
}

TEST_CASE("round trip halfspaces <-> vertices") {
    auto h = NewtonPolyhedron::from_halfspaces(2, {{rveci({1, 1}), Rational(2)}});
    CHECK(h == poly(2, {rveci({2, 0}), rveci({0, 2})}));

    auto h2 = NewtonPolyhedron::from_halfspaces(
        2, {{rveci({1, 2}), Rational(3)}, {rveci({2, 1}), Rational(3)}});
    CHECK(h2 == poly(2, {rveci({3, 0}), rveci({1, 1}), rveci({0, 3})}));

    auto h3 = NewtonPolyhedron::from_halfspaces(2, {{rveci({1, 0}), Rational(1)}});
    CHECK(h3 == poly(2, {rveci({1, 0})}));

    std::mt19937_64 rng(13);
    for (int it = 0; it < 500; ++it) {
        const int n = 2 + (it % 3);
        auto u = random_germ(rng, n, {.weight = false, .max_generators = 5});
        // intersect_halfspaces handles the facet-free whole orthant as well
        auto back = intersect_halfspaces(n, u.polyhedron().facets());
        CHECK(back == u.polyhedron());
    }
}

TEST_CASE("gauge examples and membership equivalence") {
    auto p = poly(2, {rveci({3, 0}), rveci({0, 3}), rveci({1, 1})});
    CHECK(gauge(p, rveci({2, 0})) == ExtRational(Rational(2, 3)));
    CHECK(gauge(p, rveci({0, 1})) == ExtRational(Rational(1, 3)));
    CHECK(gauge(p, rveci({1, 1})) == ExtRational(Rational(1)));
    CHECK_THROWS_AS(gauge(p, rveci({0, 0})), ZeroPoint);

    auto orthant = poly(2, {rveci({0, 0})});
    CHECK(!gauge(orthant, rveci({1, 0})).is_finite());

    std::mt19937_64 rng(17);
    for (int it = 0; it < 60; ++it) {
        const int n = 2 + (it % 3);
        auto u = random_germ(rng, n, {.weight = false});
        RationalVec v(n);
        for (int k = 0; k < n; ++k) v(k) = random_rational(rng, 8, 2, false);
        if (is_zero_vec(v)) v(0) = 1;
        const ExtRational g = gauge(u.polyhedron(), v);
        const bool inside = contains(u.polyhedron(), v);
        CHECK((!g.is_finite() || g.value() >= 1) == inside);
    }
}

TEST_CASE("is_convenient examples") {
    CHECK(is_convenient(poly(2, {rveci({3, 0}), rveci({0, 3}), rveci({1, 1})})));
    CHECK(!is_convenient(poly(2, {rveci({1, 1})})));
    CHECK(is_convenient(poly(2, {rveci({2, 0}), rveci({0, 3})})));
    CHECK(is_convenient(poly(2, {rveci({0, 0})})));  // whole orthant, empty complement
}

TEST_CASE("covolume examples") {
    CHECK(covolume(poly(2, {rveci({3, 0}), rveci({0, 3}), rveci({1, 1})})) ==
          ExtRational(Rational(3)));
    CHECK(covolume(poly(2, {rveci({1, 0}), rveci({0, 1})})) == ExtRational(Rational(1, 2)));
    CHECK(covolume(poly(3, {rveci({1, 0, 0}), rveci({0, 1, 0}), rveci({0, 0, 1})})) ==
          ExtRational(Rational(1, 6)));
    CHECK(!covolume(poly(2, {rveci({1, 1})})).is_finite());
    CHECK(covolume(poly(2, {rveci({0, 0})})) == ExtRational(Rational(0)));
    CHECK(covolume(poly(4, {rveci({1, 0, 0, 0}), rveci({0, 1, 0, 0}), rveci({0, 0, 1, 0}),
                            rveci({0, 0, 0, 1})})) == ExtRational(Rational(1, 24)));
}

TEST_CASE("covolume agrees with the 2d shoelace oracle") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 120; ++it) {
        auto u = random_germ(rng, 2, {.convenient = true, .weight = false});
        CHECK(covolume(u.polyhedron()) == ExtRational(shoelace_covolume_2d(u.polyhedron())));
    }
}

TEST_CASE("covolume is monotone and scales like c^n") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 50; ++it) {
        const int n = 2 + (it % 2);
        auto u = random_germ(rng, n, {.convenient = true, .weight = false});
        auto v = random_germ(rng, n, {.convenient = true, .weight = false});
        auto uh = union_hull(u.polyhedron(), v.polyhedron());  // contains both
        CHECK(covolume(u.polyhedron()).value() >= covolume(uh).value());

        const Rational c = random_rational(rng, 4, 2, true);
        CHECK(covolume(scale(u.polyhedron(), c)).value() ==
              pow_rational(c, n) * covolume(u.polyhedron()).value());
    }
}
