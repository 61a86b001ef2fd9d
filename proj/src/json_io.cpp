#include "tropinv/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace tropinv {

namespace {

json rational_to_json(const Rational& r) {
    if (denominator(r) == 1) {
        const Integer& num = numerator(r);
        if (num >= -(Integer(1) << 53) && num <= (Integer(1) << 53))
            return json(num.convert_to<std::int64_t>());
    }
    return json(format_rational(r));
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected an integer or a 'p/q' string, got " + j.dump());
}

RationalVec vec_from_json(const json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("expected an array of length " + std::to_string(n));
    RationalVec v(n);
    for (int k = 0; k < n; ++k) v(k) = rational_from_json(j[k]);
    return v;
}

int dimension_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("expected an object with an integer field 'n'");
    const int n = j["n"].get<int>();
    if (n < 1) throw ParseError("'n' must be >= 1");
    return n;
}

} // namespace

double round9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::strtod(buf, nullptr);
}

json polyhedron_to_json(const NewtonPolyhedron& p) {
    json gens = json::array();
    for (const auto& g : p.generators()) {
        json row = json::array();
        for (Eigen::Index k = 0; k < g.size(); ++k) row.push_back(rational_to_json(g(k)));
        gens.push_back(std::move(row));
    }
    return json{{"n", p.dimension()}, {"generators", std::move(gens)}};
}

NewtonPolyhedron polyhedron_from_json(const json& j) {
    const int n = dimension_from_json(j);
    if (!j.contains("generators") || !j["generators"].is_array())
        throw ParseError("expected an array field 'generators'");
    std::vector<RationalVec> gens;
    for (const auto& row : j["generators"]) gens.push_back(vec_from_json(row, n));
    return NewtonPolyhedron::from_generators(n, std::move(gens));
}

json germ_to_json(const TropicalGerm& u) { return polyhedron_to_json(u.polyhedron()); }

TropicalGerm germ_from_json(const json& j) { return TropicalGerm(polyhedron_from_json(j)); }

json profile_to_json(const WeightProfile& w) {
    return json{{"lelong", format_rational(w.lelong)},
                {"mass", format_ext(w.mass)},
                {"lojasiewicz", format_ext(w.lojasiewicz)},
                {"is_weight", w.is_weight},
                {"is_convenient", w.is_convenient}};
}

WeightFamily family_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("weight family must be an object");
    WeightFamily fam;
    if (j.contains("directions")) {
        if (!j["directions"].is_array()) throw ParseError("'directions' must be an array");
        for (const auto& row : j["directions"]) {
            if (!row.is_array() || row.empty()) throw ParseError("direction must be a nonempty array");
            fam.directions.push_back(vec_from_json(row, static_cast<int>(row.size())));
        }
    }
    if (j.contains("weights")) {
        if (!j["weights"].is_array()) throw ParseError("'weights' must be an array");
        for (const auto& w : j["weights"]) {
            WeightedGerm wg{germ_from_json(w), std::nullopt};
            if (w.contains("type")) wg.type_value = rational_from_json(w["type"]);
            fam.weights.push_back(std::move(wg));
        }
    }
    if (fam.directions.empty() && fam.weights.empty())
        throw ParseError("weight family needs 'directions' or 'weights'");
    return fam;
}

MapInput map_from_json(const json& j) {
    const int n = dimension_from_json(j);
    if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
        throw ParseError("expected a nonempty array field 'components'");
    MapInput in;
    in.map.n = n;
    for (const auto& c : j["components"]) {
        if (!c.is_string()) throw ParseError("map components must be strings");
        in.map.components.push_back(Polynomial::parse(c.get<std::string>(), n));
    }
    if (j.contains("zeta")) {
        in.zeta = vec_from_json(j["zeta"], n);
    } else {
        in.zeta = RationalVec::Zero(n);
    }
    return in;
}

json growth_curve_to_json(const GrowthCurve& c) {
    json rows = json::array();
    for (const auto& p : c.points)
        rows.push_back(json{{"r", round9(p.r)}, {"lambda", round9(p.lambda)}, {"count", p.count}});
    return json{{"points", std::move(rows)}};
}

std::string growth_curve_to_csv(const GrowthCurve& c) {
    std::string out = "r,lambda,count\n";
    char buf[128];
    for (const auto& p : c.points) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%d\n", p.r, p.lambda, p.count);
        out += buf;
    }
    return out;
}

json type_estimate_to_json(const TypeEstimate& e) {
    return json{{"sigma_hat", round9(e.sigma_hat)},
                {"fit_range", {round9(e.fit_min_r), round9(e.fit_max_r)}},
                {"residual", round9(e.residual)},
                {"monotonicity_violations", e.monotonicity_violations},
                {"min_quotient", round9(e.min_quotient)}};
}

json probe_report_to_json(const ProbeReport& r) {
    json shells = json::array();
    for (const auto& s : r.shells) {
        shells.push_back(json{{"shell", s.shell},
                              {"median", round9(s.median)},
                              {"p05", round9(s.p05)},
                              {"p95", round9(s.p95)},
                              {"deviation", std::isfinite(s.deviation) ? json(round9(s.deviation))
                                                                       : json("inf")},
                              {"hit_zero_locus", s.hit_zero_locus}});
    }
    return json{{"verdict", to_string(r.verdict)},
                {"baseline_median", round9(r.baseline_median)},
                {"window", round9(r.window)},
                {"threshold", round9(r.threshold)},
                {"shells", std::move(shells)},
                {"note", r.note}};
}

json kouchnirenko_report_to_json(const KouchnirenkoReport& r) {
    return json{{"newton_number", format_ext(r.newton_num)},
                {"convenient", r.convenient},
                {"indicator", germ_to_json(r.indicator)},
                {"profile", profile_to_json(r.profile)},
                {"statement", r.statement}};
}

} // namespace tropinv
