#ifndef TROPINV_JSON_IO_HPP
#define TROPINV_JSON_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "tropinv/greenification.hpp"
#include "tropinv/newton_polyhedron.hpp"
#include "tropinv/polynomial.hpp"
#include "tropinv/probe.hpp"
#include "tropinv/sampling.hpp"
#include "tropinv/tropical.hpp"

namespace tropinv {

using json = nlohmann::json;

// {"n": int, "generators": [[entry, ...], ...]} with integral entries as
// JSON ints and other rationals as "p/q" strings; canonical order in, out.
json polyhedron_to_json(const NewtonPolyhedron& p);
NewtonPolyhedron polyhedron_from_json(const json& j);

json germ_to_json(const TropicalGerm& u);
TropicalGerm germ_from_json(const json& j);

json profile_to_json(const WeightProfile& w);

// {"directions": [[...], ...]} and/or {"weights": [{germ..., "type": "p/q"}]}
WeightFamily family_from_json(const json& j);

// {"n": int, "components": ["z1^2", ...], "zeta": ["0", ...]}
struct MapInput {
    PolynomialMap map;
    RationalVec zeta;
};
MapInput map_from_json(const json& j);

json growth_curve_to_json(const GrowthCurve& c);
std::string growth_curve_to_csv(const GrowthCurve& c);
json type_estimate_to_json(const TypeEstimate& e);
json probe_report_to_json(const ProbeReport& r);
json kouchnirenko_report_to_json(const KouchnirenkoReport& r);

// 9 significant digits, the precision of everything the sampler emits.
double round9(double v);

} // namespace tropinv

#endif
