#ifndef TROPINV_SAMPLING_HPP
#define TROPINV_SAMPLING_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "tropinv/polynomial.hpp"
#include "tropinv/tropical.hpp"

namespace tropinv {

// Threefry-2x64, 20 rounds: a counter-based generator, so every sample is a
// pure function of (key, counter) and parallel evaluation order is irrelevant.
std::array<std::uint64_t, 2> threefry2x64(std::array<std::uint64_t, 2> counter,
                                          std::array<std::uint64_t, 2> key);

inline double u64_to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Black-box map from a complex point to a value on the log scale (or -inf on
// the zero locus). Everything in this module is double precision; nothing
// feeds back into the exact core.
class Evaluator {
public:
    static Evaluator from_germ(const TropicalGerm& u);
    static Evaluator from_map(const PolynomialMap& f, const RationalVec& zeta);
    static Evaluator constant(int n, double value);

    int dimension() const { return n_; }
    double operator()(const Eigen::VectorXcd& x) const { return fn_(x); }

private:
    Evaluator(int n, std::function<double(const Eigen::VectorXcd&)> fn)
        : n_(n), fn_(std::move(fn)) {}
    int n_;
    std::function<double(const Eigen::VectorXcd&)> fn_;
};

struct SamplerConfig {
    std::vector<double> r_grid = {-2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12};
    int samples_per_shell = 4096;
    std::uint64_t seed = 1;
    double box_depth = 4.0;  // sampling box [-C|r|, 0]^n in t-space
    int threads = 0;         // 0 = hardware concurrency
};

struct GrowthPoint {
    double r;
    double lambda;
    int count;  // accepted samples
};

struct GrowthCurve {
    std::vector<GrowthPoint> points;
};

struct TypeEstimate {
    double sigma_hat = 0;
    double fit_min_r = 0, fit_max_r = 0;
    double residual = 0;
    int monotonicity_violations = 0;
    double min_quotient = 0;  // smallest observed difference quotient
};

struct ConvexityViolation {
    size_t index;      // middle point of the offending triple (ascending r)
    double magnitude;  // how far the second difference dips below -tol
};

struct ConvexityReport {
    int violations = 0;
    std::vector<ConvexityViolation> details;
};

// Estimate sup of F over the sublevel sets {phi < r} by seeded rejection
// sampling from the box (with boundary projection) and uniform phases.
GrowthCurve growth_curve(const Evaluator& f, const TropicalGerm& phi, const SamplerConfig& cfg);

// Least-squares slope over the most negative third of the grid.
TypeEstimate estimate_type(const Evaluator& f, const TropicalGerm& phi, const SamplerConfig& cfg);

ConvexityReport convexity_check(const GrowthCurve& curve, double tol);

} // namespace tropinv

#endif
