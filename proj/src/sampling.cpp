#include "tropinv/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <limits>
#include <thread>

namespace tropinv {

std::array<std::uint64_t, 2> threefry2x64(std::array<std::uint64_t, 2> counter,
                                          std::array<std::uint64_t, 2> key) {
    static constexpr int rot[8] = {16, 42, 12, 31, 16, 32, 24, 21};
    constexpr std::uint64_t parity = 0x1BD11BDAA9FC1A22ull;
    const std::uint64_t ks[3] = {key[0], key[1], key[0] ^ key[1] ^ parity};

    std::uint64_t x0 = counter[0] + ks[0];
    std::uint64_t x1 = counter[1] + ks[1];
    auto rotl = [](std::uint64_t v, int r) { return (v << r) | (v >> (64 - r)); };
    for (int round = 0; round < 20; ++round) {
        x0 += x1;
        x1 = rotl(x1, rot[round % 8]) ^ x0;
        if (round % 4 == 3) {
            const int s = round / 4 + 1;
            x0 += ks[s % 3];
            x1 += ks[(s + 1) % 3] + static_cast<std::uint64_t>(s);
        }
    }
    return {x0, x1};
}

Evaluator Evaluator::from_germ(const TropicalGerm& u) {
    const int n = u.dimension();
    // precompiled double generator matrix
    std::vector<Eigen::VectorXd> gens;
    for (const auto& g : u.polyhedron().generators()) {
        Eigen::VectorXd row(n);
        for (int k = 0; k < n; ++k) row(k) = g(k).convert_to<double>();
        gens.push_back(row);
    }
    return Evaluator(n, [n, gens = std::move(gens)](const Eigen::VectorXcd& x) {
        Eigen::VectorXd t(n);
        for (int k = 0; k < n; ++k) {
            const double m = std::abs(x(k));
            if (m == 0) {
                // only generators with zero weight on this coordinate survive
                t(k) = -std::numeric_limits<double>::infinity();
            } else {
                t(k) = std::log(m);
            }
        }
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& g : gens) {
            double v = 0;
            for (int k = 0; k < n; ++k)
                if (g(k) != 0) v += g(k) * t(k);
            best = std::max(best, v);
        }
        return best;
    });
}

Evaluator Evaluator::from_map(const PolynomialMap& f, const RationalVec& zeta) {
    const int n = f.n;
    if (zeta.size() != n) throw DimensionMismatch("zeta has wrong dimension");
    // precompile: per component, (double coeff, exponent vector) pairs
    struct Term {
        double coeff;
        std::vector<int> exps;
    };
    std::vector<std::vector<Term>> comps;
    for (const auto& p : f.components) {
        std::vector<Term> ts;
        for (const auto& [exps, c] : p.terms()) ts.push_back({c.convert_to<double>(), exps});
        comps.push_back(std::move(ts));
    }
    Eigen::VectorXcd shift(n);
    for (int k = 0; k < n; ++k) shift(k) = zeta(k).convert_to<double>();

    return Evaluator(n, [n, comps = std::move(comps), shift](const Eigen::VectorXcd& x) {
        // x is the offset from zeta; evaluate components at zeta + x
        Eigen::VectorXcd z = shift + x;
        double norm2 = 0;
        for (const auto& comp : comps) {
            std::complex<double> v = 0;
            for (const auto& t : comp) {
                std::complex<double> m = t.coeff;
                for (int k = 0; k < n; ++k) {
                    std::complex<double> b = z(k);
                    int e = t.exps[k];
                    while (e > 0) {
                        if (e & 1) m *= b;
                        b *= b;
                        e >>= 1;
                    }
                }
                v += m;
            }
            norm2 += std::norm(v);
        }
        if (norm2 == 0) return -std::numeric_limits<double>::infinity();
        return 0.5 * std::log(norm2);
    });
}

Evaluator Evaluator::constant(int n, double value) {
    return Evaluator(n, [value](const Eigen::VectorXcd&) { return value; });
}

namespace {

struct GermDoubles {
    std::vector<Eigen::VectorXd> gens;
    int n;

    explicit GermDoubles(const TropicalGerm& u) : n(u.dimension()) {
        for (const auto& g : u.polyhedron().generators()) {
            Eigen::VectorXd row(n);
            for (int k = 0; k < n; ++k) row(k) = g(k).convert_to<double>();
            gens.push_back(row);
        }
    }
    double operator()(const Eigen::VectorXd& t) const {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& g : gens) best = std::max(best, g.dot(t));
        return best;
    }
};

void check_config(const SamplerConfig& cfg) {
    if (cfg.r_grid.empty()) throw ParseError("empty r grid");
    for (size_t i = 0; i < cfg.r_grid.size(); ++i) {
        if (cfg.r_grid[i] >= 0) throw ParseError("r grid values must be negative");
        if (i > 0 && cfg.r_grid[i] >= cfg.r_grid[i - 1])
            throw ParseError("r grid must be strictly decreasing");
    }
    if (cfg.samples_per_shell < 1) throw ParseError("samples_per_shell must be positive");
    if (cfg.box_depth <= 1) throw ParseError("box_depth must exceed 1");
}

void check_sampling_dimension(int n) {
    if (n > 8) throw DimensionMismatch("sampler supports dimensions up to 8");
}

struct ShellResult {
    double lambda = -std::numeric_limits<double>::infinity();
    int count = 0;
};

// One candidate point of one shell: a pure function of (seed, shell, index).
ShellResult sample_range(const Evaluator& f, const GermDoubles& phi, double r, double depth,
                         std::uint64_t seed, std::uint64_t shell, int begin, int end) {
    const int n = phi.n;
    ShellResult res;
    Eigen::VectorXd t(n);
    Eigen::VectorXcd x(n);
    const int blocks = (2 * n + 1) / 2;
    for (int i = begin; i < end; ++i) {
        double u[16];
        for (int b = 0; b < blocks; ++b) {
            auto words = threefry2x64({(shell << 32) | static_cast<std::uint64_t>(i),
                                       static_cast<std::uint64_t>(b)},
                                      {seed, 0x74726f70696e76ull});
            u[2 * b] = u64_to_unit(words[0]);
            u[2 * b + 1] = u64_to_unit(words[1]);
        }
        for (int k = 0; k < n; ++k) t(k) = depth * r * u[k];
        const double pt = phi(t);
        if (!(pt < r)) continue;  // rejection: keep only the sublevel set
        ++res.count;

        const double twopi = 6.283185307179586476925286766559;
        // value at the sampled point
        for (int k = 0; k < n; ++k) {
            const double theta = twopi * u[n + k];
            x(k) = std::polar(std::exp(t(k)), theta);
        }
        res.lambda = std::max(res.lambda, f(x));
        // and at its radial projection onto {phi = r}: still inside the
        // closed sublevel set, much closer to where the sup lives
        const double s = r / pt;
        for (int k = 0; k < n; ++k) {
            const double theta = twopi * u[n + k];
            x(k) = std::polar(std::exp(t(k) * s), theta);
        }
        res.lambda = std::max(res.lambda, f(x));
    }
    return res;
}

} // namespace

GrowthCurve growth_curve(const Evaluator& f, const TropicalGerm& phi, const SamplerConfig& cfg) {
    check_config(cfg);
    check_sampling_dimension(phi.dimension());
    if (f.dimension() != phi.dimension())
        throw DimensionMismatch("evaluator and weight dimensions differ");
    if (!is_weight(phi)) throw NotAWeight("growth_curve weight is not a weight");
    if (!is_convenient(phi.polyhedron()))
        throw NotConvenient("growth_curve weight is not convenient");

    const GermDoubles pd(phi);
    int nthreads = cfg.threads > 0 ? cfg.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;

    GrowthCurve curve;
    for (size_t j = 0; j < cfg.r_grid.size(); ++j) {
        const double r = cfg.r_grid[j];
        const int total = cfg.samples_per_shell;
        const int chunk = (total + nthreads - 1) / nthreads;
        std::vector<std::future<ShellResult>> futs;
        for (int b = 0; b * chunk < total; ++b) {
            const int lo = b * chunk;
            const int hi = std::min(total, lo + chunk);
            futs.push_back(std::async(std::launch::async, [&, lo, hi, r, j] {
                return sample_range(f, pd, r, cfg.box_depth, cfg.seed,
                                    static_cast<std::uint64_t>(j), lo, hi);
            }));
        }
        ShellResult agg;
        for (auto& fu : futs) {
            ShellResult s = fu.get();
            agg.count += s.count;
            agg.lambda = std::max(agg.lambda, s.lambda);
        }
        if (agg.count == 0)
            throw EmptyShell("no accepted samples at r = " + std::to_string(r) +
                             "; increase box_depth or samples_per_shell");
        curve.points.push_back({r, agg.lambda, agg.count});
    }
    return curve;
}

TypeEstimate estimate_type(const Evaluator& f, const TropicalGerm& phi, const SamplerConfig& cfg) {
    GrowthCurve curve = growth_curve(f, phi, cfg);

    // ascending in r
    std::vector<GrowthPoint> pts = curve.points;
    std::sort(pts.begin(), pts.end(), [](const GrowthPoint& a, const GrowthPoint& b) {
        return a.r < b.r;
    });
    const size_t m = pts.size();

    TypeEstimate est;

    // difference quotients against the least negative grid point
    const GrowthPoint& p0 = pts.back();
    double prev_q = -std::numeric_limits<double>::infinity();
    const double tol_mono = 1e-7 * std::max(1.0, std::abs(pts.front().lambda)) + 1e-9;
    for (size_t i = 0; i + 1 < m; ++i) {
        const double q = (pts[i].lambda - p0.lambda) / (pts[i].r - p0.r);
        if (q < prev_q - tol_mono) ++est.monotonicity_violations;
        prev_q = std::max(prev_q, q);
    }

    double minq = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            minq = std::min(minq, (pts[i].lambda - pts[j].lambda) / (pts[i].r - pts[j].r));
    est.min_quotient = minq;

    // least squares on the most negative third
    const size_t k = std::max<size_t>(2, (m + 2) / 3);
    double sr = 0, sl = 0, srr = 0, srl = 0;
    for (size_t i = 0; i < k; ++i) {
        sr += pts[i].r;
        sl += pts[i].lambda;
        srr += pts[i].r * pts[i].r;
        srl += pts[i].r * pts[i].lambda;
    }
    const double denom = k * srr - sr * sr;
    est.sigma_hat = (k * srl - sr * sl) / denom;
    const double intercept = (sl - est.sigma_hat * sr) / k;
    double ss = 0;
    for (size_t i = 0; i < k; ++i) {
        const double e = pts[i].lambda - (est.sigma_hat * pts[i].r + intercept);
        ss += e * e;
    }
    est.residual = std::sqrt(ss / k);
    est.fit_min_r = pts.front().r;
    est.fit_max_r = pts[k - 1].r;
    return est;
}

ConvexityReport convexity_check(const GrowthCurve& curve, double tol) {
    if (curve.points.size() < 3) throw TooFewPoints("convexity check needs at least 3 points");
    std::vector<GrowthPoint> pts = curve.points;
    std::sort(pts.begin(), pts.end(), [](const GrowthPoint& a, const GrowthPoint& b) {
        return a.r < b.r;
    });
    ConvexityReport rep;
    for (size_t i = 0; i + 2 < pts.size(); ++i) {
        const double s1 = (pts[i + 1].lambda - pts[i].lambda) / (pts[i + 1].r - pts[i].r);
        const double s2 = (pts[i + 2].lambda - pts[i + 1].lambda) / (pts[i + 2].r - pts[i + 1].r);
        if (s2 - s1 < -tol) {
            ++rep.violations;
            rep.details.push_back({i + 1, -(s2 - s1) - tol});
        }
    }
    return rep;
}

} // namespace tropinv
