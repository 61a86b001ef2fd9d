#include "tropinv/probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tropinv/sampling.hpp"

namespace tropinv {

namespace {

double quantile(std::vector<double> v, double q) {
    if (v.empty()) return 0;
    std::sort(v.begin(), v.end());
    const double pos = q * (v.size() - 1);
    const size_t lo = static_cast<size_t>(pos);
    const size_t hi = std::min(lo + 1, v.size() - 1);
    const double frac = pos - lo;
    return v[lo] * (1 - frac) + v[hi] * frac;
}

} // namespace

std::string to_string(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::consistent: return "consistent";
        case ProbeVerdict::inconsistent: return "inconsistent";
        default: return "indeterminate";
    }
}

ProbeReport cor62_probe(const PolynomialMap& f, const RationalVec& zeta, const ProbeConfig& cfg) {
    const TropicalGerm indicator = indicator_of_map(f, zeta);
    if (!is_convenient(indicator.polyhedron()))
        throw NotConvenient("cor62_probe needs a convenient Newton polyhedron");
    if (cfg.shell_max - cfg.shell_min < 4)
        throw TooFewPoints("probe needs at least 5 shells");

    const int n = f.n;
    const Evaluator value = Evaluator::from_map(f, zeta);
    const Evaluator psi = Evaluator::from_germ(indicator);

    const double ln2 = 0.6931471805599453;
    const double twopi = 6.283185307179586476925286766559;
    const int blocks = (2 * n + 1) / 2;

    std::vector<std::vector<double>> shell_d;
    std::vector<bool> shell_zero;
    for (int j = cfg.shell_min; j <= cfg.shell_max; ++j) {
        std::vector<double> d;
        d.reserve(cfg.samples_per_shell);
        bool zero_hit = false;
        Eigen::VectorXcd x(n);
        for (int i = 0; i < cfg.samples_per_shell; ++i) {
            double u[16];
            for (int b = 0; b < blocks; ++b) {
                auto words = threefry2x64({(static_cast<std::uint64_t>(j) << 32) |
                                               static_cast<std::uint64_t>(i),
                                           static_cast<std::uint64_t>(b)},
                                          {cfg.seed, 0x636f723632ull});
                u[2 * b] = u64_to_unit(words[0]);
                u[2 * b + 1] = u64_to_unit(words[1]);
            }
            for (int k = 0; k < n; ++k) {
                const double t = -ln2 * j * (1.0 + (cfg.breadth - 1.0) * u[k]);
                x(k) = std::polar(std::exp(t), twopi * u[n + k]);
            }
            const double lv = value(x);
            if (!std::isfinite(lv)) {
                zero_hit = true;
                continue;
            }
            d.push_back(lv - psi(x));
        }
        shell_d.push_back(std::move(d));
        shell_zero.push_back(zero_hit);
    }

    ProbeReport rep;
    std::vector<double> pooled;
    for (int s = 0; s < 3; ++s)
        pooled.insert(pooled.end(), shell_d[s].begin(), shell_d[s].end());
    rep.baseline_median = quantile(pooled, 0.5);
    rep.window = quantile(pooled, 0.95) - quantile(pooled, 0.05);
    rep.threshold = rep.window + 1.0;

    for (size_t s = 0; s < shell_d.size(); ++s) {
        ProbeShellStat st;
        st.shell = cfg.shell_min + static_cast<int>(s);
        st.median = quantile(shell_d[s], 0.5);
        st.p05 = quantile(shell_d[s], 0.05);
        st.p95 = quantile(shell_d[s], 0.95);
        st.hit_zero_locus = shell_zero[s];
        double dev = 0;
        for (double v : shell_d[s]) dev = std::max(dev, std::abs(v - rep.baseline_median));
        if (st.hit_zero_locus) dev = std::numeric_limits<double>::infinity();
        st.deviation = dev;
        rep.shells.push_back(st);
    }

    // consistent: every shell deviation stays inside the window;
    // inconsistent: three consecutive shells outside it while the running
    // max still grows (a drift, not just a wide stationary spread).
    bool all_within = true;
    for (const auto& st : rep.shells)
        if (st.deviation > rep.threshold) all_within = false;

    bool drift = false;
    double running = 0;
    std::vector<double> run_before(rep.shells.size(), 0);
    for (size_t s = 0; s < rep.shells.size(); ++s) {
        run_before[s] = running;
        running = std::max(running, rep.shells[s].deviation);
    }
    for (size_t s = 0; s + 2 < rep.shells.size() && !drift; ++s) {
        bool above = true, grows = true;
        for (size_t k = s; k <= s + 2; ++k) {
            if (!(rep.shells[k].deviation > rep.threshold)) above = false;
        }
        if (!(rep.shells[s + 2].deviation > run_before[s] + 0.05)) grows = false;
        if (above && grows) drift = true;
    }

    if (all_within) rep.verdict = ProbeVerdict::consistent;
    else if (drift) rep.verdict = ProbeVerdict::inconsistent;
    else rep.verdict = ProbeVerdict::indeterminate;

    rep.note = "heuristic sampling verdict (not a certificate); shells 2^-j, j = " +
               std::to_string(cfg.shell_min) + ".." + std::to_string(cfg.shell_max) +
               ", breadth " + std::to_string(cfg.breadth) + ", " +
               std::to_string(cfg.samples_per_shell) + " samples/shell, window = p95-p05 of " +
               "log|f|-Psi on the first three shells, drift threshold = window + 1.0 nats";
    return rep;
}

} // namespace tropinv
