#ifndef TROPINV_PROBE_HPP
#define TROPINV_PROBE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tropinv/polynomial.hpp"

namespace tropinv {

// Boundedness probe for log|f| - Psi on shrinking shells. The verdict is a
// sampling heuristic, never a certificate; the report says so and carries all
// thresholds so a run is reproducible.
struct ProbeConfig {
    int shell_min = 4;   // shells at radii 2^-j, j in [shell_min, shell_max]
    int shell_max = 16;
    int samples_per_shell = 4096;
    std::uint64_t seed = 1;
    double breadth = 4.0;  // log-moduli box [-breadth*j*ln2, -j*ln2]^n
};

enum class ProbeVerdict { consistent, inconsistent, indeterminate };

struct ProbeShellStat {
    int shell = 0;
    double median = 0;
    double p05 = 0;
    double p95 = 0;
    double deviation = 0;  // max |d - baseline median| over the shell
    bool hit_zero_locus = false;
};

struct ProbeReport {
    ProbeVerdict verdict = ProbeVerdict::indeterminate;
    double baseline_median = 0;
    double window = 0;     // p95 - p05 of d pooled over the first three shells
    double threshold = 0;  // window + 1.0 (natural log units)
    std::vector<ProbeShellStat> shells;
    std::string note;
};

std::string to_string(ProbeVerdict v);

ProbeReport cor62_probe(const PolynomialMap& f, const RationalVec& zeta, const ProbeConfig& cfg);

} // namespace tropinv

#endif
