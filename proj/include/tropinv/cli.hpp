#ifndef TROPINV_CLI_HPP
#define TROPINV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tropinv {

// Exit codes: 0 success, 1 verify-paper row failure, 2 parse/usage error,
// 3 precondition violation, 4 internal invariant breach.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct VerifyRow {
    enum class Kind { exact, sampled };
    Kind kind = Kind::exact;
    std::string claim;
    std::string expected;
    std::string computed;
    bool pass = false;
};

// Reproduces the worked values the library is anchored to, in one run.
// `expected_override` (claim -> expected string) re-judges rows against
// substituted values; used by the tamper self-test.
std::vector<VerifyRow> verify_paper_rows(bool with_sampler,
                                         const nlohmann::json* expected_override = nullptr);

} // namespace tropinv

#endif
