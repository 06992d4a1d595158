#pragma once

// Verification suites: exhaustive and randomized cross-checks between the
// general machinery and its closed forms and oracles. Shared by the CLI's
// `verify` command and the acceptance runner.

#include "cblocks/exact.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cblocks {

struct CheckResult {
    explicit CheckResult(std::string check_name = {}) : name(std::move(check_name)) {}

    std::string name;
    bool passed = true;
    long long cases = 0;
    std::string detail;  // summary, or the first counterexample on failure

    void fail(const std::string& what);
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Running count of degrees and symmetrized coefficients seen by the suites,
/// with the first negative one recorded.
struct NefTally {
    long long degrees = 0;
    long long negative_degrees = 0;
    long long symmetrized = 0;
    long long negative_symmetrized = 0;
    std::string first_violation;

    void degree(const Rational& d, const std::string& where);
    void symmetrized_coefficient(const Rational& c, const std::string& where);
    bool clean() const { return negative_degrees == 0 && negative_symmetrized == 0; }
};

struct VerifyOptions {
    int n = 6;
    int level = 2;
    std::uint64_t seed = 20240607;
    int samples = 0;  // 0: suite default
    bool ordered = false;  // exhaustive sweeps over ordered tuples
};

CheckResult check_level1_basis(int n);
CheckResult check_pairing_oracle(int samples, std::uint64_t seed, NefTally* tally = nullptr);
CheckResult check_sl2_closed_form(int max_level, NefTally* tally = nullptr);
/// `ordered`: every ordering of each weight multiset, not just the sorted one.
CheckResult check_critical_level(int max_sum, int max_n, bool ordered, NefTally* tally = nullptr);
CheckResult check_slm_level1(int max_m, int max_n, bool ordered, NefTally* tally = nullptr);
CheckResult check_fibonacci(int max_n);
CheckResult check_exceptional();
CheckResult check_nefness(int n, int level, NefTally* tally = nullptr);
CheckResult check_hassett(int samples, std::uint64_t seed, NefTally* tally = nullptr);
CheckResult check_residue_averaging(int samples, std::uint64_t seed);
CheckResult check_symmetrization(int samples, std::uint64_t seed, int max_n);

/// Suite names accepted by run_suite, in display order ("all" excluded).
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace cblocks
