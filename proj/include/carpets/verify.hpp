#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Verification suites: every check pins an identity, bound or construction
// the spectra rest on, with explicit tolerances. The CLI `verify` subcommand
// and the acceptance test binary both run these.

namespace carpets::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// identities: closed-form identities, regime dispatch, oscillation oracle
// agreement and the spectrum discontinuity (checks 1-5).
std::vector<CheckResult> run_identities(std::uint64_t seed);

// counting: census vs exhaustive enumeration, census vs the single-scale
// bound, word-count DP vs enumeration and the entropy lower envelope
// (check 6).
std::vector<CheckResult> run_counting(std::uint64_t seed);

// montecarlo: seeded sampling suites and the geometry sanity check
// (checks 7-8).
std::vector<CheckResult> run_montecarlo(std::uint64_t seed);

std::vector<CheckResult> run_all(std::uint64_t seed);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace carpets::verify
