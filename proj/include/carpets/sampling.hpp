#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "carpets/carpet.hpp"
#include "carpets/spectra.hpp"
#include "carpets/symbolic.hpp"

// Seeded Monte Carlo generators and empirical local-dimension estimators.
//
// RNG contract: SplitMix64 streams keyed by (seed, stream id). The engine
// state is initialized as mix(seed ^ mix(id + 0x9E3779B97F4A7C15)), where
// mix is the SplitMix64 finalizer, so identical (seed, id) pairs reproduce
// identical draws bit-for-bit regardless of threading or platform. Golden
// first-draw vectors are pinned in the test suite.

namespace carpets {

struct SeededStream {
    std::uint64_t seed = 0;
    std::uint64_t id = 0;
};

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

SplitMix64 make_rng(SeededStream stream);

// One digit draw: row by cumulative row marginals, then column by cumulative
// conditional weights within the row. Two uniform deviates per digit; every
// sampler goes through this single decision path.
Digit draw_digit(const CarpetSpec& carpet, const BernoulliWeights& weights, SplitMix64& rng);

// i.i.d. digits with the given weights; deterministic per (seed, id).
DigitString sample_bernoulli_digits(std::shared_ptr<const CarpetSpec> carpet,
                                    const BernoulliWeights& weights, long N,
                                    SeededStream stream);

// Oscillating measure: row-0 probability P + delta on even blocks
// [sigma^-K, sigma^-K-1), P - delta on odd blocks, columns uniform within
// the row. With delta = 0 this walks the exact same decision path as
// sample_bernoulli_digits on the weights with row masses (P, 1-P), so the
// outputs agree bit-for-bit.
struct NuDeltaSpec {
    double P = 0.0;
    double delta = 0.0;
};

DigitString sample_nu_delta_digits(const NuDeltaSpec& nu, const TwoRowMeasure& tr,
                                   std::shared_ptr<const CarpetSpec> carpet, long N,
                                   SeededStream stream);

// Block boundaries ceil(sigma^-K) up to max_depth, starting at position 1.
std::vector<long> nu_block_boundaries(const CarpetSpec& carpet, long max_depth);

// symbolic_dim_at_depth of the evaluating measure at each requested depth.
std::vector<std::pair<long, double>> dim_estimates_along_depths(
    const CarpetSpec& carpet, const BernoulliWeights& weights, const DigitString& digits,
    const std::vector<long>& depths);

// log nu_delta(C_N(x)) by the block product rule: blockwise row probabilities
// for every position <= N, uniform column factors for positions <=
// ceil(sigma N).
double nu_delta_log_measure(const NuDeltaSpec& nu, const TwoRowMeasure& tr,
                            const CarpetSpec& carpet, const DigitString& digits, long N);

// max over K <= K_max of -log nu_delta(C_{l_K}(x)) / (l_K log m) along the
// subsequence l_K = ceil(sigma^-(2K + gamma0)). Finite-depth estimator of
// the limsup local dimension of nu_delta; depths below 1e4 are skipped
// (their normalized fluctuations drown the signal).
double subsequence_limsup_estimate(const NuDeltaSpec& nu, const TwoRowMeasure& tr,
                                   const CarpetSpec& carpet, const DigitString& digits,
                                   double gamma0, int K_max);

// Sandwich for the ball-based exponent at depth N from the square-based one:
// C_N(x) sits inside the m^-N ball, and the m^-N(1+d) ball sits inside
// C_N(x) once d exceeds the boundary-run statistics. Returns (lo, hi) with
// lo = hi/(1+d), d = max(I_N, J_N) + 1/N.
std::pair<double, double> ball_dimension_bracket(const CarpetSpec& carpet,
                                                 const BernoulliWeights& weights,
                                                 const DigitString& digits, long N);

}  // namespace carpets
