#include "carpets/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace carpets {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

SplitMix64 make_rng(SeededStream stream) {
    return SplitMix64(SplitMix64::mix(stream.seed ^
                                      SplitMix64::mix(stream.id + 0x9e3779b97f4a7c15ull)));
}

Digit draw_digit(const CarpetSpec& carpet, const BernoulliWeights& weights, SplitMix64& rng) {
    double u = rng.next_double();
    int row = -1;
    double cum = 0.0;
    for (int i = 0; i < carpet.m; ++i) {
        if (weights.q[static_cast<std::size_t>(i)] <= 0.0) continue;
        cum += weights.q[static_cast<std::size_t>(i)];
        row = i;
        if (u < cum) break;
    }
    double v = rng.next_double();
    double q = weights.q[static_cast<std::size_t>(row)];
    double ccum = 0.0;
    int pick = -1;
    for (std::size_t k = 0; k < carpet.digits.size(); ++k) {
        if (carpet.digits[k].i != row) continue;
        ccum += weights.p[k] / q;
        pick = static_cast<int>(k);
        if (v < ccum) break;
    }
    return carpet.digits[static_cast<std::size_t>(pick)];
}

DigitString sample_bernoulli_digits(std::shared_ptr<const CarpetSpec> carpet,
                                    const BernoulliWeights& weights, long N,
                                    SeededStream stream) {
    if (!carpet) fail("sample: missing carpet");
    if (N < 1) fail("N: must be >= 1");
    SplitMix64 rng = make_rng(stream);
    std::vector<Digit> seq;
    seq.reserve(static_cast<std::size_t>(N));
    for (long k = 0; k < N; ++k) seq.push_back(draw_digit(*carpet, weights, rng));
    return make_digit_string_unchecked(std::move(carpet), std::move(seq));
}

std::vector<long> nu_block_boundaries(const CarpetSpec& carpet, long max_depth) {
    std::vector<long> bounds;
    for (int K = 0;; ++K) {
        long b = ceil_sigma_pow(carpet, K);
        bounds.push_back(b);
        if (b > max_depth) break;
    }
    return bounds;
}

DigitString sample_nu_delta_digits(const NuDeltaSpec& nu, const TwoRowMeasure& tr,
                                   std::shared_ptr<const CarpetSpec> carpet, long N,
                                   SeededStream stream) {
    if (!carpet) fail("sample: missing carpet");
    if (N < 1) fail("N: must be >= 1");
    if (!(nu.P + nu.delta > 0.0 && nu.P + nu.delta < 1.0) ||
        !(nu.P - nu.delta > 0.0 && nu.P - nu.delta < 1.0))
        fail("nu: P +- delta must lie strictly inside (0,1)");

    // one weight table per block parity, drawn through the shared digit path
    BernoulliWeights even_w =
        two_row_weights(*carpet, make_two_row(tr.n0, tr.n1, nu.P + nu.delta));
    BernoulliWeights odd_w =
        two_row_weights(*carpet, make_two_row(tr.n0, tr.n1, nu.P - nu.delta));

    SplitMix64 rng = make_rng(stream);
    std::vector<Digit> seq;
    seq.reserve(static_cast<std::size_t>(N));
    int K = 0;
    long next_boundary = ceil_sigma_pow(*carpet, 1);
    for (long pos = 1; pos <= N; ++pos) {
        while (pos >= next_boundary) {
            ++K;
            next_boundary = ceil_sigma_pow(*carpet, K + 1);
        }
        seq.push_back(draw_digit(*carpet, K % 2 == 0 ? even_w : odd_w, rng));
    }
    return make_digit_string_unchecked(std::move(carpet), std::move(seq));
}

std::vector<std::pair<long, double>> dim_estimates_along_depths(
    const CarpetSpec& carpet, const BernoulliWeights& weights, const DigitString& digits,
    const std::vector<long>& depths) {
    std::vector<std::pair<long, double>> out;
    out.reserve(depths.size());
    for (long N : depths)
        out.emplace_back(N, symbolic_dim_at_depth(carpet, weights, digits, N));
    return out;
}

double nu_delta_log_measure(const NuDeltaSpec& nu, const TwoRowMeasure& tr,
                            const CarpetSpec& carpet, const DigitString& digits, long N) {
    if (N < 1 || N > digits.length()) fail("N: need 1 <= N <= string length");
    double lp_even = std::log(nu.P + nu.delta);
    double lq_even = std::log(1.0 - nu.P - nu.delta);
    double lp_odd = std::log(nu.P - nu.delta);
    double lq_odd = std::log(1.0 - nu.P + nu.delta);
    double ln0 = std::log(static_cast<double>(tr.n0));
    double ln1 = std::log(static_cast<double>(tr.n1));

    long S = ceil_sigma(carpet, N);
    double acc = 0.0;
    int K = 0;
    long next_boundary = ceil_sigma_pow(carpet, 1);
    for (long pos = 1; pos <= N; ++pos) {
        while (pos >= next_boundary) {
            ++K;
            next_boundary = ceil_sigma_pow(carpet, K + 1);
        }
        bool even = K % 2 == 0;
        int row = digits.at(pos).i;
        acc += row == 0 ? (even ? lp_even : lp_odd) : (even ? lq_even : lq_odd);
        if (pos <= S) acc -= row == 0 ? ln0 : ln1;
    }
    return acc;
}

double subsequence_limsup_estimate(const NuDeltaSpec& nu, const TwoRowMeasure& tr,
                                   const CarpetSpec& carpet, const DigitString& digits,
                                   double gamma0, int K_max) {
    if (K_max < 0) fail("K_max: must be >= 0");
    // Depths below this carry O(1/sqrt(depth)) noise far above the
    // tolerances the estimator is used at; the limsup only sees the deep
    // tail of the subsequence anyway.
    constexpr long kMinDepth = 10000;
    long double lsig = std::log(static_cast<long double>(carpet.sigma));
    double best = -std::numeric_limits<double>::infinity();
    int evaluated = 0;
    for (int K = 0; K <= K_max; ++K) {
        long double aK = 2.0L * K + static_cast<long double>(gamma0);
        long depth = snap_ceil(std::exp(-aK * lsig));
        if (depth < kMinDepth) continue;
        if (depth > digits.length())
            fail("string too short: subsequence needs depth " + std::to_string(depth));
        double lm = nu_delta_log_measure(nu, tr, carpet, digits, depth);
        best = std::max(best, -lm / (static_cast<double>(depth) * carpet.log_m));
        ++evaluated;
    }
    if (evaluated == 0)
        fail("K_max too small: no subsequence depth reaches " + std::to_string(kMinDepth));
    return best;
}

std::pair<double, double> ball_dimension_bracket(const CarpetSpec& carpet,
                                                 const BernoulliWeights& weights,
                                                 const DigitString& digits, long N) {
    RunStats rs = run_statistics(digits, N);
    double d = std::max(rs.I, rs.J) + 1.0 / static_cast<double>(N);
    double hi = symbolic_dim_at_depth(carpet, weights, digits, N);
    return {hi / (1.0 + d), hi};
}

}  // namespace carpets
