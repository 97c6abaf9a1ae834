#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Core carpet and measure definitions.
//
// A Bedford-McMullen carpet is determined by grid sizes 2 <= m < n and a
// digit set D inside the m x n grid. A digit (i, j) selects the row i
// (vertical axis, contracted by m) and the column j (horizontal axis,
// contracted by n). All measure arithmetic downstream is done with natural
// logs.

namespace carpets {

struct Digit {
    int i = 0;  // row symbol, 0 <= i < m
    int j = 0;  // column symbol, 0 <= j < n

    friend bool operator==(const Digit&, const Digit&) = default;
    friend auto operator<=>(const Digit&, const Digit&) = default;
};

// Validated carpet with cached per-row counts and log-scale data.
struct CarpetSpec {
    int m = 0;
    int n = 0;
    std::vector<Digit> digits;

    // derived on construction
    double sigma = 0.0;  // log m / log n, in (0,1)
    double log_m = 0.0;
    double log_n = 0.0;
    std::vector<int> row_counts;  // size m, n_i = #digits in row i
    int L0 = 0;                   // |D|
    int L1 = 0;                   // #rows with n_i != 0

    // When m = g^u, n = g^v for a common integer base g, sigma = u/v exactly
    // and index arithmetic (ceil(sigma*N), ceil(sigma^-K)) is done in integers.
    bool sigma_rational = false;
    int sigma_num = 0;
    int sigma_den = 0;

    int digit_index(int i, int j) const;  // -1 if (i,j) not in the digit set
};

// Builds and validates a carpet. Throws std::invalid_argument naming the
// offending field on m < 2, m >= n, empty/duplicate/out-of-grid digits.
CarpetSpec make_carpet(int m, int n, std::vector<Digit> digits);

// ceil(sigma * N) with the carpet's index convention: exact integer
// arithmetic when sigma is rational, snap-to-integer ceil otherwise.
long ceil_sigma(const CarpetSpec& carpet, long N);

// ceil(sigma^-K), the K-th block boundary used by the oscillating-measure
// machinery. Exact for rational sigma.
long ceil_sigma_pow(const CarpetSpec& carpet, int K);

// Snap-aware ceiling for index expressions like M*sigma^-2*(1+a). Values
// within 1e-9 of an integer are treated as that integer.
long snap_ceil(long double x);

struct AttractorProfile {
    double sigma = 0.0;
    long L0 = 0;
    long L1 = 0;
    std::vector<int> row_counts;
    double dim_box_packing = 0.0;  // box = packing dimension of the attractor
    double dim_hausdorff = 0.0;
};

// Derived attractor quantities for a valid carpet.
AttractorProfile attractor_profile(const CarpetSpec& carpet);

// Convenience: validate raw inputs and return the profile in one step.
AttractorProfile validate_carpet(int m, int n, const std::vector<Digit>& digits);

// Bernoulli digit weights p_{ij} > 0 with row marginals q_i = sum_j p_{ij}.
struct BernoulliWeights {
    std::vector<double> p;      // aligned with carpet.digits
    std::vector<double> log_p;  // natural logs, cached
    std::vector<double> q;      // size m, row marginals
    std::vector<double> log_q;  // log q_i for rows with n_i > 0, else -inf
};

// Validates p over the carpet's digit set: all entries positive, total mass 1
// within 1e-12. Throws std::invalid_argument otherwise.
BernoulliWeights make_weights(const CarpetSpec& carpet, std::vector<double> p);

// The two-row family: rows 0 and 1 with n0 and n1 rectangles, probabilities
// equidistributed within each row. q1, p0, p1 are derived so that
// n0*p0 + n1*p1 = 1 holds exactly.
struct TwoRowMeasure {
    int n0 = 0;
    int n1 = 0;
    double q0 = 0.0;
    double q1 = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
};

TwoRowMeasure make_two_row(int n0, int n1, double q0);

// Carpet with rows 0 and 1 populated by columns 0..n0-1 and 0..n1-1.
CarpetSpec two_row_carpet(int m, int n, int n0, int n1);

// Digit weight table of the two-row measure on a matching carpet.
BernoulliWeights two_row_weights(const CarpetSpec& carpet, const TwoRowMeasure& tr);

// min/max over digits of (-sigma log p_ij + (sigma-1) log q_i)/log m, the
// range of attainable local dimensions.
std::pair<double, double> alpha_range(const CarpetSpec& carpet,
                                      const BernoulliWeights& weights);

enum class SpectrumReach {
    spectrum_strictly_below,  // necessary condition fails
    full_at_alpha0,           // necessary and sufficient both hold
    indeterminate,            // necessary holds, sufficient fails
};

std::string to_string(SpectrumReach c);

// Report on whether the packing spectrum can reach the attractor's packing
// dimension. The necessary condition asks the uniform and measure-weighted
// row averages of log q_i to agree; the sufficient condition asks the same
// of two digit averages of log p_ij. When both hold the spectra touch
// dim_P at alpha0.
struct SpectrumReachReport {
    bool necessary_holds = false;
    bool sufficient_holds = false;
    std::optional<double> common_value_A;
    std::optional<double> common_value_B;
    std::optional<double> alpha0;
    SpectrumReach classification = SpectrumReach::spectrum_strictly_below;
};

// tol > 0 is the equality tolerance for both conditions (the conditions have
// positive codimension, so exact float equality would be meaningless).
SpectrumReachReport classify_spectrum_reach(const CarpetSpec& carpet,
                               const BernoulliWeights& weights,
                               double tol = 1e-9);

}  // namespace carpets
