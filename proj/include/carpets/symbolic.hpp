#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "carpets/carpet.hpp"

// Finite symbolic expansions and the statistics the covering arguments run
// on: exact square measures, window frequencies, boundary-run lengths and
// the seven nongenericity classifiers.
//
// Index conventions. Positions are 1-based to match the usual symbolic
// notation. A window (a, b] with possibly fractional endpoints resolves to
// the integer positions ceil(a)+1 .. ceil(b). Everywhere an index like
// sigma*N appears it is resolved through ceil_sigma / snap_ceil.

namespace carpets {

struct DigitString {
    std::shared_ptr<const CarpetSpec> carpet;
    std::vector<Digit> seq;

    long length() const { return static_cast<long>(seq.size()); }
    // 1-based access, k in [1, length()]
    const Digit& at(long k) const { return seq[static_cast<std::size_t>(k - 1)]; }
};

// Validates every pair against the carpet's digit set; length >= 1.
DigitString make_digit_string(std::shared_ptr<const CarpetSpec> carpet, std::vector<Digit> seq);

// Trusted constructor for strings produced by the samplers.
DigitString make_digit_string_unchecked(std::shared_ptr<const CarpetSpec> carpet,
                                        std::vector<Digit> seq);

// log mu(C_N(x)) via the product rule: full digit weights up to ceil(sigma*N),
// row marginals from there to N. Requires length >= N >= 1.
double log_measure_of_square(const CarpetSpec& carpet, const BernoulliWeights& weights,
                             const DigitString& digits, long N);

// log mu(C_N(x)) / (-N log m); approaches the symbolic local dimension for
// strings with converging frequencies.
double symbolic_dim_at_depth(const CarpetSpec& carpet, const BernoulliWeights& weights,
                             const DigitString& digits, long N);

// Exact digit counts over a resolved window.
struct FrequencyStats {
    long lo = 0;  // resolved window [lo, hi), i.e. 1-based positions lo+1..hi
    long hi = 0;
    std::map<std::pair<int, int>, long> counts;
    std::vector<long> row_counts;  // size m

    long width() const { return hi - lo; }
    double frequency(int i, int j) const;
    double row_frequency(int i) const;
};

FrequencyStats frequency_table(const DigitString& digits, double a, double b);

// G_k: fraction of positions 1..k carrying row symbol 0.
double row_frequency(const DigitString& digits, long k);

// Normalized boundary-run statistics at level N: I measures the run of
// extreme row symbols after position N, J the run of extreme column symbols
// after position ceil(sigma*N). Runs are truncated at the end of the data.
struct RunStats {
    double I = 0.0;
    double J = 0.0;
    long level = 0;
    bool i_truncated = false;  // run reached the end of the finite string
    bool j_truncated = false;
};

RunStats run_statistics(const DigitString& digits, long N);

enum class NgCondition { i, ii, iii, iv, v, vi, vii };

std::string to_string(NgCondition c);

// Required string length to evaluate the classifiers at (M, a).
long nongenericity_required_length(const CarpetSpec& carpet, long M, double a);

// The seven nongenericity conditions at scale M and tolerance a:
//   i/ii   digit frequency off 1/L0 +- a on the windows (0,M] and
//          (M, ceil(M/sigma)]
//   iii    row frequency off 1/L1 +- a on (ceil(M/sigma), ceil(M/sigma^2)]
//   iv-vii constant symbol runs on the four stated windows
// (iii compares the row sum against the uniform row target 1/L1; the
// frequencies of a long string sum to 1, so any per-row target family must
// sum to 1 as well.)
std::set<NgCondition> nongenericity_flags(const DigitString& digits, long M, double a);

// Point of the (finite) expansion: x = sum_k j_k n^-k on the horizontal
// axis, y = sum_k i_k m^-k on the vertical axis. With this pairing two
// points sharing a level-N approximate square are within sqrt(2) * m^-N.
std::pair<double, double> digits_to_point(const DigitString& digits);

}  // namespace carpets
