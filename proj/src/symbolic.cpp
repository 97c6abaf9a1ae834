#include "carpets/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace carpets {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

DigitString make_digit_string(std::shared_ptr<const CarpetSpec> carpet, std::vector<Digit> seq) {
    if (!carpet) fail("digit string: missing carpet");
    if (seq.empty()) fail("digit string: length must be >= 1");
    for (const Digit& d : seq)
        if (carpet->digit_index(d.i, d.j) < 0)
            fail("digit string: (" + std::to_string(d.i) + "," + std::to_string(d.j) +
                 ") not in digit set");
    return DigitString{std::move(carpet), std::move(seq)};
}

DigitString make_digit_string_unchecked(std::shared_ptr<const CarpetSpec> carpet,
                                        std::vector<Digit> seq) {
    return DigitString{std::move(carpet), std::move(seq)};
}

double log_measure_of_square(const CarpetSpec& carpet, const BernoulliWeights& weights,
                             const DigitString& digits, long N) {
    if (N < 1) fail("N: must be >= 1");
    if (N > digits.length())
        fail("N: " + std::to_string(N) + " exceeds available digits (" +
             std::to_string(digits.length()) + ")");
    long S = ceil_sigma(carpet, N);
    double acc = 0.0;
    for (long k = 1; k <= S; ++k) {
        const Digit& d = digits.at(k);
        acc += weights.log_p[static_cast<std::size_t>(carpet.digit_index(d.i, d.j))];
    }
    for (long k = S + 1; k <= N; ++k) acc += weights.log_q[digits.at(k).i];
    return acc;
}

double symbolic_dim_at_depth(const CarpetSpec& carpet, const BernoulliWeights& weights,
                             const DigitString& digits, long N) {
    return log_measure_of_square(carpet, weights, digits, N) /
           (-static_cast<double>(N) * carpet.log_m);
}

double FrequencyStats::frequency(int i, int j) const {
    auto it = counts.find({i, j});
    if (it == counts.end()) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(width());
}

double FrequencyStats::row_frequency(int i) const {
    return static_cast<double>(row_counts[static_cast<std::size_t>(i)]) /
           static_cast<double>(width());
}

FrequencyStats frequency_table(const DigitString& digits, double a, double b) {
    if (!(a >= 0.0) || !(b > a)) fail("window: need 0 <= a < b");
    long lo = static_cast<long>(std::ceil(a - 1e-12));
    long hi = static_cast<long>(std::ceil(b - 1e-12));
    if (hi > digits.length()) fail("window: b exceeds string length");
    if (hi <= lo) fail("window: empty after resolving endpoints");

    FrequencyStats st;
    st.lo = lo;
    st.hi = hi;
    st.row_counts.assign(static_cast<std::size_t>(digits.carpet->m), 0);
    for (long k = lo + 1; k <= hi; ++k) {
        const Digit& d = digits.at(k);
        st.counts[{d.i, d.j}] += 1;
        st.row_counts[static_cast<std::size_t>(d.i)] += 1;
    }
    return st;
}

double row_frequency(const DigitString& digits, long k) {
    if (k < 1) fail("k: must be >= 1");
    if (k > digits.length()) fail("k: exceeds string length");
    long zero = 0;
    for (long t = 1; t <= k; ++t)
        if (digits.at(t).i == 0) ++zero;
    return static_cast<double>(zero) / static_cast<double>(k);
}

namespace {

// Length of the constant run of values from `extremes` starting at 1-based
// position `start`. Sets `truncated` when the run reaches the data boundary.
long extreme_run(const DigitString& digits, long start, bool use_row, int lo_val, int hi_val,
                 bool* truncated) {
    *truncated = false;
    if (start > digits.length()) { *truncated = true; return 0; }
    int first = use_row ? digits.at(start).i : digits.at(start).j;
    if (first != lo_val && first != hi_val) return 0;
    long k = 1;
    while (start + k <= digits.length()) {
        int v = use_row ? digits.at(start + k).i : digits.at(start + k).j;
        if (v != first) return k;
        ++k;
    }
    *truncated = true;
    return k;
}

}  // namespace

RunStats run_statistics(const DigitString& digits, long N) {
    if (N < 1 || N >= digits.length()) fail("N: need 1 <= N < string length");
    const CarpetSpec& c = *digits.carpet;
    RunStats rs;
    rs.level = N;
    long irun = extreme_run(digits, N + 1, /*use_row=*/true, 0, c.m - 1, &rs.i_truncated);
    rs.I = static_cast<double>(irun) / static_cast<double>(N);
    long Sj = ceil_sigma(c, N);
    long jrun = extreme_run(digits, Sj + 1, /*use_row=*/false, 0, c.n - 1, &rs.j_truncated);
    rs.J = static_cast<double>(jrun) / static_cast<double>(Sj);
    return rs;
}

std::string to_string(NgCondition c) {
    switch (c) {
        case NgCondition::i: return "i";
        case NgCondition::ii: return "ii";
        case NgCondition::iii: return "iii";
        case NgCondition::iv: return "iv";
        case NgCondition::v: return "v";
        case NgCondition::vi: return "vi";
        case NgCondition::vii: return "vii";
    }
    return "?";
}

long nongenericity_required_length(const CarpetSpec& carpet, long M, double a) {
    long double inv = static_cast<long double>(carpet.log_n) / carpet.log_m;  // sigma^-1
    long double m2 = static_cast<long double>(M) * inv * inv;
    return std::max(snap_ceil(m2 * (1.0L + static_cast<long double>(a))), snap_ceil(m2));
}

namespace {

bool all_equal(const DigitString& digits, long from, long to, bool use_row) {
    // positions from..to inclusive, 1-based; vacuous windows count as constant
    if (from > to) return true;
    int first = use_row ? digits.at(from).i : digits.at(from).j;
    for (long k = from + 1; k <= to; ++k) {
        int v = use_row ? digits.at(k).i : digits.at(k).j;
        if (v != first) return false;
    }
    return true;
}

bool digit_freqs_off_target(const DigitString& digits, long lo, long hi, double target, double a) {
    FrequencyStats st = frequency_table(digits, static_cast<double>(lo), static_cast<double>(hi));
    for (const Digit& d : digits.carpet->digits) {
        double f = st.frequency(d.i, d.j);
        if (f < target - a || f > target + a) return true;
    }
    return false;
}

}  // namespace

std::set<NgCondition> nongenericity_flags(const DigitString& digits, long M, double a) {
    if (M < 1) fail("M: must be >= 1");
    if (!(a > 0.0)) fail("a: must be > 0");
    const CarpetSpec& c = *digits.carpet;
    long need = nongenericity_required_length(c, M, a);
    if (digits.length() < need)
        fail("string too short: need length >= " + std::to_string(need) + " for (M=" +
             std::to_string(M) + ", a=" + std::to_string(a) + ")");

    long double inv = static_cast<long double>(c.log_n) / c.log_m;
    long M1 = snap_ceil(static_cast<long double>(M) * inv);        // ceil(M/sigma)
    long M2 = snap_ceil(static_cast<long double>(M) * inv * inv);  // ceil(M/sigma^2)

    std::set<NgCondition> flags;
    double digit_target = 1.0 / static_cast<double>(c.L0);
    if (digit_freqs_off_target(digits, 0, M, digit_target, a)) flags.insert(NgCondition::i);
    if (digit_freqs_off_target(digits, M, M1, digit_target, a)) flags.insert(NgCondition::ii);

    {
        FrequencyStats st =
            frequency_table(digits, static_cast<double>(M1), static_cast<double>(M2));
        double row_target = 1.0 / static_cast<double>(c.L1);
        for (int i = 0; i < c.m; ++i) {
            if (c.row_counts[static_cast<std::size_t>(i)] == 0) continue;
            double f = st.row_frequency(i);
            if (f < row_target - a || f > row_target + a) {
                flags.insert(NgCondition::iii);
                break;
            }
        }
    }

    long Ma = snap_ceil(static_cast<long double>(M) * (1.0L + static_cast<long double>(a)));
    long M1a = snap_ceil(static_cast<long double>(M) * inv * (1.0L + static_cast<long double>(a)));
    long M2a = snap_ceil(static_cast<long double>(M) * inv * inv *
                         (1.0L + static_cast<long double>(a)));
    if (all_equal(digits, M + 1, Ma, /*use_row=*/false)) flags.insert(NgCondition::iv);
    if (all_equal(digits, M1 + 1, M1a, /*use_row=*/true)) flags.insert(NgCondition::v);
    if (all_equal(digits, M1 + 1, M1a, /*use_row=*/false)) flags.insert(NgCondition::vi);
    if (all_equal(digits, M2 + 1, M2a, /*use_row=*/true)) flags.insert(NgCondition::vii);
    return flags;
}

std::pair<double, double> digits_to_point(const DigitString& digits) {
    const CarpetSpec& c = *digits.carpet;
    double x = 0.0, y = 0.0;
    double invn = 1.0 / c.n, invm = 1.0 / c.m;
    // Horner from the deep end keeps the sums exact to the last ulp.
    for (long k = digits.length(); k >= 1; --k) {
        const Digit& d = digits.at(k);
        x = (x + d.j) * invn;
        y = (y + d.i) * invm;
    }
    return {x, y};
}

}  // namespace carpets
