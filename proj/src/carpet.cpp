#include "carpets/carpet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace carpets {

namespace {

using boost::multiprecision::cpp_int;

// Detect m = g^u, n = g^v for a common integer base g >= 2. Returns (u, v)
// or nullopt. sigma = u/v exactly in that case, irrational otherwise.
std::optional<std::pair<int, int>> common_power_base(int m, int n) {
    for (int g = 2; g <= m; ++g) {
        long long mm = 1;
        int u = 0;
        while (mm < m) { mm *= g; ++u; }
        if (mm != m) continue;
        long long nn = 1;
        int v = 0;
        while (nn < n) { nn *= g; ++v; }
        if (nn != n) continue;
        return std::make_pair(u, v);
    }
    return std::nullopt;
}

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

int CarpetSpec::digit_index(int i, int j) const {
    for (std::size_t k = 0; k < digits.size(); ++k)
        if (digits[k].i == i && digits[k].j == j) return static_cast<int>(k);
    return -1;
}

CarpetSpec make_carpet(int m, int n, std::vector<Digit> digits) {
    if (m < 2) fail("m: must be >= 2, got " + std::to_string(m));
    if (n <= m) fail("n: must be > m, got n=" + std::to_string(n) + " with m=" + std::to_string(m));
    if (digits.size() < 2) fail("digits: need at least 2 digits, got " + std::to_string(digits.size()));

    std::set<std::pair<int, int>> seen;
    for (const Digit& d : digits) {
        if (d.i < 0 || d.i >= m || d.j < 0 || d.j >= n) {
            std::ostringstream os;
            os << "digits: (" << d.i << "," << d.j << ") outside the " << m << "x" << n << " grid";
            fail(os.str());
        }
        if (!seen.insert({d.i, d.j}).second) {
            std::ostringstream os;
            os << "digits: duplicate entry (" << d.i << "," << d.j << ")";
            fail(os.str());
        }
    }
    std::sort(digits.begin(), digits.end());

    CarpetSpec c;
    c.m = m;
    c.n = n;
    c.digits = std::move(digits);
    c.log_m = std::log(static_cast<double>(m));
    c.log_n = std::log(static_cast<double>(n));
    c.sigma = c.log_m / c.log_n;
    c.row_counts.assign(m, 0);
    for (const Digit& d : c.digits) c.row_counts[d.i] += 1;
    c.L0 = static_cast<int>(c.digits.size());
    c.L1 = static_cast<int>(std::count_if(c.row_counts.begin(), c.row_counts.end(),
                                          [](int k) { return k != 0; }));
    if (auto uv = common_power_base(m, n)) {
        c.sigma_rational = true;
        c.sigma_num = uv->first;
        c.sigma_den = uv->second;
    }
    return c;
}

long snap_ceil(long double x) {
    long double r = std::nearbyint(x);
    if (std::fabs(x - r) < 1e-9L) return static_cast<long>(r);
    return static_cast<long>(std::ceil(x));
}

long ceil_sigma(const CarpetSpec& carpet, long N) {
    if (N < 0) fail("N: must be >= 0");
    if (carpet.sigma_rational) {
        long long u = carpet.sigma_num, v = carpet.sigma_den;
        return static_cast<long>((u * N + v - 1) / v);
    }
    long double s = static_cast<long double>(carpet.log_m) / static_cast<long double>(carpet.log_n);
    return snap_ceil(s * static_cast<long double>(N));
}

long ceil_sigma_pow(const CarpetSpec& carpet, int K) {
    if (K < 0) fail("K: must be >= 0");
    if (K == 0) return 1;
    if (carpet.sigma_rational) {
        // sigma^-K = (v/u)^K = v^K / u^K, exact ceil via integer division
        cpp_int num = 1, den = 1;
        for (int t = 0; t < K; ++t) {
            num *= carpet.sigma_den;
            den *= carpet.sigma_num;
        }
        cpp_int q = (num + den - 1) / den;
        if (q > std::numeric_limits<long>::max() / 4) fail("K: block boundary overflows");
        return static_cast<long>(q);
    }
    long double s = static_cast<long double>(carpet.log_m) / static_cast<long double>(carpet.log_n);
    long double x = std::pow(s, static_cast<long double>(-K));
    if (x > 4e18L) fail("K: block boundary overflows");
    return snap_ceil(x);
}

namespace {

// dim_H of the attractor: sup over row distributions Q of
// (H(Q) + sigma * sum_i Q_i log n_i) / log m. The supremum is attained at
// the Gibbs weights Q_i ~ n_i^sigma, giving log(sum_i n_i^sigma)/log m.
double attractor_dim_hausdorff(const CarpetSpec& c) {
    double acc = 0.0;
    for (int i = 0; i < c.m; ++i) {
        if (c.row_counts[i] == 0) continue;
        acc += std::exp(c.sigma * std::log(static_cast<double>(c.row_counts[i])));
    }
    return std::log(acc) / c.log_m;
}

}  // namespace

AttractorProfile attractor_profile(const CarpetSpec& c) {
    AttractorProfile p;
    p.sigma = c.sigma;
    p.L0 = c.L0;
    p.L1 = c.L1;
    p.row_counts = c.row_counts;
    p.dim_box_packing =
        (c.sigma * std::log(static_cast<double>(c.L0)) +
         (1.0 - c.sigma) * std::log(static_cast<double>(c.L1))) /
        c.log_m;
    p.dim_hausdorff = attractor_dim_hausdorff(c);
    return p;
}

AttractorProfile validate_carpet(int m, int n, const std::vector<Digit>& digits) {
    return attractor_profile(make_carpet(m, n, digits));
}

BernoulliWeights make_weights(const CarpetSpec& carpet, std::vector<double> p) {
    if (p.size() != carpet.digits.size())
        fail("p: expected " + std::to_string(carpet.digits.size()) + " weights, got " +
             std::to_string(p.size()));
    double total = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!(p[k] > 0.0))
            fail("p: weight for digit (" + std::to_string(carpet.digits[k].i) + "," +
                 std::to_string(carpet.digits[k].j) + ") must be > 0");
        total += p[k];
    }
    if (std::fabs(total - 1.0) > 1e-12)
        fail("p: weights sum to " + std::to_string(total) + ", expected 1 within 1e-12");

    BernoulliWeights w;
    w.p = std::move(p);
    w.log_p.resize(w.p.size());
    for (std::size_t k = 0; k < w.p.size(); ++k) w.log_p[k] = std::log(w.p[k]);
    w.q.assign(carpet.m, 0.0);
    for (std::size_t k = 0; k < w.p.size(); ++k) w.q[carpet.digits[k].i] += w.p[k];
    w.log_q.assign(carpet.m, -std::numeric_limits<double>::infinity());
    for (int i = 0; i < carpet.m; ++i)
        if (w.q[i] > 0.0) w.log_q[i] = std::log(w.q[i]);
    return w;
}

TwoRowMeasure make_two_row(int n0, int n1, double q0) {
    if (n0 < 1 || n1 < 1) fail("n0/n1: row rectangle counts must be >= 1");
    if (!(q0 > 0.0 && q0 < 1.0)) fail("q0: must lie strictly inside (0,1)");
    TwoRowMeasure tr;
    tr.n0 = n0;
    tr.n1 = n1;
    tr.q0 = q0;
    tr.q1 = 1.0 - q0;
    tr.p0 = q0 / n0;
    tr.p1 = tr.q1 / n1;
    return tr;
}

CarpetSpec two_row_carpet(int m, int n, int n0, int n1) {
    if (m < 2) fail("m: must be >= 2");
    if (n0 > n || n1 > n) fail("n0/n1: row rectangle counts exceed n");
    std::vector<Digit> digits;
    for (int j = 0; j < n0; ++j) digits.push_back({0, j});
    for (int j = 0; j < n1; ++j) digits.push_back({1, j});
    return make_carpet(m, n, std::move(digits));
}

BernoulliWeights two_row_weights(const CarpetSpec& carpet, const TwoRowMeasure& tr) {
    if (carpet.row_counts.size() < 2 || carpet.row_counts[0] != tr.n0 || carpet.row_counts[1] != tr.n1)
        fail("two_row: carpet rows do not match the measure's (n0, n1)");
    for (std::size_t i = 2; i < carpet.row_counts.size(); ++i)
        if (carpet.row_counts[i] != 0) fail("two_row: carpet has digits outside rows 0 and 1");
    std::vector<double> p(carpet.digits.size());
    for (std::size_t k = 0; k < carpet.digits.size(); ++k)
        p[k] = carpet.digits[k].i == 0 ? tr.p0 : tr.p1;
    // renormalize the float sum so make_weights' mass check is exact
    double total = 0.0;
    for (double v : p) total += v;
    for (double& v : p) v /= total;
    return make_weights(carpet, p);
}

std::pair<double, double> alpha_range(const CarpetSpec& carpet, const BernoulliWeights& weights) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t k = 0; k < carpet.digits.size(); ++k) {
        if (!(weights.p[k] > 0.0)) fail("p: zero weight on the digit set");
        int i = carpet.digits[k].i;
        double v = (-carpet.sigma * weights.log_p[k] + (carpet.sigma - 1.0) * weights.log_q[i]) /
                   carpet.log_m;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

std::string to_string(SpectrumReach c) {
    switch (c) {
        case SpectrumReach::spectrum_strictly_below: return "spectrum_strictly_below";
        case SpectrumReach::full_at_alpha0: return "full_at_alpha0";
        case SpectrumReach::indeterminate: return "indeterminate";
    }
    return "?";
}

SpectrumReachReport classify_spectrum_reach(const CarpetSpec& carpet, const BernoulliWeights& weights,
                               double tol) {
    if (!(tol > 0.0)) fail("tol: must be > 0");

    // Rows with n_i = 0 are excluded from every sum below.
    double sum_uniform = 0.0;   // sum_i (1/L1) log q_i
    double sum_weighted = 0.0;  // sum_i (n_i/L0) log q_i
    for (int i = 0; i < carpet.m; ++i) {
        if (carpet.row_counts[i] == 0) continue;
        sum_uniform += weights.log_q[i] / carpet.L1;
        sum_weighted += (static_cast<double>(carpet.row_counts[i]) / carpet.L0) * weights.log_q[i];
    }

    SpectrumReachReport rep;
    rep.necessary_holds = std::fabs(sum_uniform - sum_weighted) < tol;
    if (!rep.necessary_holds) {
        rep.classification = SpectrumReach::spectrum_strictly_below;
        return rep;
    }

    double sum_p_uniform = 0.0;  // sum_{(i,j)} (1/L0) log p_ij
    double sum_p_rows = 0.0;     // sum_{(i,j)} (1/(n_i L1)) log p_ij
    for (std::size_t k = 0; k < carpet.digits.size(); ++k) {
        int i = carpet.digits[k].i;
        sum_p_uniform += weights.log_p[k] / carpet.L0;
        sum_p_rows += weights.log_p[k] / (static_cast<double>(carpet.row_counts[i]) * carpet.L1);
    }
    rep.sufficient_holds = std::fabs(sum_p_uniform - sum_p_rows) < tol;
    if (!rep.sufficient_holds) {
        rep.classification = SpectrumReach::indeterminate;
        return rep;
    }

    double A = 0.5 * (sum_uniform + sum_weighted);
    double B = 0.5 * (sum_p_uniform + sum_p_rows);
    rep.common_value_A = A;
    rep.common_value_B = B;
    rep.alpha0 = -(carpet.sigma * B + (1.0 - carpet.sigma) * A) / carpet.log_m;
    rep.classification = SpectrumReach::full_at_alpha0;
    return rep;
}

}  // namespace carpets
