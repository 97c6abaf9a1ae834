#include "carpets/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace carpets {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_gamma(double x) {
#if defined(__GLIBC__)
    int sign = 0;
    return lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

// Running log-sum-exp accumulator combined in a fixed order.
struct LogSum {
    double peak = kNegInf;
    double scaled = 0.0;  // total = scaled * exp(peak)

    void add(double logv) {
        if (logv == kNegInf) return;
        if (logv <= peak) {
            scaled += std::exp(logv - peak);
        } else {
            scaled = scaled * std::exp(peak - logv) + 1.0;
            peak = logv;
        }
    }
    void merge(const LogSum& o) {
        if (o.peak == kNegInf) return;
        if (o.peak <= peak) {
            scaled += o.scaled * std::exp(o.peak - peak);
        } else {
            scaled = scaled * std::exp(peak - o.peak) + o.scaled;
            peak = o.peak;
        }
    }
    double value() const { return peak == kNegInf ? kNegInf : peak + std::log(scaled); }
};

}  // namespace

double log_choose(long n, long k) {
    if (k < 0 || n < 0 || k > n) return kNegInf;
    if (k == 0 || k == n) return 0.0;
    return log_gamma(static_cast<double>(n) + 1.0) - log_gamma(static_cast<double>(k) + 1.0) -
           log_gamma(static_cast<double>(n - k) + 1.0);
}

namespace {

// Census row over a fixed first-part row-0 count a: iterates the tail counts
// b and accumulates the classes whose exponent lies in the window. The
// (a, b) class exponent is affine in (a, b), so the admissible b form a
// contiguous range; we still scan all b for clarity -- the inner loop is a
// bargain next to exactness.
LogSum census_row(const TwoRowCtx& ctx, long S, long T, long a, double alo, double ahi,
                  double inv_nlogm) {
    LogSum acc;
    double base_count = log_choose(S, a) + a * ctx.log_n0 + (S - a) * ctx.log_n1;
    double base_exp = -(a * ctx.log_p0 + (S - a) * ctx.log_p1);
    for (long b = 0; b <= T; ++b) {
        double expo = (base_exp - (b * ctx.log_q0 + (T - b) * ctx.log_q1)) * inv_nlogm;
        if (expo < alo || expo > ahi) continue;
        acc.add(base_count + log_choose(T, b));
    }
    return acc;
}

double census_impl(const TwoRowCtx& ctx, const CarpetSpec& carpet, const CountWindow& w,
                   bool parallel) {
    if (w.N < 1 || w.N > 1000000) fail("N: census depth must lie in [1, 1e6]");
    if (!(w.epsilon > 0.0)) fail("epsilon: must be > 0");
    long S = ceil_sigma(carpet, w.N);
    long T = w.N - S;
    double alo = w.alpha - w.epsilon, ahi = w.alpha + w.epsilon;
    double inv_nlogm = 1.0 / (static_cast<double>(w.N) * ctx.log_m);

    std::vector<LogSum> partials(static_cast<std::size_t>(S + 1));
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long a = 0; a <= S; ++a)
            partials[static_cast<std::size_t>(a)] = census_row(ctx, S, T, a, alo, ahi, inv_nlogm);
    } else {
        for (long a = 0; a <= S; ++a)
            partials[static_cast<std::size_t>(a)] = census_row(ctx, S, T, a, alo, ahi, inv_nlogm);
    }
    LogSum total;
    for (const LogSum& p : partials) total.merge(p);  // fixed order: thread-count independent
    return total.value();
}

}  // namespace

double coarse_square_count(const TwoRowCtx& ctx, const CarpetSpec& carpet,
                           const CountWindow& window) {
    return census_impl(ctx, carpet, window, /*parallel=*/true);
}

double coarse_square_count_serial(const TwoRowCtx& ctx, const CarpetSpec& carpet,
                                  const CountWindow& window) {
    return census_impl(ctx, carpet, window, /*parallel=*/false);
}

namespace {

// round(target * len) with ties resolved toward the unperturbed frequency P.
long round_count_toward(double target, long len, double P) {
    double x = target * static_cast<double>(len);
    double lo = std::floor(x);
    double hi = lo + 1.0;
    long k;
    if (x - lo < hi - x - 1e-15) k = static_cast<long>(lo);
    else if (hi - x < x - lo - 1e-15) k = static_cast<long>(hi);
    else {
        double pl = P * static_cast<double>(len);
        k = std::fabs(lo - pl) <= std::fabs(hi - pl) ? static_cast<long>(lo)
                                                     : static_cast<long>(hi);
    }
    return std::clamp(k, 0L, len);
}

}  // namespace

BlockCensus log_Z_r(const TwoRowCtx& ctx, const CarpetSpec& carpet, double alpha, double delta,
                    double r, ZVariant variant) {
    if (r < 1.0) fail("r: must be >= 1");
    double P = fixed_point_P(ctx, alpha);
    if (delta < 0.0 || delta > std::min(P, 1.0 - P) + 1e-12)
        fail("delta: out of admissible range");

    BlockCensus out;
    out.r = r;

    // integer tiling: block K spans positions [bK, min(b(K+1)-1, L)]
    long double sig = static_cast<long double>(ctx.sigma);
    long L = snap_ceil(std::exp(-static_cast<long double>(r) * std::log(sig)));
    long start = 1;
    for (int K = 0; start <= L; ++K) {
        long next = ceil_sigma_pow(carpet, K + 1);
        long end = std::min(next - 1, L);
        if (end >= start) {
            double target = K % 2 == 0 ? P + delta : P - delta;
            out.blocks.push_back({target, end - start + 1});
        }
        start = std::max(start, next);
    }

    if (variant == ZVariant::entropy) {
        out.log_count = scaled_block_census(ctx, P, delta, r) *
                        std::exp(-r * std::log(ctx.sigma));
        return out;
    }

    // exact: rows constrained per block, columns over the first Scol slots
    long Scol = ceil_sigma(carpet, L);
    double total = 0.0;
    long pos = 1;
    for (const BlockTarget& blk : out.blocks) {
        long len = blk.len;
        long k = round_count_toward(blk.freq, len, P);
        long bstart = pos, bend = pos + len - 1;
        if (bend <= Scol) {
            // fully inside the column region
            total += log_choose(len, k) + k * ctx.log_n0 + (len - k) * ctx.log_n1;
        } else if (bstart > Scol) {
            total += log_choose(len, k);
        } else {
            // straddles the column boundary: sum over the split of the k
            // row-0 symbols between the first `part` and the remaining slots
            long part = Scol - bstart + 1;
            long rest = len - part;
            LogSum acc;
            for (long s = std::max(0L, k - rest); s <= std::min(part, k); ++s)
                acc.add(log_choose(part, s) + log_choose(rest, k - s) + s * ctx.log_n0 +
                        (part - s) * ctx.log_n1);
            total += acc.value();
        }
        pos += len;
    }
    out.log_count = total;
    return out;
}

namespace {

struct RangeDpLayout {
    long Kd = 0;  // strict integer range bound K0*den
    long up = 0;  // lattice step for symbol 0
    long down = 0;  // lattice step for symbol 1 (subtracted)

    std::size_t size() const {
        return static_cast<std::size_t>(Kd) * static_cast<std::size_t>(Kd + 1) / 2;
    }
    std::size_t id(long w, long u) const {
        return static_cast<std::size_t>(w) * static_cast<std::size_t>(w + 1) / 2 +
               static_cast<std::size_t>(u);
    }
    // target state after one step; returns false when the walk's range hits K0
    bool step(long w, long u, long delta, long* wn, long* un) const {
        long v = u + delta;
        if (v >= 0 && v <= w) { *wn = w; *un = v; return true; }
        if (v > w) {
            if (v >= Kd) return false;
            *wn = v; *un = v;
            return true;
        }
        long w2 = w - v;  // v < 0: minimum dropped by -v
        if (w2 >= Kd) return false;
        *wn = w2; *un = 0;
        return true;
    }
};

RangeDpLayout make_layout(long M, long num, long den, long K0) {
    if (M < 0 || M > 10000) fail("M: must lie in [0, 1e4]");
    if (den < 1 || num < 1 || num >= den) fail("P: need 0 < num/den < 1 in lowest terms");
    if (K0 < 1) fail("K0: must be >= 1");
    RangeDpLayout ly;
    ly.Kd = K0 * den;
    ly.up = den - num;
    ly.down = num;
    return ly;
}

}  // namespace

BigInt bounded_range_word_count(long M, long num, long den, long K0) {
    RangeDpLayout ly = make_layout(M, num, den, K0);
    std::vector<BigInt> cur(ly.size()), nxt(ly.size());
    cur[ly.id(0, 0)] = 1;
    for (long step = 0; step < M; ++step) {
        for (BigInt& v : nxt) v = 0;
        for (long w = 0; w < ly.Kd; ++w) {
            for (long u = 0; u <= w; ++u) {
                const BigInt& c = cur[ly.id(w, u)];
                if (c == 0) continue;
                long wn, un;
                if (ly.step(w, u, ly.up, &wn, &un)) nxt[ly.id(wn, un)] += c;
                if (ly.step(w, u, -ly.down, &wn, &un)) nxt[ly.id(wn, un)] += c;
            }
        }
        cur.swap(nxt);
    }
    BigInt total = 0;
    for (const BigInt& v : cur) total += v;
    return total;
}

double bounded_range_log_count(long M, long num, long den, long K0) {
    RangeDpLayout ly = make_layout(M, num, den, K0);
    std::vector<double> cur(ly.size(), 0.0), nxt(ly.size(), 0.0);
    cur[ly.id(0, 0)] = 1.0;
    double log_norm = 0.0;
    for (long step = 0; step < M; ++step) {
        std::fill(nxt.begin(), nxt.end(), 0.0);
        for (long w = 0; w < ly.Kd; ++w) {
            std::size_t base = ly.id(w, 0);
            for (long u = 0; u <= w; ++u) {
                double c = cur[base + static_cast<std::size_t>(u)];
                if (c == 0.0) continue;
                long wn, un;
                if (ly.step(w, u, ly.up, &wn, &un)) nxt[ly.id(wn, un)] += c;
                if (ly.step(w, u, -ly.down, &wn, &un)) nxt[ly.id(wn, un)] += c;
            }
        }
        cur.swap(nxt);
        if ((step & 63) == 63) {
            double peak = 0.0;
            for (double v : cur) peak = std::max(peak, v);
            if (peak > 0.0) {
                double inv = 1.0 / peak;
                for (double& v : cur) v *= inv;
                log_norm += std::log(peak);
            }
        }
    }
    double total = 0.0;
    for (double v : cur) total += v;
    if (total == 0.0) return kNegInf;
    return log_norm + std::log(total);
}

}  // namespace carpets
