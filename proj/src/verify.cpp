#include "carpets/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "carpets/carpet.hpp"
#include "carpets/counting.hpp"
#include "carpets/sampling.hpp"
#include "carpets/spectra.hpp"
#include "carpets/symbolic.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace carpets::verify {

namespace {

// Golden regression values for the exceptional (m=2, n=3, n0=2, n1=1)
// measure at alpha = 1.0, frozen at first build.
constexpr double kGoldenDimH = 0.90601834266754;    // dim_H X_1.0
constexpr double kGoldenGap = 0.0042359168990754;   // dim_P - dim_H
constexpr bool kGoldenFrozen = true;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

struct ExceptionalSystem {
    std::shared_ptr<const CarpetSpec> carpet;
    AttractorProfile profile;
    TwoRowMeasure tr;
    TwoRowCtx ctx;
    BernoulliWeights weights;
};

ExceptionalSystem exceptional_system() {
    ExceptionalSystem s;
    s.carpet = std::make_shared<CarpetSpec>(two_row_carpet(2, 3, 2, 1));
    s.profile = attractor_profile(*s.carpet);
    s.tr = make_two_row(2, 1, exceptional_q0(2, 1, s.carpet->sigma));
    s.ctx = make_two_row_ctx(s.tr, *s.carpet);
    s.weights = two_row_weights(*s.carpet, s.tr);
    return s;
}

CheckResult check_identity_suite(std::uint64_t seed) {
    struct Case {
        CarpetSpec carpet;
        AttractorProfile profile;
        TwoRowCtx ctx;
        BernoulliWeights weights;
    };
    std::vector<Case> cases;
    SplitMix64 rng = make_rng({seed, 1001});
    while (cases.size() < 100) {
        int n = 3 + static_cast<int>(rng.next() % 6);  // 3..8
        int n0 = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        int n1 = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        if (n0 == n1) continue;
        double q0 = 0.08 + 0.84 * rng.next_double();
        Case c{two_row_carpet(2, n, n0, n1), {}, {}, {}};
        c.profile = attractor_profile(c.carpet);
        TwoRowMeasure tr = make_two_row(n0, n1, q0);
        c.ctx = make_two_row_ctx(tr, c.carpet);
        RatioA ra = ratio_A(c.ctx);
        if (!ra.is_regular()) continue;
        if (std::fabs(ra.value - 1.0) <= 0.05 || std::fabs(ra.value + 1.0) <= 0.05) continue;
        c.weights = two_row_weights(c.carpet, tr);
        cases.push_back(std::move(c));
    }

    double e_round = 0.0, e_y0 = 0.0, e_range = 0.0, e_bstar = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    reduction(max : e_round, e_y0, e_range, e_bstar)
#endif
    for (long t = 0; t < static_cast<long>(cases.size()); ++t) {
        const Case& c = cases[static_cast<std::size_t>(t)];
        double a0 = alpha_of_beta(c.ctx, 0.0), a1 = alpha_of_beta(c.ctx, 1.0);
        double am = std::min(a0, a1), aM = std::max(a0, a1);
        auto [rm, rM] = alpha_range(c.carpet, c.weights);
        e_range = std::max(e_range, std::fabs(rm - am));
        e_range = std::max(e_range, std::fabs(rM - aM));
        e_bstar = std::max(
            e_bstar, std::fabs(dim_of_beta(c.ctx, beta_star(c.ctx)) - c.profile.dim_hausdorff));
        for (int j = 1; j <= 10; ++j) {
            double alpha = am + (aM - am) * j / 11.0;
            double P = fixed_point_P(c.ctx, alpha);
            e_round = std::max(e_round, std::fabs(alpha_of_beta(c.ctx, P) - alpha));
            double y0 = Y_max_over_gamma(c.ctx, alpha, 0.0) / c.ctx.log_m;
            e_y0 = std::max(e_y0, std::fabs(y0 - *hausdorff_spectrum(c.ctx, alpha)));
        }
    }

    CheckResult r;
    r.name = "1 identity suite";
    r.pass = e_round <= 1e-10 && e_y0 <= 1e-10 && e_range <= 1e-12 && e_bstar <= 1e-10;
    r.detail = "roundtrip " + fmt(e_round) + " (tol 1e-10), Y(0) vs dim_H " + fmt(e_y0) +
               " (tol 1e-10), alpha range " + fmt(e_range) + " (tol 1e-12), beta* " +
               fmt(e_bstar) + " (tol 1e-10), 100 measures x 10 alphas";
    return r;
}

CheckResult check_lebesgue_anchor() {
    std::vector<Digit> digits;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) digits.push_back({i, j});
    CarpetSpec carpet = make_carpet(2, 4, digits);
    AttractorProfile prof = attractor_profile(carpet);
    BernoulliWeights w = make_weights(carpet, std::vector<double>(8, 0.125));
    auto [am, aM] = alpha_range(carpet, w);
    SpectrumReachReport rep = classify_spectrum_reach(carpet, w);

    double e = std::max({std::fabs(am - 2.0), std::fabs(aM - 2.0),
                         std::fabs(prof.dim_hausdorff - 2.0),
                         std::fabs(prof.dim_box_packing - 2.0)});
    bool cls = rep.classification == SpectrumReach::full_at_alpha0 && rep.alpha0.has_value();
    double e0 = cls ? std::fabs(*rep.alpha0 - 2.0) : 1.0;

    CheckResult r;
    r.name = "2 full-grid anchor";
    r.pass = e <= 1e-12 && cls && e0 <= 1e-12;
    r.detail = "alpha/dim deviations " + fmt(e) + ", classification " +
               to_string(rep.classification) + ", |alpha0 - 2| " + fmt(e0) + " (tol 1e-12)";
    return r;
}

CheckResult check_involution_regimes() {
    CarpetSpec carpet = two_row_carpet(2, 3, 2, 1);
    double q0s = exceptional_q0(2, 1, carpet.sigma);
    TwoRowCtx ctx = make_two_row_ctx(make_two_row(2, 1, q0s), carpet);
    DriftMapParams dm = drift_map(ctx, 1.0);
    double e_inv = 0.0;
    for (int k = 0; k <= 1000; ++k) {
        double x = k / 1000.0;
        e_inv = std::max(e_inv, std::fabs(dm.apply(dm.apply(x)) - x));
    }

    double q0p = collapse_q0(2, 1, carpet.sigma);
    TwoRowCtx ctxp = make_two_row_ctx(make_two_row(2, 1, q0p), carpet);
    double e_col = std::fabs(alpha_of_beta(ctxp, 0.0) - alpha_of_beta(ctxp, 1.0));

    CheckResult r;
    r.name = "3 involution and regimes";
    r.pass = e_inv <= 1e-12 && e_col <= 1e-10;
    r.detail = "max |F(F(x)) - x| " + fmt(e_inv) + " (tol 1e-12) at q0* " + fmt(q0s) +
               ", |alpha_M - alpha_m| " + fmt(e_col) + " (tol 1e-10) at q0 " + fmt(q0p);
    return r;
}

CheckResult check_oscillation_oracle() {
    ExceptionalSystem s = exceptional_system();
    const double alpha = 1.0;
    double P = fixed_point_P(s.ctx, alpha);
    EntropyBundle e = entropies(s.ctx);

    // Alternative closed expression with the non-periodic scale factors
    // sigma^(-2 floor(gamma/2)); kept for comparison only -- it breaks the
    // 2-periodicity of the subsequence limit, so it cannot match the block
    // sums away from integer phases.
    auto y_alt = [&](double gamma, double delta) {
        double HP = e.H(P);
        double dp = e.H(P + delta) - HP, dm = e.H(P - delta) - HP;
        double cg = std::ceil(gamma);
        double eps = static_cast<long>(cg) % 2 == 0 ? 1.0 : -1.0;
        double sig = s.ctx.sigma;
        double t1 = (1.0 - std::pow(sig, cg)) * (eps > 0 ? dp : dm);
        double t2 = (std::pow(sig, -2.0 * std::floor(gamma / 2.0)) * dm +
                     std::pow(sig, -2.0 * std::floor((gamma - 1.0) / 2.0) + 1.0) * dp) /
                    (1.0 + sig);
        double t3 = eps * (2.0 * std::pow(sig, gamma - cg) / (1.0 + sig) - 1.0) * delta *
                    (s.ctx.log_n0 - s.ctx.log_n1);
        return HP + sig * (P * s.ctx.log_n0 + (1.0 - P) * s.ctx.log_n1) + t1 + t2 + t3;
    };

    double e_nc = 0.0, e_self = 0.0, e_alt = 0.0;
    for (int gi = 0; gi <= 20; ++gi) {
        double gamma = gi * 0.1;
        for (double delta : {0.02, 0.05, 0.1, 0.2}) {
            double num40 = y_tilde(s.ctx, alpha, gamma, delta, YMode::numeric, 40);
            double num20 = y_tilde(s.ctx, alpha, gamma, delta, YMode::numeric, 20);
            double closed = y_tilde(s.ctx, alpha, gamma, delta, YMode::closed);
            e_nc = std::max(e_nc, std::fabs(num40 - closed));
            e_self = std::max(e_self, std::fabs(num40 - num20));
            e_alt = std::max(e_alt, std::fabs(closed - y_alt(gamma, delta)));
        }
    }

    CheckResult r;
    r.name = "4 oscillation growth oracle";
    r.pass = e_nc <= 1e-8 && e_self <= 1e-10;
    r.detail = "numeric(k=40) vs closed " + fmt(e_nc) + " (tol 1e-8), |k40 - k20| " +
               fmt(e_self) + " (tol 1e-10); non-periodic variant deviates by " + fmt(e_alt) +
               " (reported, not gated)";
    return r;
}

CheckResult check_discontinuity() {
    ExceptionalSystem s = exceptional_system();
    const double alpha = 1.0;

    SpectrumPoint at_star = packing_spectrum(s.ctx, alpha);
    double dh = at_star.dim_h.value_or(-1.0);
    double gap = at_star.dim_p.value_or(-1.0) - dh;

    bool interior_ok = at_star.regime == Regime::a_minus_one_interior && gap > 1e-4;
    double e_dh = kGoldenFrozen ? std::fabs(dh - kGoldenDimH) : 0.0;
    double e_gap = kGoldenFrozen ? std::fabs(gap - kGoldenGap) : 0.0;

    double gap_near = 0.0;
    for (double dq : {-1e-2, 1e-2}) {
        TwoRowCtx c = make_two_row_ctx(make_two_row(2, 1, s.tr.q0 + dq), *s.carpet);
        SpectrumPoint pt = packing_spectrum(c, alpha);
        gap_near = std::max(gap_near, std::fabs(*pt.dim_p - *pt.dim_h));
        interior_ok = interior_ok && pt.regime == Regime::generic;
    }

    double a0 = alpha_of_beta(s.ctx, 0.0), a1 = alpha_of_beta(s.ctx, 1.0);
    double gap_end = 0.0;
    for (double a : {std::min(a0, a1), std::max(a0, a1)}) {
        SpectrumPoint pt = packing_spectrum(s.ctx, a);
        gap_end = std::max(gap_end, std::fabs(*pt.dim_p - *pt.dim_h));
        interior_ok = interior_ok && pt.regime == Regime::a_minus_one_endpoint;
    }

    // At the measure's own typical exponent the first-order gap argument
    // degenerates; the measured gap there is reported, not gated.
    double alpha_typ = alpha_of_beta(s.ctx, s.tr.q0);
    SpectrumPoint pt_typ = packing_spectrum(s.ctx, alpha_typ);
    double gap_typ = *pt_typ.dim_p - *pt_typ.dim_h;

    CheckResult r;
    r.name = "5 spectrum discontinuity";
    r.pass = interior_ok && e_dh <= 1e-9 && e_gap <= 1e-9 && gap_near <= 1e-10 &&
             gap_end <= 1e-12;
    r.detail = "dim_H " + fmt(dh) + ", gap " + fmt(gap) + " at q0*, golden dev (" + fmt(e_dh) +
               ", " + fmt(e_gap) + "), gap at q0* +- 1e-2 " + fmt(gap_near) +
               " (tol 1e-10), endpoint gap " + fmt(gap_end) +
               " (tol 1e-12); gap at typical alpha " + fmt(alpha_typ) + " is " + fmt(gap_typ) +
               " (reported)";
    return r;
}

long double brute_force_census(const ExceptionalSystem& s, long N, double alpha, double eps) {
    long S = ceil_sigma(*s.carpet, N);
    long T = N - S;
    long double count = 0;
    long n_digits = static_cast<long>(s.carpet->digits.size());
    long full_total = 1;
    for (long k = 0; k < S; ++k) full_total *= n_digits;
    long tail_total = 1L << T;
    for (long fu = 0; fu < full_total; ++fu) {
        long a = 0;
        long code = fu;
        for (long k = 0; k < S; ++k) {
            const Digit& d = s.carpet->digits[static_cast<std::size_t>(code % n_digits)];
            if (d.i == 0) ++a;
            code /= n_digits;
        }
        for (long tu = 0; tu < tail_total; ++tu) {
            long b = static_cast<long>(std::popcount(static_cast<unsigned long>(tu)));
            // class exponent, same float expression as the census kernel
            double expo = -(a * s.ctx.log_p0 + (S - a) * s.ctx.log_p1 + b * s.ctx.log_q0 +
                            (T - b) * s.ctx.log_q1) /
                          (static_cast<double>(N) * s.ctx.log_m);
            if (expo >= alpha - eps && expo <= alpha + eps) count += 1;
        }
    }
    return count;
}

CheckResult check_counting_oracles() {
    ExceptionalSystem s = exceptional_system();

    // census vs exhaustive enumeration at N = 8
    double e_census = 0.0;
    bool census_ok = true;
    for (auto [alpha, eps] : std::vector<std::pair<double, double>>{
             {1.0, 0.2}, {1.5, 0.05}, {1.3, 10.0}}) {
        CountWindow w{8, alpha, eps};
        double lc = coarse_square_count(s.ctx, *s.carpet, w);
        long double brute = brute_force_census(s, 8, alpha, eps);
        long double got = lc == -std::numeric_limits<double>::infinity()
                              ? 0.0L
                              : std::exp(static_cast<long double>(lc));
        census_ok = census_ok && std::fabs(got - brute) < 0.5L;
        if (brute > 0)
            e_census = std::max(e_census, static_cast<double>(std::fabs(got - brute)));
    }

    // filtered census exponent vs the single-scale bound at N = 2000. The
    // window must be narrow: the census fills the whole exponent strip, so
    // its sup tracks the bound's envelope over [alpha - eps, alpha + eps].
    CountWindow w2{2000, 1.0, 0.002};
    double census_exp =
        coarse_square_count(s.ctx, *s.carpet, w2) / (2000.0 * s.ctx.log_m);
    double bound = single_level_bound(s.ctx, 1.0);
    double e_bound = std::fabs(census_exp - bound);

    // bounded-range DP vs exhaustive enumeration, M <= 20, K0 <= 5
    bool dp_ok = true;
    for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}}) {
        for (long M = 1; M <= 20; ++M) {
            std::vector<long> brute(6, 0);
            for (unsigned long word = 0; word < (1ul << M); ++word) {
                long s_int = 0, mn = 0, mx = 0;
                for (long k = 0; k < M; ++k) {
                    s_int += (word >> k) & 1ul ? -num : den - num;
                    mn = std::min(mn, s_int);
                    mx = std::max(mx, s_int);
                }
                for (long K0 = 1; K0 <= 5; ++K0)
                    if (mx - mn < K0 * den) brute[static_cast<std::size_t>(K0)] += 1;
            }
            for (long K0 = 1; K0 <= 5; ++K0) {
                BigInt got = bounded_range_word_count(M, num, den, K0);
                if (got != brute[static_cast<std::size_t>(K0)]) dp_ok = false;
            }
        }
    }

    // entropy lower envelope with constant 5 (small-denominator targets)
    bool env_ok = true;
    double env_margin = 1.0;
    struct EnvCase { long M, num, den, K0; };
    std::vector<EnvCase> env_cases;
    for (long M : {1000L, 10000L})
        for (long K0 : {10L, 30L, 100L})
            for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 3}, {2, 5}, {1, 2}})
                env_cases.push_back({M, num, den, K0});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long t = 0; t < static_cast<long>(env_cases.size()); ++t) {
        const EnvCase& c = env_cases[static_cast<std::size_t>(t)];
        double P = static_cast<double>(c.num) / static_cast<double>(c.den);
        double lhs = bounded_range_log_count(c.M, c.num, c.den, c.K0) / c.M;
        double H = -P * std::log(P) - (1 - P) * std::log(1 - P);
        double rhs = H - 5.0 * (std::log(static_cast<double>(c.K0)) / c.K0 +
                                static_cast<double>(c.K0) / c.M);
        double margin = lhs - rhs;
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            env_margin = std::min(env_margin, margin);
            if (margin < 0) env_ok = false;
        }
    }

    CheckResult r;
    r.name = "6 counting oracles";
    r.pass = census_ok && e_bound <= 0.01 && dp_ok && env_ok;
    r.detail = std::string("census vs brute (N=8) ") + (census_ok ? "exact" : "MISMATCH") +
               ", census exponent vs bound " + fmt(e_bound) + " (tol 0.01), DP vs brute " +
               (dp_ok ? "exact" : "MISMATCH") + ", envelope margin " + fmt(env_margin) +
               " (needs >= 0)";
    return r;
}

CheckResult check_montecarlo(std::uint64_t seed) {
    ExceptionalSystem s = exceptional_system();
    const double alpha = 1.0;
    const long N = 1000000;
    double P = fixed_point_P(s.ctx, alpha);
    DeltaMax dm = Y_max_over_delta(s.ctx, alpha);
    double target_dim = dm.value / s.ctx.log_m;
    NuDeltaSpec nu{P, dm.delta};

    int K_max = 0;
    {
        long double lsig = std::log(static_cast<long double>(s.carpet->sigma));
        while (snap_ceil(std::exp(-(2.0L * (K_max + 1) + dm.gamma) * lsig)) <= N) ++K_max;
    }

    std::vector<long> bounds = nu_block_boundaries(*s.carpet, N);

    int pass_blocks = 0, pass_dim = 0, pass_subseq = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : pass_blocks, pass_dim, pass_subseq)
#endif
    for (int id = 0; id < 100; ++id) {
        DigitString str = sample_nu_delta_digits(nu, s.tr, s.carpet, N,
                                                 {seed, static_cast<std::uint64_t>(id)});
        // per-block CLT bands for complete blocks of length >= 1e3
        bool blocks_ok = true;
        for (std::size_t K = 0; K + 1 < bounds.size(); ++K) {
            long lo = bounds[K], hi = bounds[K + 1];  // block positions [lo, hi)
            if (hi - 1 > N) break;
            long len = hi - lo;
            if (len < 1000) continue;
            long zeros = 0;
            for (long pos = lo; pos < hi; ++pos)
                if (str.at(pos).i == 0) ++zeros;
            double emp = static_cast<double>(zeros) / static_cast<double>(len);
            double target = K % 2 == 0 ? nu.P + nu.delta : nu.P - nu.delta;
            double band = 3.0 * std::sqrt(target * (1.0 - target) / static_cast<double>(len));
            if (std::fabs(emp - target) > band) { blocks_ok = false; break; }
        }
        if (blocks_ok) ++pass_blocks;

        double d = symbolic_dim_at_depth(*s.carpet, s.weights, str, N);
        if (std::fabs(d - alpha) <= 0.02) ++pass_dim;

        double est = subsequence_limsup_estimate(nu, s.tr, *s.carpet, str, dm.gamma, K_max);
        if (est >= target_dim - 0.05) ++pass_subseq;
    }

    // measure-ratio bound on 1e4 random squares
    double log_kstar = std::log(std::min(s.tr.q0, s.tr.q1)) +
                       std::log(std::min(s.tr.p0 / s.tr.q0, s.tr.p1 / s.tr.q1));
    int ratio_violations = 0;
    {
        SplitMix64 rng = make_rng({seed, 777});
        for (int t = 0; t < 10000; ++t) {
            long depth = 1 + static_cast<long>(rng.next() % 120);
            DigitString str = sample_bernoulli_digits(
                s.carpet, s.weights, depth + 1, {seed, 100000u + static_cast<std::uint64_t>(t)});
            double lr = log_measure_of_square(*s.carpet, s.weights, str, depth + 1) -
                        log_measure_of_square(*s.carpet, s.weights, str, depth);
            if (lr < log_kstar - 1e-9 || lr > 1e-12) ++ratio_violations;
        }
    }

    CheckResult r;
    r.name = "7 monte carlo suite";
    r.pass = pass_blocks >= 95 && pass_dim >= 95 && pass_subseq >= 90 && ratio_violations == 0;
    r.detail = "block bands " + std::to_string(pass_blocks) + "/100 (>=95), dim within 0.02 " +
               std::to_string(pass_dim) + "/100 (>=95), subsequence " +
               std::to_string(pass_subseq) + "/100 (>=90, delta* " + fmt(dm.delta) +
               ", gamma0 " + fmt(dm.gamma) + "), ratio violations " +
               std::to_string(ratio_violations) + "/10000";
    return r;
}

CheckResult check_geometry(std::uint64_t seed) {
    ExceptionalSystem s = exceptional_system();
    std::vector<Digit> full;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) full.push_back({i, j});
    std::shared_ptr<const CarpetSpec> carpet24 =
        std::make_shared<CarpetSpec>(make_carpet(2, 4, full));
    BernoulliWeights w24 = make_weights(*carpet24, std::vector<double>(8, 0.125));

    SplitMix64 rng = make_rng({seed, 888});
    int violations = 0;
    double worst = 0.0;
    for (int t = 0; t < 10000; ++t) {
        bool use24 = (t & 1) == 1;
        const CarpetSpec& carpet = use24 ? *carpet24 : *s.carpet;
        const BernoulliWeights& w = use24 ? w24 : s.weights;
        long N = 1 + static_cast<long>(rng.next() % 30);
        long L = N + 20;
        DigitString x = sample_bernoulli_digits(use24 ? carpet24 : s.carpet, w, L,
                                                {seed, 200000u + static_cast<std::uint64_t>(t)});
        long S = ceil_sigma(carpet, N);
        std::vector<Digit> yseq = x.seq;
        // keep full digits <= S and rows <= N, rerandomize the free symbols
        for (long k = S + 1; k <= L; ++k) {
            Digit& d = yseq[static_cast<std::size_t>(k - 1)];
            if (k <= N) {
                // redraw the column within row d.i
                std::vector<int> cols;
                for (const Digit& dd : carpet.digits)
                    if (dd.i == d.i) cols.push_back(dd.j);
                d.j = cols[rng.next() % cols.size()];
            } else {
                d = carpet.digits[rng.next() % carpet.digits.size()];
            }
        }
        DigitString y = make_digit_string_unchecked(use24 ? carpet24 : s.carpet,
                                                    std::move(yseq));
        auto [x1, y1] = digits_to_point(x);
        auto [x2, y2] = digits_to_point(y);
        double dist = std::hypot(x1 - x2, y1 - y2);
        double limit = 2.0 * std::exp(-static_cast<double>(N) * carpet.log_m);
        worst = std::max(worst, dist / limit);
        if (dist > limit) ++violations;
    }

    CheckResult r;
    r.name = "8 geometry sanity";
    r.pass = violations == 0;
    r.detail = "pairs sharing C_N within 2 m^-N: violations " + std::to_string(violations) +
               "/10000, worst dist/limit " + fmt(worst);
    return r;
}

}  // namespace

std::vector<CheckResult> run_identities(std::uint64_t seed) {
    return {check_identity_suite(seed), check_lebesgue_anchor(), check_involution_regimes(),
            check_oscillation_oracle(), check_discontinuity()};
}

std::vector<CheckResult> run_counting(std::uint64_t seed) {
    (void)seed;  // the counting oracles are deterministic
    return {check_counting_oracles()};
}

std::vector<CheckResult> run_montecarlo(std::uint64_t seed) {
    return {check_montecarlo(seed), check_geometry(seed)};
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
    std::vector<CheckResult> out = run_identities(seed);
    for (auto& c : run_counting(seed)) out.push_back(std::move(c));
    for (auto& c : run_montecarlo(seed)) out.push_back(std::move(c));
    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& c) { return c.pass; });
}

}  // namespace carpets::verify
