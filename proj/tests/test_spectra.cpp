#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "carpets/carpet.hpp"
#include "carpets/sampling.hpp"
#include "carpets/spectra.hpp"

using namespace carpets;

namespace {

struct Sys {
    CarpetSpec carpet;
    AttractorProfile profile;
    TwoRowCtx ctx;
};

Sys sys231(double q0) {
    Sys s{two_row_carpet(2, 3, 2, 1), {}, {}};
    s.profile = attractor_profile(s.carpet);
    s.ctx = make_two_row_ctx(make_two_row(2, 1, q0), s.carpet);
    return s;
}

Sys exceptional231() {
    CarpetSpec c = two_row_carpet(2, 3, 2, 1);
    return sys231(exceptional_q0(2, 1, c.sigma));
}

// bisection oracle for the A = -1 / A = +1 parameters
double bisect_ratio(const CarpetSpec& carpet, double target) {
    double lo = 1e-8, hi = 1.0 - 1e-8;
    auto val = [&](double q0) {
        TwoRowCtx ctx = make_two_row_ctx(make_two_row(2, 1, q0), carpet);
        return ratio_A(ctx).value - target;
    };
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((val(lo) <= 0) == (val(mid) <= 0)) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("entropy bundle basics") {
    Sys s = sys231(0.5);
    EntropyBundle e = entropies(s.ctx);
    CHECK(e.H(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(e.H(0.0) == 0.0);
    CHECK(e.H(1.0) == 0.0);
    CHECK(e.H(0.3) == doctest::Approx(e.H(0.7)).epsilon(1e-15));
    // q0 = q1 makes Hq constant
    for (double b : {0.0, 0.3, 0.8, 1.0})
        CHECK(e.Hq(b) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    // CH = H + mixed log n term; with n0 = n1 = c that is H + log c
    CarpetSpec ceq = two_row_carpet(2, 5, 2, 2);
    TwoRowCtx ctx_eq = make_two_row_ctx(make_two_row(2, 2, 0.3), ceq);
    EntropyBundle e2 = entropies(ctx_eq);
    for (double b : {0.1, 0.5, 0.9})
        CHECK(e2.CH(b) == doctest::Approx(e2.H(b) + std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("alpha_of_beta endpoints against alpha_range") {
    Sys s = exceptional231();
    BernoulliWeights w = two_row_weights(s.carpet, s.ctx.tr);
    auto [am, aM] = alpha_range(s.carpet, w);
    double a0 = alpha_of_beta(s.ctx, 0.0), a1 = alpha_of_beta(s.ctx, 1.0);
    CHECK(std::min(a0, a1) == doctest::Approx(am).epsilon(1e-13));
    CHECK(std::max(a0, a1) == doctest::Approx(aM).epsilon(1e-13));
    // the exceptional (2,3;2,1) measure realizes these exponents
    CHECK(a0 == doctest::Approx(0.7190).epsilon(1e-3));
    CHECK(a1 == doctest::Approx(1.9806).epsilon(1e-3));
    CHECK(alpha_of_beta(s.ctx, s.ctx.tr.q0) == doctest::Approx(1.2140).epsilon(1e-3));
}

TEST_CASE("dim_of_beta anchors") {
    Sys s = exceptional231();
    CHECK(dim_of_beta(s.ctx, beta_star(s.ctx)) ==
          doctest::Approx(s.profile.dim_hausdorff).epsilon(1e-13));
    // beta = 0: fiber dimension log n1 / log n ( = 0 since n1 = 1 )
    CHECK(dim_of_beta(s.ctx, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    Sys srev = Sys{two_row_carpet(2, 3, 1, 2), {}, {}};
    srev.ctx = make_two_row_ctx(make_two_row(1, 2, 0.4), srev.carpet);
    CHECK(dim_of_beta(srev.ctx, 0.0) ==
          doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-13));
    // beta = q0 recovers the dimension of the measure itself
    double q0 = s.ctx.tr.q0;
    double direct = (s.ctx.sigma * (-q0 * std::log(s.ctx.tr.p0) -
                                    (1 - q0) * std::log(s.ctx.tr.p1)) +
                     (1 - s.ctx.sigma) * (-q0 * std::log(q0) - (1 - q0) * std::log(1 - q0))) /
                    s.ctx.log_m;
    CHECK(dim_of_beta(s.ctx, q0) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("ratio A: degenerate tags and bisection oracle") {
    CarpetSpec c = two_row_carpet(2, 3, 2, 1);
    TwoRowCtx half = make_two_row_ctx(make_two_row(2, 1, 0.5), c);
    CHECK(ratio_A(half).kind == RatioA::Kind::zero_degenerate);
    CHECK(ratio_A(half).value == 0.0);

    CarpetSpec ceq = two_row_carpet(2, 5, 2, 2);
    CHECK(ratio_A(make_two_row_ctx(make_two_row(2, 2, 0.3), ceq)).kind ==
          RatioA::Kind::infinite);
    CHECK(ratio_A(make_two_row_ctx(make_two_row(2, 2, 0.5), ceq)).kind ==
          RatioA::Kind::trivial);

    double qm = bisect_ratio(c, -1.0);
    CHECK(std::fabs(qm - exceptional_q0(2, 1, c.sigma)) < 1e-12);
    double qp = bisect_ratio(c, 1.0);
    CHECK(std::fabs(qp - collapse_q0(2, 1, c.sigma)) < 1e-12);
    CHECK(exceptional_q0(2, 1, c.sigma) == doctest::Approx(0.39240).epsilon(2e-4));
    CHECK(collapse_q0(2, 1, c.sigma) == doctest::Approx(0.60761).epsilon(2e-4));
    // row swap symmetry
    CHECK(exceptional_q0(1, 2, c.sigma) ==
          doctest::Approx(1.0 - exceptional_q0(2, 1, c.sigma)).epsilon(1e-15));
    CHECK_THROWS_AS(exceptional_q0(2, 2, c.sigma), std::invalid_argument);
}

TEST_CASE("drift map: fixed point, involution and the two-scale oracle") {
    Sys s = exceptional231();
    double alpha = 1.0;
    DriftMapParams dm = drift_map(s.ctx, alpha);
    double P = dm.fixed_point();
    CHECK(dm.apply(P) == doctest::Approx(P).epsilon(1e-12));
    CHECK(P == doctest::Approx(fixed_point_P(s.ctx, alpha)).epsilon(1e-12));

    // A = -1 makes F an involution
    for (int k = 0; k <= 100; ++k) {
        double x = k / 100.0;
        CHECK(std::fabs(dm.apply(dm.apply(x)) - x) < 1e-12);
    }

    // two-scale consistency: solve the exponent relation for the refined
    // frequency P', mix the scales, compare against F
    EntropyBundle e = entropies(s.ctx);
    double sg = s.ctx.sigma;
    for (double pk : {0.1, 0.25, 0.5, 0.7, 0.9}) {
        double rhs = alpha * s.ctx.log_m - sg * e.CHq(pk);
        // Hq(P') = rhs/(1-sigma) is affine in P'
        double pprime = (rhs / (1.0 - sg) + s.ctx.log_q1) / (s.ctx.log_q1 - s.ctx.log_q0);
        double mixed = sg * pk + (1.0 - sg) * pprime;
        CHECK(std::fabs(mixed - dm.apply(pk)) < 1e-10);
    }

    CHECK_THROWS_AS(drift_map(s.ctx, 0.0), std::domain_error);
    CHECK_THROWS_AS(drift_map(make_two_row_ctx(make_two_row(2, 1, 0.5), s.carpet), 1.0),
                    std::domain_error);
}

TEST_CASE("fixed_point_P inversion") {
    Sys s = exceptional231();
    CHECK(fixed_point_P(s.ctx, alpha_of_beta(s.ctx, s.ctx.tr.q0)) ==
          doctest::Approx(s.ctx.tr.q0).epsilon(1e-12));
    double a0 = alpha_of_beta(s.ctx, 0.0), a1 = alpha_of_beta(s.ctx, 1.0);
    double am = std::min(a0, a1);
    double Pend = fixed_point_P(s.ctx, am);
    CHECK((Pend == 0.0 || Pend == 1.0));
    double P1 = fixed_point_P(s.ctx, 1.0);
    CHECK(P1 == doctest::Approx(0.2227).epsilon(3e-3));
    CHECK(alpha_of_beta(s.ctx, P1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(fixed_point_P(s.ctx, a1 + 0.1), std::domain_error);
    // A = 1 has a constant alpha(beta)
    Sys sp = sys231(collapse_q0(2, 1, s.carpet.sigma));
    CHECK_THROWS_AS(fixed_point_P(sp.ctx, 1.0), std::domain_error);
}

TEST_CASE("property: roundtrip and slope law over random measures") {
    SplitMix64 rng = make_rng({71, 0});
    int done = 0;
    while (done < 100) {
        int n = 3 + static_cast<int>(rng.next() % 6);
        int n0 = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        int n1 = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        if (n0 == n1) continue;
        double q0 = 0.08 + 0.84 * rng.next_double();
        CarpetSpec c = two_row_carpet(2, n, n0, n1);
        TwoRowCtx ctx = make_two_row_ctx(make_two_row(n0, n1, q0), c);
        RatioA ra = ratio_A(ctx);
        if (!ra.is_regular() || std::fabs(std::fabs(ra.value) - 1.0) <= 0.05) continue;
        ++done;
        double a0 = alpha_of_beta(ctx, 0.0), a1 = alpha_of_beta(ctx, 1.0);
        double alpha = std::min(a0, a1) + (std::max(a0, a1) - std::min(a0, a1)) *
                                              (0.05 + 0.9 * rng.next_double());
        CHECK(std::fabs(alpha_of_beta(ctx, fixed_point_P(ctx, alpha)) - alpha) < 1e-10);
        // slope law by finite differences
        double fd = (alpha_of_beta(ctx, 0.6) - alpha_of_beta(ctx, 0.4)) / 0.2;
        CHECK(std::fabs(fd - alpha_slope(ctx)) < 1e-9);
    }
}

TEST_CASE("hausdorff spectrum values") {
    Sys s = exceptional231();
    double astar = alpha_of_beta(s.ctx, beta_star(s.ctx));
    CHECK(*hausdorff_spectrum(s.ctx, astar) ==
          doctest::Approx(s.profile.dim_hausdorff).epsilon(1e-12));
    CHECK(*hausdorff_spectrum(s.ctx, 1.0) == doctest::Approx(0.906).epsilon(2e-3));
    double a1 = alpha_of_beta(s.ctx, 1.0);
    CHECK(*hausdorff_spectrum(s.ctx, a1) ==
          doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-12));
    CHECK(!hausdorff_spectrum(s.ctx, a1 + 0.2).has_value());

    // collapsed regime: the single exponent carries dim_H of the attractor
    Sys sp = sys231(collapse_q0(2, 1, s.carpet.sigma));
    double ac = alpha_of_beta(sp.ctx, 0.5);
    CHECK(*hausdorff_spectrum(sp.ctx, ac) ==
          doctest::Approx(sp.profile.dim_hausdorff).epsilon(1e-12));
    CHECK(!hausdorff_spectrum(sp.ctx, ac + 0.1).has_value());
}

TEST_CASE("oscillation growth rate: structure of y_tilde") {
    Sys s = exceptional231();
    double alpha = 1.0;
    double logm_dimh = *hausdorff_spectrum(s.ctx, alpha) * s.ctx.log_m;

    // delta = 0 collapses to the Hausdorff line, any gamma, both modes
    for (double g : {0.0, 0.7, 1.0, 1.3, 2.0}) {
        CHECK(y_tilde(s.ctx, alpha, g, 0.0, YMode::closed) ==
              doctest::Approx(logm_dimh).epsilon(1e-14));
        CHECK(y_tilde(s.ctx, alpha, g, 0.0, YMode::numeric, 12) ==
              doctest::Approx(logm_dimh).epsilon(1e-12));
    }

    // 2-periodicity and continuity at the phase seam
    for (double d : {0.05, 0.1, 0.2}) {
        CHECK(y_tilde(s.ctx, alpha, 0.0, d, YMode::closed) ==
              doctest::Approx(y_tilde(s.ctx, alpha, 2.0, d, YMode::closed)).epsilon(1e-14));
        double left = y_tilde(s.ctx, alpha, 1.0 - 1e-7, d, YMode::closed);
        double right = y_tilde(s.ctx, alpha, 1.0, d, YMode::closed);
        CHECK(std::fabs(left - right) < 1e-6);
    }

    // numeric mode is the oracle for the closed form
    double worst = 0.0, worst_self = 0.0;
    for (int gi = 0; gi <= 20; ++gi)
        for (double d : {0.02, 0.05, 0.1, 0.2}) {
            double num40 = y_tilde(s.ctx, alpha, gi * 0.1, d, YMode::numeric, 40);
            double num20 = y_tilde(s.ctx, alpha, gi * 0.1, d, YMode::numeric, 20);
            double clo = y_tilde(s.ctx, alpha, gi * 0.1, d, YMode::closed);
            worst = std::max(worst, std::fabs(num40 - clo));
            worst_self = std::max(worst_self, std::fabs(num40 - num20));
        }
    CHECK(worst < 1e-8);
    CHECK(worst_self < 1e-10);

    CHECK_THROWS_AS(y_tilde(s.ctx, alpha, 0.5, 0.9, YMode::closed), std::invalid_argument);
    CHECK_THROWS_AS(y_tilde(s.ctx, alpha, 0.5, 0.05, YMode::numeric, 5), std::invalid_argument);
    CHECK_THROWS_AS(y_tilde(s.ctx, alpha, 2.5, 0.05, YMode::closed), std::invalid_argument);
}

TEST_CASE("Y maxima and the single-scale bound") {
    Sys s = exceptional231();
    double alpha = 1.0;
    double dimh = *hausdorff_spectrum(s.ctx, alpha);
    CHECK(Y_max_over_gamma(s.ctx, alpha, 0.0) / s.ctx.log_m ==
          doctest::Approx(dimh).epsilon(1e-10));

    DeltaMax dm = Y_max_over_delta(s.ctx, alpha);
    CHECK(dm.value / s.ctx.log_m > dimh + 1e-4);  // strict gap at A = -1

    double bound = single_level_bound(s.ctx, alpha);
    CHECK(bound >= dm.value / s.ctx.log_m - 1e-12);
    CHECK(bound >= dimh);
    CHECK(bound <= s.profile.dim_box_packing + 1e-9);

    // endpoint: only delta = 0 is admissible and Y = sigma*CH(P)
    double a1 = alpha_of_beta(s.ctx, 1.0);
    EntropyBundle e = entropies(s.ctx);
    DeltaMax dend = Y_max_over_delta(s.ctx, a1);
    CHECK(dend.delta == 0.0);
    CHECK(dend.value == doctest::Approx(s.ctx.sigma * e.CH(1.0)).epsilon(1e-12));
}

TEST_CASE("drift profile block targets alternate around P") {
    DriftProfile p{0.3, 0.1, 0.0, 50};
    for (int K = 0; K < 8; ++K) {
        CHECK(p.block_target(K) == doctest::Approx(K % 2 == 0 ? 0.4 : 0.2));
        CHECK(p.block_target(K) >= 0.0);
        CHECK(p.block_target(K) <= 1.0);
    }
}

TEST_CASE("packing spectrum dispatch") {
    // generic: q0 = 1/2 gives A = 0
    Sys sh = sys231(0.5);
    SpectrumPoint pt = packing_spectrum(sh.ctx, 1.2);
    CHECK(pt.regime == Regime::generic);
    CHECK(*pt.dim_p == *pt.dim_h);

    // exceptional: interior gap, endpoint equality
    Sys ex = exceptional231();
    SpectrumPoint in = packing_spectrum(ex.ctx, 1.0);
    CHECK(in.regime == Regime::a_minus_one_interior);
    CHECK(*in.dim_p > *in.dim_h);
    double a0 = alpha_of_beta(ex.ctx, 0.0), a1 = alpha_of_beta(ex.ctx, 1.0);
    SpectrumPoint lo = packing_spectrum(ex.ctx, std::min(a0, a1));
    CHECK(lo.regime == Regime::a_minus_one_endpoint);
    CHECK(*lo.dim_p == *lo.dim_h);
    CHECK(*lo.dim_h == doctest::Approx(0.0).epsilon(1e-14));
    SpectrumPoint hi = packing_spectrum(ex.ctx, std::max(a0, a1));
    CHECK(*hi.dim_h == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-12));
    CHECK(packing_spectrum(ex.ctx, a1 + 1.0).regime == Regime::outside);

    // collapsed: single point carrying dim_H of the attractor
    Sys cp = sys231(collapse_q0(2, 1, ex.carpet.sigma));
    double ac = alpha_of_beta(cp.ctx, 0.3);
    SpectrumPoint cpt = packing_spectrum(cp.ctx, ac);
    CHECK(cpt.regime == Regime::a_plus_one);
    CHECK(*cpt.dim_h == doctest::Approx(cp.profile.dim_hausdorff).epsilon(1e-12));

    // equal rows: degenerate single point at the attractor dimension
    CarpetSpec ceq = two_row_carpet(2, 5, 2, 2);
    TwoRowCtx eq = make_two_row_ctx(make_two_row(2, 2, 0.5), ceq);
    double aeq = alpha_of_beta(eq, 0.5);
    SpectrumPoint ept = packing_spectrum(eq, aeq);
    CHECK(ept.regime == Regime::degenerate_equal_rows);
    CHECK(*ept.dim_h == doctest::Approx(attractor_profile(ceq).dim_hausdorff).epsilon(1e-12));

    // force-regime override wins over the automatic classification
    SpectrumPoint forced = packing_spectrum(ex.ctx, 1.0, 1e-9, ForceRegime::generic);
    CHECK(forced.regime == Regime::generic);
    CHECK(*forced.dim_p == *forced.dim_h);
}

TEST_CASE("property: ordering chain along the spectrum") {
    Sys ex = exceptional231();
    double a0 = alpha_of_beta(ex.ctx, 0.0), a1 = alpha_of_beta(ex.ctx, 1.0);
    double am = std::min(a0, a1), aM = std::max(a0, a1);
    for (int k = 1; k < 12; ++k) {
        double alpha = am + (aM - am) * k / 12.0;
        SpectrumPoint pt = packing_spectrum(ex.ctx, alpha);
        double bound = single_level_bound(ex.ctx, alpha);
        CHECK(*pt.dim_h <= *pt.dim_p + 1e-12);
        CHECK(*pt.dim_p <= bound + 1e-9);
        CHECK(bound <= ex.profile.dim_box_packing + 1e-9);
    }
}

TEST_CASE("property: the packing spectrum jumps at the exceptional parameter") {
    Sys ex = exceptional231();
    double alpha = 1.0;
    SpectrumPoint at = packing_spectrum(ex.ctx, alpha);
    CHECK(*at.dim_p - *at.dim_h > 1e-3);
    for (double dq : {-1e-3, 1e-3}) {
        TwoRowCtx nearby = make_two_row_ctx(make_two_row(2, 1, ex.ctx.tr.q0 + dq), ex.carpet);
        SpectrumPoint pt = packing_spectrum(nearby, alpha);
        CHECK(pt.regime == Regime::generic);
        CHECK(std::fabs(*pt.dim_p - *pt.dim_h) < 1e-10);
    }
}

TEST_CASE("spectrum curve") {
    Sys ex = exceptional231();
    double a0 = alpha_of_beta(ex.ctx, 0.0), a1 = alpha_of_beta(ex.ctx, 1.0);
    double am = std::min(a0, a1), aM = std::max(a0, a1);

    // a single-point grid reproduces the pointwise op
    SpectrumCurve one = spectrum_curve(ex.ctx, {1.0});
    SpectrumPoint ref = packing_spectrum(ex.ctx, 1.0);
    CHECK(one.size() == 1);
    CHECK(*one[0].dim_p == *ref.dim_p);

    std::vector<double> grid;
    for (int k = 0; k < 21; ++k) grid.push_back(am + (aM - am) * k / 20.0);
    SpectrumCurve curve = spectrum_curve(ex.ctx, grid);
    CHECK(curve.front().regime == Regime::a_minus_one_endpoint);
    CHECK(curve.back().regime == Regime::a_minus_one_endpoint);
    for (std::size_t k = 1; k + 1 < curve.size(); ++k)
        CHECK(curve[k].regime == Regime::a_minus_one_interior);

    // dim_H column is concave (discrete second differences <= 0); the
    // Hausdorff column alone suffices, on a denser grid
    std::vector<double> dh;
    for (int k = 0; k <= 100; ++k)
        dh.push_back(*hausdorff_spectrum(ex.ctx, am + (aM - am) * k / 100.0));
    for (std::size_t k = 1; k + 1 < dh.size(); ++k)
        CHECK(dh[k - 1] - 2.0 * dh[k] + dh[k + 1] < 1e-9);
    CHECK_THROWS_AS(spectrum_curve(ex.ctx, {}), std::invalid_argument);
}
