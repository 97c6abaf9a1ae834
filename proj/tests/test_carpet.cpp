#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "carpets/carpet.hpp"
#include "carpets/sampling.hpp"

using namespace carpets;

namespace {

std::vector<Digit> full_grid(int m, int n) {
    std::vector<Digit> d;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) d.push_back({i, j});
    return d;
}

// Independent oracle: least-squares slope of log(box count) over depths
// 10..20, where the count of level-N approximate squares is
// L0^ceil(sigma N) * L1^(N - ceil(sigma N)).
double box_count_slope(const CarpetSpec& c) {
    std::vector<double> xs, ys;
    for (long N = 10; N <= 20; ++N) {
        long S = ceil_sigma(c, N);
        ys.push_back(S * std::log(static_cast<double>(c.L0)) +
                     (N - S) * std::log(static_cast<double>(c.L1)));
        xs.push_back(static_cast<double>(N));
    }
    double xm = 0, ym = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) { xm += xs[k]; ym += ys[k]; }
    xm /= xs.size(); ym /= ys.size();
    double num = 0, den = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        num += (xs[k] - xm) * (ys[k] - ym);
        den += (xs[k] - xm) * (xs[k] - xm);
    }
    return num / den / c.log_m;
}

// Independent oracle for the two-row attractor dimension: grid-maximize the
// entropy expression (H(Q) + sigma(Q log n0 + (1-Q) log n1)) / log m over
// 1e4 points plus a golden-section polish.
double two_row_dim_h_oracle(const CarpetSpec& c) {
    int n0 = c.row_counts[0], n1 = c.row_counts[1];
    auto f = [&](double q) {
        double h = -(q > 0 ? q * std::log(q) : 0.0) -
                   (q < 1 ? (1 - q) * std::log(1 - q) : 0.0);
        return (h + c.sigma * (q * std::log(static_cast<double>(n0)) +
                               (1 - q) * std::log(static_cast<double>(n1)))) /
               c.log_m;
    };
    double best = 0, bx = 0;
    for (int k = 0; k <= 10000; ++k) {
        double q = k / 10000.0;
        if (f(q) > best) { best = f(q); bx = q; }
    }
    double a = std::max(0.0, bx - 1e-4), b = std::min(1.0, bx + 1e-4);
    const double phi = 0.6180339887498949;
    double c1 = b - phi * (b - a), d1 = a + phi * (b - a);
    double fc = f(c1), fd = f(d1);
    while (b - a > 1e-12) {
        if (fc >= fd) { b = d1; d1 = c1; fd = fc; c1 = b - phi * (b - a); fc = f(c1); }
        else { a = c1; c1 = d1; fc = fd; d1 = a + phi * (b - a); fd = f(d1); }
        best = std::max({best, fc, fd});
    }
    return best;
}

}  // namespace

TEST_CASE("full 2x4 grid profile") {
    AttractorProfile p = validate_carpet(2, 4, full_grid(2, 4));
    CHECK(p.L0 == 8);
    CHECK(p.L1 == 2);
    CHECK(p.sigma == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::fabs(p.dim_box_packing - 2.0) < 1e-12);
    CHECK(std::fabs(p.dim_hausdorff - 2.0) < 1e-12);
}

TEST_CASE("three-digit 2x3 carpet profile and box-count oracle") {
    CarpetSpec c = make_carpet(2, 3, {{0, 0}, {0, 1}, {1, 0}});
    AttractorProfile p = attractor_profile(c);
    CHECK(p.L0 == 3);
    CHECK(p.L1 == 2);
    CHECK(p.row_counts[0] == 2);
    CHECK(p.row_counts[1] == 1);
    double s = 2.0 - c.sigma;
    CHECK(std::fabs(p.dim_box_packing - s) < 1e-12);
    CHECK(p.dim_box_packing == doctest::Approx(1.3691).epsilon(1e-3));
    CHECK(std::fabs(box_count_slope(c) - s) < 0.02);

    // dim_H = log(n0^sigma + n1^sigma)/log m, against the grid oracle
    CHECK(std::fabs(p.dim_hausdorff - two_row_dim_h_oracle(c)) < 1e-10);
    CHECK(p.dim_hausdorff == doctest::Approx(1.3501).epsilon(1e-3));
}

TEST_CASE("diagonal carpet has sigma-free dimension") {
    AttractorProfile p = validate_carpet(2, 3, {{0, 0}, {1, 1}});
    CHECK(std::fabs(p.dim_box_packing - 1.0) < 1e-12);
    CHECK(std::fabs(p.dim_hausdorff - 1.0) < 1e-12);
}

TEST_CASE("carpet validation errors name the offending field") {
    CHECK_THROWS_WITH_AS(make_carpet(1, 3, {{0, 0}, {0, 1}}),
                         doctest::Contains("m:"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_carpet(3, 3, {{0, 0}, {0, 1}}),
                         doctest::Contains("n:"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_carpet(2, 3, {}),
                         doctest::Contains("digits"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_carpet(2, 3, {{0, 0}, {0, 0}}),
                         doctest::Contains("duplicate"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_carpet(2, 3, {{0, 0}, {0, 3}}),
                         doctest::Contains("grid"), std::invalid_argument);
}

TEST_CASE("weights validation") {
    CarpetSpec c = make_carpet(2, 3, {{0, 0}, {0, 1}, {1, 0}});
    CHECK_THROWS_AS(make_weights(c, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(make_weights(c, {0.5, 0.5, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_weights(c, {0.5, 0.4, 0.2}), std::invalid_argument);
    BernoulliWeights w = make_weights(c, {0.25, 0.25, 0.5});
    CHECK(w.q[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(w.q[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("alpha_range examples") {
    CarpetSpec full = make_carpet(2, 4, full_grid(2, 4));
    BernoulliWeights wu = make_weights(full, std::vector<double>(8, 0.125));
    auto [am, aM] = alpha_range(full, wu);
    CHECK(std::fabs(am - 2.0) < 1e-12);
    CHECK(std::fabs(aM - 2.0) < 1e-12);

    CarpetSpec c = two_row_carpet(2, 3, 2, 1);
    TwoRowMeasure half = make_two_row(2, 1, 0.5);
    auto [bm, bM] = alpha_range(c, two_row_weights(c, half));
    CHECK(std::fabs(bm - 1.0) < 1e-12);
    CHECK(std::fabs(bM - (1.0 + c.sigma)) < 1e-12);
}

TEST_CASE("full-spectrum conditions: examples") {
    CarpetSpec full = make_carpet(2, 4, full_grid(2, 4));
    BernoulliWeights wu = make_weights(full, std::vector<double>(8, 0.125));
    SpectrumReachReport rep = classify_spectrum_reach(full, wu);
    CHECK(rep.necessary_holds);
    CHECK(rep.sufficient_holds);
    CHECK(rep.classification == SpectrumReach::full_at_alpha0);
    REQUIRE(rep.alpha0.has_value());
    CHECK(std::fabs(*rep.alpha0 - 2.0) < 1e-12);

    CarpetSpec c = two_row_carpet(2, 3, 2, 1);
    SpectrumReachReport rep_half = classify_spectrum_reach(c, two_row_weights(c, make_two_row(2, 1, 0.5)));
    CHECK(rep_half.necessary_holds);
    CHECK(!rep_half.sufficient_holds);
    CHECK(rep_half.classification == SpectrumReach::indeterminate);

    SpectrumReachReport rep_03 = classify_spectrum_reach(c, two_row_weights(c, make_two_row(2, 1, 0.3)));
    CHECK(!rep_03.necessary_holds);
    CHECK(rep_03.classification == SpectrumReach::spectrum_strictly_below);

    CHECK_THROWS_AS(classify_spectrum_reach(c, two_row_weights(c, make_two_row(2, 1, 0.3)), 0.0),
                    std::invalid_argument);
}

TEST_CASE("property: dim_H <= dim_B with equality iff nonzero rows equal") {
    SplitMix64 rng = make_rng({42, 0});
    for (int t = 0; t < 200; ++t) {
        int m = 2 + static_cast<int>(rng.next() % 3);
        int n = m + 1 + static_cast<int>(rng.next() % 4);
        std::set<std::pair<int, int>> chosen;
        int want = 2 + static_cast<int>(rng.next() % (m * n - 1));
        while (static_cast<int>(chosen.size()) < want)
            chosen.insert({static_cast<int>(rng.next() % static_cast<std::uint64_t>(m)),
                           static_cast<int>(rng.next() % static_cast<std::uint64_t>(n))});
        std::vector<Digit> digits;
        for (auto [i, j] : chosen) digits.push_back({i, j});
        CarpetSpec c = make_carpet(m, n, digits);
        AttractorProfile p = attractor_profile(c);
        CHECK(p.dim_hausdorff <= p.dim_box_packing + 1e-12);
        std::set<int> nz;
        for (int k : c.row_counts)
            if (k > 0) nz.insert(k);
        if (nz.size() == 1) CHECK(std::fabs(p.dim_hausdorff - p.dim_box_packing) < 1e-12);
        else CHECK(p.dim_box_packing - p.dim_hausdorff > 1e-9);
    }
}

TEST_CASE("property: alpha_m == alpha_M iff all digits share the exponent") {
    SplitMix64 rng = make_rng({43, 0});
    for (int t = 0; t < 100; ++t) {
        int n = 3 + static_cast<int>(rng.next() % 4);
        int n0 = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        int n1 = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        double q0 = 0.05 + 0.9 * rng.next_double();
        CarpetSpec c = two_row_carpet(2, n, n0, n1);
        BernoulliWeights w = two_row_weights(c, make_two_row(n0, n1, q0));
        auto [am, aM] = alpha_range(c, w);
        std::set<long long> quantized;
        for (std::size_t k = 0; k < c.digits.size(); ++k) {
            int i = c.digits[k].i;
            double v = (-c.sigma * w.log_p[k] + (c.sigma - 1.0) * w.log_q[i]) / c.log_m;
            quantized.insert(static_cast<long long>(std::llround(v * 1e10)));
        }
        if (quantized.size() == 1) CHECK(aM - am < 1e-9);
        else CHECK(aM - am >= 1e-10);
    }
}

TEST_CASE("property: classification invariant under row permutation") {
    // swap the two rows of a two-row system: same carpet up to relabeling
    for (double q0 : {0.3, 0.5, 0.61, 0.8}) {
        CarpetSpec c1 = two_row_carpet(2, 5, 3, 1);
        CarpetSpec c2 = two_row_carpet(2, 5, 1, 3);
        SpectrumReachReport r1 = classify_spectrum_reach(c1, two_row_weights(c1, make_two_row(3, 1, q0)));
        SpectrumReachReport r2 =
            classify_spectrum_reach(c2, two_row_weights(c2, make_two_row(1, 3, 1.0 - q0)));
        CHECK(r1.classification == r2.classification);
    }
}

TEST_CASE("property: two-row necessary condition holds iff q0 = 1/2") {
    for (int k = 1; k <= 19; ++k) {
        double q0 = k / 20.0;
        CarpetSpec c = two_row_carpet(2, 3, 2, 1);
        SpectrumReachReport rep =
            classify_spectrum_reach(c, two_row_weights(c, make_two_row(2, 1, q0)), 1e-12);
        CHECK(rep.necessary_holds == (k == 10));
    }
}

TEST_CASE("index helpers: rational sigma is exact") {
    CarpetSpec c24 = make_carpet(2, 4, full_grid(2, 4));
    CHECK(c24.sigma_rational);
    for (long N : {1L, 2L, 7L, 999L, 1000000L}) CHECK(ceil_sigma(c24, N) == (N + 1) / 2);
    for (int K : {0, 1, 5, 20}) CHECK(ceil_sigma_pow(c24, K) == (1L << K));

    CarpetSpec c23 = make_carpet(2, 3, {{0, 0}, {0, 1}, {1, 0}});
    CHECK(!c23.sigma_rational);
    CHECK(ceil_sigma(c23, 10) == 7);  // sigma*10 = 6.309...
    CHECK(ceil_sigma_pow(c23, 0) == 1);
    CHECK(ceil_sigma_pow(c23, 1) == 2);   // 1.585
    CHECK(ceil_sigma_pow(c23, 2) == 3);   // 2.512
    CHECK(ceil_sigma_pow(c23, 5) == 11);  // 10.02
}

TEST_CASE("two-row constructor invariants") {
    TwoRowMeasure tr = make_two_row(2, 1, 0.3);
    CHECK(tr.n0 * tr.p0 + tr.n1 * tr.p1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(make_two_row(0, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_two_row(2, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_two_row(2, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(two_row_carpet(2, 3, 4, 1), std::invalid_argument);
}
