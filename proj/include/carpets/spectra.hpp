#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carpets/carpet.hpp"

// Closed-form local-dimension spectra for the two-row equidistributed
// family. Row-0 frequency beta determines both the exponent alpha(beta) and
// the dimension dim(beta); the ratio A = log(q0/q1)/(sigma log(n0/n1))
// classifies the regimes. |A| != 1 is the generic case (packing equals
// Hausdorff); A = 1 collapses the spectrum to a point; A = -1 is the
// exceptional measure whose packing spectrum rises strictly above the
// Hausdorff spectrum in the interior.

namespace carpets {

// Two-row measure plus the carpet scale data every formula needs.
struct TwoRowCtx {
    TwoRowMeasure tr;
    double sigma = 0.0;
    double log_m = 0.0;
    double log_q0 = 0.0, log_q1 = 0.0;
    double log_n0 = 0.0, log_n1 = 0.0;
    double log_p0 = 0.0, log_p1 = 0.0;
};

TwoRowCtx make_two_row_ctx(const TwoRowMeasure& tr, double sigma, double log_m);
TwoRowCtx make_two_row_ctx(const TwoRowMeasure& tr, const CarpetSpec& carpet);

// x log x with the 0 log 0 := 0 convention.
double xlogx(double x);

// The four entropy quantities, natural logs, all defined on [0,1]:
//   H(b)  = -b log b - (1-b) log(1-b)
//   Hq(b) = -b log q0 - (1-b) log q1
//   CH(b)  = H(b)  + b log n0 + (1-b) log n1
//   CHq(b) = Hq(b) + b log n0 + (1-b) log n1
struct EntropyBundle {
    double log_q0 = 0.0, log_q1 = 0.0, log_n0 = 0.0, log_n1 = 0.0;
    double H(double b) const;
    double Hq(double b) const;
    double CH(double b) const;
    double CHq(double b) const;
};

EntropyBundle entropies(const TwoRowCtx& ctx);

// alpha(beta) = (sigma CHq(beta) + (1-sigma) Hq(beta)) / log m, affine in beta.
double alpha_of_beta(const TwoRowCtx& ctx, double beta);

// dim(beta) = (H(beta) + sigma (beta log n0 + (1-beta) log n1)) / log m, the
// dimension of the level set with row-0 frequency beta.
double dim_of_beta(const TwoRowCtx& ctx, double beta);

// d alpha / d beta = (sigma log(n0/n1) - log(q0/q1)) / log m; zero iff A = 1.
double alpha_slope(const TwoRowCtx& ctx);

// beta maximizing dim_of_beta: n0^sigma / (n0^sigma + n1^sigma).
double beta_star(const TwoRowCtx& ctx);

struct RatioA {
    enum class Kind {
        regular,          // n0 != n1 and q0 != q1
        infinite,         // n0 == n1, q0 != q1
        zero_degenerate,  // q0 == q1, n0 != n1 (A = 0)
        trivial,          // both equal
    };
    Kind kind = Kind::regular;
    double value = 0.0;  // meaningful for regular (and 0 for zero_degenerate)

    bool is_regular() const { return kind == Kind::regular; }
};

RatioA ratio_A(const TwoRowCtx& ctx);

// The unique q0 with A = -1: q0 = n1^sigma / (n0^sigma + n1^sigma).
// Requires n0 != n1.
double exceptional_q0(int n0, int n1, double sigma);

// The q0 with A = +1 (collapsed spectrum): n0^sigma / (n0^sigma + n1^sigma).
double collapse_q0(int n0, int n1, double sigma);

// Affine drift map F(x) = A^-1 x + B relating row frequencies at consecutive
// sigma-scales of a fixed exponent alpha. Its fixed point P satisfies
// alpha_of_beta(P) = alpha.
struct DriftMapParams {
    double ratio_A = 0.0;
    double offset_B = 0.0;
    double alpha = 0.0;

    double apply(double x) const { return x / ratio_A + offset_B; }
    double fixed_point() const { return ratio_A * offset_B / (ratio_A - 1.0); }
};

DriftMapParams drift_map(const TwoRowCtx& ctx, double alpha);

// Row frequency with alpha_of_beta(P) = alpha, by affine inversion.
// Throws std::domain_error outside [alpha_m, alpha_M] or when A = 1.
double fixed_point_P(const TwoRowCtx& ctx, double alpha);

// Oscillation-set parameters: row-0 frequency targets P + delta on even
// blocks [sigma^-K, sigma^-K-1) and P - delta on odd blocks, with phase
// gamma and window constant K0 (absent = unconstrained).
struct DriftProfile {
    double P = 0.0;
    double delta = 0.0;
    double gamma = 0.0;
    std::optional<long> K0;

    double block_target(int K) const { return K % 2 == 0 ? P + delta : P - delta; }
};

// dim_H of the level set X_alpha; nullopt outside [alpha_m, alpha_M].
// In the A = 1 regime the spectrum is the single point alpha_m = alpha_M
// with value dim_H of the attractor.
std::optional<double> hausdorff_spectrum(const TwoRowCtx& ctx, double alpha);

enum class YMode { numeric, closed };

// Phase-dependent growth rate of block-constrained square counts:
// the limit of sigma^r log Z_r along r = gamma + 2k.
//
// numeric (normative): finite scaled block sums evaluated at k_terms and
// k_terms - 1 block pairs; the finite-size defect is exactly geometric in k
// with ratio sigma^2 (two-block periodicity), so one elimination step
// recovers the limit to machine precision. k_terms >= 10.
//
// closed (cross-check): with g = gamma - floor(gamma), e = (-1)^floor(gamma),
// D(s) = H(P + s delta) - H(P),
//   Ytilde = H(P) + sigma (P log n0 + (1-P) log n1)
//          + (1 - sigma^g) D(e) + sigma^g/(1+sigma) (D(-e) + sigma D(e))
//          + sigma e (2 sigma^g/(1+sigma) - 1) delta log(n0/n1).
double y_tilde(const TwoRowCtx& ctx, double alpha, double gamma, double delta, YMode mode,
               int k_terms = 40);

// Finite idealized block sum sigma^r log Z_r at real depth exponent r >= 1
// (the quantity whose limit along r = gamma + 2k is y_tilde). Exposed for
// the counting module and its oracles.
double scaled_block_census(const TwoRowCtx& ctx, double P, double delta, double r);

// sup over gamma in [0,2] of y_tilde (closed mode), via a 2001-point grid
// plus golden-section refinement to 1e-10 in gamma.
double Y_max_over_gamma(const TwoRowCtx& ctx, double alpha, double delta);

struct GammaMax {
    double value = 0.0;
    double gamma = 0.0;
};

GammaMax Y_max_over_gamma_arg(const TwoRowCtx& ctx, double alpha, double delta);

struct DeltaMax {
    double value = 0.0;  // max_delta Y(delta)
    double delta = 0.0;
    double gamma = 0.0;  // maximizing phase at that delta
};

// max over delta in [0, min(P, 1-P)] of Y(delta), grid plus golden section.
DeltaMax Y_max_over_delta(const TwoRowCtx& ctx, double alpha);

// Single-scale upper envelope: sup over rho of
//   (sigma CH(P + rho) + (1-sigma) H(P - delta(rho))) / log m,
// delta(rho) = rho (1+sigma)/(1-sigma), constrained to P +- delta in [0,1].
// The two arguments P + rho and P - delta are exactly the column/row
// frequency pair a single census class with exponent alpha can carry when
// A = -1, so the depth-N census sup converges to this bound.
double single_level_bound(const TwoRowCtx& ctx, double alpha);

enum class Regime {
    outside,
    generic,
    a_plus_one,
    a_minus_one_interior,
    a_minus_one_endpoint,
    degenerate_equal_rows,
};

std::string to_string(Regime r);

enum class ForceRegime { automatic, generic, a_minus_one, a_plus_one };

struct SpectrumPoint {
    double alpha = 0.0;
    std::optional<double> dim_h;
    std::optional<double> dim_p;
    std::optional<double> P;
    Regime regime = Regime::outside;
};

// Full dispatch: generic regimes give dim_P = dim_H; A = +1 collapses to a
// single point of value dim_H(attractor); A = -1 gives the oscillation gap
// in the interior and dim_P = dim_H = sigma*CH(P)/log m at the endpoints.
SpectrumPoint packing_spectrum(const TwoRowCtx& ctx, double alpha, double regime_tol = 1e-9,
                               ForceRegime force = ForceRegime::automatic);

using SpectrumCurve = std::vector<SpectrumPoint>;

// One SpectrumPoint per grid entry, order preserved. Parallel over the grid.
SpectrumCurve spectrum_curve(const TwoRowCtx& ctx, const std::vector<double>& alpha_grid,
                             double regime_tol = 1e-9,
                             ForceRegime force = ForceRegime::automatic);

// Serial reference implementation, kept for testing the parallel kernel.
SpectrumCurve spectrum_curve_serial(const TwoRowCtx& ctx, const std::vector<double>& alpha_grid,
                                    double regime_tol = 1e-9,
                                    ForceRegime force = ForceRegime::automatic);

}  // namespace carpets
