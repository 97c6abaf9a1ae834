#include "carpets/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace carpets {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
[[noreturn]] void fail_domain(const std::string& msg) { throw std::domain_error(msg); }

constexpr double kGoldenRatio = 0.6180339887498949;

// Golden-section maximization on [lo, hi]; f is assumed continuous. Returns
// the best (x, f(x)) among the probes once the bracket is below xtol.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double xtol) {
    double a = lo, b = hi;
    double c = b - kGoldenRatio * (b - a);
    double d = a + kGoldenRatio * (b - a);
    double fc = f(c), fd = f(d);
    double bx = fc >= fd ? c : d;
    double bf = std::max(fc, fd);
    while (b - a > xtol) {
        if (fc >= fd) {
            b = d; d = c; fd = fc;
            c = b - kGoldenRatio * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + kGoldenRatio * (b - a);
            fd = f(d);
        }
        if (fc > bf) { bf = fc; bx = c; }
        if (fd > bf) { bf = fd; bx = d; }
    }
    return {bx, bf};
}

// Dense grid followed by golden-section refinement around the best cell.
// The grid pass parallelizes only at top level: spawning nested teams from
// inside an enclosing parallel region costs more than the work itself.
template <typename F>
std::pair<double, double> grid_golden_max(F&& f, double lo, double hi, int npts, double xtol) {
    if (!(hi > lo)) return {lo, f(lo)};
    int best = 0;
    double bestv = -std::numeric_limits<double>::infinity();
    double step = (hi - lo) / (npts - 1);
    std::vector<double> vals(static_cast<std::size_t>(npts));
#ifdef _OPENMP
    if (!omp_in_parallel()) {
#pragma omp parallel for schedule(static)
        for (int k = 0; k < npts; ++k) vals[static_cast<std::size_t>(k)] = f(lo + step * k);
    } else {
        for (int k = 0; k < npts; ++k) vals[static_cast<std::size_t>(k)] = f(lo + step * k);
    }
#else
    for (int k = 0; k < npts; ++k) vals[static_cast<std::size_t>(k)] = f(lo + step * k);
#endif
    for (int k = 0; k < npts; ++k) {
        if (vals[static_cast<std::size_t>(k)] > bestv) {
            bestv = vals[static_cast<std::size_t>(k)];
            best = k;
        }
    }
    double a = lo + step * std::max(0, best - 1);
    double b = lo + step * std::min(npts - 1, best + 1);
    auto [rx, rv] = golden_max(f, a, b, xtol);
    if (rv > bestv) return {rx, rv};
    return {lo + step * best, bestv};
}

}  // namespace

TwoRowCtx make_two_row_ctx(const TwoRowMeasure& tr, double sigma, double log_m) {
    if (!(sigma > 0.0 && sigma < 1.0)) fail("sigma: must lie in (0,1)");
    if (!(log_m > 0.0)) fail("log_m: must be > 0");
    TwoRowCtx ctx;
    ctx.tr = tr;
    ctx.sigma = sigma;
    ctx.log_m = log_m;
    ctx.log_q0 = std::log(tr.q0);
    ctx.log_q1 = std::log(tr.q1);
    ctx.log_n0 = std::log(static_cast<double>(tr.n0));
    ctx.log_n1 = std::log(static_cast<double>(tr.n1));
    ctx.log_p0 = std::log(tr.p0);
    ctx.log_p1 = std::log(tr.p1);
    return ctx;
}

TwoRowCtx make_two_row_ctx(const TwoRowMeasure& tr, const CarpetSpec& carpet) {
    return make_two_row_ctx(tr, carpet.sigma, carpet.log_m);
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double EntropyBundle::H(double b) const { return -xlogx(b) - xlogx(1.0 - b); }
double EntropyBundle::Hq(double b) const { return -b * log_q0 - (1.0 - b) * log_q1; }
double EntropyBundle::CH(double b) const { return H(b) + b * log_n0 + (1.0 - b) * log_n1; }
double EntropyBundle::CHq(double b) const { return Hq(b) + b * log_n0 + (1.0 - b) * log_n1; }

EntropyBundle entropies(const TwoRowCtx& ctx) {
    return EntropyBundle{ctx.log_q0, ctx.log_q1, ctx.log_n0, ctx.log_n1};
}

double alpha_of_beta(const TwoRowCtx& ctx, double beta) {
    EntropyBundle e = entropies(ctx);
    return (ctx.sigma * e.CHq(beta) + (1.0 - ctx.sigma) * e.Hq(beta)) / ctx.log_m;
}

double dim_of_beta(const TwoRowCtx& ctx, double beta) {
    EntropyBundle e = entropies(ctx);
    return (e.H(beta) + ctx.sigma * (beta * ctx.log_n0 + (1.0 - beta) * ctx.log_n1)) / ctx.log_m;
}

double alpha_slope(const TwoRowCtx& ctx) {
    return (ctx.sigma * (ctx.log_n0 - ctx.log_n1) - (ctx.log_q0 - ctx.log_q1)) / ctx.log_m;
}

double beta_star(const TwoRowCtx& ctx) {
    double e0 = std::exp(ctx.sigma * ctx.log_n0);
    double e1 = std::exp(ctx.sigma * ctx.log_n1);
    return e0 / (e0 + e1);
}

RatioA ratio_A(const TwoRowCtx& ctx) {
    RatioA r;
    bool rows_equal = ctx.tr.n0 == ctx.tr.n1;
    bool q_equal = ctx.tr.q0 == ctx.tr.q1;
    if (rows_equal && q_equal) {
        r.kind = RatioA::Kind::trivial;
    } else if (rows_equal) {
        r.kind = RatioA::Kind::infinite;
    } else if (q_equal) {
        r.kind = RatioA::Kind::zero_degenerate;
        r.value = 0.0;
    } else {
        r.kind = RatioA::Kind::regular;
        r.value = (ctx.log_q0 - ctx.log_q1) / (ctx.sigma * (ctx.log_n0 - ctx.log_n1));
    }
    return r;
}

double exceptional_q0(int n0, int n1, double sigma) {
    if (n0 == n1) fail("n0/n1: exceptional measure requires n0 != n1");
    double e0 = std::exp(sigma * std::log(static_cast<double>(n0)));
    double e1 = std::exp(sigma * std::log(static_cast<double>(n1)));
    return e1 / (e0 + e1);
}

double collapse_q0(int n0, int n1, double sigma) {
    if (n0 == n1) fail("n0/n1: collapsed regime requires n0 != n1");
    double e0 = std::exp(sigma * std::log(static_cast<double>(n0)));
    double e1 = std::exp(sigma * std::log(static_cast<double>(n1)));
    return e0 / (e0 + e1);
}

DriftMapParams drift_map(const TwoRowCtx& ctx, double alpha) {
    RatioA ra = ratio_A(ctx);
    if (!ra.is_regular()) fail_domain("drift map: requires n0 != n1 and q0 != q1");
    double a0 = alpha_of_beta(ctx, 0.0);
    double a1 = alpha_of_beta(ctx, 1.0);
    if (alpha < std::min(a0, a1) - 1e-12 || alpha > std::max(a0, a1) + 1e-12)
        fail_domain("drift map: alpha outside [alpha_m, alpha_M]");
    DriftMapParams dm;
    dm.ratio_A = ra.value;
    dm.offset_B = -(alpha * ctx.log_m + ctx.sigma * ctx.log_p1 + (1.0 - ctx.sigma) * ctx.log_q1) /
                  (ctx.log_q0 - ctx.log_q1);
    dm.alpha = alpha;
    return dm;
}

double fixed_point_P(const TwoRowCtx& ctx, double alpha) {
    double a0 = alpha_of_beta(ctx, 0.0);
    double a1 = alpha_of_beta(ctx, 1.0);
    double slope = a1 - a0;
    if (std::fabs(slope) < 1e-13 * (1.0 + std::fabs(a0)))
        fail_domain("fixed point: alpha(beta) is constant (A = 1 regime)");
    if (alpha < std::min(a0, a1) - 1e-12 || alpha > std::max(a0, a1) + 1e-12)
        fail_domain("fixed point: alpha outside [alpha_m, alpha_M]");
    double P = (alpha - a0) / slope;
    return std::clamp(P, 0.0, 1.0);
}

std::optional<double> hausdorff_spectrum(const TwoRowCtx& ctx, double alpha) {
    double a0 = alpha_of_beta(ctx, 0.0);
    double a1 = alpha_of_beta(ctx, 1.0);
    if (std::fabs(a1 - a0) < 1e-13 * (1.0 + std::fabs(a0))) {
        // collapsed spectrum: the single exponent carries the full dimension
        if (std::fabs(alpha - a0) <= 1e-9) return dim_of_beta(ctx, beta_star(ctx));
        return std::nullopt;
    }
    if (alpha < std::min(a0, a1) - 1e-12 || alpha > std::max(a0, a1) + 1e-12) return std::nullopt;
    return dim_of_beta(ctx, fixed_point_P(ctx, alpha));
}

// sigma^r log Z_r for the idealized real-length block census at real depth
// exponent r >= 1: full blocks K = 0..floor(r)-1 with row-0 target
// P +- delta by parity, a partial block at floor(r), and the column factors
// over the first sigma^-(r-1) positions weighted by the aggregate block
// frequency. Everything is evaluated in the sigma^r-scaled form so no
// intermediate exceeds O(1). Block 0 absorbs the unit stub below position 1
// (weight sigma^-1 instead of sigma^-1 - 1) so the weights tile sigma^-r
// exactly; at delta = 0 the sum then equals the limit at every finite r, and
// for delta > 0 the finite-size defect stays purely geometric in the block
// pair count.
double scaled_block_census(const TwoRowCtx& ctx, double P, double delta, double r) {
    const double sigma = ctx.sigma;
    const double lsig = std::log(sigma);
    EntropyBundle e = entropies(ctx);
    auto block_h = [&](long K) { return e.H(K % 2 == 0 ? P + delta : P - delta); };
    auto block_f = [&](long K) { return K % 2 == 0 ? P + delta : P - delta; };

    // scaled weights of the full blocks up to exponent s (partial block of
    // fractional size gs at floor(s)), accumulated against `term`
    auto tile = [&](double s, auto&& term) {
        long j = static_cast<long>(std::floor(s));
        double gs = s - static_cast<double>(j);
        double acc = 0.0;
        for (long K = 0; K < j; ++K) {
            double w = K == 0 ? std::exp((s - 1) * lsig)
                              : std::exp((s - K - 1) * lsig) - std::exp((s - K) * lsig);
            acc += w * term(K);
        }
        // the partial block keeps the stub when it is block 0 itself
        acc += (j == 0 ? 1.0 : 1.0 - std::exp(gs * lsig)) * term(j);
        return acc;
    };

    double rows = tile(r, block_h);
    double freq = tile(r - 1.0, block_f);
    double cols = sigma * (freq * ctx.log_n0 + (1.0 - freq) * ctx.log_n1);
    return rows + cols;
}

namespace {

double y_tilde_closed(const TwoRowCtx& ctx, double P, double gamma, double delta) {
    const double sigma = ctx.sigma;
    EntropyBundle e = entropies(ctx);
    double HP = e.H(P);
    long fg = static_cast<long>(std::floor(gamma));
    double g = gamma - static_cast<double>(fg);
    double eps = fg % 2 == 0 ? 1.0 : -1.0;
    double d_pos = e.H(P + eps * delta) - HP;   // Delta(eps)
    double d_neg = e.H(P - eps * delta) - HP;   // Delta(-eps)
    double sg = std::exp(g * std::log(sigma));
    return HP + sigma * (P * ctx.log_n0 + (1.0 - P) * ctx.log_n1) +
           (1.0 - sg) * d_pos + sg / (1.0 + sigma) * (d_neg + sigma * d_pos) +
           sigma * eps * (2.0 * sg / (1.0 + sigma) - 1.0) * delta * (ctx.log_n0 - ctx.log_n1);
}

}  // namespace

double y_tilde(const TwoRowCtx& ctx, double alpha, double gamma, double delta, YMode mode,
               int k_terms) {
    if (gamma < 0.0 || gamma > 2.0) fail("gamma: must lie in [0,2]");
    double P = fixed_point_P(ctx, alpha);
    double dmax = std::min(P, 1.0 - P);
    if (delta < 0.0 || delta > dmax + 1e-12)
        fail("delta: must lie in [0, min(P, 1-P)] = [0, " + std::to_string(dmax) + "]");
    delta = std::min(delta, dmax);

    if (mode == YMode::closed) return y_tilde_closed(ctx, P, gamma, delta);

    if (k_terms < 10) fail("k_terms: numeric mode needs at least 10 block pairs");
    // The finite sum at r = gamma + 2k differs from the limit by D * sigma^2k
    // exactly (the deficit terms are all pure powers of sigma^r or sigma^{r-1}
    // and the block parity pattern repeats with period 2), so eliminating a
    // geometric term with ratio sigma^2 yields the limit to roundoff.
    double vk = scaled_block_census(ctx, P, delta, gamma + 2.0 * k_terms);
    double vk1 = scaled_block_census(ctx, P, delta, gamma + 2.0 * (k_terms - 1));
    double s2 = ctx.sigma * ctx.sigma;
    return (vk - s2 * vk1) / (1.0 - s2);
}

double Y_max_over_gamma(const TwoRowCtx& ctx, double alpha, double delta) {
    return Y_max_over_gamma_arg(ctx, alpha, delta).value;
}

GammaMax Y_max_over_gamma_arg(const TwoRowCtx& ctx, double alpha, double delta) {
    double P = fixed_point_P(ctx, alpha);
    double dmax = std::min(P, 1.0 - P);
    if (delta < 0.0 || delta > dmax + 1e-12) fail("delta: out of admissible range");
    delta = std::min(delta, dmax);
    auto f = [&](double g) { return y_tilde_closed(ctx, P, g, delta); };
    auto [gx, gv] = grid_golden_max(f, 0.0, 2.0, 2001, 1e-10);
    return GammaMax{gv, gx};
}

DeltaMax Y_max_over_delta(const TwoRowCtx& ctx, double alpha) {
    double P = fixed_point_P(ctx, alpha);
    double dmax = std::min(P, 1.0 - P);
    auto f = [&](double d) { return Y_max_over_gamma(ctx, alpha, std::min(d, dmax)); };
    if (dmax <= 0.0) {
        GammaMax gm = Y_max_over_gamma_arg(ctx, alpha, 0.0);
        return DeltaMax{gm.value, 0.0, gm.gamma};
    }
    auto [dx, dv] = grid_golden_max(f, 0.0, dmax, 2001, 1e-10);
    GammaMax gm = Y_max_over_gamma_arg(ctx, alpha, dx);
    return DeltaMax{std::max(dv, gm.value), dx, gm.gamma};
}

double single_level_bound(const TwoRowCtx& ctx, double alpha) {
    double P = fixed_point_P(ctx, alpha);
    EntropyBundle e = entropies(ctx);
    double c = (1.0 - ctx.sigma) / (1.0 + ctx.sigma);
    double dmax = std::min(P, 1.0 - P);
    auto f = [&](double d) {
        return ctx.sigma * e.CH(P + c * d) + (1.0 - ctx.sigma) * e.H(P - d);
    };
    if (dmax <= 0.0) return f(0.0) / ctx.log_m;
    auto [dx, dv] = grid_golden_max(f, -dmax, dmax, 2001, 1e-10);
    (void)dx;
    return dv / ctx.log_m;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::outside: return "outside";
        case Regime::generic: return "generic";
        case Regime::a_plus_one: return "a_plus_one";
        case Regime::a_minus_one_interior: return "a_minus_one_interior";
        case Regime::a_minus_one_endpoint: return "a_minus_one_endpoint";
        case Regime::degenerate_equal_rows: return "degenerate_equal_rows";
    }
    return "?";
}

SpectrumPoint packing_spectrum(const TwoRowCtx& ctx, double alpha, double regime_tol,
                               ForceRegime force) {
    if (!(regime_tol > 0.0)) fail("regime_tol: must be > 0");
    SpectrumPoint pt;
    pt.alpha = alpha;

    double a0 = alpha_of_beta(ctx, 0.0);
    double a1 = alpha_of_beta(ctx, 1.0);
    double am = std::min(a0, a1), aM = std::max(a0, a1);

    RatioA ra = ratio_A(ctx);
    enum class Branch { generic, collapsed, exceptional, equal_rows };
    Branch branch;
    switch (force) {
        case ForceRegime::generic: branch = Branch::generic; break;
        case ForceRegime::a_plus_one: branch = Branch::collapsed; break;
        case ForceRegime::a_minus_one: branch = Branch::exceptional; break;
        case ForceRegime::automatic:
        default:
            if (ra.kind == RatioA::Kind::trivial) branch = Branch::equal_rows;
            else if (ra.is_regular() && std::fabs(ra.value - 1.0) <= regime_tol)
                branch = Branch::collapsed;
            else if (ra.is_regular() && std::fabs(ra.value + 1.0) <= regime_tol)
                branch = Branch::exceptional;
            else branch = Branch::generic;
    }

    if (branch == Branch::equal_rows || branch == Branch::collapsed) {
        // spectrum is a single point carrying the attractor's Hausdorff dim
        double astar = alpha_of_beta(ctx, beta_star(ctx));
        if (std::fabs(alpha - astar) > 1e-9) {
            pt.regime = Regime::outside;
            return pt;
        }
        double d = dim_of_beta(ctx, beta_star(ctx));
        pt.dim_h = d;
        pt.dim_p = d;
        pt.P = beta_star(ctx);
        pt.regime = branch == Branch::equal_rows ? Regime::degenerate_equal_rows
                                                 : Regime::a_plus_one;
        return pt;
    }

    if (alpha < am - 1e-12 || alpha > aM + 1e-12) {
        pt.regime = Regime::outside;
        return pt;
    }
    double P = fixed_point_P(ctx, alpha);
    pt.P = P;
    double dh = dim_of_beta(ctx, P);
    pt.dim_h = dh;

    if (branch == Branch::generic) {
        pt.dim_p = dh;
        pt.regime = Regime::generic;
        return pt;
    }

    // exceptional A = -1 branch
    if (std::min(P, 1.0 - P) <= 1e-12) {
        pt.dim_p = dh;
        pt.regime = Regime::a_minus_one_endpoint;
        return pt;
    }
    DeltaMax dm = Y_max_over_delta(ctx, alpha);
    pt.dim_p = std::max(dh, dm.value / ctx.log_m);
    pt.regime = Regime::a_minus_one_interior;
    return pt;
}

SpectrumCurve spectrum_curve_serial(const TwoRowCtx& ctx, const std::vector<double>& alpha_grid,
                                    double regime_tol, ForceRegime force) {
    if (alpha_grid.empty()) fail("alpha_grid: must be non-empty");
    SpectrumCurve curve(alpha_grid.size());
    for (std::size_t k = 0; k < alpha_grid.size(); ++k)
        curve[k] = packing_spectrum(ctx, alpha_grid[k], regime_tol, force);
    return curve;
}

SpectrumCurve spectrum_curve(const TwoRowCtx& ctx, const std::vector<double>& alpha_grid,
                             double regime_tol, ForceRegime force) {
    if (alpha_grid.empty()) fail("alpha_grid: must be non-empty");
    SpectrumCurve curve(alpha_grid.size());
    long count = static_cast<long>(alpha_grid.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long k = 0; k < count; ++k) {
        std::size_t u = static_cast<std::size_t>(k);
        curve[u] = packing_spectrum(ctx, alpha_grid[u], regime_tol, force);
    }
    return curve;
}

}  // namespace carpets
