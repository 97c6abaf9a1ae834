// Command-line front end: spectrum curves, parameter scans, condition
// reports, seeded sampling, attractor rendering and the verification suites.

#include <clocale>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "carpets/carpet.hpp"
#include "carpets/config.hpp"
#include "carpets/counting.hpp"
#include "carpets/io.hpp"
#include "carpets/render.hpp"
#include "carpets/sampling.hpp"
#include "carpets/spectra.hpp"
#include "carpets/symbolic.hpp"
#include "carpets/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace carpets;

struct CommonOpts {
    std::string config_path;
    std::uint64_t seed = 7;
    int threads = 0;
    double tol_regime = 1e-9;
    std::string force_regime = "auto";
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool config_required) {
    auto* c = cmd->add_option("--config", opts->config_path, "run configuration file");
    if (config_required) c->required();
    cmd->add_option("--seed", opts->seed, "64-bit RNG seed")->capture_default_str();
    cmd->add_option("--threads", opts->threads, "worker threads (0 = auto)")
        ->capture_default_str();
    cmd->add_option("--tol-regime", opts->tol_regime,
                    "tolerance for classifying |A| = 1 regimes")
        ->capture_default_str();
    cmd->add_option("--force-regime", opts->force_regime, "regime override")
        ->check(CLI::IsMember({"auto", "generic", "a-minus-one", "a-plus-one"}))
        ->capture_default_str();
}

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

ForceRegime parse_force(const std::string& s) {
    if (s == "generic") return ForceRegime::generic;
    if (s == "a-minus-one") return ForceRegime::a_minus_one;
    if (s == "a-plus-one") return ForceRegime::a_plus_one;
    return ForceRegime::automatic;
}

std::string opt_field(const std::optional<double>& v) {
    return v ? io::format_g12(*v) : std::string{};
}

int cmd_spectrum(const CommonOpts& opts, int alpha_steps, const std::string& out,
                 const std::string& svg) {
    apply_threads(opts.threads);
    RunConfig rc = load_config(opts.config_path);
    TwoRowCtx ctx = rc.ctx();
    io::check_writable(out);
    if (!svg.empty()) io::check_writable(svg);

    double a0 = alpha_of_beta(ctx, 0.0), a1 = alpha_of_beta(ctx, 1.0);
    double am = std::min(a0, a1), aM = std::max(a0, a1);
    std::vector<double> grid;
    for (int k = 0; k < alpha_steps; ++k)
        grid.push_back(alpha_steps == 1 ? am : am + (aM - am) * k / (alpha_steps - 1));

    SpectrumCurve curve = spectrum_curve(ctx, grid, opts.tol_regime,
                                         parse_force(opts.force_regime));

    io::Csv csv;
    csv.header = {"alpha", "dim_H", "dim_P", "P", "regime"};
    for (const SpectrumPoint& pt : curve)
        csv.rows.push_back({io::format_g12(pt.alpha), opt_field(pt.dim_h), opt_field(pt.dim_p),
                            opt_field(pt.P), to_string(pt.regime)});
    io::write_csv(out, csv);

    if (!svg.empty()) {
        io::SvgSeries sh{"dim_H", {}}, sp{"dim_P", {}};
        for (const SpectrumPoint& pt : curve) {
            if (pt.dim_h) sh.points.push_back({pt.alpha, *pt.dim_h});
            if (pt.dim_p) sp.points.push_back({pt.alpha, *pt.dim_p});
        }
        io::write_svg_curves(svg, "local dimension spectra", "alpha", "dimension", {sh, sp});
    }
    return 0;
}

int cmd_scan_q0(const CommonOpts& opts, double alpha, double q0_min, double q0_max, int steps,
                const std::string& out) {
    apply_threads(opts.threads);
    RunConfig rc = load_config(opts.config_path);
    if (!rc.has_two_row()) throw std::invalid_argument("config: scan-q0 needs a two-row measure");
    io::check_writable(out);
    const TwoRowMeasure& base = *rc.two_row;
    if (!(q0_min > 0.0 && q0_max < 1.0 && q0_min < q0_max))
        throw std::invalid_argument("scan-q0: need 0 < q0-min < q0-max < 1");

    std::vector<SpectrumPoint> pts(static_cast<std::size_t>(steps));
    std::vector<double> avals(static_cast<std::size_t>(steps));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int k = 0; k < steps; ++k) {
        double q0 = steps == 1 ? q0_min : q0_min + (q0_max - q0_min) * k / (steps - 1);
        TwoRowCtx ctx = make_two_row_ctx(make_two_row(base.n0, base.n1, q0), *rc.carpet);
        RatioA ra = ratio_A(ctx);
        avals[static_cast<std::size_t>(k)] =
            ra.is_regular() ? ra.value : std::numeric_limits<double>::quiet_NaN();
        pts[static_cast<std::size_t>(k)] =
            packing_spectrum(ctx, alpha, opts.tol_regime, parse_force(opts.force_regime));
    }

    io::Csv csv;
    csv.header = {"q0", "A", "alpha", "dim_H", "dim_P", "gap", "regime"};
    for (int k = 0; k < steps; ++k) {
        double q0 = steps == 1 ? q0_min : q0_min + (q0_max - q0_min) * k / (steps - 1);
        const SpectrumPoint& pt = pts[static_cast<std::size_t>(k)];
        std::string gap;
        if (pt.dim_h && pt.dim_p) gap = io::format_g12(*pt.dim_p - *pt.dim_h);
        csv.rows.push_back({io::format_g12(q0), io::format_g12(avals[static_cast<std::size_t>(k)]),
                            io::format_g12(pt.alpha), opt_field(pt.dim_h), opt_field(pt.dim_p),
                            gap, to_string(pt.regime)});
    }
    io::write_csv(out, csv);
    return 0;
}

int cmd_conditions(const CommonOpts& opts, double tol, const std::string& out) {
    RunConfig rc = load_config(opts.config_path);
    if (!out.empty()) io::check_writable(out);
    SpectrumReachReport rep = classify_spectrum_reach(*rc.carpet, rc.weights, tol);
    auto [am, aM] = alpha_range(*rc.carpet, rc.weights);

    std::printf("necessary condition:  %s\n", rep.necessary_holds ? "holds" : "fails");
    std::printf("sufficient condition: %s\n", rep.sufficient_holds ? "holds" : "fails");
    std::printf("classification:       %s\n", to_string(rep.classification).c_str());
    if (rep.alpha0) std::printf("alpha0:               %s\n", io::format_g12(*rep.alpha0).c_str());
    std::printf("alpha range:          [%s, %s]\n", io::format_g12(am).c_str(),
                io::format_g12(aM).c_str());
    std::printf("dim_H attractor:      %s\n", io::format_g12(rc.profile.dim_hausdorff).c_str());
    std::printf("dim_B = dim_P:        %s\n", io::format_g12(rc.profile.dim_box_packing).c_str());

    if (!out.empty()) {
        io::Csv csv;
        csv.header = {"necessary_holds", "sufficient_holds", "classification", "common_value_A",
                      "common_value_B", "alpha0"};
        csv.rows.push_back({rep.necessary_holds ? "1" : "0", rep.sufficient_holds ? "1" : "0",
                            to_string(rep.classification), opt_field(rep.common_value_A),
                            opt_field(rep.common_value_B), opt_field(rep.alpha0)});
        io::write_csv(out, csv);
    }
    return 0;
}

int cmd_sample(const CommonOpts& opts, long length, int streams, const std::string& emit,
               const std::string& out) {
    apply_threads(opts.threads);
    RunConfig rc = load_config(opts.config_path);
    io::check_writable(out);

    io::Csv csv;
    if (emit == "digits") {
        csv.header = {"stream", "k", "i", "j"};
        for (int sid = 0; sid < streams; ++sid) {
            DigitString str = sample_bernoulli_digits(
                rc.carpet, rc.weights, length, {opts.seed, static_cast<std::uint64_t>(sid)});
            for (long k = 1; k <= str.length(); ++k)
                csv.rows.push_back({std::to_string(sid), std::to_string(k),
                                    std::to_string(str.at(k).i), std::to_string(str.at(k).j)});
        }
    } else {
        csv.header = {"stream", "x", "y"};
        for (int sid = 0; sid < streams; ++sid) {
            DigitString str = sample_bernoulli_digits(
                rc.carpet, rc.weights, length, {opts.seed, static_cast<std::uint64_t>(sid)});
            auto [x, y] = digits_to_point(str);
            csv.rows.push_back({std::to_string(sid), io::format_g12(x), io::format_g12(y)});
        }
    }
    io::write_csv(out, csv);
    return 0;
}

int cmd_render(const CommonOpts& opts, int size, const std::string& out) {
    RunConfig rc = load_config(opts.config_path);
    io::check_writable(out);
    io::write_pgm(out, render_attractor(*rc.carpet, size));
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite) {
    apply_threads(opts.threads);
    if (!opts.config_path.empty()) load_config(opts.config_path);  // validate only

    std::vector<verify::CheckResult> results;
    if (suite == "identities") results = verify::run_identities(opts.seed);
    else if (suite == "counting") results = verify::run_counting(opts.seed);
    else if (suite == "montecarlo") results = verify::run_montecarlo(opts.seed);
    else results = verify::run_all(opts.seed);

    for (const auto& c : results)
        std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
    return verify::all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"local-dimension spectra for Bernoulli measures on Bedford-McMullen carpets"};
    app.require_subcommand(1);

    CommonOpts spectrum_opts;
    int alpha_steps = 101;
    std::string spectrum_out, spectrum_svg;
    CLI::App* spectrum = app.add_subcommand("spectrum", "Hausdorff/packing spectrum over alpha");
    add_common(spectrum, &spectrum_opts, true);
    spectrum->add_option("--alpha-steps", alpha_steps, "grid size")->capture_default_str();
    spectrum->add_option("--out", spectrum_out, "output CSV")->required();
    spectrum->add_option("--svg", spectrum_svg, "optional SVG plot");

    CommonOpts scan_opts;
    double scan_alpha = 1.0, q0_min = 0.3, q0_max = 0.5;
    int scan_steps = 201;
    std::string scan_out;
    CLI::App* scan = app.add_subcommand("scan-q0", "packing spectrum as a function of q0");
    add_common(scan, &scan_opts, true);
    scan->add_option("--alpha", scan_alpha, "exponent to evaluate at")->required();
    scan->add_option("--q0-min", q0_min)->required();
    scan->add_option("--q0-max", q0_max)->required();
    scan->add_option("--steps", scan_steps)->capture_default_str();
    scan->add_option("--out", scan_out, "output CSV")->required();

    CommonOpts cond_opts;
    double cond_tol = 1e-9;
    std::string cond_out;
    CLI::App* cond = app.add_subcommand("conditions", "full-spectrum condition report");
    add_common(cond, &cond_opts, true);
    cond->add_option("--tol", cond_tol, "equality tolerance")->capture_default_str();
    cond->add_option("--out", cond_out, "optional CSV output");

    CommonOpts sample_opts;
    long sample_length = 1000;
    int sample_streams = 1;
    std::string sample_emit = "digits", sample_out;
    CLI::App* sample = app.add_subcommand("sample", "emit seeded digit strings or points");
    add_common(sample, &sample_opts, true);
    sample->add_option("--length", sample_length)->capture_default_str();
    sample->add_option("--streams", sample_streams)->capture_default_str();
    sample->add_option("--emit", sample_emit, "digits or points")
        ->check(CLI::IsMember({"digits", "points"}))
        ->capture_default_str();
    sample->add_option("--out", sample_out, "output CSV")->required();

    CommonOpts render_opts;
    int render_size = 512;
    std::string render_out;
    CLI::App* render = app.add_subcommand("render", "raster the attractor to a PGM");
    add_common(render, &render_opts, true);
    render->add_option("--size", render_size, "image side in pixels")->capture_default_str();
    render->add_option("--out", render_out, "output PGM")->required();

    CommonOpts verify_opts;
    std::string verify_suite = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    add_common(verify_cmd, &verify_opts, false);
    verify_cmd->add_option("--suite", verify_suite, "identities, counting, montecarlo or all")
        ->check(CLI::IsMember({"identities", "counting", "montecarlo", "all"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed())
            return cmd_spectrum(spectrum_opts, alpha_steps, spectrum_out, spectrum_svg);
        if (scan->parsed())
            return cmd_scan_q0(scan_opts, scan_alpha, q0_min, q0_max, scan_steps, scan_out);
        if (cond->parsed()) return cmd_conditions(cond_opts, cond_tol, cond_out);
        if (sample->parsed())
            return cmd_sample(sample_opts, sample_length, sample_streams, sample_emit,
                              sample_out);
        if (render->parsed()) return cmd_render(render_opts, render_size, render_out);
        if (verify_cmd->parsed()) return cmd_verify(verify_opts, verify_suite);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
