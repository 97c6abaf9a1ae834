// Timing harness comparing the OpenMP kernels against their serial
// reference implementations. Not part of the test suite; build and run
// manually (`carpets-bench [threads]`).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>

#include "carpets/carpet.hpp"
#include "carpets/counting.hpp"
#include "carpets/sampling.hpp"
#include "carpets/spectra.hpp"
#include "carpets/symbolic.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace carpets;

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

void report(const char* name, double serial_s, double parallel_s, bool match) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, serial_s,
                parallel_s, serial_s / parallel_s, match ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (argc > 1) omp_set_num_threads(std::atoi(argv[1]));
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    (void)argc;
    (void)argv;
    std::printf("built without OpenMP; parallel paths run serially\n");
#endif

    auto carpet = std::make_shared<CarpetSpec>(two_row_carpet(2, 3, 2, 1));
    TwoRowMeasure tr = make_two_row(2, 1, exceptional_q0(2, 1, carpet->sigma));
    TwoRowCtx ctx = make_two_row_ctx(tr, *carpet);
    BernoulliWeights weights = two_row_weights(*carpet, tr);

    {
        CountWindow w{4000, 1.0, 0.02};
        double t0 = now();
        double serial = 0;
        for (int r = 0; r < 5; ++r) serial = coarse_square_count_serial(ctx, *carpet, w);
        double t1 = now();
        double parallel = 0;
        for (int r = 0; r < 5; ++r) parallel = coarse_square_count(ctx, *carpet, w);
        double t2 = now();
        report("census N=4000 (x5)", t1 - t0, t2 - t1, serial == parallel);
    }

    {
        double a0 = alpha_of_beta(ctx, 0.0), a1 = alpha_of_beta(ctx, 1.0);
        double am = std::min(a0, a1), aM = std::max(a0, a1);
        std::vector<double> grid;
        for (int k = 0; k < 17; ++k) grid.push_back(am + (aM - am) * (k + 1) / 18.0);
        // pin one thread for the reference run: the inner grid kernels would
        // otherwise parallelize and mask the comparison
#ifdef _OPENMP
        int saved = omp_get_max_threads();
        omp_set_num_threads(1);
#endif
        double t0 = now();
        SpectrumCurve cs = spectrum_curve_serial(ctx, grid);
        double t1 = now();
#ifdef _OPENMP
        omp_set_num_threads(saved);
#endif
        SpectrumCurve cp = spectrum_curve(ctx, grid);
        double t2 = now();
        bool match = true;
        for (std::size_t k = 0; k < cs.size(); ++k)
            match = match && cs[k].dim_p == cp[k].dim_p && cs[k].dim_h == cp[k].dim_h;
        report("spectrum curve (17 pts)", t1 - t0, t2 - t1, match);
    }

    {
        const long N = 1000000;
        const int seeds = 16;
        std::vector<double> ds(seeds), dp(seeds);
        double t0 = now();
        for (int id = 0; id < seeds; ++id) {
            DigitString s = sample_bernoulli_digits(carpet, weights, N,
                                                    {7, static_cast<std::uint64_t>(id)});
            ds[static_cast<std::size_t>(id)] = symbolic_dim_at_depth(*carpet, weights, s, N);
        }
        double t1 = now();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int id = 0; id < seeds; ++id) {
            DigitString s = sample_bernoulli_digits(carpet, weights, N,
                                                    {7, static_cast<std::uint64_t>(id)});
            dp[static_cast<std::size_t>(id)] = symbolic_dim_at_depth(*carpet, weights, s, N);
        }
        double t2 = now();
        report("sampling 16 x 1e6 digits", t1 - t0, t2 - t1, ds == dp);
    }

    return 0;
}
