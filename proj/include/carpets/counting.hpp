#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "carpets/carpet.hpp"
#include "carpets/spectra.hpp"

// Exact combinatorial oracles: the approximate-square census with measure
// exponent filtering, block-constrained census counts, and the bounded-range
// word-count DP. Binomials run through log-gamma in the log-domain paths and
// through arbitrary-precision integers in the exact paths.

namespace carpets {

using BigInt = boost::multiprecision::cpp_int;

// log of the binomial coefficient C(n, k) via log-gamma.
double log_choose(long n, long k);

struct CountWindow {
    long N = 0;         // census depth, 1 <= N <= 1e6
    double alpha = 0.0;  // window center
    double epsilon = 0.0;  // window half-width, > 0
};

// Natural log of the number of level-N approximate squares whose measure
// exponent lies in [alpha - eps, alpha + eps]. Classes are indexed by
// (a, b) = (#row-0 among the first ceil(sigma N) symbols, #row-0 among the
// rest); each class holds C(S,a) n0^a n1^(S-a) C(T,b) squares of equal
// exponent. Returns -inf when the window misses every class.
double coarse_square_count(const TwoRowCtx& ctx, const CarpetSpec& carpet,
                           const CountWindow& window);

// Serial reference for the parallel census kernel.
double coarse_square_count_serial(const TwoRowCtx& ctx, const CarpetSpec& carpet,
                                  const CountWindow& window);

struct BlockTarget {
    double freq = 0.0;  // row-0 target of the block
    long len = 0;       // integer block length after cumulative rounding
};

struct BlockCensus {
    double r = 0.0;
    std::vector<BlockTarget> blocks;  // lengths tile ceil(sigma^-r) exactly
    double log_count = 0.0;
};

enum class ZVariant { entropy, exact };

// Block-constrained census at depth exponent r >= 1 with row-0 frequency
// targets P +- delta alternating per block (P from fixed_point_P(alpha)).
//   entropy: idealized real-length formula, log_count = sigma^-r *
//            scaled_block_census(...).
//   exact:   integer tiling; per block C(len, k) row words with
//            k = round(target*len) (ties toward P), column factors n_i per
//            position in the first ceil(sigma * depth) slots. The block
//            straddling the column boundary sums over the split of its
//            row-0 symbols.
BlockCensus log_Z_r(const TwoRowCtx& ctx, const CarpetSpec& carpet, double alpha, double delta,
                    double r, ZVariant variant);

// Exact count of binary words w of length M whose drift-adjusted walk
// S_k = #{0s among first k} - P k satisfies sup_{a<b} |S_b - S_a| < K0.
// P = num/den with a small denominator; the DP runs on the lattice (1/den)Z
// over states (S - min, max - min), counts in arbitrary precision.
BigInt bounded_range_word_count(long M, long num, long den, long K0);

// log of the same count in doubles with periodic renormalization; usable at
// M = 1e4 where the exact integers get slow.
double bounded_range_log_count(long M, long num, long den, long K0);

}  // namespace carpets
