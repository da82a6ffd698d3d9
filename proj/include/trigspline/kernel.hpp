#ifndef TRIGSPLINE_KERNEL_HPP
#define TRIGSPLINE_KERNEL_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace trigspline {

enum class Harmonic { cosine, sine };

// Gamma scales the cosine blocks, eta the sine blocks.  The construction is
// the plain trigonometric interpolation polynomial when all of
// gamma[1], gamma[2], eta[1], eta[2] vanish.
struct ParamVectors {
    std::array<double, 3> gamma{1.0, 1.0, 1.0};
    std::array<double, 3> eta{1.0, 1.0, 1.0};
};

// Controls how many folding blocks m = 1..M of the infinite series are kept.
struct TruncationPolicy {
    double eps_tail = 1e-10;  // relative tail tolerance
    int M_min = 1;
    int M_max = 1000000;
};

// One frequency of a folded spectrum:
//   p * cos(j t + pi q / 2) + q_amp * sin(j t + pi q / 2).
// j is never a multiple of N (frequencies are k, mN-k, mN+k with 1 <= k <= n).
struct FrequencyTerm {
    std::int64_t j = 0;
    double p = 0.0;
    double q_amp = 0.0;
};

struct TruncationChoice {
    int M = 1;
    bool truncated = false;  // true when M_max was hit before the tail bound
};

// nu_k(r) = [sin(pi k / N) / k]^(1+r); exactly 0 when k is a multiple of N.
// |nu_k(r)| <= k^-(1+r).
double convergence_factor(std::int64_t k, int r, int N);

// j^q: repeated multiplication for integer q, exp(q log j) otherwise.
double frequency_power(std::int64_t j, double q);

// Interpolation factor partial sum with m = 1..M:
//   hc_k = g1 nu_k + sum_m (-1)^{m(I1-I2)} [g3 nu_{mN+k} + g2 nu_{mN-k}]
// (gamma for the cosine kind, eta for the sine kind). abs_scale accumulates
// the absolute values of all summed terms; the spline module compares the
// factor against it to detect degenerate parameter vectors.
struct FactorParts {
    double value = 0.0;
    double abs_scale = 0.0;
};

FactorParts interp_factor_parts(Harmonic kind, int k, int stitch_grid, int interp_grid,
                                const ParamVectors& vectors, int r, int N, int M);

double interp_factor(Harmonic kind, int k, int stitch_grid, int interp_grid,
                     const ParamVectors& vectors, int r, int N, int M);

// Folded frequency terms of one harmonic block, frequencies emitted in the
// order k, then mN-k, mN+k for m = 1..M:
//   C_k = g1 nu_k k^q cos(kt + pi q/2)
//       + sum_m (-1)^{m I1} [g3 nu_{mN+k} (mN+k)^q cos((mN+k)t + pi q/2)
//                          + g2 nu_{mN-k} (mN-k)^q cos((mN-k)t + pi q/2)]
// and S_k likewise with eta and sin, except the eta[1] (mN-k) amplitude is
// negated. Zero amplitudes are dropped.
std::vector<FrequencyTerm> fold_block(Harmonic kind, int k, int stitch_grid,
                                      const ParamVectors& vectors, int r, double q,
                                      int N, int M);

// Smallest M in [M_min, M_max] with (M*N + 1 - n)^(q-1-r) * scale <= eps_tail,
// n = (N-1)/2; returns M_max with truncated = true when the bound cannot be
// met. Requires q < r, otherwise the series tail no longer decays.
TruncationChoice choose_truncation(int r, double q, int N, const TruncationPolicy& policy,
                                   double scale);

}  // namespace trigspline

#endif
