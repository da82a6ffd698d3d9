#ifndef TRIGSPLINE_SPLINE_HPP
#define TRIGSPLINE_SPLINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "trigspline/grid.hpp"
#include "trigspline/kernel.hpp"

namespace trigspline {

struct SplineConfig {
    int N = 9;            // node count, odd >= 3
    int stitch_grid = 0;  // indicator of the grid the blocks fold against (I1)
    int interp_grid = 0;  // indicator of the grid carrying the data (I2)
    ParamVectors vectors;
    int r = 1;            // spline order, >= 1
    double q = 0.0;       // differintegration order, q < r (fractional allowed)
    TruncationPolicy policy;
    std::optional<std::pair<double, double>> domain;  // source interval [a, b], b > a
};

// Immutable folded finite spectrum. Evaluation:
//   constant + sum_terms [p cos(j tau + pi q/2) + q_amp sin(j tau + pi q/2)],
// tau = t mapped from the domain (if any) and reduced mod 2*pi.
// Spectrum frequencies are strictly ascending, max j <= M_used*N + (N-1)/2.
// constant is 0 whenever q != 0.
struct TrigSpline {
    SplineConfig config;
    double constant = 0.0;
    std::vector<FrequencyTerm> spectrum;
    int M_used = 1;
    bool truncated = false;
    // Source coefficients on the interp grid; empty (N == 0) for splines
    // loaded from a document, which cannot be differintegrated.
    TrigCoefficients source;
    double data_scale = 1.0;  // max(1, max|y|)
};

// Assemble the spline from N samples. The same M is used for the folded
// blocks and the interpolation factors, which makes interpolation at the
// interp-grid nodes exact at any M. Throws std::invalid_argument on invalid
// config, mismatched value count, or near-zero hc_k/hs_k facing a nonzero
// coefficient ("ill-posed parameter vectors").
TrigSpline build_spline(const SplineConfig& config, const std::vector<double>& values);

double evaluate(const TrigSpline& spline, double t);

// Elementwise evaluate; identical to scalar calls bit for bit.
std::vector<double> evaluate_many(const TrigSpline& spline, const std::vector<double>& ts);

// Apply an additional Weyl differintegration of order delta_q: amplitudes at
// frequency j scale by j^delta_q and phases advance by pi*delta_q/2. The
// result is rebuilt from the retained source coefficients at the same M_used,
// so repeated calls do not accumulate rounding. The constant term survives
// only if the chain never left q = 0. Requires q + delta_q < r.
TrigSpline differintegrate(const TrigSpline& spline, double delta_q);

const std::vector<FrequencyTerm>& spectrum(const TrigSpline& spline);

// Affine map of x in [a, b] onto [0, 2*pi]: map(a) = 0, map(b) = 2*pi.
double map_domain(double a, double b, double x);

}  // namespace trigspline

#endif
