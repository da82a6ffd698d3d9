#include "trigspline/harness.hpp"

#include <cmath>
#include <stdexcept>

#include "trigspline/grid.hpp"

namespace trigspline {

namespace {

// Weights of the one-sided second-order-accurate estimate of f^(o)(x) from
// samples f(x + offs[i]*h): solve sum_i w_i * offs[i]^p = o! * delta_{p,o}.
// Order 0 uses offsets {1, 2} so a value jump at x itself is detectable.
struct Stencil {
    std::vector<int> offsets;
    std::vector<double> weights;
};

Stencil one_sided_stencil(int order) {
    std::vector<int> offs;
    if (order == 0) {
        offs = {1, 2};
    } else {
        for (int i = 0; i <= order + 1; ++i) offs.push_back(i);
    }
    const std::size_t m = offs.size();

    // small Vandermonde system, Gaussian elimination with partial pivoting
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < m; ++i)
            a[p][i] = std::pow(static_cast<double>(offs[i]), static_cast<double>(p));
    double fact = 1.0;
    for (int i = 2; i <= order; ++i) fact *= i;
    a[static_cast<std::size_t>(order == 0 ? 0 : order)][m] = order == 0 ? 1.0 : fact;

    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t row = col + 1; row < m; ++row)
            if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
        std::swap(a[col], a[piv]);
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0.0) continue;
            const double w = a[row][col] / a[col][col];
            for (std::size_t c = col; c <= m; ++c) a[row][c] -= w * a[col][c];
        }
    }
    Stencil s;
    s.offsets = offs;
    s.weights.resize(m);
    for (std::size_t i = 0; i < m; ++i) s.weights[i] = a[i][m] / a[i][i];
    return s;
}

}  // namespace

ErrorReport sup_distance(const Evaluable& f, const Evaluable& g, int samples) {
    if (samples < 2) throw std::invalid_argument("sup_distance: samples must be >= 2");
    ErrorReport rep;
    rep.sample_count = samples;
    double sq = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = two_pi * i / samples;
        const double d = std::abs(f(t) - g(t));
        sq += d * d;
        if (d > rep.sup_error) {
            rep.sup_error = d;
            rep.argmax_t = t;
        }
    }
    rep.l2_error = std::sqrt(sq / samples);
    return rep;
}

double convergence_order(const std::vector<std::pair<double, double>>& errors) {
    if (errors.size() < 3)
        throw std::invalid_argument("convergence_order: need at least 3 points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double prev_m = 0.0;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        const auto& [m, e] = errors[i];
        if (i > 0 && !(m > prev_m))
            throw std::invalid_argument("convergence_order: M must be strictly increasing");
        prev_m = m;
        if (!(e > 0.0))
            throw std::invalid_argument("convergence_order: errors must be positive");
        const double x = std::log(m), y = std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double npts = static_cast<double>(errors.size());
    const double slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
    return -slope;
}

std::vector<double> smoothness_profile(const Evaluable& f, const std::vector<double>& knots,
                                       int max_order, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("smoothness_profile: h must be positive");
    if (max_order < 0 || max_order > 6)
        throw std::invalid_argument("smoothness_profile: max_order must be in 0..6");

    std::vector<double> jumps(max_order + 1, 0.0);
    for (int o = 0; o <= max_order; ++o) {
        const Stencil st = one_sided_stencil(o);
        const double ho = frequency_power_placeholder_unused(0);  // removed below
        (void)ho;
    }
    // (loop rewritten without the placeholder)
    for (int o = 0; o <= max_order; ++o) {
        const Stencil st = one_sided_stencil(o);
        double scale = 1.0;
        for (int i = 0; i < o; ++i) scale *= h;
        const double back_sign = o % 2 == 0 ? 1.0 : -1.0;
        for (double x : knots) {
            double fwd = 0.0, bwd = 0.0;
            for (std::size_t i = 0; i < st.offsets.size(); ++i) {
                fwd += st.weights[i] * f(x + st.offsets[i] * h);
                bwd += st.weights[i] * f(x - st.offsets[i] * h);
            }
            const double jump = std::abs(fwd / scale - back_sign * bwd / scale);
            if (jump > jumps[o]) jumps[o] = jump;
        }
    }
    return jumps;
}

}  // namespace trigspline
