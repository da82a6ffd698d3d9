#include "trigspline/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trigspline {

double reduce_angle(double t) {
    double u = t - two_pi * std::floor(t / two_pi);
    if (u >= two_pi) u -= two_pi;  // floor rounding can land exactly on 2*pi
    if (u < 0.0) u = 0.0;
    return u;
}

Grid build_grid(int N, int indicator) {
    if (N < 3 || N % 2 == 0)
        throw std::invalid_argument("grid: N must be an odd integer >= 3 (N = 2n+1), got " +
                                    std::to_string(N));
    if (indicator != 0 && indicator != 1)
        throw std::invalid_argument("grid: indicator must be 0 or 1, got " +
                                    std::to_string(indicator));
    Grid g;
    g.N = N;
    g.indicator = indicator;
    g.nodes.resize(N);
    for (int i = 0; i < N; ++i)
        g.nodes[i] = indicator == 0 ? two_pi * i / N : pi * (2 * i + 1) / N;
    return g;
}

TrigCoefficients trig_coefficients(const std::vector<double>& values, const Grid& grid) {
    if (static_cast<int>(values.size()) != grid.N)
        throw std::invalid_argument("trig_coefficients: got " + std::to_string(values.size()) +
                                    " values for a grid with N = " + std::to_string(grid.N));
    const int N = grid.N;
    const int n = (N - 1) / 2;

    TrigCoefficients c;
    c.N = N;
    c.grid_indicator = grid.indicator;
    c.a.assign(n, 0.0);
    c.b.assign(n, 0.0);

    double sum = 0.0;
    for (double y : values) sum += y;
    c.a0 = 2.0 * sum / N;

    for (int k = 1; k <= n; ++k) {
        double sc = 0.0, ss = 0.0;
        for (int i = 0; i < N; ++i) {
            sc += values[i] * std::cos(k * grid.nodes[i]);
            ss += values[i] * std::sin(k * grid.nodes[i]);
        }
        c.a[k - 1] = 2.0 * sc / N;
        c.b[k - 1] = 2.0 * ss / N;
    }
    return c;
}

double eval_trig_poly(const TrigCoefficients& coeffs, double t) {
    const double tau = reduce_angle(t);
    double acc = coeffs.a0 / 2.0;
    const int n = coeffs.harmonic_count();
    for (int k = 1; k <= n; ++k)
        acc += coeffs.a[k - 1] * std::cos(k * tau) + coeffs.b[k - 1] * std::sin(k * tau);
    return acc;
}

}  // namespace trigspline
