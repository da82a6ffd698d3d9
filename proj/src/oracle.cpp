#include "trigspline/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace trigspline {

namespace {

// Plain Thomas elimination; diag is consumed.
std::vector<double> solve_tridiagonal(std::vector<double> diag, const std::vector<double>& sub,
                                      const std::vector<double>& sup, std::vector<double> x) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        if (diag[i - 1] == 0.0) throw std::runtime_error("cyclic solver: zero pivot");
        const double w = sub[i - 1] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        x[i] -= w * x[i - 1];
    }
    if (diag[n - 1] == 0.0) throw std::runtime_error("cyclic solver: zero pivot");
    x[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (x[i] - sup[i] * x[i + 1]) / diag[i];
    return x;
}

void check_values(const std::vector<double>& values, const Grid& grid) {
    if (static_cast<int>(values.size()) != grid.N)
        throw std::invalid_argument("oracle: got " + std::to_string(values.size()) +
                                    " values for a grid with N = " + std::to_string(grid.N));
}

}  // namespace

std::vector<double> solve_cyclic_tridiagonal(const std::vector<double>& diag,
                                             const std::vector<double>& sub,
                                             const std::vector<double>& sup,
                                             double corner_lo, double corner_hi,
                                             const std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    if (n < 3) throw std::invalid_argument("cyclic solver: size must be >= 3");
    if (sub.size() != n - 1 || sup.size() != n - 1 || rhs.size() != n)
        throw std::invalid_argument("cyclic solver: inconsistent band sizes");

    if (corner_lo == 0.0 && corner_hi == 0.0)
        return solve_tridiagonal(diag, sub, sup, rhs);

    // Sherman-Morrison: A = A' + u v^T with u = (gamma, 0,.., corner_lo),
    // v = (1, 0,.., corner_hi/gamma).
    const double gamma = -diag[0];
    if (gamma == 0.0) throw std::runtime_error("cyclic solver: zero pivot");

    std::vector<double> d = diag;
    d[0] = diag[0] - gamma;
    d[n - 1] = diag[n - 1] - corner_lo * corner_hi / gamma;

    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = corner_lo;

    const std::vector<double> y = solve_tridiagonal(d, sub, sup, rhs);
    const std::vector<double> z = solve_tridiagonal(d, sub, sup, u);

    const double vy = y[0] + corner_hi / gamma * y[n - 1];
    const double vz = z[0] + corner_hi / gamma * z[n - 1];
    const double denom = 1.0 + vz;
    if (denom == 0.0) throw std::runtime_error("cyclic solver: singular correction");

    std::vector<double> x(n);
    const double factor = vy / denom;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] - factor * z[i];
    return x;
}

PiecewisePoly linear_periodic(const std::vector<double>& values, const Grid& grid) {
    check_values(values, grid);
    const int N = grid.N;
    const double h = two_pi / N;

    PiecewisePoly pp;
    pp.breakpoints = grid.nodes;
    pp.coeffs.resize(N);
    for (int i = 0; i < N; ++i) {
        const double y1 = values[i];
        const double y2 = values[(i + 1) % N];
        pp.coeffs[i] = {y1, (y2 - y1) / h, 0.0, 0.0};
    }
    return pp;
}

PiecewisePoly cubic_periodic(const std::vector<double>& values, const Grid& grid) {
    check_values(values, grid);
    const int N = grid.N;
    const double h = two_pi / N;

    std::vector<double> diag(N, 2.0 * h / 3.0);
    std::vector<double> sub(N - 1, h / 6.0);
    std::vector<double> sup(N - 1, h / 6.0);
    std::vector<double> rhs(N);
    for (int i = 0; i < N; ++i) {
        const double prev = values[(i + N - 1) % N];
        const double next = values[(i + 1) % N];
        rhs[i] = (next - 2.0 * values[i] + prev) / h;
    }
    // second derivatives at the knots
    const std::vector<double> m =
        solve_cyclic_tridiagonal(diag, sub, sup, h / 6.0, h / 6.0, rhs);

    PiecewisePoly pp;
    pp.breakpoints = grid.nodes;
    pp.coeffs.resize(N);
    for (int i = 0; i < N; ++i) {
        const int next = (i + 1) % N;
        const double y1 = values[i], y2 = values[next];
        const double m1 = m[i], m2 = m[next];
        pp.coeffs[i] = {y1,
                        (y2 - y1) / h - h * (2.0 * m1 + m2) / 6.0,
                        m1 / 2.0,
                        (m2 - m1) / (6.0 * h)};
    }
    return pp;
}

double eval_piecewise(const PiecewisePoly& pp, double t) {
    const double b0 = pp.breakpoints.front();
    double tau = b0 + reduce_angle(t - b0);  // into [b0, b0 + 2*pi)

    auto it = std::upper_bound(pp.breakpoints.begin(), pp.breakpoints.end(), tau);
    const std::size_t i = static_cast<std::size_t>(it - pp.breakpoints.begin()) - 1;
    const double u = tau - pp.breakpoints[i];
    const auto& c = pp.coeffs[i];
    return ((c[3] * u + c[2]) * u + c[1]) * u + c[0];
}

}  // namespace trigspline
