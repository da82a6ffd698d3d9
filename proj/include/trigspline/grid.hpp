#ifndef TRIGSPLINE_GRID_HPP
#define TRIGSPLINE_GRID_HPP

#include <vector>

namespace trigspline {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Reduce t into [0, 2*pi) by floored division.
double reduce_angle(double t);

// Uniform partition of [0, 2*pi).
//   indicator 0: x_i = 2*pi*(i-1)/N,  i = 1..N
//   indicator 1: x_i = pi*(2i-1)/N,   i = 1..N
// N = 2n+1 must be odd and >= 3.
struct Grid {
    int N = 0;
    int indicator = 0;
    std::vector<double> nodes;  // strictly increasing, all in [0, 2*pi)
};

Grid build_grid(int N, int indicator);

// Discrete Fourier coefficients of the trigonometric polynomial
//   a0/2 + sum_{k=1..n} (a_k cos kt + b_k sin kt),  n = (N-1)/2,
// interpolating N samples at the nodes of one grid.
struct TrigCoefficients {
    int N = 0;
    int grid_indicator = 0;
    double a0 = 0.0;
    std::vector<double> a;  // k = 1..n
    std::vector<double> b;

    int harmonic_count() const { return static_cast<int>(a.size()); }
};

// a_k = (2/N) sum_i y_i cos(k x_i), b_k likewise with sin, a0 = (2/N) sum_i y_i.
// Direct O(N^2) summation.
TrigCoefficients trig_coefficients(const std::vector<double>& values, const Grid& grid);

double eval_trig_poly(const TrigCoefficients& coeffs, double t);

}  // namespace trigspline

#endif
