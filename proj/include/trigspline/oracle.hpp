#ifndef TRIGSPLINE_ORACLE_HPP
#define TRIGSPLINE_ORACLE_HPP

#include <array>
#include <vector>

#include "trigspline/grid.hpp"

namespace trigspline {

// Periodic piecewise polynomial over one period [b0, b0 + 2*pi), b0 =
// breakpoints[0]. Interval i spans [breakpoints[i], breakpoints[i+1]) (the
// last wraps around); coeffs[i] = {c0, c1, c2, c3} in the local coordinate
// u = t - breakpoints[i].
struct PiecewisePoly {
    std::vector<double> breakpoints;
    std::vector<std::array<double, 4>> coeffs;
    double period = two_pi;
};

// Periodic broken-line interpolant of the values at the grid nodes.
PiecewisePoly linear_periodic(const std::vector<double>& values, const Grid& grid);

// Periodic C^2 cubic interpolant. Second derivatives at the knots solve the
// cyclic tridiagonal system with sub/super-diagonal h/6, diagonal 2h/3 and
// right-hand side (y_{i+1} - 2 y_i + y_{i-1})/h, h = 2*pi/N.
PiecewisePoly cubic_periodic(const std::vector<double>& values, const Grid& grid);

// Solve A x = rhs where A is tridiagonal (diag, sub, sup) plus the two cyclic
// corners A[n-1][0] = corner_lo and A[0][n-1] = corner_hi. Sherman-Morrison
// reduction to two plain tridiagonal solves; size >= 3. Throws on zero pivot.
std::vector<double> solve_cyclic_tridiagonal(const std::vector<double>& diag,
                                             const std::vector<double>& sub,
                                             const std::vector<double>& sup,
                                             double corner_lo, double corner_hi,
                                             const std::vector<double>& rhs);

double eval_piecewise(const PiecewisePoly& pp, double t);

}  // namespace trigspline

#endif
