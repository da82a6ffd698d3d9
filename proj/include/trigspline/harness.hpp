#ifndef TRIGSPLINE_HARNESS_HPP
#define TRIGSPLINE_HARNESS_HPP

#include <functional>
#include <utility>
#include <vector>

namespace trigspline {

struct ErrorReport {
    int sample_count = 0;
    double sup_error = 0.0;
    double l2_error = 0.0;  // root mean square over the samples, <= sup_error
    double argmax_t = 0.0;
};

using Evaluable = std::function<double(double)>;

// Errors of f - g on the uniform sample set t_i = 2*pi*i/samples,
// i = 0..samples-1 (t = 2*pi is identified with 0 and not sampled twice).
ErrorReport sup_distance(const Evaluable& f, const Evaluable& g, int samples);

// Least-squares slope of log(error) against log(M), negated so that a
// positive order means decay. Needs >= 3 points, strictly increasing M,
// positive errors.
double convergence_order(const std::vector<std::pair<double, double>>& errors);

// Max over the knots of |D+_o f - D-_o f| for each derivative order
// o = 0..max_order, where D+/D- are one-sided second-order-accurate finite
// differences with step h (order 0 samples at x+h, x+2h so genuine value
// jumps are visible). max_order <= 6.
std::vector<double> smoothness_profile(const Evaluable& f, const std::vector<double>& knots,
                                       int max_order, double h);

}  // namespace trigspline

#endif
