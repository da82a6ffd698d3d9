#include "trigspline/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "trigspline/grid.hpp"

namespace trigspline {

namespace {

void check_grid_args(int N, int r) {
    if (N < 3 || N % 2 == 0)
        throw std::invalid_argument("kernel: N must be an odd integer >= 3 (N = 2n+1)");
    if (r < 0) throw std::invalid_argument("kernel: r must be >= 0");
}

void check_block_args(int k, int stitch_grid, int N, int M) {
    const int n = (N - 1) / 2;
    if (k < 1 || k > n)
        throw std::invalid_argument("kernel: k must be in 1..n with n = (N-1)/2");
    if (stitch_grid != 0 && stitch_grid != 1)
        throw std::invalid_argument("kernel: grid indicator must be 0 or 1");
    if (M < 1) throw std::invalid_argument("kernel: M must be >= 1");
}

}  // namespace

double convergence_factor(std::int64_t k, int r, int N) {
    check_grid_args(N, r);
    if (k < 1) throw std::invalid_argument("convergence_factor: k must be >= 1");
    if (k % N == 0) return 0.0;  // sin(pi k / N) vanishes exactly
    const double s = std::sin(pi * static_cast<double>(k) / N) / static_cast<double>(k);
    double acc = 1.0;
    for (int i = 0; i <= r; ++i) acc *= s;
    return acc;
}

double frequency_power(std::int64_t j, double q) {
    if (q == 0.0) return 1.0;
    const double qr = std::floor(q);
    if (q == qr && std::abs(qr) <= 64.0) {
        // repeated multiplication keeps integer-q spectrum scaling exact
        const int e = static_cast<int>(std::abs(qr));
        double acc = 1.0;
        const double base = static_cast<double>(j);
        for (int i = 0; i < e; ++i) acc *= base;
        return qr > 0 ? acc : 1.0 / acc;
    }
    return std::exp(q * std::log(static_cast<double>(j)));
}

FactorParts interp_factor_parts(Harmonic kind, int k, int stitch_grid, int interp_grid,
                                const ParamVectors& vectors, int r, int N, int M) {
    check_grid_args(N, r);
    check_block_args(k, stitch_grid, N, M);
    if (interp_grid != 0 && interp_grid != 1)
        throw std::invalid_argument("kernel: grid indicator must be 0 or 1");

    const auto& g = kind == Harmonic::cosine ? vectors.gamma : vectors.eta;
    const bool alternating = stitch_grid != interp_grid;  // (-1)^{m(I1-I2)} = (-1)^m

    FactorParts parts;
    const double head = g[0] * convergence_factor(k, r, N);
    parts.value = head;
    parts.abs_scale = std::abs(head);
    for (int m = 1; m <= M; ++m) {
        const std::int64_t base = static_cast<std::int64_t>(m) * N;
        const double upper = g[2] * convergence_factor(base + k, r, N);
        const double lower = g[1] * convergence_factor(base - k, r, N);
        const double sign = (alternating && (m & 1)) ? -1.0 : 1.0;
        parts.value += sign * (upper + lower);
        parts.abs_scale += std::abs(upper) + std::abs(lower);
    }
    return parts;
}

double interp_factor(Harmonic kind, int k, int stitch_grid, int interp_grid,
                     const ParamVectors& vectors, int r, int N, int M) {
    return interp_factor_parts(kind, k, stitch_grid, interp_grid, vectors, r, N, M).value;
}

std::vector<FrequencyTerm> fold_block(Harmonic kind, int k, int stitch_grid,
                                      const ParamVectors& vectors, int r, double q,
                                      int N, int M) {
    check_grid_args(N, r);
    check_block_args(k, stitch_grid, N, M);

    const auto& g = kind == Harmonic::cosine ? vectors.gamma : vectors.eta;
    std::vector<FrequencyTerm> out;
    out.reserve(2 * static_cast<std::size_t>(M) + 1);

    auto push = [&](std::int64_t j, double base) {
        if (base == 0.0) return;
        const double amp = base * frequency_power(j, q);
        if (kind == Harmonic::cosine)
            out.push_back({j, amp, 0.0});
        else
            out.push_back({j, 0.0, amp});
    };

    push(k, g[0] * convergence_factor(k, r, N));
    for (int m = 1; m <= M; ++m) {
        const std::int64_t base = static_cast<std::int64_t>(m) * N;
        const double sign = (stitch_grid == 1 && (m & 1)) ? -1.0 : 1.0;  // (-1)^{m I1}
        double lower = g[1] * convergence_factor(base - k, r, N);
        if (kind == Harmonic::sine) lower = -lower;
        push(base - k, sign * lower);
        push(base + k, sign * g[2] * convergence_factor(base + k, r, N));
    }
    return out;
}

TruncationChoice choose_truncation(int r, double q, int N, const TruncationPolicy& policy,
                                   double scale) {
    check_grid_args(N, r);
    if (!(q < r))
        throw std::invalid_argument(
            "choose_truncation: q >= r, series terms no longer decay (need q < r)");
    if (!(scale > 0.0))
        throw std::invalid_argument("choose_truncation: scale must be positive");
    if (!(policy.eps_tail > 0.0))
        throw std::invalid_argument("truncation policy: eps_tail must be positive");
    if (policy.M_min < 1 || policy.M_min > policy.M_max)
        throw std::invalid_argument("truncation policy: need 1 <= M_min <= M_max");

    const int n = (N - 1) / 2;
    const double decay = 1.0 + r - q;  // term bound exponent, > 0 here
    auto bound_met = [&](long long M) {
        const double lead = static_cast<double>(M) * N + 1.0 - n;
        return std::pow(lead, q - 1.0 - r) * scale <= policy.eps_tail;
    };

    // Invert the bound, then nudge for floating slop.
    const double lead_needed = std::pow(scale / policy.eps_tail, 1.0 / decay);
    long long M = static_cast<long long>(std::ceil((lead_needed - 1.0 + n) / N));
    if (M < policy.M_min) M = policy.M_min;
    while (M > policy.M_min && bound_met(M - 1)) --M;
    while (M <= policy.M_max && !bound_met(M)) ++M;
    if (M > policy.M_max) return {policy.M_max, true};
    return {static_cast<int>(M), false};
}

}  // namespace trigspline
