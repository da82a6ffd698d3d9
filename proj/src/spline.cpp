#include "trigspline/spline.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace trigspline {

namespace {

constexpr double kDegeneracyRel = 1e-13;   // |factor| <= rel * sum|terms| is degenerate
constexpr double kNegligibleRel = 1e-14;   // coefficients below rel * data_scale are skipped

void validate_config(const SplineConfig& c) {
    if (c.N < 3 || c.N % 2 == 0)
        throw std::invalid_argument("spline: N must be an odd integer >= 3 (N = 2n+1), got " +
                                    std::to_string(c.N));
    if ((c.stitch_grid != 0 && c.stitch_grid != 1) || (c.interp_grid != 0 && c.interp_grid != 1))
        throw std::invalid_argument("spline: grid indicators must be 0 or 1");
    if (c.r < 1) throw std::invalid_argument("spline: order r must be >= 1");
    if (!(c.q < c.r))
        throw std::invalid_argument("spline: derivative order q must satisfy q < r");
    if (!(c.policy.eps_tail > 0.0))
        throw std::invalid_argument("spline: eps_tail must be positive");
    if (c.policy.M_min < 1 || c.policy.M_min > c.policy.M_max)
        throw std::invalid_argument("spline: need 1 <= M_min <= M_max");
    if (c.domain && !(c.domain->second > c.domain->first))
        throw std::invalid_argument("spline: domain must satisfy b > a");
}

bool reduction_vectors(const ParamVectors& v) {
    return v.gamma[1] == 0.0 && v.gamma[2] == 0.0 && v.eta[1] == 0.0 && v.eta[2] == 0.0;
}

double tail_magnitude(const ParamVectors& v) {
    double m = std::abs(v.gamma[1]);
    m = std::max(m, std::abs(v.gamma[2]));
    m = std::max(m, std::abs(v.eta[1]));
    m = std::max(m, std::abs(v.eta[2]));
    return m;
}

// Shared by build_spline and differintegrate. Folds the q = 0 blocks, merges
// by frequency, then applies the frequency power once per merged term so the
// integer-q spectrum scales exactly against its q = 0 counterpart.
TrigSpline assemble(const SplineConfig& config, const TrigCoefficients& coeffs,
                    double data_scale, int M, bool truncated, double constant) {
    const int n = coeffs.harmonic_count();
    const double negligible = kNegligibleRel * data_scale;
    const auto& vec = config.vectors;
    const bool reduction = reduction_vectors(vec);

    std::map<std::int64_t, FrequencyTerm> merged;
    auto accumulate = [&merged](std::int64_t j, double p, double q_amp) {
        FrequencyTerm& t = merged[j];
        t.j = j;
        t.p += p;
        t.q_amp += q_amp;
    };

    for (int k = 1; k <= n; ++k) {
        const double ak = coeffs.a[k - 1];
        const double bk = coeffs.b[k - 1];
        const bool use_cos = std::abs(ak) > negligible;
        const bool use_sin = std::abs(bk) > negligible;

        if (reduction) {
            // Plain trig-polynomial path: blocks collapse to single terms and
            // the factor cancels, so emit the coefficients directly.
            if (use_cos) {
                if (vec.gamma[0] == 0.0)
                    throw std::invalid_argument(
                        "spline: ill-posed parameter vectors: hc_" + std::to_string(k) +
                        " = 0 against a nonzero cosine coefficient");
                accumulate(k, ak, 0.0);
            }
            if (use_sin) {
                if (vec.eta[0] == 0.0)
                    throw std::invalid_argument(
                        "spline: ill-posed parameter vectors: hs_" + std::to_string(k) +
                        " = 0 against a nonzero sine coefficient");
                accumulate(k, 0.0, bk);
            }
            continue;
        }

        if (use_cos) {
            const FactorParts hc = interp_factor_parts(Harmonic::cosine, k, config.stitch_grid,
                                                       config.interp_grid, vec, config.r,
                                                       config.N, M);
            if (std::abs(hc.value) <= kDegeneracyRel * hc.abs_scale)
                throw std::invalid_argument("spline: ill-posed parameter vectors: hc_" +
                                            std::to_string(k) + " ~ 0");
            const double scale = ak / hc.value;
            for (const FrequencyTerm& t :
                 fold_block(Harmonic::cosine, k, config.stitch_grid, vec, config.r, 0.0,
                            config.N, M))
                accumulate(t.j, scale * t.p, 0.0);
        }
        if (use_sin) {
            const FactorParts hs = interp_factor_parts(Harmonic::sine, k, config.stitch_grid,
                                                       config.interp_grid, vec, config.r,
                                                       config.N, M);
            if (std::abs(hs.value) <= kDegeneracyRel * hs.abs_scale)
                throw std::invalid_argument("spline: ill-posed parameter vectors: hs_" +
                                            std::to_string(k) + " ~ 0");
            const double scale = bk / hs.value;
            for (const FrequencyTerm& t :
                 fold_block(Harmonic::sine, k, config.stitch_grid, vec, config.r, 0.0,
                            config.N, M))
                accumulate(t.j, 0.0, scale * t.q_amp);
        }
    }

    TrigSpline s;
    s.config = config;
    s.constant = constant;
    s.M_used = M;
    s.truncated = truncated;
    s.source = coeffs;
    s.data_scale = data_scale;
    s.spectrum.reserve(merged.size());
    for (const auto& [j, term] : merged) {
        if (term.p == 0.0 && term.q_amp == 0.0) continue;
        const double f = frequency_power(j, config.q);
        s.spectrum.push_back({j, term.p * f, term.q_amp * f});
    }
    return s;
}

}  // namespace

TrigSpline build_spline(const SplineConfig& config, const std::vector<double>& values) {
    validate_config(config);
    if (static_cast<int>(values.size()) != config.N)
        throw std::invalid_argument("spline: got " + std::to_string(values.size()) +
                                    " values for N = " + std::to_string(config.N));

    const Grid grid = build_grid(config.N, config.interp_grid);
    const TrigCoefficients coeffs = trig_coefficients(values, grid);

    double max_abs = 0.0;
    for (double y : values) max_abs = std::max(max_abs, std::abs(y));
    const double data_scale = std::max(1.0, max_abs);

    TruncationChoice tc{config.policy.M_min, false};
    if (!reduction_vectors(config.vectors))
        tc = choose_truncation(config.r, config.q, config.N, config.policy,
                               tail_magnitude(config.vectors));

    const double constant = config.q == 0.0 ? coeffs.a0 / 2.0 : 0.0;
    return assemble(config, coeffs, data_scale, tc.M, tc.truncated, constant);
}

double evaluate(const TrigSpline& spline, double t) {
    double tau = t;
    if (spline.config.domain)
        tau = map_domain(spline.config.domain->first, spline.config.domain->second, t);
    tau = reduce_angle(tau);

    const double phase = pi * spline.config.q / 2.0;
    double acc = spline.constant;
    for (const FrequencyTerm& term : spline.spectrum) {
        const double theta = static_cast<double>(term.j) * tau + phase;
        acc += term.p * std::cos(theta) + term.q_amp * std::sin(theta);
    }
    return acc;
}

std::vector<double> evaluate_many(const TrigSpline& spline, const std::vector<double>& ts) {
    std::vector<double> out;
    out.reserve(ts.size());
    for (double t : ts) out.push_back(evaluate(spline, t));
    return out;
}

TrigSpline differintegrate(const TrigSpline& spline, double delta_q) {
    if (spline.source.N == 0)
        throw std::runtime_error(
            "differintegrate: spline retains no source coefficients (loaded from a document)");
    const double q_total = spline.config.q + delta_q;
    if (!(q_total < spline.config.r))
        throw std::invalid_argument(
            "differintegrate: resulting order q = " + std::to_string(q_total) +
            " must stay below r = " + std::to_string(spline.config.r));

    // The constant survives only when the chain never left q = 0; Weyl
    // integration of a derivative cannot recover the mean.
    double constant = 0.0;
    if (q_total == 0.0 && spline.config.q == 0.0) constant = spline.constant;

    SplineConfig config = spline.config;
    config.q = q_total;
    return assemble(config, spline.source, spline.data_scale, spline.M_used, spline.truncated,
                    constant);
}

const std::vector<FrequencyTerm>& spectrum(const TrigSpline& spline) { return spline.spectrum; }

double map_domain(double a, double b, double x) {
    if (!(b > a)) throw std::invalid_argument("map_domain: need b > a");
    return two_pi * (x - a) / (b - a);
}

}  // namespace trigspline
