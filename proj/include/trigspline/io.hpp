#ifndef TRIGSPLINE_IO_HPP
#define TRIGSPLINE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "trigspline/spline.hpp"

namespace trigspline {

// Config JSON keys: N, I1, I2, gamma (3 reals), eta (3 reals), r, q,
// eps_tail, M_max, optional M_min, optional domain [a, b]. Missing keys fall
// back to SplineConfig defaults.
SplineConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const SplineConfig& config);

// TRIGSPLINE_EPS_TAIL, when set, overrides config.policy.eps_tail.
void apply_env_overrides(SplineConfig& config);

// Spline document:
//   {"config":{...},"constant":x,"M_used":m,"truncated":bool,
//    "spectrum":[[j,p,q],...]}
// Doubles are serialized as shortest round-trip decimals. A loaded spline
// evaluates and samples normally but retains no source coefficients.
nlohmann::json spline_to_json(const TrigSpline& spline);
TrigSpline spline_from_json(const nlohmann::json& j);

void save_spline(const std::string& path, const TrigSpline& spline);
TrigSpline load_spline(const std::string& path);

// Data CSV: one value per line, optional leading header "y".
std::vector<double> read_values_csv(std::istream& in);
std::vector<double> read_values_csv_file(const std::string& path);

// Sample CSV: header "t,value", '.' decimal separator, newline-terminated.
void write_samples_csv(std::ostream& out, const std::vector<double>& ts,
                       const std::vector<double>& values);
void write_samples_csv_file(const std::string& path, const std::vector<double>& ts,
                            const std::vector<double>& values);

SplineConfig load_config(const std::string& path);  // with env overrides applied

}  // namespace trigspline

#endif
