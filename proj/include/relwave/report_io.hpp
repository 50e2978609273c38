#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "relwave/tomography.hpp"
#include "relwave/verify.hpp"

namespace relwave {

inline constexpr const char* artifact_name = "relwave";
inline constexpr const char* artifact_version = "0.1.0";

/// 17 significant digits, '.' decimal point: round-trips every double.
std::string format_double(double value);

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const SuiteReport& report);
std::string text_summary(const SuiteReport& report);

/// Slice histogram with its comparison stats (pass nullptr to omit).
nlohmann::json to_json(const Histogram& hist, const ComparisonReport* comparison);

/// CSV: one row per time index, one column per bin; leading '#' comment lines
/// carry the artifact version and the caller's config echo.
void write_counts_csv(std::ostream& os, const CountsTable& table,
                      const std::string& config_echo);

}  // namespace relwave
