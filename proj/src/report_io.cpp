#include "relwave/report_io.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace relwave {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

nlohmann::json to_json(const CheckResult& r) {
    nlohmann::json j{{"name", r.name},
                     {"status", to_string(r.status)},
                     {"passed", r.passed()},
                     {"observed", r.observed},
                     {"expected", r.expected},
                     {"tolerance", r.tolerance},
                     {"compare", r.compare}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (!r.values.empty()) {
        nlohmann::json values;
        for (const auto& [key, value] : r.values) values[key] = value;
        j["values"] = values;
    }
    return j;
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) checks.push_back(to_json(c));
    return nlohmann::json{{"artifact", artifact_name},
                          {"version", artifact_version},
                          {"seed", report.config.seed},
                          {"velocities", report.config.velocities},
                          {"event_samples", report.config.event_samples},
                          {"fixture_scale", report.config.fixture_scale},
                          {"fixtures", report.fixtures},
                          {"failures", report.failures()},
                          {"checks", checks}};
}

std::string text_summary(const SuiteReport& report) {
    std::ostringstream os;
    os << artifact_name << ' ' << artifact_version << " invariance suite, seed "
       << report.config.seed << "\n";
    for (const auto& d : report.fixtures) os << "fixture: " << d << "\n";
    os << "\n";
    std::size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, c.name.size());
    for (const auto& c : report.checks) {
        os << std::left << std::setw(4) << to_string(c.status) << ' ' << std::setw((int)width)
           << c.name << "  observed=" << format_double(c.observed);
        if (c.status != CheckStatus::Info)
            os << " expected=" << format_double(c.expected)
               << " tol=" << format_double(c.tolerance) << " (" << c.compare << ")";
        for (const auto& [key, value] : c.values)
            os << ' ' << key << '=' << format_double(value);
        if (!c.notes.empty()) os << "  [" << c.notes << "]";
        os << "\n";
    }
    os << "\nresult: " << report.failures() << " failure(s) in " << report.checks.size()
       << " checks\n";
    return os.str();
}

nlohmann::json to_json(const Histogram& hist, const ComparisonReport* comparison) {
    nlohmann::json bins = nlohmann::json::array();
    for (const auto& b : hist.bins)
        bins.push_back(nlohmann::json{{"x_prime", b.x_prime},
                                      {"dx_prime", b.dx_prime},
                                      {"count", b.count},
                                      {"height", b.height},
                                      {"t_prime_eval", b.t_prime_eval},
                                      {"x_prime_eval", b.x_prime_eval}});
    nlohmann::json j{{"q", hist.spec.q},
                     {"s", hist.spec.s},
                     {"v_B", hist.v_b},
                     {"gamma", hist.gamma},
                     {"A", hist.normalization},
                     {"t_prime_nominal", hist.t_prime_nominal},
                     {"dx_prime", hist.dx_prime},
                     {"total_count", hist.total_count},
                     {"bins", bins}};
    if (comparison)
        j["comparison"] = nlohmann::json{{"l1", comparison->l1},
                                         {"max_dev", comparison->max_dev},
                                         {"chi_square", comparison->chi_square},
                                         {"bin_count", comparison->bin_count}};
    return j;
}

void write_counts_csv(std::ostream& os, const CountsTable& table,
                      const std::string& config_echo) {
    const TomographyConfig& cfg = table.config;
    os << "# " << artifact_name << ' ' << artifact_version << " counts table\n";
    os << "# config: " << config_echo << "\n";
    os << "# rows=" << cfg.rows + 1 << " bins=" << cfg.bin_count() << " N=" << cfg.samples_per_row
       << " dt_d=" << format_double(cfg.dt_d) << " dx=" << format_double(cfg.dx)
       << " L=" << format_double(cfg.well_length) << " seed=" << cfg.seed << "\n";
    os << "i";
    for (int j = 0; j < cfg.bin_count(); ++j) os << ",n_" << j;
    os << "\n";
    for (std::size_t i = 0; i < table.counts.size(); ++i) {
        os << i;
        for (const auto count : table.counts[i]) os << ',' << count;
        os << "\n";
    }
}

}  // namespace relwave
