#include "relwave/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "relwave/kinematics.hpp"

namespace relwave {

int TomographyConfig::bin_count() const {
    const double ratio = well_length / dx;
    const double rounded = std::round(ratio);
    if (!(rounded >= 1.0) || std::abs(ratio - rounded) > 1e-9 * rounded)
        throw std::invalid_argument("TomographyConfig: L / dx must be a positive integer");
    return static_cast<int>(rounded);
}

void TomographyConfig::validate() const {
    if (samples_per_row < 1) throw std::invalid_argument("TomographyConfig: N must be >= 1");
    if (rows < 1) throw std::invalid_argument("TomographyConfig: m must be >= 1");
    if (!(dt_d > 0.0)) throw std::invalid_argument("TomographyConfig: dt_d must be > 0");
    if (!(dx > 0.0)) throw std::invalid_argument("TomographyConfig: dx must be > 0");
    if (!(well_length > 0.0)) throw std::invalid_argument("TomographyConfig: L must be > 0");
    (void)bin_count();
}

namespace {

std::uint64_t row_substream_seed(std::uint64_t master, int row) {
    // Stated mixing rule: substream(i) = splitmix64(master xor (i + 1) * golden).
    return detail::splitmix64(master ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(row) + 1)));
}

}  // namespace

CountsTable simulate(const TomographyConfig& config, const WavefunctionModel& model) {
    config.validate();
    const int bins = config.bin_count();
    CountsTable table;
    table.config = config;
    table.counts.assign(config.rows + 1, std::vector<std::int64_t>(bins, 0));

    std::vector<double> prob(bins), cumulative(bins);
    for (int i = 0; i <= config.rows; ++i) {
        const double t = i * config.dt_d;
        for (int j = 0; j < bins; ++j)
            prob[j] = model.density({t, (j + 0.5) * config.dx}) * config.dx;
        const double mass = pairwise_sum(prob);
        if (!(mass > 0.0))
            throw std::runtime_error("simulate: row " + std::to_string(i) +
                                     " has nonpositive probability mass");
        double running = 0.0;
        for (int j = 0; j < bins; ++j) {
            running += prob[j] / mass;
            cumulative[j] = running;
        }
        cumulative[bins - 1] = 1.0;

        std::mt19937_64 rng(row_substream_seed(config.seed, i));
        for (std::int64_t n = 0; n < config.samples_per_row; ++n) {
            const double u = detail::canonical_double(rng());
            const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            const int j = std::min<int>(static_cast<int>(it - cumulative.begin()), bins - 1);
            ++table.counts[i][j];
        }
    }
    return table;
}

double SliceData::t_prime_min() const {
    double m = cells.front().t_prime;
    for (const auto& c : cells) m = std::min(m, c.t_prime);
    return m;
}

double SliceData::t_prime_max() const {
    double m = cells.front().t_prime;
    for (const auto& c : cells) m = std::max(m, c.t_prime);
    return m;
}

SliceData extract_slice(const CountsTable& table, const SliceSpec& spec) {
    const TomographyConfig& cfg = table.config;
    if (spec.q < 1) throw std::invalid_argument("extract_slice: q must be >= 1");
    const double v_b = cfg.dt_d / (spec.q * cfg.dx);
    if (!(v_b < 1.0))
        throw std::domain_error("extract_slice: implied v_B = dt_d / (q dx) must be < 1");
    const Boost b(v_b);
    const double g = b.gamma();

    SliceData slice;
    slice.spec = spec;
    slice.v_b = v_b;
    slice.gamma = g;
    slice.dx_prime = cfg.dx / g;
    slice.t_prime_nominal = spec.s * g * cfg.dt_d;

    const int bins = cfg.bin_count();
    for (int j = 0; j < bins; ++j) {
        const int i = j / spec.q + spec.s;
        if (i < 0 || i > cfg.rows) continue;
        SliceCell cell;
        cell.row = i;
        cell.col = j;
        cell.count = table.counts[i][j];
        const double t = i * cfg.dt_d;
        const double x_left = j * cfg.dx;
        const double x_mid = (j + 0.5) * cfg.dx;
        cell.x_prime = g * (x_left - v_b * t);
        cell.t_prime = g * (t - v_b * x_left);
        cell.x_prime_mid = g * (x_mid - v_b * t);
        cell.t_prime_mid = g * (t - v_b * x_mid);
        slice.cells.push_back(cell);
    }
    if (slice.cells.empty())
        throw std::runtime_error("extract_slice: no cell of the staircase lies in the table");
    return slice;
}

double estimate_A(const SliceData& slice, const CountsTable& table) {
    std::int64_t total = 0;
    for (const auto& c : slice.cells) total += c.count;
    if (total <= 0) throw std::runtime_error("estimate_A: slice has zero total count");
    return std::sqrt(slice.gamma * static_cast<double>(table.config.samples_per_row) /
                     static_cast<double>(total));
}

Histogram reconstruct_density(const SliceData& slice, const CountsTable& table,
                              std::optional<double> supplied_A) {
    std::int64_t total = 0;
    for (const auto& c : slice.cells) total += c.count;
    if (total <= 0) throw std::runtime_error("reconstruct_density: slice has zero total count");

    Histogram hist;
    hist.dx_prime = slice.dx_prime;
    hist.total_count = total;
    hist.normalization = supplied_A ? *supplied_A : estimate_A(slice, table);
    hist.spec = slice.spec;
    hist.v_b = slice.v_b;
    hist.gamma = slice.gamma;
    hist.t_prime_nominal = slice.t_prime_nominal;
    for (const auto& c : slice.cells) {
        HistogramBin bin;
        bin.x_prime = c.x_prime;
        bin.dx_prime = slice.dx_prime;
        bin.count = c.count;
        bin.height = static_cast<double>(c.count) /
                     (static_cast<double>(total) * slice.dx_prime);
        bin.t_prime_eval = c.t_prime_mid;
        bin.x_prime_eval = c.x_prime_mid;
        hist.bins.push_back(bin);
    }
    return hist;
}

ComparisonReport compare_distributions(
    const Histogram& hist, const std::function<double(double, double)>& analytic_density) {
    ComparisonReport rep;
    rep.bin_count = static_cast<int>(hist.bins.size());
    std::vector<double> expected_prob(hist.bins.size());
    for (std::size_t b = 0; b < hist.bins.size(); ++b) {
        const double d = analytic_density(hist.bins[b].t_prime_eval, hist.bins[b].x_prime_eval);
        const double dev = std::abs(hist.bins[b].height - d);
        rep.l1 += dev * hist.bins[b].dx_prime;
        rep.max_dev = std::max(rep.max_dev, dev);
        expected_prob[b] = d * hist.bins[b].dx_prime;
    }
    // Chi-square against the analytic bin probabilities renormalized over the
    // slice support.
    const double expected_mass = pairwise_sum(expected_prob);
    if (expected_mass > 0.0) {
        const double n = static_cast<double>(hist.total_count);
        for (std::size_t b = 0; b < hist.bins.size(); ++b) {
            const double mu = n * expected_prob[b] / expected_mass;
            if (mu > 0.0) {
                const double diff = static_cast<double>(hist.bins[b].count) - mu;
                rep.chi_square += diff * diff / mu;
            }
        }
    }
    return rep;
}

}  // namespace relwave
