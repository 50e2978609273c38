#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "relwave/wavepacket.hpp"

namespace relwave {

/// Parameters of the repeated-position-measurement protocol: N samples per
/// measurement round, rounds at times 0, dt_d, ..., m * dt_d, bins of width dx
/// covering the well [0, L]. L/dx must be an exact integer. The seed fixes
/// every draw; identical config + seed reproduces the table bit for bit.
struct TomographyConfig {
    std::int64_t samples_per_row = 0;  // N
    int rows = 0;                      // m; the table has m + 1 rows
    double dt_d = 0.0;
    double dx = 0.0;
    double well_length = 0.0;  // L
    std::uint64_t seed = 0;

    int bin_count() const;  // B = L / dx
    void validate() const;
};

/// Detection counts: (m + 1) x B matrix, row i from the round at t = i dt_d.
/// Every row sums to exactly N.
struct CountsTable {
    TomographyConfig config;
    std::vector<std::vector<std::int64_t>> counts;
};

/// Staircase slice selector: cells with row = floor(col / q) + s, the discrete
/// approximation of the simultaneity line of an observer moving at
/// v_B = dt_d / (q dx). s shifts the slice to t' ~ s gamma dt_d.
struct SliceSpec {
    int q = 1;
    int s = 0;
};

/// One table cell on a slice, with its primed-frame coordinates. x_prime and
/// t_prime are the image of the cell's left edge (j dx, i dt_d); the _mid
/// variants are the image of the sampled bin midpoint ((j + 1/2) dx, i dt_d),
/// the event the cell's counts actually probe.
struct SliceCell {
    int row = 0;
    int col = 0;
    std::int64_t count = 0;
    double x_prime = 0.0;
    double t_prime = 0.0;
    double x_prime_mid = 0.0;
    double t_prime_mid = 0.0;
};

/// All cells of one staircase slice. Cells are not exactly simultaneous in
/// the primed frame: their t' spreads over one gamma * dt_d below the nominal
/// slice time, which is recorded rather than idealized away.
struct SliceData {
    SliceSpec spec;
    double v_b = 0.0;
    double gamma = 0.0;
    double dx_prime = 0.0;         // dx / gamma (length contraction)
    double t_prime_nominal = 0.0;  // s * gamma * dt_d
    std::vector<SliceCell> cells;

    double t_prime_min() const;
    double t_prime_max() const;
};

/// Histogram bin over [x_prime, x_prime + dx_prime) with height
/// count / (total * dx_prime). eval coordinates mirror the cell's sampled
/// midpoint event for comparisons against analytic densities.
struct HistogramBin {
    double x_prime = 0.0;
    double dx_prime = 0.0;
    std::int64_t count = 0;
    double height = 0.0;
    double t_prime_eval = 0.0;
    double x_prime_eval = 0.0;
};

/// Normalized empirical estimate of |psi'(t'_s, x')|^2: sum height * dx' = 1.
struct Histogram {
    std::vector<HistogramBin> bins;
    double dx_prime = 0.0;
    std::int64_t total_count = 0;
    double normalization = 1.0;  // the A attached to the reconstruction
    SliceSpec spec;
    double v_b = 0.0;
    double gamma = 0.0;
    double t_prime_nominal = 0.0;
};

struct ComparisonReport {
    double l1 = 0.0;
    double max_dev = 0.0;
    double chi_square = 0.0;
    int bin_count = 0;
};

/// Run the full m x N measurement simulation. Row i draws N independent
/// categorical samples from p_j ~ |psi(i dt_d, (j + 1/2) dx)|^2 dx,
/// renormalized to sum exactly 1. Each row uses an independent RNG substream
/// derived from (seed, row), so results do not depend on evaluation order.
CountsTable simulate(const TomographyConfig& config, const WavefunctionModel& model);

/// Select the staircase cells of one simultaneity slice. Throws if the
/// implied |v_B| >= 1 or no cell lands inside the table.
SliceData extract_slice(const CountsTable& table, const SliceSpec& spec);

/// Empirical normalization constant A = sqrt(gamma N / sum of slice counts).
double estimate_A(const SliceData& slice, const CountsTable& table);

/// Histogram over primed bins; A is estimated from the slice unless supplied.
Histogram reconstruct_density(const SliceData& slice, const CountsTable& table,
                              std::optional<double> supplied_A = std::nullopt);

/// Compare a reconstructed histogram against an analytic primed-frame density
/// (a function of t', x', evaluated at each bin's eval coordinates).
ComparisonReport compare_distributions(
    const Histogram& hist, const std::function<double(double, double)>& analytic_density);

}  // namespace relwave
