#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace relwave {

using Complex = std::complex<double>;

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

/// Fixed-order pairwise (cascade) summation. Deterministic for a given input
/// order and more accurate than sequential accumulation on long quadratures.
double pairwise_sum(std::span<const double> values);

/// sum_j w_j * exp(i (theta0 + j dtheta)). The stepped phasor is resynced from
/// std::polar every few hundred terms so rounding drift stays near machine
/// epsilon even for grids of 10^4 nodes.
Complex phased_sum(std::span<const Complex> weights, double theta0, double dtheta);

namespace detail {
// SplitMix64 finalizer; used to derive independent per-row RNG substreams.
std::uint64_t splitmix64(std::uint64_t x);
// Uniform double in [0, 1) from a 64-bit word (53 mantissa bits).
inline double canonical_double(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}
}  // namespace detail

}  // namespace relwave
