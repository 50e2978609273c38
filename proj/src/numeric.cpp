#include "relwave/numeric.hpp"

#include <cmath>

namespace relwave {

namespace {

double pairwise_range(std::span<const double> v, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n <= 8) {
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += v[i];
        return acc;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_range(v, lo, mid) + pairwise_range(v, mid, hi);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return values.empty() ? 0.0 : pairwise_range(values, 0, values.size());
}

Complex phased_sum(std::span<const Complex> weights, double theta0, double dtheta) {
    constexpr std::size_t resync_every = 512;
    const Complex step = std::polar(1.0, dtheta);
    Complex acc = 0.0;
    Complex phasor = std::polar(1.0, theta0);
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (j % resync_every == 0)
            phasor = std::polar(1.0, theta0 + dtheta * static_cast<double>(j));
        acc += weights[j] * phasor;
        phasor *= step;
    }
    return acc;
}

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace detail

}  // namespace relwave
