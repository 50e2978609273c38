#pragma once

#include <cmath>
#include <stdexcept>

// Special-relativistic primitives in 1+1 dimensions, natural units c = hbar = 1.

namespace relwave {

/// A point (t, x) in Minkowski space-time.
struct Event {
    double t = 0.0;
    double x = 0.0;
};

/// Energy-momentum pair (omega, k). No mass-shell constraint is imposed at
/// this level; off-shell vectors are valid inputs everywhere.
struct FourMomentum {
    double omega = 0.0;
    double k = 0.0;
};

namespace detail {
// Strict bound keeps the Lorentz factor finite.
inline constexpr double velocity_bound = 1.0 - 1e-12;
}  // namespace detail

/// Lorentz factor 1/sqrt(1 - v^2). Throws std::domain_error if |v| >= 1 - 1e-12.
inline double gamma(double v) {
    if (!(std::abs(v) < detail::velocity_bound))
        throw std::domain_error("gamma: |v| must be < 1");
    return 1.0 / std::sqrt(1.0 - v * v);
}

/// Doppler factor D = sqrt((1 - v)/(1 + v)) of a right-moving massless mode.
/// Satisfies D(v) * D(-v) = 1 and D(v) = gamma(v) * (1 - v).
inline double doppler(double v) {
    if (!(std::abs(v) < detail::velocity_bound))
        throw std::domain_error("doppler: |v| must be < 1");
    return std::sqrt((1.0 - v) / (1.0 + v));
}

/// Relative observer velocity with derived Lorentz factor. gamma is always
/// recomputed from v, never stored independently. There is no separate
/// inverse-boost operation: boosting with -v inverts the map.
class Boost {
public:
    explicit Boost(double v) : v_(v) {
        if (!(std::abs(v) < detail::velocity_bound))
            throw std::domain_error("Boost: |v| must be < 1");
    }

    double v() const { return v_; }
    double gamma() const { return relwave::gamma(v_); }
    double doppler() const { return relwave::doppler(v_); }
    Boost inverse() const { return Boost(-v_); }

private:
    double v_;
};

/// (t', x') = (gamma (t - v x), gamma (x - v t)).
inline Event boost_event(const Boost& b, const Event& e) {
    const double g = b.gamma();
    return {g * (e.t - b.v() * e.x), g * (e.x - b.v() * e.t)};
}

/// (omega', k') = (gamma (omega - v k), gamma (k - v omega));
/// omega^2 - k^2 is preserved to rounding.
inline FourMomentum boost_momentum(const Boost& b, const FourMomentum& p) {
    const double g = b.gamma();
    return {g * (p.omega - b.v() * p.k), g * (p.k - b.v() * p.omega)};
}

/// Invariant plane-wave phase omega t - k x.
inline double phase(const FourMomentum& p, const Event& e) {
    return p.omega * e.t - p.k * e.x;
}

}  // namespace relwave
