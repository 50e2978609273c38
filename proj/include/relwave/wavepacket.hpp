#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "relwave/kinematics.hpp"
#include "relwave/numeric.hpp"

namespace relwave {

/// Uniform 1-D grid of n >= 2 nodes on [min, max]; node j sits at
/// min + j * spacing. Used both for momentum (k) and angular-frequency
/// (omega) axes.
class UniformGrid {
public:
    UniformGrid(double min, double max, int n);

    double min() const { return min_; }
    double max() const { return max_; }
    int size() const { return n_; }
    double spacing() const { return spacing_; }
    double node(int j) const { return min_ + spacing_ * j; }

private:
    double min_, max_, spacing_;
    int n_;
};

/// Discretized complex amplitude phi(k) on a uniform momentum grid.
///
/// Construction rescales the supplied values so the discrete norm
/// 2 pi sum_j |phi_j|^2 dk equals 1 exactly; downstream invariants then
/// exercise transformation code rather than fixture error.
class MomentumAmplitude {
public:
    MomentumAmplitude(UniformGrid grid, std::vector<Complex> values);

    const UniformGrid& grid() const { return grid_; }
    std::span<const Complex> values() const { return values_; }
    Complex value(int j) const { return values_[j]; }

    /// 2 pi sum |phi_j|^2 dk; 1 within rounding for every constructed object.
    double discrete_norm() const;

private:
    UniformGrid grid_;
    std::vector<Complex> values_;
};

/// Gaussian packet phi_j ~ exp(-(k_j - k0)^2 / (2 sigma^2)) on the given grid,
/// rescaled to unit discrete norm. Support is truncated to the grid; if the
/// grid does not cover [k0 - 6 sigma, k0 + 6 sigma], *truncated is set.
MomentumAmplitude gaussian_packet(double k0, double sigma, const UniformGrid& grid,
                                  bool* truncated = nullptr);

/// Complex spectral weight eps(omega) on a uniform frequency grid. No
/// normalization is imposed on eps; where a model built from it needs a unit
/// spatial norm, the resulting density is rescaled instead.
struct SpectralProfile {
    UniformGrid grid;
    std::vector<Complex> values;
};

enum class Family { Massless, EigenEnergy, OffShell };

const char* to_string(Family f);

/// One of three wave-function families, evaluable at any space-time event.
///
///   Massless     psi(t,x) = sum_j phi_j e^{i s (|k_j| t - k_j x)} dk, k >= 0
///   EigenEnergy  psi(t,x) = e^{-i omega_E t} sum_j phi_j e^{i k_j x} dk
///   OffShell     psi(t,x) = sum_jl phi_j eps_l e^{i k_j x} e^{-i omega_l t} dk domega
///
/// s = phase_sign records the family's exponent convention (+1 for the
/// massless form, -1 for the e^{i(kx - omega t)} form of the other two).
/// Densities are unaffected by the choice. All sums are node Riemann sums.
/// An overall real scale factor carries well-restricted normalization
/// (e.g. unit probability on [0, L]) without touching the amplitude's own
/// discrete norm. Models are immutable; evaluation is pure.
class WavefunctionModel {
public:
    static WavefunctionModel massless(MomentumAmplitude phi, int phase_sign = +1);
    static WavefunctionModel eigen_energy(double omega_e, MomentumAmplitude phi);
    static WavefunctionModel off_shell(MomentumAmplitude phi, SpectralProfile eps);

    Family family() const { return family_; }
    const MomentumAmplitude& amplitude() const { return phi_; }
    double omega_e() const { return omega_e_; }
    const SpectralProfile& spectral() const { return *eps_; }
    int phase_sign() const { return phase_sign_; }
    double scale() const { return scale_; }

    Complex evaluate(const Event& e) const;
    double density(const Event& e) const;

    /// Same model with the overall scale multiplied by factor > 0.
    WavefunctionModel rescaled(double factor) const;

    /// Shift by a: evaluate(translated, (t,x)) = evaluate(this, (t, x - a)).
    /// Implemented as a per-node phase on phi; eps is untouched.
    WavefunctionModel translated(double a) const;

    /// Rescaled so the spatial norm over `domain` at time t equals 1.
    WavefunctionModel normalized_spatial(double t, Interval domain, int n_quad) const;

private:
    WavefunctionModel(Family f, MomentumAmplitude phi, int phase_sign);

    Family family_;
    MomentumAmplitude phi_;
    double omega_e_ = 0.0;
    std::optional<SpectralProfile> eps_;
    int phase_sign_;
    double scale_ = 1.0;
};

/// Quadrature value plus a flag raised when the integrand at the domain
/// boundary exceeds 1e-8 of its peak (domain too small for the requested
/// accuracy).
struct NormResult {
    double value = 0.0;
    bool boundary_warning = false;
};

/// Midpoint-rule integral of |psi(t, x)|^2 dx over the domain.
NormResult spatial_norm(const WavefunctionModel& model, double t, Interval domain, int n_quad);

/// Midpoint-rule integral of |psi(t, x)|^2 dt over the domain. Only massless
/// models qualify: their shape is rigid under propagation, so the temporal
/// integral matches the spatial one. For an eigen-energy (static) density the
/// integral diverges; such models are rejected with std::invalid_argument.
NormResult temporal_norm(const WavefunctionModel& model, double x, Interval domain, int n_quad);

/// |psi(t, 0)|^2 * dt: probability of detection at the origin within (t, t + dt).
double detection_probability(const WavefunctionModel& model, double t, double dt);

}  // namespace relwave
