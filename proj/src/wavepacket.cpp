#include "relwave/wavepacket.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace relwave {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

UniformGrid::UniformGrid(double min, double max, int n) : min_(min), max_(max), n_(n) {
    if (!(std::isfinite(min) && std::isfinite(max)))
        throw std::invalid_argument("UniformGrid: bounds must be finite");
    if (!(min < max)) throw std::invalid_argument("UniformGrid: min must be < max");
    if (n < 2) throw std::invalid_argument("UniformGrid: need at least 2 nodes");
    spacing_ = (max - min) / static_cast<double>(n - 1);
}

MomentumAmplitude::MomentumAmplitude(UniformGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.size())
        throw std::invalid_argument("MomentumAmplitude: value count must match grid");
    std::vector<double> sq(values_.size());
    for (std::size_t j = 0; j < values_.size(); ++j) sq[j] = std::norm(values_[j]);
    const double norm = two_pi * pairwise_sum(sq) * grid_.spacing();
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw std::invalid_argument("MomentumAmplitude: values must have positive finite norm");
    const double rescale = 1.0 / std::sqrt(norm);
    for (auto& v : values_) v *= rescale;
}

double MomentumAmplitude::discrete_norm() const {
    std::vector<double> sq(values_.size());
    for (std::size_t j = 0; j < values_.size(); ++j) sq[j] = std::norm(values_[j]);
    return two_pi * pairwise_sum(sq) * grid_.spacing();
}

MomentumAmplitude gaussian_packet(double k0, double sigma, const UniformGrid& grid,
                                  bool* truncated) {
    if (!(sigma > 0.0)) throw std::domain_error("gaussian_packet: sigma must be > 0");
    if (truncated) *truncated = grid.min() > k0 - 6.0 * sigma || grid.max() < k0 + 6.0 * sigma;
    std::vector<Complex> values(grid.size());
    for (int j = 0; j < grid.size(); ++j) {
        const double d = (grid.node(j) - k0) / sigma;
        values[j] = std::exp(-0.5 * d * d);
    }
    return MomentumAmplitude(grid, std::move(values));
}

const char* to_string(Family f) {
    switch (f) {
        case Family::Massless: return "massless";
        case Family::EigenEnergy: return "eigen_energy";
        case Family::OffShell: return "off_shell";
    }
    return "?";
}

WavefunctionModel::WavefunctionModel(Family f, MomentumAmplitude phi, int phase_sign)
    : family_(f), phi_(std::move(phi)), phase_sign_(phase_sign) {}

WavefunctionModel WavefunctionModel::massless(MomentumAmplitude phi, int phase_sign) {
    if (phi.grid().min() < 0.0)
        throw std::invalid_argument(
            "massless model: grid must satisfy k >= 0 (all modes right-moving)");
    if (phase_sign != 1 && phase_sign != -1)
        throw std::invalid_argument("massless model: phase_sign must be +1 or -1");
    return WavefunctionModel(Family::Massless, std::move(phi), phase_sign);
}

WavefunctionModel WavefunctionModel::eigen_energy(double omega_e, MomentumAmplitude phi) {
    if (!std::isfinite(omega_e))
        throw std::invalid_argument("eigen_energy model: omega_E must be finite");
    WavefunctionModel m(Family::EigenEnergy, std::move(phi), -1);
    m.omega_e_ = omega_e;
    return m;
}

WavefunctionModel WavefunctionModel::off_shell(MomentumAmplitude phi, SpectralProfile eps) {
    if (static_cast<int>(eps.values.size()) != eps.grid.size())
        throw std::invalid_argument("off_shell model: eps value count must match grid");
    WavefunctionModel m(Family::OffShell, std::move(phi), -1);
    m.eps_ = std::move(eps);
    return m;
}

Complex WavefunctionModel::evaluate(const Event& e) const {
    const UniformGrid& g = phi_.grid();
    switch (family_) {
        case Family::Massless: {
            // omega = |k| = k on the k >= 0 grid, so the phase is s k (t - x).
            const double u = static_cast<double>(phase_sign_) * (e.t - e.x);
            return scale_ * g.spacing() * phased_sum(phi_.values(), g.min() * u, g.spacing() * u);
        }
        case Family::EigenEnergy: {
            const Complex spatial =
                g.spacing() * phased_sum(phi_.values(), g.min() * e.x, g.spacing() * e.x);
            return scale_ * std::polar(1.0, -omega_e_ * e.t) * spatial;
        }
        case Family::OffShell: {
            // The double sum factorizes into independent k and omega sums.
            const Complex spatial =
                g.spacing() * phased_sum(phi_.values(), g.min() * e.x, g.spacing() * e.x);
            const UniformGrid& w = eps_->grid;
            const Complex temporal =
                w.spacing() * phased_sum(eps_->values, -w.min() * e.t, -w.spacing() * e.t);
            return scale_ * spatial * temporal;
        }
    }
    return 0.0;
}

double WavefunctionModel::density(const Event& e) const { return std::norm(evaluate(e)); }

WavefunctionModel WavefunctionModel::rescaled(double factor) const {
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw std::domain_error("rescaled: factor must be positive and finite");
    WavefunctionModel m = *this;
    m.scale_ *= factor;
    return m;
}

WavefunctionModel WavefunctionModel::translated(double a) const {
    // Exponent conventions differ per family: the massless form carries
    // e^{-i s k x}, the other two carry e^{+i k x}. The shift phase follows.
    const double sign = family_ == Family::Massless ? static_cast<double>(phase_sign_) : -1.0;
    const UniformGrid& g = phi_.grid();
    std::vector<Complex> shifted(phi_.values().begin(), phi_.values().end());
    for (int j = 0; j < g.size(); ++j) shifted[j] *= std::polar(1.0, sign * g.node(j) * a);
    WavefunctionModel m = *this;
    m.phi_ = MomentumAmplitude(g, std::move(shifted));
    return m;
}

WavefunctionModel WavefunctionModel::normalized_spatial(double t, Interval domain,
                                                        int n_quad) const {
    const double norm = spatial_norm(*this, t, domain, n_quad).value;
    if (!(norm > 0.0))
        throw std::runtime_error("normalized_spatial: vanishing norm over the domain");
    return rescaled(1.0 / std::sqrt(norm));
}

namespace {

NormResult midpoint_density_integral(const WavefunctionModel& model, Interval domain, int n_quad,
                                     bool integrate_time, double fixed_coord) {
    if (n_quad < 1) throw std::invalid_argument("norm: n_quad must be >= 1");
    if (!(domain.lo < domain.hi)) throw std::invalid_argument("norm: empty domain");
    const double h = domain.width() / n_quad;
    std::vector<double> samples(n_quad);
    double peak = 0.0;
    for (int i = 0; i < n_quad; ++i) {
        const double c = domain.lo + (i + 0.5) * h;
        const Event e = integrate_time ? Event{c, fixed_coord} : Event{fixed_coord, c};
        samples[i] = model.density(e);
        peak = std::max(peak, samples[i]);
    }
    NormResult r;
    r.value = pairwise_sum(samples) * h;
    r.boundary_warning = peak > 0.0 && std::max(samples.front(), samples.back()) > 1e-8 * peak;
    return r;
}

}  // namespace

NormResult spatial_norm(const WavefunctionModel& model, double t, Interval domain, int n_quad) {
    return midpoint_density_integral(model, domain, n_quad, false, t);
}

NormResult temporal_norm(const WavefunctionModel& model, double x, Interval domain, int n_quad) {
    if (model.family() != Family::Massless)
        throw std::invalid_argument(
            "temporal_norm: only massless (rigid-shape) models have a finite temporal norm; "
            "eigen-energy and off-shell densities do not pass the detector once");
    return midpoint_density_integral(model, domain, n_quad, true, x);
}

double detection_probability(const WavefunctionModel& model, double t, double dt) {
    if (dt < 0.0) throw std::domain_error("detection_probability: dt must be >= 0");
    return model.density({t, 0.0}) * dt;
}

}  // namespace relwave
