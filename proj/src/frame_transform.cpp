#include "relwave/frame_transform.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace relwave {

const char* to_string(NormalizationMode m) {
    switch (m) {
        case NormalizationMode::MomentumScalar: return "momentum_scalar";
        case NormalizationMode::PathNormalized: return "path_normalized";
        case NormalizationMode::SliceNormalized: return "slice_normalized";
    }
    return "?";
}

namespace {

double momentum_scalar_constant(const WavefunctionModel& model, const Boost& b) {
    switch (model.family()) {
        case Family::Massless: return b.doppler();
        case Family::EigenEnergy: return b.gamma();
        case Family::OffShell: return 1.0;
    }
    return 1.0;
}

// Integrate |A=1 transformed density| along the requested worldline/slice in
// source-frame parametrization; the primed measure contributes 1/gamma.
double normalization_integral(const WavefunctionModel& model, const Boost& b,
                              NormalizationMode mode, const QuadratureSpec& quad,
                              bool* boundary_warning) {
    if (quad.n < 1) throw std::invalid_argument("compute_normalization: n must be >= 1");
    if (!(quad.domain.lo < quad.domain.hi))
        throw std::invalid_argument("compute_normalization: empty quadrature domain");
    const double h = quad.domain.width() / quad.n;
    std::vector<double> samples(quad.n);
    double peak = 0.0;
    for (int i = 0; i < quad.n; ++i) {
        const double c = quad.domain.lo + (i + 0.5) * h;
        // PathNormalized walks Bob's worldline x' = 0 (x = vt); SliceNormalized
        // walks Bob's simultaneity slice t' = 0 (t = vx).
        const Event e = mode == NormalizationMode::PathNormalized ? Event{c, b.v() * c}
                                                                  : Event{b.v() * c, c};
        samples[i] = model.density(e);
        peak = std::max(peak, samples[i]);
    }
    if (boundary_warning)
        *boundary_warning =
            peak > 0.0 && std::max(samples.front(), samples.back()) > 1e-8 * peak;
    return pairwise_sum(samples) * h / b.gamma();
}

}  // namespace

double compute_normalization(const WavefunctionModel& model, const Boost& b,
                             NormalizationMode mode, const QuadratureSpec& quad,
                             bool* boundary_warning) {
    if (boundary_warning) *boundary_warning = false;
    if (mode == NormalizationMode::MomentumScalar) return momentum_scalar_constant(model, b);
    const double integral = normalization_integral(model, b, mode, quad, boundary_warning);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw std::runtime_error("compute_normalization: normalization integral is not positive");
    return 1.0 / std::sqrt(integral);
}

PrimedSynthesis::PrimedSynthesis(std::vector<FourMomentum> nodes, std::vector<Complex> weights,
                                 int phase_sign)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), phase_sign_(phase_sign) {}

Complex PrimedSynthesis::evaluate(const Event& primed) const {
    Complex acc = 0.0;
    const double s = static_cast<double>(phase_sign_);
    for (std::size_t j = 0; j < nodes_.size(); ++j)
        acc += weights_[j] * std::polar(1.0, s * (nodes_[j].omega * primed.t -
                                                  nodes_[j].k * primed.x));
    return acc;
}

TransformedModel::TransformedModel(WavefunctionModel source, double v, double a,
                                   NormalizationMode mode)
    : source_(std::move(source)), v_(v), a_(a), mode_(mode) {}

Complex TransformedModel::evaluate(const Event& primed) const {
    return a_ * source_.evaluate(boost_event(Boost(-v_), primed));
}

double TransformedModel::density(const Event& primed) const {
    return std::norm(evaluate(primed));
}

PrimedSynthesis TransformedModel::primed_synthesis() const {
    const Boost b(v_);
    const UniformGrid& g = source_.amplitude().grid();
    std::vector<FourMomentum> nodes;
    std::vector<Complex> weights;
    const double base = a_ * source_.scale();
    switch (source_.family()) {
        case Family::Massless: {
            for (int j = 0; j < g.size(); ++j) {
                const double k = g.node(j);
                nodes.push_back(boost_momentum(b, {k, k}));
                weights.push_back(base * source_.amplitude().value(j) * g.spacing());
            }
            return PrimedSynthesis(std::move(nodes), std::move(weights), source_.phase_sign());
        }
        case Family::EigenEnergy: {
            for (int j = 0; j < g.size(); ++j) {
                nodes.push_back(boost_momentum(b, {source_.omega_e(), g.node(j)}));
                weights.push_back(base * source_.amplitude().value(j) * g.spacing());
            }
            return PrimedSynthesis(std::move(nodes), std::move(weights), -1);
        }
        case Family::OffShell: {
            const SpectralProfile& eps = source_.spectral();
            const double measure = g.spacing() * eps.grid.spacing();
            for (int l = 0; l < eps.grid.size(); ++l) {
                for (int j = 0; j < g.size(); ++j) {
                    nodes.push_back(boost_momentum(b, {eps.grid.node(l), g.node(j)}));
                    weights.push_back(base * source_.amplitude().value(j) * eps.values[l] *
                                      measure);
                }
            }
            return PrimedSynthesis(std::move(nodes), std::move(weights), -1);
        }
    }
    throw std::logic_error("primed_synthesis: unknown family");
}

WavefunctionModel TransformedModel::materialize_massless() const {
    if (source_.family() != Family::Massless)
        throw std::invalid_argument("materialize_massless: source is not massless");
    const Boost b(v_);
    const double d = b.doppler();
    const UniformGrid& g = source_.amplitude().grid();
    UniformGrid primed_grid(d * g.min(), d * g.max(), g.size());
    std::vector<Complex> values(source_.amplitude().values().begin(),
                                source_.amplitude().values().end());
    // The constructor renormalizes the copied values on the compressed grid
    // (their raw discrete norm there is D); the scale restores A psi.
    WavefunctionModel primed = WavefunctionModel::massless(
        MomentumAmplitude(primed_grid, std::move(values)), source_.phase_sign());
    return primed.rescaled(a_ * source_.scale() / std::sqrt(d));
}

TransformedModel TransformedModel::then_boost(const Boost& next) const {
    if (mode_ != NormalizationMode::MomentumScalar)
        throw std::invalid_argument("then_boost: only MomentumScalar transforms compose");
    const double u = next.v();
    const double combined = (v_ + u) / (1.0 + v_ * u);
    // Measure factor of this step: dk''/dk' = gamma (1 - u m) for a momentum
    // line of slope m; the slope itself transforms like a velocity.
    double step;
    double new_slope = 0.0;
    bool tracks_slope = has_slope_;
    if (has_slope_) {
        step = next.gamma() * (1.0 - u * slope_);
        new_slope = (slope_ - u) / (1.0 - u * slope_);
    } else {
        step = 1.0;  // off-shell: unit area measure at every step
    }
    TransformedModel out(source_, combined, a_ * step, mode_);
    out.extension_ = extension_;
    out.slope_ = new_slope;
    out.has_slope_ = tracks_slope;
    return out;
}

TransformedModel transform_massless(const WavefunctionModel& model, const Boost& b,
                                    NormalizationMode mode, const QuadratureSpec* quad) {
    if (model.family() != Family::Massless)
        throw std::invalid_argument("transform_massless: model is not massless");
    if (model.amplitude().grid().min() < 0.0)
        throw std::invalid_argument("transform_massless: grid contains k < 0 modes");
    double a;
    if (mode == NormalizationMode::MomentumScalar) {
        a = b.doppler();
    } else {
        if (!quad)
            throw std::invalid_argument(
                "transform_massless: normalized modes need quadrature settings");
        a = compute_normalization(model, b, mode, *quad);
    }
    TransformedModel out(model, b.v(), a, mode);
    out.slope_ = 1.0;  // omega = k for right-movers
    out.has_slope_ = true;
    return out;
}

TransformedModel transform_eigen(const WavefunctionModel& model, const Boost& b,
                                 NormalizationMode mode, const QuadratureSpec* quad) {
    if (model.family() != Family::EigenEnergy)
        throw std::invalid_argument("transform_eigen: model is not eigen-energy");
    double a;
    if (mode == NormalizationMode::MomentumScalar) {
        a = b.gamma();
    } else {
        if (!quad)
            throw std::invalid_argument(
                "transform_eigen: normalized modes need quadrature settings");
        a = compute_normalization(model, b, mode, *quad);
    }
    TransformedModel out(model, b.v(), a, mode);
    // The boosted line omega'(k') = omega_E / gamma - v k' is off-shell with
    // slope -v; tracked so a return boost restores the identity.
    out.slope_ = -b.v();
    out.has_slope_ = true;
    return out;
}

TransformedModel transform_offshell(const WavefunctionModel& model, const Boost& b) {
    if (model.family() != Family::OffShell)
        throw std::invalid_argument("transform_offshell: model is not off-shell");
    TransformedModel out(model, b.v(), 1.0, NormalizationMode::MomentumScalar);
    out.extension_ = true;
    return out;
}

WavefunctionModel translate(const WavefunctionModel& model, double a) {
    return model.translated(a);
}

}  // namespace relwave
