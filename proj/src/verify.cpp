#include "relwave/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace relwave {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Info: return "INFO";
    }
    return "?";
}

bool recompute_passed(const CheckResult& r) {
    if (r.status == CheckStatus::Info) return true;
    if (r.compare == "rel")
        return std::abs(r.observed - r.expected) <= r.tolerance * std::abs(r.expected);
    if (r.compare == "at_least") return r.observed >= r.expected;
    return std::abs(r.observed - r.expected) <= r.tolerance;
}

bool SuiteReport::all_passed() const { return failures() == 0; }

int SuiteReport::failures() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) ++n;
    return n;
}

namespace {

constexpr double pi = std::numbers::pi;

void finalize(CheckResult& r) {
    if (r.status != CheckStatus::Info)
        r.status = recompute_passed(r) ? CheckStatus::Pass : CheckStatus::Fail;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * detail::canonical_double(rng());
}

TransformedModel scalar_transform(const WavefunctionModel& model, const Boost& b) {
    switch (model.family()) {
        case Family::Massless: return transform_massless(model, b);
        case Family::EigenEnergy: return transform_eigen(model, b);
        case Family::OffShell: return transform_offshell(model, b);
    }
    throw std::logic_error("unknown family");
}

double closed_form_A(Family f, const Boost& b) {
    switch (f) {
        case Family::Massless: return b.doppler();
        case Family::EigenEnergy: return b.gamma();
        case Family::OffShell: return 1.0;
    }
    return 1.0;
}

}  // namespace

CheckResult check_dual_normalization(const WavefunctionModel& massless,
                                     const QuadratureSpec& quad) {
    const NormResult spatial = spatial_norm(massless, 0.0, quad.domain, quad.n);
    const NormResult temporal = temporal_norm(massless, 0.0, quad.domain, quad.n);
    CheckResult r;
    r.name = "dual_normalization";
    r.observed = std::abs(spatial.value - 1.0) >= std::abs(temporal.value - 1.0)
                     ? spatial.value
                     : temporal.value;
    r.expected = 1.0;
    r.tolerance = 1e-6;
    r.compare = "abs";
    r.values = {{"spatial_norm", spatial.value},
                {"temporal_norm", temporal.value},
                {"boundary_warning", spatial.boundary_warning || temporal.boundary_warning ? 1.0
                                                                                           : 0.0}};
    if (spatial.boundary_warning || temporal.boundary_warning)
        r.notes = "boundary density above 1e-8 of peak: domain too small";
    finalize(r);
    return r;
}

CheckResult check_ratio_invariance(const WavefunctionModel& model, const Boost& b,
                                   std::span<const std::pair<Event, Event>> pairs) {
    const TransformedModel tm = scalar_transform(model, b);
    double worst = 0.0;
    int skipped = 0;
    for (const auto& [e1, e2] : pairs) {
        const double d1 = model.density(e1);
        const double d2 = model.density(e2);
        if (d1 < 1e-30 || d2 < 1e-30) {
            ++skipped;
            continue;
        }
        const double ratio = d1 / d2;
        const double primed_ratio = tm.density(boost_event(b, e1)) / tm.density(boost_event(b, e2));
        worst = std::max(worst, std::abs(primed_ratio - ratio) / std::abs(ratio));
    }
    CheckResult r;
    r.name = "ratio_invariance";
    r.observed = worst;
    r.expected = 0.0;
    r.tolerance = 1e-9;
    r.compare = "abs";
    r.values = {{"pairs", static_cast<double>(pairs.size())},
                {"skipped_low_density", static_cast<double>(skipped)}};
    if (skipped > 0) r.notes = "pairs with density below 1e-30 were skipped";
    finalize(r);
    return r;
}

CheckResult check_scalar_relation(const WavefunctionModel& model, const Boost& b,
                                  std::span<const Event> events) {
    const TransformedModel tm = scalar_transform(model, b);
    double peak = 0.0;
    std::vector<Complex> amplitudes(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
        amplitudes[i] = model.evaluate(events[i]);
        peak = std::max(peak, std::abs(amplitudes[i]));
    }
    std::vector<Complex> ratios;
    int excluded = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (std::abs(amplitudes[i]) < 1e-12 * peak) {
            ++excluded;
            continue;
        }
        ratios.push_back(tm.evaluate(boost_event(b, events[i])) / amplitudes[i]);
    }
    Complex mean = 0.0;
    for (const auto& ratio : ratios) mean += ratio;
    mean /= static_cast<double>(ratios.size());
    double spread = 0.0;
    for (const auto& ratio : ratios)
        spread = std::max(spread, std::abs(ratio - mean) / std::abs(mean));

    CheckResult r;
    r.name = "scalar_relation";
    r.observed = mean.real();
    r.expected = closed_form_A(model.family(), b);
    r.tolerance = 1e-6;
    r.compare = "abs";
    r.values = {{"relative_spread", spread},
                {"mean_imag", mean.imag()},
                {"events_excluded", static_cast<double>(excluded)}};
    if (model.family() == Family::OffShell)
        r.notes = "EXTENSION: the off-shell transformation rule is not fixed by the framework";
    finalize(r);
    return r;
}

CheckResult check_doppler_measures(const WavefunctionModel& massless, const Boost& b,
                                   const QuadratureSpec& quad) {
    if (massless.family() != Family::Massless)
        throw std::invalid_argument("check_doppler_measures: massless fixture required");
    const double h = quad.domain.width() / quad.n;
    std::vector<double> along_path(quad.n), along_detector(quad.n);
    for (int i = 0; i < quad.n; ++i) {
        const double t = quad.domain.lo + (i + 0.5) * h;
        along_path[i] = massless.density({t, b.v() * t});
        along_detector[i] = massless.density({t, 0.0});
    }
    // Worldline integral with A = 1, in Bob's proper-time measure dt' = dt/gamma.
    const double path_integral = pairwise_sum(along_path) * h / b.gamma();
    // Temporal norm of the source packet at the detector.
    const double temporal = pairwise_sum(along_detector) * h;
    const double a_scalar = b.doppler();
    const double a_path = 1.0 / std::sqrt(path_integral);
    const double swept = std::sqrt((1.0 + b.v()) / (1.0 - b.v()));

    const double path_ms = a_scalar * a_scalar * path_integral;
    const double path_pn = a_path * a_path * path_integral;
    // Swept-length measure: the detector-crossing total, reading the interval
    // in the formula as Alice's dt or as Bob's dt' (= gamma dt on the detector
    // worldline). Both are computed; neither is declared correct.
    const double swept_dt_pn = a_path * a_path * swept * temporal;
    const double swept_dtp_pn = a_path * a_path * swept * b.gamma() * temporal;

    CheckResult r;
    r.name = "doppler_measures";
    r.status = CheckStatus::Info;
    r.values = {{"path_integral_momentum_scalar", path_ms},
                {"path_integral_path_normalized", path_pn},
                {"swept_dt_path_normalized", swept_dt_pn},
                {"swept_dt_prime_path_normalized", swept_dtp_pn},
                {"A_momentum_scalar", a_scalar},
                {"A_path_normalized", a_path}};
    std::ostringstream unity;
    unity << "equal to 1 within 1e-4:";
    for (const auto& [name, value] : r.values)
        if (name.rfind("A_", 0) != 0 && std::abs(value - 1.0) <= 1e-4) unity << ' ' << name;
    r.notes = unity.str();
    return r;
}

namespace {

struct Fixture {
    std::string name;
    WavefunctionModel model;
    Interval event_t;  // sampling windows for probe events
    Interval event_x;
    bool light_cone_window;  // massless: sample x = t - u with u in event_x
    double translation_shift;
};

std::vector<Fixture> standard_fixtures(double massless_scale,
                                       std::vector<std::string>* descriptions) {
    std::vector<Fixture> fixtures;

    UniformGrid mg_grid(0.0, 10.0, 1024);
    WavefunctionModel mg = WavefunctionModel::massless(gaussian_packet(5.0, 1.0, mg_grid));
    if (massless_scale != 1.0) mg = mg.rescaled(massless_scale);
    fixtures.push_back({"massless_gauss", mg, {-2.0, 2.0}, {-3.0, 3.0}, true, 3.0});

    WavefunctionModel two_mode =
        WavefunctionModel::eigen_energy(2.0 * pi,
                                        MomentumAmplitude(UniformGrid(-pi, pi, 2), {1.0, -1.0}))
            .normalized_spatial(0.0, {0.0, 1.0}, 4096);
    fixtures.push_back({"eigen_two_mode", two_mode, {0.0, 2.0}, {0.1, 0.9}, false, 0.25});

    const double sigma_k = 8.0 * std::numbers::sqrt2;  // spatial width 1/16
    UniformGrid eg_grid(-6.0 * sigma_k, 6.0 * sigma_k, 256);
    WavefunctionModel eigen_gauss =
        WavefunctionModel::eigen_energy(10.0, gaussian_packet(0.0, sigma_k, eg_grid))
            .translated(0.5)
            .normalized_spatial(0.0, {0.0, 1.0}, 4096);
    fixtures.push_back({"eigen_gauss", eigen_gauss, {0.0, 2.0}, {0.25, 0.75}, false, 0.2});

    UniformGrid os_kgrid(0.0, 6.0, 64);
    UniformGrid os_wgrid(1.0, 5.0, 33);
    std::vector<Complex> eps_values(os_wgrid.size());
    for (int l = 0; l < os_wgrid.size(); ++l) {
        const double d = (os_wgrid.node(l) - 3.0) / 0.6;
        eps_values[l] = std::exp(-0.5 * d * d);
    }
    WavefunctionModel off_shell = WavefunctionModel::off_shell(
        gaussian_packet(3.0, 0.8, os_kgrid), SpectralProfile{os_wgrid, std::move(eps_values)});
    fixtures.push_back({"offshell_small", off_shell, {-1.2, 1.2}, {-1.2, 1.2}, false, 0.4});

    if (descriptions) {
        std::ostringstream mg_desc;
        mg_desc << "massless_gauss: Gaussian phi(k), k0=5, sigma=1, grid [0,10] n=1024, scale="
                << massless_scale;
        descriptions->push_back(mg_desc.str());
        descriptions->push_back(
            "eigen_two_mode: modes k = {-pi, +pi}, amplitudes {1, -1}, omega_E = 2 pi, "
            "unit spatial norm on [0,1] (density ~ sin^2(pi x))");
        descriptions->push_back(
            "eigen_gauss: Gaussian phi(k), k0=0, sigma=11.3137 (spatial width 1/16), n=256, "
            "recentred at x=0.5, omega_E=10, unit spatial norm on [0,1]");
        descriptions->push_back(
            "offshell_small: phi Gaussian (k0=3, sigma=0.8) on [0,6] n=64; eps Gaussian "
            "(omega0=3, sigma=0.6) on [1,5] n=33, eps unnormalized");
    }
    return fixtures;
}

std::vector<Event> sample_events(const Fixture& fix, int n, std::mt19937_64& rng) {
    std::vector<Event> events(n);
    for (auto& e : events) {
        const double t = uniform(rng, fix.event_t.lo, fix.event_t.hi);
        const double second = uniform(rng, fix.event_x.lo, fix.event_x.hi);
        e = fix.light_cone_window ? Event{t, t - second} : Event{t, second};
    }
    return events;
}

std::string velocity_tag(double v) {
    std::ostringstream os;
    os << "v=" << v;
    return os.str();
}

QuadratureSpec massless_worldline_quad(double v) {
    const double reach = std::max(20.0, 8.0 / (1.0 - std::abs(v)));
    return {{-reach, reach}, 8192};
}

CheckResult eigen_static_check(const Fixture& fix) {
    double worst = 0.0;
    for (double x : {0.3, 0.5, 0.7}) {
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (int i = 0; i <= 64; ++i) {
            const double d = fix.model.density({i * (2.0 / 64.0), x});
            if (first) {
                lo = hi = d;
                first = false;
            } else {
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
        }
        if (hi > 0.0) worst = std::max(worst, (hi - lo) / hi);
    }
    CheckResult r;
    r.name = "eigen_density_static_unboosted/" + fix.name;
    r.observed = worst;
    r.expected = 0.0;
    r.tolerance = 1e-12;
    r.compare = "abs";
    r.notes = "relative density spread over t in [0,2] at x in {0.3, 0.5, 0.7}";
    finalize(r);
    return r;
}

CheckResult eigen_time_dependence_check(const Fixture& fix, const Boost& b) {
    const TransformedModel tm = transform_eigen(fix.model, b);
    // Sweep enough primed time that the static fringe pattern passes by.
    const double span = 1.2 / (b.gamma() * std::abs(b.v()));
    const double x_prime = 0.3;
    double lo = 0.0, hi = 0.0, sum = 0.0;
    const int steps = 96;
    for (int i = 0; i <= steps; ++i) {
        const double d = tm.density({i * span / steps, x_prime});
        if (i == 0) {
            lo = hi = d;
        } else {
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        sum += d;
    }
    const double mean = sum / (steps + 1);
    CheckResult r;
    r.name = "eigen_density_time_dependent_boosted/" + fix.name + "/" + velocity_tag(b.v());
    r.observed = mean > 0.0 ? (hi - lo) / mean : 0.0;
    r.expected = 0.01;
    r.compare = "at_least";
    r.notes = "relative spread of the boosted density across t' at fixed x'";
    finalize(r);
    return r;
}

CheckResult translation_check(const Fixture& fix, std::mt19937_64& rng) {
    const WavefunctionModel shifted = translate(fix.model, fix.translation_shift);
    std::mt19937_64 local(rng());
    const std::vector<Event> probes = sample_events(fix, 40, local);
    double worst = 0.0;
    for (const Event& e : probes)
        worst = std::max(worst, std::abs(shifted.density({e.t, e.x}) -
                                         fix.model.density({e.t, e.x - fix.translation_shift})));
    CheckResult r;
    r.name = "translation_invariance/" + fix.name;
    r.observed = worst;
    r.expected = 0.0;
    r.tolerance = 1e-10;
    r.compare = "abs";
    r.values = {{"shift", fix.translation_shift}};
    finalize(r);
    return r;
}

CheckResult composition_check(const Fixture& fix, const Boost& b, std::mt19937_64& rng) {
    const TransformedModel round_trip = scalar_transform(fix.model, b).then_boost(b.inverse());
    std::mt19937_64 local(rng());
    const std::vector<Event> probes = sample_events(fix, 40, local);
    double worst = 0.0;
    for (const Event& e : probes) {
        const double original = fix.model.density(e);
        if (original < 1e-30) continue;
        worst = std::max(worst, std::abs(round_trip.density(e) - original) / original);
    }
    CheckResult r;
    r.name = "composition_roundtrip/" + fix.name + "/" + velocity_tag(b.v());
    r.observed = worst;
    r.expected = 0.0;
    r.tolerance = 1e-9;
    r.compare = "abs";
    finalize(r);
    return r;
}

CheckResult phase_invariance_check(const Boost& b, int samples, std::mt19937_64& rng) {
    std::mt19937_64 local(rng());
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const FourMomentum p{uniform(local, -10.0, 10.0), uniform(local, -10.0, 10.0)};
        const Event e{uniform(local, -10.0, 10.0), uniform(local, -10.0, 10.0)};
        worst = std::max(worst,
                         std::abs(phase(boost_momentum(b, p), boost_event(b, e)) - phase(p, e)));
    }
    CheckResult r;
    r.name = "kinematics_phase_invariance/" + velocity_tag(b.v());
    r.observed = worst;
    r.expected = 0.0;
    r.tolerance = 1e-9;
    r.compare = "abs";
    r.values = {{"samples", static_cast<double>(samples)}};
    finalize(r);
    return r;
}

CheckResult massless_conflict_info(const WavefunctionModel& mg, const Boost& b) {
    const QuadratureSpec quad = massless_worldline_quad(b.v());
    const double a_ms = b.doppler();
    const double a_pn = compute_normalization(mg, b, NormalizationMode::PathNormalized, quad);
    const double a_sn = compute_normalization(mg, b, NormalizationMode::SliceNormalized, quad);
    CheckResult r;
    r.name = "normalization_conflict/massless_gauss/" + velocity_tag(b.v());
    r.status = CheckStatus::Info;
    r.values = {{"A_momentum_scalar", a_ms},
                {"A_path_normalized", a_pn},
                {"A_slice_normalized", a_sn},
                {"ratio_path_to_scalar", a_pn / a_ms}};
    r.notes =
        "the constructive momentum-scalar rule and the worldline normalization demand "
        "different A for the same packet; both are reported, neither is chosen";
    return r;
}

CheckResult eigen_conflict_info(const WavefunctionModel& eg, const Boost& b) {
    const QuadratureSpec quad{{0.0, 1.0}, 4096};
    const double a_ms = b.gamma();
    const double a_sn = compute_normalization(eg, b, NormalizationMode::SliceNormalized, quad);
    CheckResult r;
    r.name = "normalization_conflict/eigen_gauss/" + velocity_tag(b.v());
    r.status = CheckStatus::Info;
    r.values = {{"A_momentum_scalar", a_ms},
                {"A_slice_normalized", a_sn},
                {"ratio_slice_to_scalar", a_sn / a_ms}};
    r.notes = "slice normalization of a well state gives sqrt(gamma), the momentum-scalar "
              "rule gives gamma; the same ambiguity as for massless packets";
    return r;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.config = config;
    std::mt19937_64 rng(config.seed);
    std::vector<Fixture> fixtures = standard_fixtures(config.fixture_scale, &report.fixtures);
    const Fixture& mg = fixtures[0];

    report.checks.push_back([&] {
        CheckResult r = check_dual_normalization(mg.model, {{-20.0, 20.0}, 8192});
        r.name = "dual_normalization/massless_gauss";
        return r;
    }());

    for (const Fixture& fix : fixtures) {
        if (fix.model.family() == Family::EigenEnergy)
            report.checks.push_back(eigen_static_check(fix));
        report.checks.push_back(translation_check(fix, rng));
    }

    for (double v : config.velocities) {
        const Boost b(v);
        report.checks.push_back(phase_invariance_check(b, config.event_samples, rng));

        for (const Fixture& fix : fixtures) {
            std::mt19937_64 local(rng());
            const std::vector<Event> events = sample_events(fix, config.event_samples, local);
            std::vector<std::pair<Event, Event>> pairs;
            for (std::size_t i = 0; i + 1 < events.size(); i += 2)
                pairs.emplace_back(events[i], events[i + 1]);

            CheckResult ratio = check_ratio_invariance(fix.model, b, pairs);
            ratio.name = "ratio_invariance/" + fix.name + "/" + velocity_tag(v);
            report.checks.push_back(std::move(ratio));

            CheckResult scalar = check_scalar_relation(fix.model, b, events);
            const bool extension = fix.model.family() == Family::OffShell;
            const std::string base =
                extension ? "scalar_relation_extension" : "scalar_relation";
            scalar.name = base + ".mean/" + fix.name + "/" + velocity_tag(v);
            CheckResult spread;
            spread.name = base + ".spread/" + fix.name + "/" + velocity_tag(v);
            spread.observed = scalar.values[0].second;
            spread.expected = 0.0;
            spread.tolerance = 1e-6;
            spread.compare = "abs";
            if (extension) spread.notes = scalar.notes;
            finalize(spread);
            report.checks.push_back(std::move(scalar));
            report.checks.push_back(std::move(spread));

            report.checks.push_back(composition_check(fix, b, rng));

            if (fix.name == "eigen_two_mode" && v != 0.0)
                report.checks.push_back(eigen_time_dependence_check(fix, b));
        }

        report.checks.push_back([&] {
            CheckResult r = check_doppler_measures(mg.model, b, massless_worldline_quad(v));
            r.name = "doppler_measures/massless_gauss/" + velocity_tag(v);
            return r;
        }());
        report.checks.push_back(massless_conflict_info(mg.model, b));
        report.checks.push_back(eigen_conflict_info(fixtures[2].model, b));
    }

    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return report;
}

}  // namespace relwave
