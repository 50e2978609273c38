// Acceptance suite: exercises every top-level requirement end to end and
// prints one PASS/FAIL line per criterion. Returns the number of failures.
//
//   acceptance [--cli PATH] [--work DIR]
//
// --cli points at the relwave binary (used by the determinism criterion);
// --work selects a scratch directory for generated configs and outputs.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "relwave/frame_transform.hpp"
#include "relwave/kinematics.hpp"
#include "relwave/tomography.hpp"
#include "relwave/verify.hpp"
#include "relwave/wavepacket.hpp"

using namespace relwave;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double pi = std::numbers::pi;

int g_failures = 0;

void report(int number, const std::string& label, bool passed, const std::string& detail) {
    std::cout << (passed ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!passed) ++g_failures;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * detail::canonical_double(rng());
}

WavefunctionModel massless_fixture() {
    return WavefunctionModel::massless(gaussian_packet(5.0, 1.0, UniformGrid(0.0, 10.0, 1024)));
}

WavefunctionModel two_mode_fixture() {
    return WavefunctionModel::eigen_energy(
               2.0 * pi, MomentumAmplitude(UniformGrid(-pi, pi, 2), {1.0, -1.0}))
        .normalized_spatial(0.0, {0.0, 1.0}, 4096);
}

WavefunctionModel eigen_gauss_fixture() {
    const double sigma_k = 8.0 * std::numbers::sqrt2;
    return WavefunctionModel::eigen_energy(
               10.0, gaussian_packet(0.0, sigma_k, UniformGrid(-6.0 * sigma_k, 6.0 * sigma_k, 256)))
        .translated(0.5)
        .normalized_spatial(0.0, {0.0, 1.0}, 4096);
}

WavefunctionModel offshell_fixture() {
    const UniformGrid wg(1.0, 5.0, 33);
    std::vector<Complex> eps(wg.size());
    for (int l = 0; l < wg.size(); ++l) {
        const double d = (wg.node(l) - 3.0) / 0.6;
        eps[l] = std::exp(-0.5 * d * d);
    }
    return WavefunctionModel::off_shell(gaussian_packet(3.0, 0.8, UniformGrid(0.0, 6.0, 64)),
                                        SpectralProfile{wg, eps});
}

std::vector<Event> light_cone_events(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Event> events(n);
    for (auto& e : events) {
        const double t = uniform(rng, -2.0, 2.0);
        e = {t, t - uniform(rng, -3.0, 3.0)};
    }
    return events;
}

std::vector<Event> well_events(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Event> events(n);
    for (auto& e : events) e = {uniform(rng, 0.0, 2.0), uniform(rng, 0.15, 0.85)};
    return events;
}

// ---------------------------------------------------------------- criteria

void criterion_1_kinematics() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    const int samples = 10000;
    double worst_round = 0.0, worst_interval = 0.0, worst_shell = 0.0, worst_phase = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Boost b(uniform(rng, -0.9, 0.9));
        const Event e{uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)};
        const FourMomentum p{uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)};

        const Event back = boost_event(b.inverse(), boost_event(b, e));
        worst_round = std::max({worst_round, std::abs(back.t - e.t), std::abs(back.x - e.x)});

        const Event ep = boost_event(b, e);
        worst_interval = std::max(
            worst_interval, std::abs((ep.t * ep.t - ep.x * ep.x) - (e.t * e.t - e.x * e.x)));

        const FourMomentum pp = boost_momentum(b, p);
        worst_shell =
            std::max(worst_shell, std::abs((pp.omega * pp.omega - pp.k * pp.k) -
                                           (p.omega * p.omega - p.k * p.k)));
        worst_phase = std::max(worst_phase, std::abs(phase(pp, ep) - phase(p, e)));
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << "round=" << worst_round << " interval=" << worst_interval
           << " shell=" << worst_shell << " phase=" << worst_phase << " time=" << elapsed << "s";
    report(1, "kinematics invariants over 10^4 random samples",
           worst_round < 1e-12 && worst_interval < 1e-9 && worst_shell < 1e-9 &&
               worst_phase < 1e-9 && elapsed < 1.0,
           detail.str());
}

void criterion_2_dual_normalization() {
    const auto start = std::chrono::steady_clock::now();
    const WavefunctionModel model = massless_fixture();
    const double spatial = spatial_norm(model, 0.0, {-20.0, 20.0}, 8192).value;
    const double temporal = temporal_norm(model, 0.0, {-20.0, 20.0}, 8192).value;
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << "spatial=" << spatial << " temporal=" << temporal << " time=" << elapsed << "s";
    report(2, "dual normalization of the massless Gaussian at n_quad = 8192",
           std::abs(spatial - 1.0) < 1e-6 && std::abs(temporal - 1.0) < 1e-6 && elapsed < 1.0,
           detail.str());
}

void criterion_3_massless_scalar() {
    const WavefunctionModel model = massless_fixture();
    const Boost b(0.5);
    const TransformedModel tm = transform_massless(model, b);
    const std::vector<Event> events = light_cone_events(100, 311);

    double peak = 0.0;
    for (const Event& e : events) peak = std::max(peak, std::abs(model.evaluate(e)));
    std::vector<Complex> ratios;
    Complex mean = 0.0;
    for (const Event& e : events) {
        const Complex psi = model.evaluate(e);
        if (std::abs(psi) < 1e-12 * peak) continue;
        ratios.push_back(tm.evaluate(boost_event(b, e)) / psi);
        mean += ratios.back();
    }
    mean /= static_cast<double>(ratios.size());
    double spread = 0.0;
    for (const Complex& r : ratios)
        spread = std::max(spread, std::abs(r - mean) / std::abs(mean));

    std::ostringstream detail;
    detail << "mean=" << mean.real() << " expected=0.5773502691896257 spread=" << spread
           << " events=" << ratios.size();
    report(3, "massless scalar relation at v = 0.5",
           std::abs(mean.real() - 0.57735026918962573) < 1e-6 && spread <= 1e-6,
           detail.str());
}

void criterion_4_eigen_scalar_and_time_dependence() {
    const WavefunctionModel model = two_mode_fixture();
    const Boost b(0.6);
    const TransformedModel tm = transform_eigen(model, b);
    const std::vector<Event> events = well_events(100, 401);

    Complex mean = 0.0;
    for (const Event& e : events) mean += tm.evaluate(boost_event(b, e)) / model.evaluate(e);
    mean /= static_cast<double>(events.size());

    // Unboosted density static to 1e-12; boosted density visibly varying.
    double lo = model.density({0.0, 0.37}), hi = lo;
    for (int i = 1; i <= 96; ++i) {
        const double d = model.density({i * 0.03, 0.37});
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    const double static_spread = (hi - lo) / hi;

    const double span = 1.2 / (b.gamma() * b.v());
    double blo = tm.density({0.0, 0.3}), bhi = blo, sum = 0.0;
    for (int i = 0; i <= 96; ++i) {
        const double d = tm.density({i * span / 96, 0.3});
        blo = std::min(blo, d);
        bhi = std::max(bhi, d);
        sum += d;
    }
    const double boosted_spread = (bhi - blo) / (sum / 97);

    std::ostringstream detail;
    detail << "mean=" << mean.real() << " expected=1.25 static_spread=" << static_spread
           << " boosted_spread=" << boosted_spread;
    report(4, "eigen-energy scalar relation at v = 0.6 and induced time dependence",
           std::abs(mean.real() - 1.25) < 1e-6 && static_spread < 1e-12 &&
               boosted_spread > 0.01,
           detail.str());
}

void criterion_5_ratio_invariance() {
    struct Case {
        const char* name;
        WavefunctionModel model;
        bool light_cone;
    };
    const std::vector<Case> cases = {{"massless", massless_fixture(), true},
                                     {"eigen", two_mode_fixture(), false},
                                     {"offshell", offshell_fixture(), true}};
    double worst = 0.0;
    std::string worst_at = "-";
    bool ok = true;
    for (double v : {0.3, 0.5, 0.9}) {
        const Boost b(v);
        for (const Case& c : cases) {
            TransformedModel tm = [&] {
                switch (c.model.family()) {
                    case Family::Massless: return transform_massless(c.model, b);
                    case Family::EigenEnergy: return transform_eigen(c.model, b);
                    default: return transform_offshell(c.model, b);
                }
            }();
            const auto events = c.light_cone ? light_cone_events(100, 500 + int(10 * v))
                                             : well_events(100, 500 + int(10 * v));
            for (std::size_t i = 0; i + 1 < events.size(); i += 2) {
                const double d1 = c.model.density(events[i]);
                const double d2 = c.model.density(events[i + 1]);
                if (d1 < 1e-30 || d2 < 1e-30) continue;
                const double r = d1 / d2;
                const double rp = tm.density(boost_event(b, events[i])) /
                                  tm.density(boost_event(b, events[i + 1]));
                const double dev = std::abs(rp - r) / r;
                if (dev > worst) {
                    worst = dev;
                    worst_at = std::string(c.name) + " v=" + std::to_string(v);
                }
                if (dev > 1e-9) ok = false;
            }
        }
    }
    std::ostringstream detail;
    detail << "worst=" << worst << " at " << worst_at;
    report(5, "density-ratio invariance for every family at v in {0.3, 0.5, 0.9}", ok,
           detail.str());
}

void criterion_6_normalization_conflict() {
    const WavefunctionModel model = massless_fixture();
    const Boost b(0.5);
    const double a_path = compute_normalization(model, b, NormalizationMode::PathNormalized,
                                                {{-24.0, 24.0}, 8192});
    const double a_scalar = b.doppler();

    // The suite report must carry the discrepancy as an Info entry.
    SuiteConfig cfg;
    cfg.velocities = {0.5};
    cfg.event_samples = 40;
    cfg.seed = 606;
    const SuiteReport suite = run_suite(cfg);
    bool reported = false;
    for (const CheckResult& c : suite.checks)
        if (c.name == "normalization_conflict/massless_gauss/v=0.5" &&
            c.status == CheckStatus::Info) {
            double ms = 0.0, pn = 0.0;
            for (const auto& [key, value] : c.values) {
                if (key == "A_momentum_scalar") ms = value;
                if (key == "A_path_normalized") pn = value;
            }
            reported = std::abs(ms - a_scalar) < 1e-9 && std::abs(pn - a_path) < 1e-6 &&
                       std::abs(pn - ms) > 0.1;
        }

    std::ostringstream detail;
    detail << "A_path=" << a_path << " expected=0.7598356856515925 A_scalar=" << a_scalar
           << " reported=" << (reported ? "yes" : "no");
    report(6, "the two normalization prescriptions disagree and both are reported",
           std::abs(a_path - 0.75983568565159255) < 1e-4 && reported, detail.str());
}

void criterion_7_tomography() {
    const auto start = std::chrono::steady_clock::now();
    const WavefunctionModel model = eigen_gauss_fixture();

    TomographyConfig cfg;
    cfg.samples_per_row = 20000;
    cfg.rows = 64;
    cfg.dt_d = 1.0 / 64.0;
    cfg.dx = 1.0 / 64.0;
    cfg.well_length = 1.0;

    const Boost b(0.5);  // v_B = dt_d / (2 dx)
    const double a_quad = compute_normalization(model, b, NormalizationMode::SliceNormalized,
                                                {{0.0, 1.0}, 4096});
    const auto analytic = [&](double tp, double xp) {
        return a_quad * a_quad * model.density(boost_event(b.inverse(), {tp, xp}));
    };

    bool rows_ok = true;
    const int n_seeds = 20;
    std::vector<std::vector<double>> estimates(3);  // per shift s in {-1, 0, 1}
    std::vector<std::vector<double>> l1s(3);
    for (int seed = 0; seed < n_seeds; ++seed) {
        cfg.seed = 7000 + seed;
        const CountsTable table = simulate(cfg, model);
        for (const auto& row : table.counts) {
            std::int64_t total = 0;
            for (auto c : row) total += c;
            if (total != cfg.samples_per_row) rows_ok = false;
        }
        for (int si = 0; si < 3; ++si) {
            const SliceData slice = extract_slice(table, {2, si - 1});
            estimates[si].push_back(estimate_A(slice, table));
            l1s[si].push_back(
                compare_distributions(reconstruct_density(slice, table), analytic).l1);
        }
    }

    bool a_ok = true, l1_ok = true;
    std::ostringstream detail;
    detail.precision(4);
    for (int si = 0; si < 3; ++si) {
        double mean = 0.0;
        for (double e : estimates[si]) mean += e;
        mean /= estimates[si].size();
        double var = 0.0;
        for (double e : estimates[si]) var += (e - mean) * (e - mean);
        var /= (estimates[si].size() - 1);
        const double se = std::sqrt(var / estimates[si].size());
        if (std::abs(mean - a_quad) > 3.0 * se) a_ok = false;

        double l1_mean = 0.0;
        for (double l : l1s[si]) l1_mean += l;
        l1_mean /= l1s[si].size();
        if (l1_mean > 0.05) l1_ok = false;
        detail << "s=" << (si - 1) << ": A=" << mean << "+-" << se << " L1=" << l1_mean << "; ";
    }
    detail << "A_quad=" << a_quad;

    // Monte-Carlo convergence: mean L1 over 10 seeds at three sample counts.
    std::vector<double> log_n, log_l1;
    for (std::int64_t n : {std::int64_t(5000), std::int64_t(20000), std::int64_t(80000)}) {
        cfg.samples_per_row = n;
        double mean_l1 = 0.0;
        for (int seed = 0; seed < 10; ++seed) {
            cfg.seed = 7100 + seed;
            const CountsTable table = simulate(cfg, model);
            const SliceData slice = extract_slice(table, {2, 0});
            mean_l1 += compare_distributions(reconstruct_density(slice, table), analytic).l1;
        }
        mean_l1 /= 10.0;
        log_n.push_back(std::log(static_cast<double>(n)));
        log_l1.push_back(std::log(mean_l1));
    }
    const double n3 = 3.0;
    const double sx = log_n[0] + log_n[1] + log_n[2];
    const double sy = log_l1[0] + log_l1[1] + log_l1[2];
    double sxy = 0.0, sxx = 0.0;
    for (int i = 0; i < 3; ++i) {
        sxy += log_n[i] * log_l1[i];
        sxx += log_n[i] * log_n[i];
    }
    const double slope = (n3 * sxy - sx * sy) / (n3 * sxx - sx * sx);

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail << " slope=" << slope << " time=" << elapsed << "s";
    report(7, "tomography end-to-end: counts, A estimate, reconstruction, convergence",
           rows_ok && a_ok && l1_ok && slope > -0.6 && slope < -0.4 && elapsed < 30.0,
           detail.str());
}

void criterion_8_slice_patterns() {
    auto shape_table = [](int rows, int bins) {
        TomographyConfig cfg;
        cfg.samples_per_row = 1;
        cfg.rows = rows;
        cfg.dx = 1.0;
        cfg.dt_d = 0.5;
        cfg.well_length = bins;
        cfg.seed = 0;
        CountsTable table;
        table.config = cfg;
        table.counts.assign(rows + 1, std::vector<std::int64_t>(bins, 1));
        return table;
    };
    auto cells_are = [](const SliceData& slice, std::vector<std::pair<int, int>> expected) {
        if (slice.cells.size() != expected.size()) return false;
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (slice.cells[i].row != expected[i].first ||
                slice.cells[i].col != expected[i].second)
                return false;
        return true;
    };

    const bool orange =
        cells_are(extract_slice(shape_table(2, 3), {1, 0}), {{0, 0}, {1, 1}, {2, 2}});
    const bool blue_mid = cells_are(extract_slice(shape_table(2, 6), {2, 0}),
                                    {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}});
    const bool blue_up = cells_are(extract_slice(shape_table(1, 6), {2, -1}),
                                   {{0, 2}, {0, 3}, {1, 4}, {1, 5}});
    const bool blue_down = cells_are(extract_slice(shape_table(3, 6), {2, 1}),
                                     {{1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 4}, {3, 5}});

    std::ostringstream detail;
    detail << "q1s0=" << orange << " q2s0=" << blue_mid << " q2s-1=" << blue_up
           << " q2s+1=" << blue_down;
    report(8, "staircase slices match the drawn selection patterns exactly",
           orange && blue_mid && blue_up && blue_down, detail.str());
}

void criterion_9_translation() {
    double worst = 0.0;
    for (const auto& [model, shift] : {std::pair{massless_fixture(), 3.0},
                                       std::pair{two_mode_fixture(), 0.25},
                                       std::pair{offshell_fixture(), 0.4}}) {
        const WavefunctionModel moved = translate(model, shift);
        const auto events = light_cone_events(50, 909);
        for (const Event& e : events)
            worst = std::max(worst,
                             std::abs(moved.density({e.t, e.x}) -
                                      model.density({e.t, e.x - shift})));
    }
    std::ostringstream detail;
    detail << "worst=" << worst;
    report(9, "spatial translation invariance", worst < 1e-10, detail.str());
}

std::string slurp(const fs::path& p) {
    std::ostringstream os;
    os << std::ifstream(p, std::ios::binary).rdbuf();
    return os.str();
}

void criterion_10_determinism(const std::string& cli, const fs::path& work) {
    if (cli.empty()) {
        report(10, "byte-identical reruns of every command", false, "no --cli binary given");
        return;
    }
    fs::create_directories(work);

    const json model{{"family", "eigen"},
                     {"grid", {{"k_min", -pi}, {"k_max", pi}, {"n", 2}}},
                     {"packet", {{"type", "modes"}, {"values_re", {1.0, -1.0}}}},
                     {"omega_e", 2.0 * pi},
                     {"normalize_on", {{"t", 0.0}, {"x_min", 0.0}, {"x_max", 1.0}, {"n_quad", 2048}}}};
    const json lattice{{"t_values", {0.0, 0.5}}, {"x_min", 0.0}, {"x_max", 1.0}, {"nx", 64}};

    struct Cmd {
        const char* name;
        json config;
        std::vector<std::string> files;
    };
    std::vector<Cmd> commands = {
        {"packet", json{{"model", model}, {"lattice", lattice}, {"seed", 5}}, {"packet.csv"}},
        {"boost",
         json{{"model", model},
              {"boost", {{"v", 0.5}, {"mode", "momentum_scalar"},
                         {"quadrature", {{"lo", 0.0}, {"hi", 1.0}, {"n", 2048}}}}},
              {"lattice", lattice},
              {"seed", 5}},
         {"boost_density.csv", "boost_summary.json"}},
        {"tomo",
         json{{"model", model},
              {"tomography", {{"samples_per_row", 2000}, {"rows", 8}, {"dt_d", 0.0625},
                              {"dx", 0.0625}, {"well_length", 1.0}}},
              {"slices", {{{"q", 2}, {"s", 0}}}},
              {"seed", 5}},
         {"counts.csv", "slice_q2_s0.json"}},
        {"verify",
         json{{"velocities", {0.0, 0.5}}, {"event_samples", 30}, {"seed", 5}},
         {"report.json", "report.txt"}},
    };

    bool all_ok = true;
    std::string detail;
    for (const Cmd& cmd : commands) {
        const fs::path cfg_path = work / (std::string(cmd.name) + ".json");
        std::ofstream(cfg_path) << cmd.config.dump(2);
        bool ok = true;
        for (int run = 0; run < 2; ++run) {
            const fs::path out = work / (std::string(cmd.name) + "_run" + std::to_string(run));
            std::ostringstream line;
            line << cli << ' ' << cmd.name << " --config " << cfg_path << " --out " << out
                 << " --quiet";
            if (std::system(line.str().c_str()) != 0) ok = false;
        }
        for (const std::string& f : cmd.files) {
            const std::string a = slurp(work / (std::string(cmd.name) + "_run0") / f);
            const std::string bytes = slurp(work / (std::string(cmd.name) + "_run1") / f);
            if (a.empty() || a != bytes) ok = false;
        }
        if (!ok) {
            all_ok = false;
            detail += std::string(cmd.name) + " differs; ";
        }
    }
    report(10, "byte-identical reruns of every command", all_ok,
           all_ok ? "packet, boost, tomo, verify" : detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    fs::path work = fs::temp_directory_path() / "relwave_acceptance";
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--cli") cli = argv[i + 1];
        if (flag == "--work") work = argv[i + 1];
    }

    criterion_1_kinematics();
    criterion_2_dual_normalization();
    criterion_3_massless_scalar();
    criterion_4_eigen_scalar_and_time_dependence();
    criterion_5_ratio_invariance();
    criterion_6_normalization_conflict();
    criterion_7_tomography();
    criterion_8_slice_patterns();
    criterion_9_translation();
    criterion_10_determinism(cli, work);

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: FAILURES: " + std::to_string(g_failures))
              << std::endl;
    return g_failures;
}
