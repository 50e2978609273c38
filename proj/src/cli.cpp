#include "relwave/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relwave/frame_transform.hpp"
#include "relwave/report_io.hpp"
#include "relwave/tomography.hpp"
#include "relwave/verify.hpp"
#include "relwave/wavepacket.hpp"

namespace relwave::cli {

namespace {

using nlohmann::json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;  // overrides the config file value
    std::optional<std::string> out;     // overrides the config file value
    bool quiet = false;
};

// ---------------------------------------------------------------- validation

void check_keys(const json& j, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ConfigError(ctx + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* a : allowed)
            if (it.key() == a) {
                known = true;
                break;
            }
        if (!known) throw ConfigError(ctx + ": unknown key '" + it.key() + "'");
    }
}

const json& require(const json& j, const char* key, const std::string& ctx) {
    if (!j.is_object() || !j.contains(key))
        throw ConfigError(ctx + ": missing required key '" + key + "'");
    return j.at(key);
}

double as_double(const json& j, const std::string& ctx) {
    if (!j.is_number()) throw ConfigError(ctx + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(ctx + ": value must be finite");
    return v;
}

int as_int(const json& j, const std::string& ctx) {
    if (!j.is_number_integer()) throw ConfigError(ctx + ": expected an integer");
    return j.get<int>();
}

std::int64_t as_int64(const json& j, const std::string& ctx) {
    if (!j.is_number_integer()) throw ConfigError(ctx + ": expected an integer");
    return j.get<std::int64_t>();
}

std::string as_string(const json& j, const std::string& ctx) {
    if (!j.is_string()) throw ConfigError(ctx + ": expected a string");
    return j.get<std::string>();
}

std::vector<double> as_double_array(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.empty()) throw ConfigError(ctx + ": expected a nonempty array");
    std::vector<double> out;
    for (const auto& e : j) out.push_back(as_double(e, ctx));
    return out;
}

// ------------------------------------------------------------ model building

UniformGrid grid_from(const json& j, const std::string& ctx) {
    check_keys(j, ctx, {"k_min", "k_max", "n"});
    try {
        return UniformGrid(as_double(require(j, "k_min", ctx), ctx + ".k_min"),
                           as_double(require(j, "k_max", ctx), ctx + ".k_max"),
                           as_int(require(j, "n", ctx), ctx + ".n"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(ctx + ": " + e.what());
    }
}

std::vector<Complex> values_from(const json& j, int n, const std::string& ctx) {
    const std::vector<double> re = as_double_array(require(j, "values_re", ctx), ctx + ".values_re");
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("values_im")) im = as_double_array(j.at("values_im"), ctx + ".values_im");
    if (static_cast<int>(re.size()) != n || im.size() != re.size())
        throw ConfigError(ctx + ": value arrays must have exactly n entries");
    std::vector<Complex> values(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) values[i] = {re[i], im[i]};
    return values;
}

MomentumAmplitude packet_from(const json& j, const UniformGrid& grid, const std::string& ctx,
                              std::vector<std::string>& warnings) {
    const std::string type = as_string(require(j, "type", ctx), ctx + ".type");
    try {
        if (type == "gaussian") {
            check_keys(j, ctx, {"type", "k0", "sigma"});
            bool truncated = false;
            MomentumAmplitude amp =
                gaussian_packet(as_double(require(j, "k0", ctx), ctx + ".k0"),
                                as_double(require(j, "sigma", ctx), ctx + ".sigma"), grid,
                                &truncated);
            if (truncated)
                warnings.push_back(ctx + ": grid does not cover k0 +- 6 sigma, packet truncated");
            return amp;
        }
        if (type == "modes") {
            check_keys(j, ctx, {"type", "values_re", "values_im"});
            return MomentumAmplitude(grid, values_from(j, grid.size(), ctx));
        }
    } catch (const std::exception& e) {
        throw ConfigError(ctx + ": " + e.what());
    }
    throw ConfigError(ctx + ".type: expected 'gaussian' or 'modes'");
}

SpectralProfile spectral_from(const json& j, const std::string& ctx) {
    check_keys(j, ctx, {"omega_min", "omega_max", "n", "profile"});
    UniformGrid grid = [&] {
        try {
            return UniformGrid(as_double(require(j, "omega_min", ctx), ctx + ".omega_min"),
                               as_double(require(j, "omega_max", ctx), ctx + ".omega_max"),
                               as_int(require(j, "n", ctx), ctx + ".n"));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(ctx + ": " + std::string(e.what()));
        }
    }();
    const json& profile = require(j, "profile", ctx);
    const std::string type = as_string(require(profile, "type", ctx + ".profile"), ctx);
    std::vector<Complex> values;
    if (type == "gaussian") {
        check_keys(profile, ctx + ".profile", {"type", "omega0", "sigma"});
        const double omega0 = as_double(require(profile, "omega0", ctx), ctx + ".omega0");
        const double sigma = as_double(require(profile, "sigma", ctx), ctx + ".sigma");
        if (!(sigma > 0.0)) throw ConfigError(ctx + ".profile.sigma: must be > 0");
        values.resize(grid.size());
        for (int l = 0; l < grid.size(); ++l) {
            const double d = (grid.node(l) - omega0) / sigma;
            values[l] = std::exp(-0.5 * d * d);
        }
    } else if (type == "values") {
        check_keys(profile, ctx + ".profile", {"type", "values_re", "values_im"});
        values = values_from(profile, grid.size(), ctx + ".profile");
    } else {
        throw ConfigError(ctx + ".profile.type: expected 'gaussian' or 'values'");
    }
    return SpectralProfile{grid, std::move(values)};
}

WavefunctionModel model_from(const json& j, std::vector<std::string>& warnings) {
    const std::string ctx = "model";
    check_keys(j, ctx,
               {"family", "grid", "packet", "phase_sign", "omega_e", "spectral", "translate",
                "normalize_on"});
    const std::string family = as_string(require(j, "family", ctx), ctx + ".family");
    UniformGrid grid = grid_from(require(j, "grid", ctx), ctx + ".grid");
    MomentumAmplitude amp = packet_from(require(j, "packet", ctx), grid, ctx + ".packet", warnings);

    std::optional<WavefunctionModel> model;
    try {
        if (family == "massless") {
            if (j.contains("omega_e") || j.contains("spectral"))
                throw ConfigError(ctx + ": massless models take neither omega_e nor spectral");
            int phase_sign = 1;
            if (j.contains("phase_sign"))
                phase_sign = as_int(j.at("phase_sign"), ctx + ".phase_sign");
            model = WavefunctionModel::massless(std::move(amp), phase_sign);
        } else if (family == "eigen") {
            if (j.contains("spectral") || j.contains("phase_sign"))
                throw ConfigError(ctx + ": eigen models take neither spectral nor phase_sign");
            model = WavefunctionModel::eigen_energy(
                as_double(require(j, "omega_e", ctx), ctx + ".omega_e"), std::move(amp));
        } else if (family == "offshell") {
            if (j.contains("omega_e") || j.contains("phase_sign"))
                throw ConfigError(ctx + ": offshell models take neither omega_e nor phase_sign");
            model = WavefunctionModel::off_shell(
                std::move(amp), spectral_from(require(j, "spectral", ctx), ctx + ".spectral"));
        } else {
            throw ConfigError(ctx + ".family: expected 'massless', 'eigen' or 'offshell'");
        }
        if (j.contains("translate"))
            model = model->translated(as_double(j.at("translate"), ctx + ".translate"));
        if (j.contains("normalize_on")) {
            const json& n = j.at("normalize_on");
            check_keys(n, ctx + ".normalize_on", {"t", "x_min", "x_max", "n_quad"});
            model = model->normalized_spatial(
                as_double(require(n, "t", ctx), ctx + ".normalize_on.t"),
                {as_double(require(n, "x_min", ctx), ctx + ".normalize_on.x_min"),
                 as_double(require(n, "x_max", ctx), ctx + ".normalize_on.x_max")},
                as_int(require(n, "n_quad", ctx), ctx + ".normalize_on.n_quad"));
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(ctx + ": " + e.what());
    }
    return *model;
}

struct Lattice {
    std::vector<double> t_values;
    double x_min = 0.0, x_max = 0.0;
    int nx = 0;
    double x(int i) const { return x_min + (x_max - x_min) * i / (nx - 1); }
};

Lattice lattice_from(const json& j) {
    const std::string ctx = "lattice";
    check_keys(j, ctx, {"t_values", "x_min", "x_max", "nx"});
    Lattice lat;
    lat.t_values = as_double_array(require(j, "t_values", ctx), ctx + ".t_values");
    lat.x_min = as_double(require(j, "x_min", ctx), ctx + ".x_min");
    lat.x_max = as_double(require(j, "x_max", ctx), ctx + ".x_max");
    lat.nx = as_int(require(j, "nx", ctx), ctx + ".nx");
    if (!(lat.x_min < lat.x_max)) throw ConfigError(ctx + ": x_min must be < x_max");
    if (lat.nx < 2) throw ConfigError(ctx + ".nx: must be >= 2");
    return lat;
}

NormalizationMode mode_from(const std::string& name, const std::string& ctx) {
    if (name == "momentum_scalar") return NormalizationMode::MomentumScalar;
    if (name == "path_normalized") return NormalizationMode::PathNormalized;
    if (name == "slice_normalized") return NormalizationMode::SliceNormalized;
    throw ConfigError(ctx + ": unknown mode '" + name + "'");
}

struct BoostSection {
    double v = 0.0;
    NormalizationMode mode = NormalizationMode::MomentumScalar;
    QuadratureSpec quad;
};

BoostSection boost_from(const json& j) {
    const std::string ctx = "boost";
    check_keys(j, ctx, {"v", "mode", "quadrature"});
    BoostSection b;
    b.v = as_double(require(j, "v", ctx), ctx + ".v");
    if (!(std::abs(b.v) < 1.0)) throw ConfigError(ctx + ".v: |v| must be < 1");
    if (j.contains("mode")) b.mode = mode_from(as_string(j.at("mode"), ctx + ".mode"), ctx + ".mode");
    const json& q = require(j, "quadrature", ctx);
    check_keys(q, ctx + ".quadrature", {"lo", "hi", "n"});
    b.quad.domain = {as_double(require(q, "lo", ctx), ctx + ".quadrature.lo"),
                     as_double(require(q, "hi", ctx), ctx + ".quadrature.hi")};
    b.quad.n = as_int(require(q, "n", ctx), ctx + ".quadrature.n");
    if (!(b.quad.domain.lo < b.quad.domain.hi) || b.quad.n < 1)
        throw ConfigError(ctx + ".quadrature: need lo < hi and n >= 1");
    return b;
}

// ------------------------------------------------------------------- outputs

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in '" + path + "': " + e.what());
    }
}

// Effective config used for the run: file values with the command-line seed
// override applied and the output directory removed (the echo must not depend
// on where results are written, so reruns into different directories stay
// identical).
json effective_config(json cfg, const CommonArgs& args) {
    cfg.erase("out");
    if (args.seed) cfg["seed"] = *args.seed;
    return cfg;
}

std::filesystem::path output_dir(const json& cfg, const CommonArgs& args) {
    std::string dir;
    if (args.out)
        dir = *args.out;
    else if (cfg.contains("out"))
        dir = as_string(cfg.at("out"), "out");
    if (dir.empty())
        throw ConfigError("no output directory: set 'out' in the config or pass --out");
    std::filesystem::create_directories(dir);
    return dir;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path.string());
    return os;
}

void write_json(const std::filesystem::path& path, const json& j) {
    auto os = open_output(path);
    os << j.dump(2) << "\n";
}

void emit_warnings(const std::vector<std::string>& warnings, const CommonArgs& args) {
    if (args.quiet) return;
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::uint64_t effective_seed(const json& cfg, const CommonArgs& args, std::uint64_t fallback,
                             bool required) {
    if (args.seed) return *args.seed;
    if (cfg.contains("seed")) {
        const json& s = cfg.at("seed");
        if (!s.is_number_unsigned() && !s.is_number_integer())
            throw ConfigError("seed: expected an unsigned integer");
        return s.get<std::uint64_t>();
    }
    if (required) throw ConfigError("seed: required for this command (config key or --seed)");
    return fallback;
}

// ------------------------------------------------------------------ commands

int cmd_packet(const json& cfg, const CommonArgs& args) {
    check_keys(cfg, "packet config", {"model", "lattice", "seed", "out"});
    std::vector<std::string> warnings;
    const WavefunctionModel model = model_from(require(cfg, "model", "packet config"), warnings);
    const Lattice lat = lattice_from(require(cfg, "lattice", "packet config"));
    const std::uint64_t seed = effective_seed(cfg, args, 0, false);
    const auto dir = output_dir(cfg, args);
    json echo = effective_config(cfg, args);
    echo["seed"] = seed;
    emit_warnings(warnings, args);

    auto os = open_output(dir / "packet.csv");
    os << "# " << artifact_name << ' ' << artifact_version << " packet\n";
    os << "# config: " << echo.dump() << "\n";
    os << "t,x,re_psi,im_psi,density\n";
    for (double t : lat.t_values)
        for (int i = 0; i < lat.nx; ++i) {
            const Event e{t, lat.x(i)};
            const Complex psi = model.evaluate(e);
            os << format_double(t) << ',' << format_double(e.x) << ','
               << format_double(psi.real()) << ',' << format_double(psi.imag()) << ','
               << format_double(std::norm(psi)) << "\n";
        }
    if (!args.quiet) std::cout << "packet: wrote " << (dir / "packet.csv").string() << "\n";
    return 0;
}

int cmd_boost(const json& cfg, const CommonArgs& args) {
    check_keys(cfg, "boost config", {"model", "boost", "lattice", "seed", "out"});
    std::vector<std::string> warnings;
    const WavefunctionModel model = model_from(require(cfg, "model", "boost config"), warnings);
    const BoostSection section = boost_from(require(cfg, "boost", "boost config"));
    const Lattice lat = lattice_from(require(cfg, "lattice", "boost config"));
    const Boost b(section.v);

    std::optional<TransformedModel> tm;
    try {
        switch (model.family()) {
            case Family::Massless:
                tm = transform_massless(model, b, section.mode, &section.quad);
                break;
            case Family::EigenEnergy:
                tm = transform_eigen(model, b, section.mode, &section.quad);
                break;
            case Family::OffShell:
                if (section.mode != NormalizationMode::MomentumScalar)
                    throw ConfigError(
                        "boost.mode: off-shell models support only momentum_scalar");
                tm = transform_offshell(model, b);
                break;
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("boost: ") + e.what());
    }

    const double a_path =
        compute_normalization(model, b, NormalizationMode::PathNormalized, section.quad);
    const double a_slice =
        compute_normalization(model, b, NormalizationMode::SliceNormalized, section.quad);
    const double a_scalar =
        compute_normalization(model, b, NormalizationMode::MomentumScalar, section.quad);

    const std::uint64_t seed = effective_seed(cfg, args, 0, false);
    const auto dir = output_dir(cfg, args);
    json echo = effective_config(cfg, args);
    echo["seed"] = seed;
    emit_warnings(warnings, args);

    auto os = open_output(dir / "boost_density.csv");
    os << "# " << artifact_name << ' ' << artifact_version << " boosted density\n";
    os << "# config: " << echo.dump() << "\n";
    os << "t_prime,x_prime,re_psi_prime,im_psi_prime,density_prime\n";
    for (double t : lat.t_values)
        for (int i = 0; i < lat.nx; ++i) {
            const Event e{t, lat.x(i)};
            const Complex psi = tm->evaluate(e);
            os << format_double(t) << ',' << format_double(e.x) << ','
               << format_double(psi.real()) << ',' << format_double(psi.imag()) << ','
               << format_double(std::norm(psi)) << "\n";
        }

    write_json(dir / "boost_summary.json",
               json{{"artifact", artifact_name},
                    {"version", artifact_version},
                    {"command", "boost"},
                    {"config", echo},
                    {"family", to_string(model.family())},
                    {"mode", to_string(section.mode)},
                    {"v", section.v},
                    {"gamma", b.gamma()},
                    {"doppler", b.doppler()},
                    {"A_applied", tm->normalization()},
                    {"A_momentum_scalar", a_scalar},
                    {"A_path_normalized", a_path},
                    {"A_slice_normalized", a_slice},
                    {"extension", tm->extension()}});
    if (!args.quiet) std::cout << "boost: wrote " << (dir / "boost_summary.json").string() << "\n";
    return 0;
}

int cmd_tomo(const json& cfg, const CommonArgs& args) {
    check_keys(cfg, "tomo config", {"model", "tomography", "slices", "seed", "out"});
    std::vector<std::string> warnings;
    const WavefunctionModel model = model_from(require(cfg, "model", "tomo config"), warnings);

    const json& t = require(cfg, "tomography", "tomo config");
    check_keys(t, "tomography", {"samples_per_row", "rows", "dt_d", "dx", "well_length"});
    TomographyConfig tomo;
    tomo.samples_per_row = as_int64(require(t, "samples_per_row", "tomography"),
                                    "tomography.samples_per_row");
    tomo.rows = as_int(require(t, "rows", "tomography"), "tomography.rows");
    tomo.dt_d = as_double(require(t, "dt_d", "tomography"), "tomography.dt_d");
    tomo.dx = as_double(require(t, "dx", "tomography"), "tomography.dx");
    tomo.well_length = as_double(require(t, "well_length", "tomography"), "tomography.well_length");
    tomo.seed = effective_seed(cfg, args, 0, true);
    try {
        tomo.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("tomography: ") + e.what());
    }

    const json& slices_json = require(cfg, "slices", "tomo config");
    if (!slices_json.is_array() || slices_json.empty())
        throw ConfigError("slices: expected a nonempty array of {q, s}");
    std::vector<SliceSpec> slices;
    for (const auto& s : slices_json) {
        check_keys(s, "slices[]", {"q", "s"});
        SliceSpec spec{as_int(require(s, "q", "slices[]"), "slices[].q"),
                       as_int(require(s, "s", "slices[]"), "slices[].s")};
        if (spec.q < 1) throw ConfigError("slices[].q: must be >= 1");
        const double v_b = tomo.dt_d / (spec.q * tomo.dx);
        if (!(v_b < 1.0)) throw ConfigError("slices[]: implied v_B = dt_d/(q dx) must be < 1");
        slices.push_back(spec);
    }

    const auto dir = output_dir(cfg, args);
    json echo = effective_config(cfg, args);
    echo["seed"] = tomo.seed;
    emit_warnings(warnings, args);

    const CountsTable table = simulate(tomo, model);
    {
        auto os = open_output(dir / "counts.csv");
        write_counts_csv(os, table, echo.dump());
    }

    for (const SliceSpec& spec : slices) {
        const SliceData slice = extract_slice(table, spec);
        const double a_est = estimate_A(slice, table);
        const Histogram hist = reconstruct_density(slice, table);
        const Boost b(slice.v_b);
        const double a_sn = compute_normalization(
            model, b, NormalizationMode::SliceNormalized, {{0.0, tomo.well_length}, 4096});
        const auto analytic = [&](double t_prime, double x_prime) {
            return a_sn * a_sn * model.density(boost_event(b.inverse(), {t_prime, x_prime}));
        };
        const ComparisonReport comparison = compare_distributions(hist, analytic);

        json j = to_json(hist, &comparison);
        j["artifact"] = artifact_name;
        j["version"] = artifact_version;
        j["command"] = "tomo";
        j["config"] = echo;
        j["A_estimate"] = a_est;
        j["A_slice_normalized_quadrature"] = a_sn;
        j["t_prime_min"] = slice.t_prime_min();
        j["t_prime_max"] = slice.t_prime_max();
        j["extension"] = model.family() == Family::OffShell;
        write_json(dir / ("slice_q" + std::to_string(spec.q) + "_s" + std::to_string(spec.s) +
                          ".json"),
                   j);
    }
    if (!args.quiet)
        std::cout << "tomo: wrote counts.csv and " << slices.size() << " slice file(s) in "
                  << dir.string() << "\n";
    return 0;
}

int cmd_verify(const json& cfg, const CommonArgs& args) {
    check_keys(cfg, "verify config",
               {"velocities", "event_samples", "fixture_scale", "seed", "out"});
    SuiteConfig suite;
    if (cfg.contains("velocities")) {
        suite.velocities = as_double_array(cfg.at("velocities"), "velocities");
        for (double v : suite.velocities)
            if (!(std::abs(v) < 1.0)) throw ConfigError("velocities: every |v| must be < 1");
    }
    if (cfg.contains("event_samples")) {
        suite.event_samples = as_int(cfg.at("event_samples"), "event_samples");
        if (suite.event_samples < 2) throw ConfigError("event_samples: must be >= 2");
    }
    if (cfg.contains("fixture_scale")) {
        suite.fixture_scale = as_double(cfg.at("fixture_scale"), "fixture_scale");
        if (!(suite.fixture_scale > 0.0)) throw ConfigError("fixture_scale: must be > 0");
    }
    suite.seed = effective_seed(cfg, args, suite.seed, false);

    const auto dir = output_dir(cfg, args);
    json echo = effective_config(cfg, args);
    echo["seed"] = suite.seed;

    const SuiteReport report = run_suite(suite);
    json j = to_json(report);
    j["config"] = echo;
    write_json(dir / "report.json", j);
    {
        auto os = open_output(dir / "report.txt");
        os << "# config: " << echo.dump() << "\n";
        os << text_summary(report);
    }

    if (!args.quiet) {
        std::cout << text_summary(report);
        for (const auto& c : report.checks)
            if (c.status == CheckStatus::Fail)
                std::cout << "FAILING CHECK: " << c.name << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"relwave: Lorentz transformation of 1+1D single-particle wave-functions, "
                 "frame-invariance checks and measurement tomography"};
    app.require_subcommand(1);

    int exit_code = 0;
    auto add_command = [&](const char* name, const char* description, auto handler) {
        CLI::App* sub = app.add_subcommand(name, description);
        auto args = std::make_shared<CommonArgs>();
        sub->add_option("--config", args->config_path, "JSON config file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", args->seed, "override the config seed");
        sub->add_option("--out", args->out, "override the output directory");
        sub->add_flag("--quiet", args->quiet, "suppress console output");
        sub->callback([&exit_code, args, handler] {
            exit_code = handler(load_config(args->config_path), *args);
        });
    };

    add_command("packet", "evaluate a wave-function on a space-time lattice", cmd_packet);
    add_command("boost", "Lorentz-transform a wave-function and report normalizations",
                cmd_boost);
    add_command("tomo", "simulate the counts table and reconstruct boosted densities", cmd_tomo);
    add_command("verify", "run the frame-invariance suite", cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace relwave::cli
