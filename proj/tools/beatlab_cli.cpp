// beatlab_cli.cpp — command-line front end: spectra, traces, beat extraction,
// N sweeps, detuning scans, and the verification suite

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "beatlab/experiment.hpp"
#include "beatlab/verification.hpp"

namespace {

using namespace beatlab;
using nlohmann::json;

struct CommonOptions {
    std::string config_file;
    std::vector<std::string> models;
    int n_tls = -1;
    double g = -1.0, omega_c = -1.0, omega_m = -1.0;
    int cutoff = -2;
    double t_max = -1.0, dt = -1.0;
    std::string init;
    std::string out_dir;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_file, "JSON config file (flags override)");
    cmd->add_option("--model", opts.models, "model kind(s): tc, dm, pf");
    cmd->add_option("--n-tls", opts.n_tls, "number of two-level systems N");
    cmd->add_option("--g", opts.g, "coupling strength");
    cmd->add_option("--omega-c", opts.omega_c, "cavity frequency");
    cmd->add_option("--omega-m", opts.omega_m, "TLS frequency");
    cmd->add_option("--cutoff", opts.cutoff, "Fock cutoff n_max (default N + 6)");
    cmd->add_option("--t-max", opts.t_max, "trace end time");
    cmd->add_option("--dt", opts.dt, "trace sample spacing");
    cmd->add_option("--init", opts.init, "initial state k,n (default 2,0)");
    cmd->add_option("--out", opts.out_dir, "output directory");
}

ExperimentConfig resolve_config(const CommonOptions& opts) {
    ExperimentConfig config;
    if (!opts.config_file.empty()) config = ExperimentConfig::from_json_file(opts.config_file);
    if (!opts.models.empty()) {
        config.models.clear();
        for (const std::string& m : opts.models) config.models.push_back(parse_model_kind(m));
    }
    if (opts.n_tls > 0) config.params.n_tls = opts.n_tls;
    if (opts.g >= 0.0) config.params.g = opts.g;
    if (opts.omega_c > 0.0) config.params.omega_c = opts.omega_c;
    if (opts.omega_m > 0.0) config.params.omega_m = opts.omega_m;
    if (opts.cutoff >= -1) config.params.photon_cutoff = opts.cutoff;
    if (opts.t_max > 0.0) config.t_max = opts.t_max;
    if (opts.dt > 0.0) config.dt = opts.dt;
    if (!opts.out_dir.empty()) config.out_dir = opts.out_dir;
    if (!opts.init.empty()) {
        std::istringstream in(opts.init);
        char comma = 0;
        if (!(in >> config.initial_state.k_excitations >> comma >>
              config.initial_state.n_photons) ||
            comma != ',')
            throw CLI::ValidationError("--init expects k,n");
    }
    warn_if_outside_validated_range(config.params);
    return config;
}

int cmd_spectrum(const CommonOptions& opts) {
    const ExperimentConfig config = resolve_config(opts);
    json out;
    for (ModelKind kind : config.models) {
        const PolaritonTriplet t = numeric_triplet(kind, config.params);
        out[to_string(kind)] = {{"e_plus", t.e_plus},
                                {"e_zero", t.e_zero},
                                {"e_minus", t.e_minus},
                                {"alpha_numeric", t.alpha}};
    }
    if (config.params.resonant() && config.params.n_tls >= 2) {
        const PolaritonTriplet exact = resonant_triplet(config.params);
        out["tc_closed_form"] = {{"e_plus", exact.e_plus},
                                 {"e_zero", exact.e_zero},
                                 {"e_minus", exact.e_minus},
                                 {"rabi_frequency", rabi_frequency(config.params)}};
        out["alpha_pred"] = alpha_prediction(config.params);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_propagate(const CommonOptions& opts) {
    const ExperimentConfig config = resolve_config(opts);
    const auto runs = run_experiment(config);
    for (const TraceRun& run : runs)
        std::cout << to_string(run.model) << "  ->  " << run.csv_path.string()
                  << "  (modulation depth " << format_number(run.fit.modulation_depth) << ")\n";
    std::cout << "summary: " << (config.out_dir / "summary.json").string() << '\n';
    return 0;
}

int cmd_beat(const CommonOptions& opts) {
    ExperimentConfig config = resolve_config(opts);
    if (config.models.size() != 1) config.models = {ModelKind::DM};
    const TraceRun run =
        run_trace(config.models[0], config.params, config.initial_state, config.grid());
    json out;
    out["model"] = to_string(run.model);
    out["fit"] = {{"omega_fit", run.fit.omega_fit},
                  {"alpha_fit", run.fit.alpha_fit},
                  {"modulation_depth", run.fit.modulation_depth},
                  {"residual", run.fit.residual},
                  {"envelope_min_time", run.fit.envelope_min_time}};
    if (config.params.resonant() && config.params.n_tls >= 2) {
        out["alpha_pred"] = alpha_prediction(config.params);
        out["t_beat_pred"] = beating_period(config.params);
        out["rabi_frequency"] = rabi_frequency(config.params);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_sweep_n(const CommonOptions& opts, int n_min, int n_max) {
    const ExperimentConfig config = resolve_config(opts);
    const auto rows = sweep_n(config, n_min, n_max);
    std::filesystem::create_directories(config.out_dir);
    const auto path = config.out_dir / "sweep_n.csv";
    write_sweep_csv(rows, path);
    std::cout << "wrote " << path.string() << '\n';
    return 0;
}

int cmd_detune(const CommonOptions& opts, double delta_max, int points) {
    const ExperimentConfig config = resolve_config(opts);
    std::vector<double> detunings;
    for (int i = 0; i < points; ++i)
        detunings.push_back(-delta_max + 2.0 * delta_max * i / (points - 1));
    const DetuningScanResult result = detuning_scan(config, detunings);
    std::filesystem::create_directories(config.out_dir);
    const auto path = config.out_dir / "detuning_scan.csv";
    write_detuning_csv(result, path);
    std::cout << "wrote " << path.string() << "\nDM depth minimized at delta_omega = "
              << format_number(result.best_delta) << '\n';
    return 0;
}

int cmd_convert(double omega_c_ghz, double g_mhz, int n_tls) {
    const UnitConversionReport report = convert_units(omega_c_ghz, g_mhz, n_tls);
    json out = {{"omega_c_ghz", report.omega_c_ghz},
                {"g_mhz", report.g_mhz},
                {"n_tls", report.n_tls},
                {"g_over_omega", report.g_over_omega},
                {"t_rabi_ns", report.t_rabi_ns},
                {"t_beat_ns", report.t_beat_ns},
                {"conventions", report.conventions}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cavity-polariton beating simulator"};
    app.require_subcommand(1);

    CommonOptions opts;
    int n_min = 2, n_max = 15, detune_points = 21;
    double delta_max = 0.005;
    double conv_ghz = 6.0, conv_mhz = 450.0;
    int conv_n = 2;

    add_common_flags(app.add_subcommand("spectrum", "polariton triplet energies and asymmetry"),
                     opts);
    add_common_flags(app.add_subcommand("propagate", "photon-count traces to CSV + JSON summary"),
                     opts);
    add_common_flags(app.add_subcommand("beat", "extract beat frequency from a fresh trace"),
                     opts);
    auto* sweep = app.add_subcommand("sweep-n", "alpha and T_beat as a function of N");
    add_common_flags(sweep, opts);
    sweep->add_option("--n-min", n_min, "smallest N");
    sweep->add_option("--n-max", n_max, "largest N");
    auto* detune = app.add_subcommand("detune", "detuning scan straddling resonance");
    add_common_flags(detune, opts);
    detune->add_option("--delta-max", delta_max, "scan endpoint |omega_c - omega_m|");
    detune->add_option("--points", detune_points, "number of scan points");
    auto* convert = app.add_subcommand("convert", "physical-unit report");
    convert->add_option("--omega-c-ghz", conv_ghz, "cavity frequency / 2pi in GHz");
    convert->add_option("--g-mhz", conv_mhz, "coupling / 2pi in MHz");
    convert->add_option("--n-tls", conv_n, "number of TLS");
    app.add_subcommand("verify", "run the full verification suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("spectrum")) return cmd_spectrum(opts);
        if (app.got_subcommand("propagate")) return cmd_propagate(opts);
        if (app.got_subcommand("beat")) return cmd_beat(opts);
        if (app.got_subcommand("sweep-n")) return cmd_sweep_n(opts, n_min, n_max);
        if (app.got_subcommand("detune")) return cmd_detune(opts, delta_max, detune_points);
        if (app.got_subcommand("convert")) return cmd_convert(conv_ghz, conv_mhz, conv_n);
        if (app.got_subcommand("verify")) {
            const auto results = beatlab::verify::run_all(std::cout);
            return beatlab::verify::all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
