#include "beatlab/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace beatlab {

using nlohmann::json;

void ExperimentConfig::validate() const {
    params.validate();
    if (models.empty()) throw std::invalid_argument("ExperimentConfig: no models selected");
    if (!(dt > 0.0) || !(t_max > dt))
        throw std::invalid_argument("ExperimentConfig: need dt > 0 and t_max > dt");
    if (grid().count < 2) throw std::invalid_argument("ExperimentConfig: grid too short");
    const Basis basis(params);
    if (initial_state.k_excitations < 0 || initial_state.k_excitations > basis.n_tls() ||
        initial_state.n_photons < 0 || initial_state.n_photons > basis.n_max())
        throw std::invalid_argument("ExperimentConfig: initial state outside basis bounds");
    if (sweep_param) {
        const std::string& p = *sweep_param;
        if (p != "g" && p != "n_tls" && p != "omega_c" && p != "omega_m")
            throw std::invalid_argument("ExperimentConfig: unknown sweep parameter '" + p + "'");
        if (sweep_values.empty())
            throw std::invalid_argument("ExperimentConfig: empty sweep value list");
    }
}

ExperimentConfig ExperimentConfig::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path.string());
    json doc = json::parse(in);

    ExperimentConfig config;
    if (doc.contains("models")) {
        config.models.clear();
        for (const auto& m : doc["models"]) config.models.push_back(parse_model_kind(m));
    }
    config.params.omega_m = doc.value("omega_m", config.params.omega_m);
    config.params.omega_c = doc.value("omega_c", config.params.omega_c);
    config.params.g = doc.value("g", config.params.g);
    config.params.n_tls = doc.value("n_tls", config.params.n_tls);
    config.params.photon_cutoff = doc.value("cutoff", config.params.photon_cutoff);
    config.initial_state.k_excitations = doc.value("init_k", config.initial_state.k_excitations);
    config.initial_state.n_photons = doc.value("init_n", config.initial_state.n_photons);
    config.t_max = doc.value("t_max", config.t_max);
    config.dt = doc.value("dt", config.dt);
    if (doc.contains("out_dir")) config.out_dir = doc["out_dir"].get<std::string>();
    if (doc.contains("sweep")) {
        config.sweep_param = doc["sweep"]["param"].get<std::string>();
        config.sweep_values = doc["sweep"]["values"].get<std::vector<double>>();
    }
    return config;
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

void write_trace_csv(const TraceRun& run) {
    std::ofstream out(run.csv_path, std::ios::binary); // binary: LF endings everywhere
    if (!out) throw std::runtime_error("cannot write " + run.csv_path.string());
    out << "t,n_mean,n_var\n";
    for (int i = 0; i < run.n_mean.grid.count; ++i)
        out << format_number(run.n_mean.grid.time(i)) << ','
            << format_number(run.n_mean.values[static_cast<std::size_t>(i)]) << ','
            << format_number(run.n_var.values[static_cast<std::size_t>(i)]) << '\n';
}

json params_to_json(const ModelParams& p) {
    return {{"omega_m", p.omega_m}, {"omega_c", p.omega_c},     {"g", p.g},
            {"n_tls", p.n_tls},     {"cutoff", p.cutoff()}};
}

json fit_to_json(const BeatFit& fit) {
    return {{"omega_fit", fit.omega_fit},
            {"alpha_fit", fit.alpha_fit},
            {"modulation_depth", fit.modulation_depth},
            {"residual", fit.residual},
            {"envelope_min_time", fit.envelope_min_time}};
}

ModelParams apply_sweep(const ModelParams& base, const std::string& param, double value) {
    ModelParams p = base;
    if (param == "g")
        p.g = value;
    else if (param == "n_tls")
        p.n_tls = static_cast<int>(std::lround(value));
    else if (param == "omega_c")
        p.omega_c = value;
    else if (param == "omega_m")
        p.omega_m = value;
    return p;
}

} // namespace

TraceRun run_trace(ModelKind kind, const ModelParams& params, BasisState init,
                   const TimeGrid& grid, bool with_convergence) {
    params.validate();
    const Basis basis(params);
    const Vector psi0 = basis.unit_state(init.k_excitations, init.n_photons);
    const EigenSystem es = diagonalize(build_hamiltonian(kind, params));
    const auto states = propagate_spectral(es, psi0, grid);
    const Matrix number = photon_operator(PhotonOp::Number, params);
    const Matrix number_sq = number * number;

    TraceRun run;
    run.model = kind;
    run.params = params;
    run.n_mean = observable_trace(states, number, grid);
    run.n_var = observable_trace(states, number_sq, grid);
    for (std::size_t i = 0; i < run.n_var.values.size(); ++i)
        run.n_var.values[i] -= run.n_mean.values[i] * run.n_mean.values[i];
    run.fit = extract_beat(run.n_mean);
    if (with_convergence) run.convergence = convergence_check(kind, params, init, grid);
    return run;
}

std::vector<TraceRun> run_experiment(const ExperimentConfig& config) {
    config.validate();
    std::filesystem::create_directories(config.out_dir);

    std::vector<std::pair<std::string, ModelParams>> points;
    if (config.sweep_param) {
        for (double v : config.sweep_values)
            points.emplace_back("_" + *config.sweep_param + "=" + format_number(v),
                                apply_sweep(config.params, *config.sweep_param, v));
    } else {
        points.emplace_back("", config.params);
    }

    const TimeGrid grid = config.grid();
    std::vector<TraceRun> runs;
    json summary;
    summary["config"] = {{"models", json::array()},
                         {"params", params_to_json(config.params)},
                         {"init_k", config.initial_state.k_excitations},
                         {"init_n", config.initial_state.n_photons},
                         {"t_max", config.t_max},
                         {"dt", config.dt}};
    for (ModelKind m : config.models) summary["config"]["models"].push_back(to_string(m));
    if (config.sweep_param) {
        summary["config"]["sweep"] = {{"param", *config.sweep_param},
                                      {"values", config.sweep_values}};
    }
    summary["conventions"] = {
        {"energy_origin", "spectra shifted so the uncoupled ground state |s_0,0> sits at 0"},
        {"fem_denominator", "all FEM denominators E_i - 4w replaced by -2w"},
        {"hybrid_normalization", "mixed reconstructions renormalized at every sample"},
        {"csv_format", "12 significant digits, LF line endings"}};
    summary["runs"] = json::array();

    for (const auto& [suffix, params] : points) {
        for (ModelKind kind : config.models) {
            TraceRun run = run_trace(kind, params, config.initial_state, grid, true);
            run.csv_path = config.out_dir / ("trace_" + to_string(kind) + suffix + ".csv");
            write_trace_csv(run);

            json entry;
            entry["model"] = to_string(kind);
            entry["params"] = params_to_json(params);
            entry["csv"] = run.csv_path.filename().string();
            entry["beat_fit"] = fit_to_json(run.fit);
            entry["convergence"] = {{"cutoff", run.convergence.cutoff},
                                    {"doubled_cutoff", run.convergence.doubled_cutoff},
                                    {"sup_diff", run.convergence.sup_diff},
                                    {"passed", run.convergence.passed}};
            if (!run.convergence.passed)
                entry["warnings"] = {"photon-cutoff convergence check failed"};
            if (params.resonant() && params.n_tls >= 2) {
                const PolaritonTriplet triplet = numeric_triplet(kind, params);
                entry["triplet"] = {{"e_plus", triplet.e_plus},
                                    {"e_zero", triplet.e_zero},
                                    {"e_minus", triplet.e_minus},
                                    {"alpha_numeric", triplet.alpha}};
                entry["alpha_pred"] = alpha_prediction(params);
                entry["t_beat"] = beating_period(params);
            }
            summary["runs"].push_back(entry);
            runs.push_back(std::move(run));
        }
    }

    std::ofstream out(config.out_dir / "summary.json", std::ios::binary);
    out << summary.dump(2) << '\n';
    return runs;
}

std::vector<SweepRow> sweep_n(const ExperimentConfig& config, int n_min, int n_max) {
    if (n_min < 2 || n_max < n_min) throw std::invalid_argument("sweep_n: need 2 <= n_min <= n_max");
    const TimeGrid grid = config.grid();
    std::vector<SweepRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        SweepRow row;
        row.n_tls = n;
        try {
            ModelParams params = config.params;
            params.n_tls = n;
            params.photon_cutoff = config.params.photon_cutoff < 0 ? -1 : config.params.photon_cutoff;
            row.alpha_pred = alpha_prediction(params);
            row.t_beat = beating_period(params);
            const TraceRun run = run_trace(ModelKind::DM, params, {2, 0}, grid);
            row.alpha_fit = run.fit.alpha_fit;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "N,alpha_pred,alpha_fit,t_beat\n";
    for (const SweepRow& row : rows) {
        if (!row.error.empty()) {
            out << row.n_tls << ",error,error,error\n";
            continue;
        }
        out << row.n_tls << ',' << format_number(row.alpha_pred) << ','
            << format_number(row.alpha_fit) << ',' << format_number(row.t_beat) << '\n';
    }
}

DetuningScanResult detuning_scan(const ExperimentConfig& config,
                                 const std::vector<double>& detunings) {
    const TimeGrid grid = config.grid();
    DetuningScanResult result;
    double best_depth = std::numeric_limits<double>::max();
    for (double delta : detunings) {
        ModelParams params = config.params;
        params.omega_c = config.params.omega_m + delta;
        const TraceRun dm = run_trace(ModelKind::DM, params, config.initial_state, grid);
        result.dm_rows.push_back({delta, dm.fit.modulation_depth, dm.fit.alpha_fit});
        if (dm.fit.modulation_depth < best_depth) {
            best_depth = dm.fit.modulation_depth;
            result.best_delta = delta;
        }
        const TraceRun tc = run_trace(ModelKind::TC, params, config.initial_state, grid);
        result.tc_rows.push_back({delta, tc.fit.modulation_depth, tc.fit.alpha_fit});
    }
    return result;
}

void write_detuning_csv(const DetuningScanResult& result, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "model,delta_omega,modulation_depth,alpha_fit\n";
    for (const DetuningRow& row : result.dm_rows)
        out << "dm," << format_number(row.delta_omega) << ','
            << format_number(row.modulation_depth) << ',' << format_number(row.alpha_fit) << '\n';
    for (const DetuningRow& row : result.tc_rows)
        out << "tc," << format_number(row.delta_omega) << ','
            << format_number(row.modulation_depth) << ',' << format_number(row.alpha_fit) << '\n';
}

SingleManifoldReport single_manifold_check(const ModelParams& params, double t_max, double dt) {
    const TimeGrid grid = TimeGrid::from_span(t_max, dt);
    const TraceRun run = run_trace(ModelKind::DM, params, {1, 0}, grid);
    SingleManifoldReport report;
    report.modulation_depth = run.fit.modulation_depth;
    report.passed = report.modulation_depth < 0.02;
    return report;
}

} // namespace beatlab
