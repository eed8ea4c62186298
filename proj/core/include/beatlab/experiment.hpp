// experiment.hpp — Named experiment drivers: trace runs, N sweeps, detuning
// scans, and deterministic CSV/JSON emission

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "beatlab/beatfit.hpp"
#include "beatlab/perturbation.hpp"

namespace beatlab {

struct ExperimentConfig {
    std::vector<ModelKind> models{ModelKind::TC, ModelKind::DM, ModelKind::PF};
    ModelParams params{};
    BasisState initial_state{2, 0}; // |s_k, n>
    double t_max{3000.0};
    double dt{0.5};
    std::filesystem::path out_dir{"out"};
    // Optional sweep: rerun per value of one parameter
    // ("g", "n_tls", "omega_c", "omega_m").
    std::optional<std::string> sweep_param;
    std::vector<double> sweep_values;

    TimeGrid grid() const { return TimeGrid::from_span(t_max, dt); }
    void validate() const;

    static ExperimentConfig from_json_file(const std::filesystem::path& path);
};

struct TraceRun {
    ModelKind model{ModelKind::TC};
    ModelParams params{};
    ObservableTrace n_mean;
    ObservableTrace n_var;
    BeatFit fit;
    ConvergenceReport convergence;
    std::filesystem::path csv_path;
};

struct SweepRow {
    int n_tls{0};
    double alpha_pred{0.0};
    double alpha_fit{0.0};
    double t_beat{0.0};
    std::string error; // empty on success
};

struct DetuningRow {
    double delta_omega{0.0};
    double modulation_depth{0.0};
    double alpha_fit{0.0};
};

struct DetuningScanResult {
    std::vector<DetuningRow> dm_rows;
    std::vector<DetuningRow> tc_rows; // TC at the same detunings
    double best_delta{0.0};           // detuning minimizing the DM depth
};

struct SingleManifoldReport {
    double modulation_depth{0.0};
    bool passed{false}; // depth < 0.02
};

// Formats a double with 12 significant digits (fixed CSV convention).
std::string format_number(double value);

// Photon traces (mean and variance) for each configured model and sweep
// point; writes one CSV per run plus a JSON summary, returns the runs.
std::vector<TraceRun> run_experiment(const ExperimentConfig& config);

// Propagates one model and returns its mean/variance photon traces without
// touching the filesystem.
TraceRun run_trace(ModelKind kind, const ModelParams& params, BasisState init,
                   const TimeGrid& grid, bool with_convergence = false);

// Table of (N, alpha_pred, alpha_fit, T_beat) for the Dicke model.
std::vector<SweepRow> sweep_n(const ExperimentConfig& config, int n_min, int n_max);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

// DM and TC runs across detunings straddling zero.
DetuningScanResult detuning_scan(const ExperimentConfig& config,
                                 const std::vector<double>& detunings);
void write_detuning_csv(const DetuningScanResult& result, const std::filesystem::path& path);

// Propagates |s_1, 0> under the DM and checks the trace is beat-free.
SingleManifoldReport single_manifold_check(const ModelParams& params, double t_max, double dt);

} // namespace beatlab
