#include <cmath>

#include "doctest.h"

#include "beatlab/beatfit.hpp"
#include "beatlab/experiment.hpp"
#include "beatlab/perturbation.hpp"

using namespace beatlab;

namespace {

ModelParams make_params(int n_tls = 2, double g = 0.07) {
    ModelParams p;
    p.n_tls = n_tls;
    p.g = g;
    return p;
}

ObservableTrace synthetic_trace(const ModelParams& params, double t_max, double dt) {
    const TimeGrid grid = TimeGrid::from_span(t_max, dt);
    ObservableTrace trace{grid, {}};
    trace.values.reserve(static_cast<std::size_t>(grid.count));
    for (int i = 0; i < grid.count; ++i)
        trace.values.push_back(dm_photon_count_approx(params, grid.time(i)));
    return trace;
}

} // namespace

TEST_CASE("synthetic beating trace round-trips within 1%") {
    const ModelParams params = make_params();
    const BeatFit fit = extract_beat(synthetic_trace(params, 6000.0, 0.5));
    const double alpha = std::abs(alpha_prediction(params));
    CHECK(std::abs(fit.alpha_fit - alpha) < 0.01 * alpha);
    CHECK(std::abs(fit.omega_fit - rabi_frequency(params)) < 0.01 * rabi_frequency(params));
    CHECK(fit.modulation_depth > 0.5);
}

TEST_CASE("round-trip across the validated (g, N) grid") {
    for (int n : {2, 3, 4}) {
        for (double g : {0.05, 0.07, 0.09}) {
            const ModelParams params = make_params(n, g);
            // Cover at least one full beat period.
            const double t_max = std::min(1.2 * beating_period(params), 60000.0);
            const BeatFit fit = extract_beat(synthetic_trace(params, t_max, 0.5));
            const double alpha = std::abs(alpha_prediction(params));
            const double rabi = rabi_frequency(params);
            CAPTURE(n);
            CAPTURE(g);
            CHECK(std::abs(fit.alpha_fit - alpha) < 0.01 * alpha);
            CHECK(std::abs(fit.omega_fit - rabi) < 0.01 * rabi);
        }
    }
}

TEST_CASE("constant trace yields a null fit") {
    ObservableTrace trace{TimeGrid::from_span(100.0, 0.5), {}};
    trace.values.assign(static_cast<std::size_t>(trace.grid.count), 1.7);
    const BeatFit fit = extract_beat(trace);
    CHECK(fit.alpha_fit == 0.0);
    CHECK(fit.modulation_depth == 0.0);
}

TEST_CASE("beat-free carrier reports alpha = 0") {
    // Exact TC photon count: pure Rabi oscillation, no envelope.
    const ModelParams params = make_params();
    const TimeGrid grid = TimeGrid::from_span(3000.0, 0.5);
    ObservableTrace trace{grid, {}};
    for (int i = 0; i < grid.count; ++i)
        trace.values.push_back(tc_photon_count(params, grid.time(i)));
    const BeatFit fit = extract_beat(trace);
    CHECK(fit.alpha_fit == 0.0);
    CHECK(fit.modulation_depth < 0.02);
}

TEST_CASE("precondition violations rejected") {
    const ModelParams params = make_params();
    // Two carrier periods only.
    CHECK_THROWS_AS(extract_beat(synthetic_trace(params, 100.0, 0.5)), std::invalid_argument);
    // Undersampled carrier.
    CHECK_THROWS_AS(extract_beat(synthetic_trace(params, 3000.0, 20.0)), std::invalid_argument);
}

TEST_CASE("full Dicke simulation: extracted alpha within 30% of the prediction") {
    const ModelParams params = make_params();
    const TraceRun run = run_trace(ModelKind::DM, params, {2, 0}, TimeGrid::from_span(3000.0, 0.5));
    const double alpha = std::abs(alpha_prediction(params));
    CHECK(std::abs(run.fit.alpha_fit - alpha) < 0.3 * alpha);
    CHECK(run.fit.modulation_depth > 0.5);
}
