#include "beatlab/beatfit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace beatlab {

namespace {

struct TemplateFit {
    double rms{0.0};
    Eigen::VectorXd coeffs;
};

// Least-squares fit of the template at fixed (omega, alpha) via normal
// equations; alpha < 0 disables the modulated columns.
TemplateFit fit_template(const std::vector<double>& y, const TimeGrid& grid, double omega,
                         double alpha) {
    const int n = static_cast<int>(y.size());
    const int ncols = alpha >= 0.0 ? 7 : 5;
    Eigen::MatrixXd ata = Eigen::MatrixXd::Zero(ncols, ncols);
    Eigen::VectorXd aty = Eigen::VectorXd::Zero(ncols);
    double yty = 0.0;

    Eigen::VectorXd row(ncols);
    for (int i = 0; i < n; ++i) {
        const double t = grid.time(i);
        const double c = std::cos(omega * t);
        const double s = std::sin(omega * t);
        row(0) = 1.0;
        row(1) = c;
        row(2) = s;
        row(3) = 2.0 * c * c - 1.0; // cos 2Wt
        row(4) = 2.0 * s * c;       // sin 2Wt
        if (ncols == 7) {
            const double e = std::cos(alpha * t);
            row(5) = e * c;
            row(6) = e * s;
        }
        ata.selfadjointView<Eigen::Lower>().rankUpdate(row, 1.0);
        aty += y[static_cast<std::size_t>(i)] * row;
        yty += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    }
    ata = ata.selfadjointView<Eigen::Lower>();
    ata.diagonal().array() += 1e-12 * static_cast<double>(n);
    const Eigen::VectorXd x = ata.ldlt().solve(aty);
    const double rss = std::max(0.0, yty - 2.0 * aty.dot(x) + x.dot(ata * x));
    return {std::sqrt(rss / n), x};
}

template <typename F>
double golden_section(F&& f, double lo, double hi, int iters) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

double envelope_modulation_depth(const ObservableTrace& trace, double carrier_omega,
                                 double* min_time) {
    const int n = static_cast<int>(trace.values.size());
    if (carrier_omega <= 0.0 || n < 2) {
        if (min_time) *min_time = trace.grid.t0;
        return 0.0;
    }
    const double period = 2.0 * M_PI / carrier_omega;
    const int window = std::max(2, static_cast<int>(std::lround(period / trace.grid.dt)));
    const int n_windows = n / window;
    if (n_windows < 2) {
        if (min_time) *min_time = trace.grid.t0;
        return 0.0;
    }
    double env_max = 0.0, env_min = std::numeric_limits<double>::max();
    int min_window = 0;
    for (int w = 0; w < n_windows; ++w) {
        const auto first = trace.values.begin() + w * window;
        const auto [lo, hi] = std::minmax_element(first, first + window);
        const double env = 0.5 * (*hi - *lo);
        if (env > env_max) env_max = env;
        if (env < env_min) {
            env_min = env;
            min_window = w;
        }
    }
    if (min_time) *min_time = trace.grid.time(min_window * window + window / 2);
    const double denom = env_max + env_min;
    return denom > 0.0 ? (env_max - env_min) / denom : 0.0;
}

BeatFit extract_beat(const ObservableTrace& trace) {
    const int n = static_cast<int>(trace.values.size());
    if (n < 4 || trace.grid.count != n)
        throw std::invalid_argument("extract_beat: trace too short or grid mismatch");
    const double dt = trace.grid.dt;
    const double span = dt * (n - 1);

    const double mean = std::accumulate(trace.values.begin(), trace.values.end(), 0.0) / n;
    std::vector<double> y(trace.values);
    for (double& v : y) v -= mean;
    const double amp = *std::max_element(y.begin(), y.end(),
                                         [](double a, double b) { return std::abs(a) < std::abs(b); });
    BeatFit fit;
    if (std::abs(amp) < 1e-12 * (1.0 + std::abs(mean))) return fit; // constant trace

    // Carrier peak from the FFT with quadratic interpolation on log magnitude.
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spectrum;
    fft.fwd(spectrum, y);
    const int half = n / 2;
    int peak = 1;
    for (int k = 2; k < half; ++k)
        if (std::abs(spectrum[static_cast<std::size_t>(k)]) >
            std::abs(spectrum[static_cast<std::size_t>(peak)]))
            peak = k;
    double delta = 0.0;
    if (peak > 1 && peak + 1 < half) {
        const double lm = std::log(std::abs(spectrum[static_cast<std::size_t>(peak - 1)]) + 1e-300);
        const double lc = std::log(std::abs(spectrum[static_cast<std::size_t>(peak)]) + 1e-300);
        const double lp = std::log(std::abs(spectrum[static_cast<std::size_t>(peak + 1)]) + 1e-300);
        const double denom = lm - 2.0 * lc + lp;
        if (std::abs(denom) > 1e-12) delta = std::clamp(0.5 * (lm - lp) / denom, -0.5, 0.5);
    }
    const double bin = 2.0 * M_PI / (n * dt);
    const double omega0 = (peak + delta) * bin;

    if (span * omega0 < 4.0 * 2.0 * M_PI)
        throw std::invalid_argument("extract_beat: trace shorter than 4 carrier periods");
    if (2.0 * M_PI / (omega0 * dt) < 8.0)
        throw std::invalid_argument("extract_beat: fewer than 8 samples per carrier period");

    // Beat-free carrier reference. On an unresolved doublet this can lock
    // onto one sideband, so it is only a baseline, never a starting point.
    auto rms_plain = [&](double w) { return fit_template(y, trace.grid, w, -1.0).rms; };
    const double omega_plain = golden_section(rms_plain, omega0 - bin, omega0 + bin, 40);
    const double rms0 = rms_plain(omega_plain);

    // Joint coarse grid over (omega, alpha): the rms surface has spurious
    // minima with the carrier on a sideband and a doubled modulation
    // frequency, so omega and alpha cannot be located one at a time.
    const double alpha_max = std::min(0.4 * omega0, 8.0 * bin);
    const double w_half = 3.0 * bin; // FFT peak may sit on a sideband
    const int n_w = 19, n_alpha = 48;
    double omega = omega_plain, alpha = 0.0, best_rms = rms0;
    for (int j = 0; j < n_w; ++j) {
        const double w = omega0 - w_half + 2.0 * w_half * j / (n_w - 1);
        for (int i = 1; i <= n_alpha; ++i) {
            const double a = alpha_max * i / n_alpha;
            const double r = fit_template(y, trace.grid, w, a).rms;
            if (r < best_rms) {
                best_rms = r;
                omega = w;
                alpha = a;
            }
        }
    }
    if (alpha > 0.0) {
        double a_step = alpha_max / n_alpha;
        double w_step = w_half / (n_w - 1);
        for (int round = 0; round < 4; ++round) {
            alpha = golden_section(
                [&](double a) { return fit_template(y, trace.grid, omega, a).rms; },
                std::max(0.0, alpha - a_step), alpha + a_step, 24);
            omega = golden_section(
                [&](double w) { return fit_template(y, trace.grid, w, alpha).rms; },
                omega - w_step, omega + w_step, 24);
            a_step *= 0.2;
            w_step *= 0.2;
        }
    }
    const TemplateFit refined = fit_template(y, trace.grid, omega, alpha);

    // Accept the modulated model only when it explains a real envelope;
    // otherwise report a beat-free carrier.
    const bool resolvable = alpha > 0.0 && (rms0 - refined.rms) > 0.2 * rms0;
    fit.omega_fit = resolvable ? omega : omega_plain;
    fit.alpha_fit = resolvable ? alpha : 0.0;
    fit.residual = resolvable ? refined.rms : rms0;
    fit.modulation_depth =
        envelope_modulation_depth(trace, fit.omega_fit, &fit.envelope_min_time);
    return fit;
}

} // namespace beatlab
