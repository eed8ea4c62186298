// beatfit.hpp — Carrier/beat frequency extraction from photon-count traces

#pragma once

#include "beatlab/spectral.hpp"

namespace beatlab {

// Result of fitting the beating template
//   y(t) ~ c0 + c1 cos Wt + c2 sin Wt + c3 cos 2Wt + c4 sin 2Wt
//        + (c5 cos Wt + c6 sin Wt) cos(at)
// to a trace. alpha_fit = 0 when no resolvable envelope modulation exists.
struct BeatFit {
    double omega_fit{0.0};        // carrier frequency W
    double alpha_fit{0.0};        // beat (envelope) frequency a
    double modulation_depth{0.0}; // (env_max - env_min)/(env_max + env_min), in [0,1]
    double residual{0.0};         // RMS of the template fit
    double envelope_min_time{0.0};// centre of the weakest carrier-period window
};

// FFT peak location with quadratic interpolation, then nonlinear
// least-squares refinement of (W, a) with the linear coefficients solved by
// variable projection. Preconditions: >= 4 carrier periods in the trace and
// >= 8 samples per carrier period (std::invalid_argument otherwise).
BeatFit extract_beat(const ObservableTrace& trace);

// Envelope modulation depth for a known carrier: the trace is split into
// carrier-period windows, each window's half range is its envelope sample.
double envelope_modulation_depth(const ObservableTrace& trace, double carrier_omega,
                                 double* min_time = nullptr);

} // namespace beatlab
