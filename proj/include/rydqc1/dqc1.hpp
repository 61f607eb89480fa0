// Copyright 2026 The rydqc1 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// One-clean-qubit circuit semantics. A control qubit with coherence alpha
// plus an n-qubit maximally mixed register picks up the normalized trace
// Tr(U_n)/2^n of the controlled unitary in its off-diagonal element; Pauli
// X/Y readout recovers real and imaginary parts.
//
// Sign convention: we keep the Pauli readout identities
//     <X> = alpha * Re(trace_norm),   <Y> = -alpha * Im(trace_norm)
// exact with the standard sigma_y, which places Tr(U) (not its conjugate)
// in the upper-right coherence of the control state.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rydqc1/atomsim.hpp"
#include "rydqc1/qmath.hpp"

namespace rydqc1 {

struct DQC1Report {
    int n = 0;
    double alpha = 1.0;
    Complex trace_norm;       // Tr(U_n)/2^n
    double exp_x = 0.0;
    double exp_y = 0.0;
    Mat2 rho_control;         // (1/2) [[1, alpha*t],[alpha*conj(t), 1]]
};

/// Joint control+register state after the circuit:
///   (1/2^{n+1}) [ I(x)I + alpha (|0><1| (x) U + |1><0| (x) U†) ].
/// Requires u square with power-of-two size 2^n, n <= 10, 0 <= alpha <= 1.
CMat output_state(const CMat& u, double alpha);

/// Tr(u) / dim(u).
Complex trace_exact(const CMat& u);

/// Normalized trace of u1^(x)n without materializing it: (Tr(u1)/2)^n,
/// evaluated in polar form so n = 100 is exact to rounding.
Complex trace_product(const Mat2& u1, int n);

/// Pauli expectations (exp_x, exp_y) from a normalized trace.
std::pair<double, double> readout(Complex trace_norm, double alpha);

DQC1Report make_report(Complex trace_norm, double alpha, int n);

/// Per-pulse-duration gate supplier for sweeps.
using GateSource = std::function<ConditionalGate(double t_us)>;

/// The full conditional optical gate at the given parameters.
GateSource physical_gate_source(const PhysParams& p);

/// Lossless rotation by omega_eff * t about x, with a perfectly blocked
/// branch. Useful as the analytic reference for sweeps.
GateSource ideal_rotation_source(double omega_eff);

struct TraceSeriesEntry {
    double t_us = 0.0;
    int n = 0;
    Complex trace;
};

struct TraceSeriesOptions {
    // Fidelity of each of the two control-atom Rydberg pi pulses that
    // sandwich the conditional gate; the measured coherence scales with the
    // square. 1.0 = ideal; kControlPiFidelityPreset = benchmarked value.
    double control_pulse_fidelity = 1.0;
};

/// Normalized trace of the conditional operator vs pulse duration, for each
/// atom number in n_list. The per-atom factor is Tr(u_open u_blocked†)/2:
/// whatever the blocked branch does beyond the identity folds in
/// multiplicatively. t_grid must be ascending.
std::vector<TraceSeriesEntry> trace_series(const GateSource& gates, std::span<const int> n_list,
                                           std::span<const double> t_grid,
                                           const TraceSeriesOptions& opts = {});

}  // namespace rydqc1
