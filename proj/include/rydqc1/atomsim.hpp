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

// Single ensemble-atom dynamics under the conditional Raman/EIT optical
// scheme. One atom has four levels (|A>, |B>, |P>, |R>): the two ground
// qubit states, the intermediate state of the Raman pair, and the Rydberg
// level addressed by the coupling laser.
//
// With the control atom out of the Rydberg state the Rydberg level sits at
// two-photon resonance: the dark state blocks the Raman transfer (EIT).
// With the control atom in the Rydberg state the blockade shift v_block
// detunes the Rydberg level, EIT breaks down, and the off-resonant Raman
// rotation between |A> and |B> proceeds at rate omega_p*omega_q/(2*delta).
//
// Decay from |P> is a non-Hermitian -i*gamma/2 diagonal term: lost norm is
// the scattering error, which upper-bounds the gate error. Pulses are
// square; the pulse duration is the only time knob.

#pragma once

#include <vector>

#include "rydqc1/qmath.hpp"

namespace rydqc1 {

/// Optical/atomic parameter set. All rates are angular, in rad/us; a value
/// quoted as "2 pi x f MHz" enters as 2*pi*f.
struct PhysParams {
    double omega_p = 0.0;  // Raman leg |A>-|P>
    double omega_q = 0.0;  // Raman leg |B>-|P>
    double omega_c = 0.0;  // coupling |P>-|R>
    double delta = 0.0;    // one-photon Raman detuning on |P>
    double gamma = 0.0;    // |P> decay rate
    double v_block = 0.0;  // blockade shift of |R> when the control atom is Rydberg-excited

    /// Throws InvariantError unless omega_p, omega_q, omega_c > 0,
    /// gamma >= 0 and v_block >= 0.
    void validate() const;

    /// Non-fatal diagnostics, currently the Raman-vs-coupling ratio check
    /// (omega_p, omega_q should stay well below omega_c for clean blocking).
    std::vector<std::string> warnings() const;
};

/// High-fidelity operation requires (i) the Raman detuning to dominate the
/// intermediate-state decay, (ii) the control-atom Rydberg lifetime to
/// dominate the pulse, and (iii) the Raman beams to stay well below the
/// coupling beam. Each ratio should be small; `ok(threshold)` applies a
/// common cutoff (default 0.2).
struct ConditionsReport {
    double gamma_over_delta = 0.0;        // (i)
    double pulse_over_rydberg_life = 0.0; // (ii); 0 when no lifetime is supplied
    double raman_over_coupling = 0.0;     // (iii)

    bool ok(double threshold = 0.2) const {
        return gamma_over_delta <= threshold && pulse_over_rydberg_life <= threshold &&
               raman_over_coupling <= threshold;
    }
};

ConditionsReport check_conditions(const PhysParams& p, double t_pulse_us,
                                  double rydberg_lifetime_us = 0.0);

/// Effective conditional qubit maps on {|A>, |B>}. Sub-unitary: decay and
/// residual population outside the qubit pair show up as leakage.
struct ConditionalGate {
    Mat2 u_open;      // control atom in the Rydberg state: Raman rotation runs
    Mat2 u_blocked;   // EIT intact: transfer blocked
    double leak_open = 0.0;     // 1 - min over basis inputs of retained norm^2
    double leak_blocked = 0.0;
};

/// Rotating-frame Hamiltonian on (|A>,|B>,|P>,|R>), non-Hermitian when
/// gamma > 0. The Rydberg diagonal is v_block when the control atom is in
/// the Rydberg state and 0 (two-photon resonance, EIT) otherwise.
CMat build_hamiltonian(const PhysParams& p, bool control_in_rydberg);

/// psi(t) under exp(-i h t) for time-independent h, split into equal steps
/// no longer than dt_max. Norm may shrink when h is non-Hermitian.
CVec integrate(const CMat& h, const CVec& psi0, double t_us, double dt_max_us);

/// Evolves |A> and |B> for a square pulse of the given duration under both
/// Hamiltonian branches and projects back onto the qubit pair.
ConditionalGate conditional_gate(const PhysParams& p, double t_pulse_us);

/// Adiabatic-elimination Raman rate omega_p*omega_q/(2*delta), rad/us.
double effective_rabi(const PhysParams& p);

/// Duration of a pi rotation at the effective Raman rate.
double raman_pi_time(const PhysParams& p);

/// How completely EIT suppresses the Raman transfer: 1 - |<B|u_blocked|A>|^2.
/// (The retained |A> population is a different, weaker number: a square pulse
/// projects a slice of |A> onto the oscillating bright state no matter how
/// good the blocking is. The transfer probability is what the blockade
/// conditioning acts on, and is the quantity quoted against the 99.8% mark.)
double blocking_fidelity(const PhysParams& p, double t_pulse_us);

/// Benchmarked single-atom initialization fidelity usable as a control
/// Rydberg pi-pulse preset; the default elsewhere is the ideal 1.0.
inline constexpr double kControlPiFidelityPreset = 0.999;

}  // namespace rydqc1
