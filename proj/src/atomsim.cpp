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

#include "rydqc1/atomsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rydqc1/errors.hpp"

namespace rydqc1 {

namespace {
constexpr int kA = 0, kB = 1, kP = 2, kR = 3;
}

void PhysParams::validate() const {
    if (!(omega_p > 0.0) || !(omega_q > 0.0)) throw InvariantError("PhysParams: Raman Rabi frequencies must be positive");
    if (!(omega_c > 0.0)) throw InvariantError("PhysParams: coupling Rabi frequency must be positive");
    if (gamma < 0.0) throw InvariantError("PhysParams: decay rate must be nonnegative");
    if (v_block < 0.0) throw InvariantError("PhysParams: blockade shift must be nonnegative");
}

std::vector<std::string> PhysParams::warnings() const {
    std::vector<std::string> out;
    const double ratio = std::max(omega_p, omega_q) / omega_c;
    if (ratio > 0.2)
        out.push_back("Raman/coupling ratio " + std::to_string(ratio) +
                      " exceeds 0.2; EIT blocking degrades when the Raman beams approach the coupling beam");
    return out;
}

ConditionsReport check_conditions(const PhysParams& p, double t_pulse_us, double rydberg_lifetime_us) {
    p.validate();
    ConditionsReport r;
    r.gamma_over_delta = (p.delta != 0.0) ? p.gamma / std::abs(p.delta)
                                          : std::numeric_limits<double>::infinity();
    r.pulse_over_rydberg_life = (rydberg_lifetime_us > 0.0) ? t_pulse_us / rydberg_lifetime_us : 0.0;
    r.raman_over_coupling = std::max(p.omega_p, p.omega_q) / p.omega_c;
    return r;
}

CMat build_hamiltonian(const PhysParams& p, bool control_in_rydberg) {
    p.validate();
    CMat h = CMat::Zero(4, 4);
    h(kA, kP) = h(kP, kA) = p.omega_p / 2.0;
    h(kB, kP) = h(kP, kB) = p.omega_q / 2.0;
    h(kP, kR) = h(kR, kP) = p.omega_c / 2.0;
    h(kP, kP) = Complex(p.delta, -p.gamma / 2.0);
    h(kR, kR) = control_in_rydberg ? p.v_block : 0.0;
    return h;
}

CVec integrate(const CMat& h, const CVec& psi0, double t_us, double dt_max_us) {
    if (h.rows() != h.cols()) throw InvariantError("integrate: Hamiltonian must be square");
    if (h.rows() != psi0.size()) throw InvariantError("integrate: state size mismatch");
    if (!(dt_max_us > 0.0)) throw InvariantError("integrate: dt_max must be positive");
    if (!h.allFinite() || !psi0.allFinite()) throw NumericError("integrate: non-finite input");
    if (t_us == 0.0) return psi0;

    const int steps = std::max(1, static_cast<int>(std::ceil(t_us / dt_max_us)));
    const CMat u_step = matexp(h, t_us / steps);
    CVec psi = psi0;
    for (int s = 0; s < steps; ++s) psi = u_step * psi;
    if (!psi.allFinite()) throw NumericError("integrate: evolution produced non-finite values");
    return psi;
}

ConditionalGate conditional_gate(const PhysParams& p, double t_pulse_us) {
    if (t_pulse_us < 0.0) throw InvariantError("conditional_gate: pulse duration must be nonnegative");
    ConditionalGate g;
    for (bool open : {true, false}) {
        const CMat u4 = matexp(build_hamiltonian(p, open), t_pulse_us);
        Mat2 u = u4.topLeftCorner<2, 2>();
        double min_retained = 1.0;
        for (int col = 0; col < 2; ++col)
            min_retained = std::min(min_retained, u.col(col).squaredNorm());
        if (open) {
            g.u_open = u;
            g.leak_open = 1.0 - min_retained;
        } else {
            g.u_blocked = u;
            g.leak_blocked = 1.0 - min_retained;
        }
    }
    return g;
}

double effective_rabi(const PhysParams& p) {
    if (p.delta == 0.0) throw InvariantError("effective_rabi: zero Raman detuning");
    return p.omega_p * p.omega_q / (2.0 * p.delta);
}

double raman_pi_time(const PhysParams& p) { return M_PI / std::abs(effective_rabi(p)); }

double blocking_fidelity(const PhysParams& p, double t_pulse_us) {
    const ConditionalGate g = conditional_gate(p, t_pulse_us);
    return 1.0 - std::norm(g.u_blocked(1, 0));
}

}  // namespace rydqc1
