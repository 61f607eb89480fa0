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

#include "rydqc1/dqc1.hpp"

#include <cmath>

#include "rydqc1/errors.hpp"

namespace rydqc1 {

namespace {

int log2_exact(Eigen::Index d) {
    int n = 0;
    Eigen::Index p = 1;
    while (p < d) {
        p *= 2;
        ++n;
    }
    if (p != d) throw InvariantError("dimension is not a power of two");
    return n;
}

}  // namespace

CMat output_state(const CMat& u, double alpha) {
    if (u.rows() != u.cols()) throw InvariantError("output_state: unitary must be square");
    const int n = log2_exact(u.rows());
    if (n > 10) throw InvariantError("output_state: dense path is limited to n <= 10");
    if (alpha < 0.0 || alpha > 1.0) throw InvariantError("output_state: alpha must lie in [0,1]");

    const Eigen::Index d = u.rows();
    CMat rho = CMat::Zero(2 * d, 2 * d);
    rho.topLeftCorner(d, d) = CMat::Identity(d, d);
    rho.bottomRightCorner(d, d) = CMat::Identity(d, d);
    rho.topRightCorner(d, d) = alpha * u;            // |0><1| block carries U
    rho.bottomLeftCorner(d, d) = alpha * u.adjoint();
    return rho / static_cast<double>(2 * d);
}

Complex trace_exact(const CMat& u) {
    if (u.rows() != u.cols()) throw InvariantError("trace_exact: matrix must be square");
    return u.trace() / static_cast<double>(u.rows());
}

Complex trace_product(const Mat2& u1, int n) {
    if (n < 0) throw InvariantError("trace_product: negative atom count");
    const Complex z = u1.trace() / 2.0;
    if (n == 0) return Complex(1, 0);
    const double r = std::abs(z);
    if (r == 0.0) return Complex(0, 0);
    const double mag = std::exp(static_cast<double>(n) * std::log(r));
    const double phase = static_cast<double>(n) * std::arg(z);
    return std::polar(mag, phase);
}

std::pair<double, double> readout(Complex trace_norm, double alpha) {
    if (std::abs(trace_norm) > 1.0 + 1e-9)
        throw InvariantError("readout: normalized trace magnitude exceeds 1");
    return {alpha * trace_norm.real(), -alpha * trace_norm.imag()};
}

DQC1Report make_report(Complex trace_norm, double alpha, int n) {
    DQC1Report rep;
    rep.n = n;
    rep.alpha = alpha;
    rep.trace_norm = trace_norm;
    std::tie(rep.exp_x, rep.exp_y) = readout(trace_norm, alpha);
    rep.rho_control << 0.5, 0.5 * alpha * trace_norm, 0.5 * alpha * std::conj(trace_norm), 0.5;
    return rep;
}

GateSource physical_gate_source(const PhysParams& p) {
    p.validate();
    return [p](double t_us) { return conditional_gate(p, t_us); };
}

GateSource ideal_rotation_source(double omega_eff) {
    return [omega_eff](double t_us) {
        const double half = omega_eff * t_us / 2.0;
        ConditionalGate g;
        g.u_open << std::cos(half), Complex(0, -std::sin(half)), Complex(0, -std::sin(half)),
            std::cos(half);
        g.u_blocked = Mat2::Identity();
        return g;
    };
}

std::vector<TraceSeriesEntry> trace_series(const GateSource& gates, std::span<const int> n_list,
                                           std::span<const double> t_grid,
                                           const TraceSeriesOptions& opts) {
    for (std::size_t k = 1; k < t_grid.size(); ++k)
        if (!(t_grid[k] > t_grid[k - 1])) throw InvariantError("trace_series: t_grid must be ascending");
    for (int n : n_list)
        if (n < 0) throw InvariantError("trace_series: negative atom count");
    const double coherence = opts.control_pulse_fidelity * opts.control_pulse_fidelity;

    std::vector<TraceSeriesEntry> out;
    out.reserve(t_grid.size() * n_list.size());
    for (double t : t_grid) {
        const ConditionalGate g = gates(t);
        const Mat2 conditional = g.u_open * g.u_blocked.adjoint();
        for (int n : n_list)
            out.push_back({t, n, coherence * trace_product(conditional, n)});
    }
    return out;
}

}  // namespace rydqc1
