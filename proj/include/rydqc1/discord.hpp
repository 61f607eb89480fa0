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

// Geometric discord of qubit x d states: squared Frobenius distance to the
// nearest state left invariant by some projective measurement on the qubit.
// Three routes are implemented and cross-checked against each other:
//   * a closed form from the correlation matrix M_ij = Tr(A_i A_j),
//   * a variational minimization over measurement axes, and
//   * for the one-clean-qubit output state, an expression needing only the
//     normalized trace of U^2 — the run-the-unitary-twice estimator.
// A PPT witness across the control cut rounds out the report.

#pragma once

#include <cstdint>
#include <span>

#include "rydqc1/qmath.hpp"

namespace rydqc1 {

struct DiscordReport {
    double d_geo_closed = 0.0;
    double d_geo_minsearch = 0.0;
    double d_geo_estimator = 0.0;
    double min_pt_eigenvalue = 0.0;
};

/// Closed-form geometric discord of a density matrix on qubit (x) d, qubit
/// first. Writes rho = (1/2d)[I(x)I + sum_i sigma_i (x) A_i + I (x) B] with
/// A_i = d * Tr_qubit[(sigma_i (x) I) rho] and returns
/// (Tr M - lambda_max(M)) / (2 d^2) for M_ij = Re Tr(A_i A_j).
/// Throws InvariantError unless rho is a density matrix.
double geometric_discord_closed(const CMat& rho, std::span<const int> dims);

/// Independent variational route: minimizes |rho - sum_pm (P_pm (x) I) rho
/// (P_pm (x) I)|_F^2 over measurement axes on a Fibonacci sphere grid of at
/// least `grid_resolution` points, then refines locally. The projected state
/// is built explicitly at every probe; nothing is shared with the closed form.
double geometric_discord_minsearch(const CMat& rho, std::span<const int> dims,
                                   int grid_resolution = 10000);

/// Discord of the circuit output state from traces alone:
///   (alpha^2 / (4 * 2^n)) * (1 - |Tr(U^2)| / 2^n),
/// where trace_u2_norm = Tr(U^2)/2^n comes from a run with the controlled
/// unitary applied twice. Derived from the output-state structure; the unit
/// tests pin it against geometric_discord_closed on explicit states.
double dqc1_discord_from_traces(Complex trace_u2_norm, double alpha, int n);

/// Smallest eigenvalue of the partial transpose across the given subsystem;
/// a negative value witnesses entanglement over that cut.
double ppt_min_eigenvalue(const CMat& rho, std::span<const int> dims, int cut_subsystem);

/// Cross-validates the traces expression against the closed form on random
/// unitaries for every register size up to max_n. Returns the worst absolute
/// discrepancy seen.
double discord_estimator_discrepancy(int max_n, int trials_per_n, std::uint64_t seed);

}  // namespace rydqc1
