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

// Atom-number statistics for average-locked operation: the trap loads a
// Poisson-distributed number of ensemble atoms, so measured traces are
// weighted averages of per-n traces, with a width/uncertainty structure
// set by the spread of n.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rydqc1/qmath.hpp"

namespace rydqc1 {

struct PoissonModel {
    double nbar = 0.0;         // mean atom number
    int cutoff = 0;            // max n kept; 0 = automatic (nbar + 8 sqrt(nbar))
    double single_load_p = 0.8;  // probability the control-atom trap is filled

    void validate() const;
};

/// Truncated, renormalized Poisson pmf as (n, weight) pairs. Truncation is
/// +/- 8 sqrt(nbar) around the mean (tail mass < 1e-12 at nbar = 100), or
/// [0, cutoff] when a cutoff is set.
std::vector<std::pair<int, double>> poisson_weights(const PoissonModel& m);

/// Poisson-weighted normalized trace sum_n w_n (Tr(u1)/2)^n.
Complex averaged_trace(const Mat2& u1, const PoissonModel& m);

/// Untruncated closed form of the same average via the probability
/// generating function: exp(nbar (z - 1)) with z = Tr(u1)/2.
Complex averaged_trace_pgf(Complex z, double nbar);

/// FWHM, in rotation angle, of the trace feature Re[(cos(theta/2))^n]
/// around theta = 0. Bisection to 1e-8.
double peak_width(int n);

struct UncertaintyReport {
    double max_rel = 0.0;       // grid maximum of weighted std / dynamic range
    double theta_at_max = 0.0;
    double rel_at_theta0 = 0.0; // value at the first grid point
    double dynamic_range = 0.0; // peak-to-trough of the mean trace over the grid
    std::vector<double> rel;    // per-grid-point relative deviation
};

/// Run-to-run spread of the measured trace caused by Poisson atom-number
/// fluctuations. At each angle theta the per-atom trace is cos(theta/2)
/// (any lossless rotation by theta has that normalized trace, whatever its
/// axis); the report gives the Poisson-weighted standard deviation of
/// (cos(theta/2))^n normalized by the dynamic range of the mean curve.
UncertaintyReport trace_uncertainty(const PoissonModel& m, std::span<const double> theta_grid);

/// Wall-clock repetition factor from conditionally starting runs only once
/// the control trap is loaded; statistics are unaffected.
double repetition_overhead(const PoissonModel& m);

}  // namespace rydqc1
