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

// Finite-statistics readout: projective X/Y sampling of the control qubit,
// a symmetric detection-flip channel, and the 1/eps^2 run-count law.

#pragma once

#include <cstdint>

#include "rydqc1/qmath.hpp"

namespace rydqc1 {

struct ShotEstimate {
    long long nr = 0;          // total runs, split between X and Y
    double est_x = 0.0;        // debiased, clamped to [-1, 1]
    double est_y = 0.0;
    double se_x = 0.0;         // empirical standard errors
    double se_y = 0.0;
    std::uint64_t seed = 0;
    double detect_eps = 0.0;   // per-run misidentification probability
};

/// Samples nr projective runs (X gets the extra run when nr is odd; Y gets
/// the rest). Each recorded +/-1 outcome flips with probability detect_eps;
/// the estimators divide the empirical means by (1 - 2*detect_eps) to undo
/// the known flip channel. Deterministic for a fixed seed.
ShotEstimate sample_readout(Complex trace_norm, double alpha, long long nr, std::uint64_t seed,
                            double detect_eps = 0.0);

/// Runs needed for accuracy eps: ceil(1/eps^2), eps in (0, 1].
long long required_runs(double eps);

}  // namespace rydqc1
