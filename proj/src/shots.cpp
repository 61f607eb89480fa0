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

#include "rydqc1/shots.hpp"

#include <algorithm>
#include <cmath>

#include "rydqc1/errors.hpp"
#include "rydqc1/rng.hpp"

namespace rydqc1 {

namespace {

struct QuadratureSample {
    double est = 0.0;
    double se = 0.0;
};

// m projective runs on one quadrature with true expectation value mean.
// Draw index layout: run i uses draws (2*base + 2*i) for the outcome and
// (2*base + 2*i + 1) for the detection flip.
QuadratureSample sample_quadrature(double mean, long long m, std::uint64_t seed, long long base,
                                   double eps) {
    const double p_plus = std::clamp((1.0 + mean) / 2.0, 0.0, 1.0);
    long long plus = 0;
    for (long long i = 0; i < m; ++i) {
        bool up = uniform_at(seed, static_cast<std::uint64_t>(2 * (base + i))) < p_plus;
        if (eps > 0.0 && uniform_at(seed, static_cast<std::uint64_t>(2 * (base + i) + 1)) < eps)
            up = !up;
        if (up) ++plus;
    }
    const double observed = (2.0 * static_cast<double>(plus) - static_cast<double>(m)) /
                            static_cast<double>(m);
    const double debias = 1.0 - 2.0 * eps;
    QuadratureSample q;
    q.est = std::clamp(observed / debias, -1.0, 1.0);
    // Sample variance of +/-1 outcomes, scaled through the debiasing factor.
    const double var = (m > 1) ? (1.0 - observed * observed) * static_cast<double>(m) /
                                     static_cast<double>(m - 1)
                               : 0.0;
    q.se = std::sqrt(std::max(var, 0.0) / static_cast<double>(m)) / debias;
    return q;
}

}  // namespace

ShotEstimate sample_readout(Complex trace_norm, double alpha, long long nr, std::uint64_t seed,
                            double detect_eps) {
    if (nr < 1) throw InvariantError("sample_readout: need at least one run");
    if (std::abs(trace_norm) > 1.0 + 1e-9)
        throw InvariantError("sample_readout: normalized trace magnitude exceeds 1");
    if (alpha < 0.0 || alpha > 1.0) throw InvariantError("sample_readout: alpha must lie in [0,1]");
    if (detect_eps < 0.0 || detect_eps >= 0.5)
        throw InvariantError("sample_readout: detection error must lie in [0, 0.5)");

    const long long mx = nr - nr / 2;  // odd nr: extra run goes to X
    const long long my = nr / 2;
    const double true_x = alpha * trace_norm.real();
    const double true_y = -alpha * trace_norm.imag();

    ShotEstimate est;
    est.nr = nr;
    est.seed = seed;
    est.detect_eps = detect_eps;
    const QuadratureSample qx = sample_quadrature(true_x, mx, seed, 0, detect_eps);
    est.est_x = qx.est;
    est.se_x = qx.se;
    if (my > 0) {
        const QuadratureSample qy = sample_quadrature(true_y, my, seed, mx, detect_eps);
        est.est_y = qy.est;
        est.se_y = qy.se;
    }
    return est;
}

long long required_runs(double eps) {
    if (!(eps > 0.0) || eps > 1.0) throw InvariantError("required_runs: eps must lie in (0, 1]");
    const double raw = 1.0 / (eps * eps);
    const double snapped = std::abs(raw - std::round(raw)) < 1e-6 ? std::round(raw) : std::ceil(raw);
    return static_cast<long long>(snapped);
}

}  // namespace rydqc1
