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

#include "rydqc1/ensemble.hpp"

#include <algorithm>
#include <cmath>

#include "rydqc1/errors.hpp"

namespace rydqc1 {

void PoissonModel::validate() const {
    if (!(nbar > 0.0)) throw InvariantError("PoissonModel: mean atom number must be positive");
    if (cutoff < 0) throw InvariantError("PoissonModel: cutoff must be nonnegative");
    if (single_load_p <= 0.0 || single_load_p > 1.0)
        throw InvariantError("PoissonModel: load probability must lie in (0, 1]");
}

std::vector<std::pair<int, double>> poisson_weights(const PoissonModel& m) {
    m.validate();
    const double spread = 8.0 * std::sqrt(m.nbar);
    const int lo = std::max(0, static_cast<int>(std::floor(m.nbar - spread)));
    int hi = static_cast<int>(std::ceil(m.nbar + spread));
    if (m.cutoff > 0) hi = std::min(hi, m.cutoff);
    if (hi < lo) throw InvariantError("poisson_weights: cutoff excludes the whole distribution");

    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    double total = 0.0;
    for (int n = lo; n <= hi; ++n) {
        const double logw = -m.nbar + n * std::log(m.nbar) - std::lgamma(n + 1.0);
        const double w = std::exp(logw);
        out.emplace_back(n, w);
        total += w;
    }
    for (auto& [n, w] : out) w /= total;
    return out;
}

Complex averaged_trace(const Mat2& u1, const PoissonModel& m) {
    const Complex z = u1.trace() / 2.0;
    Complex acc(0, 0);
    Complex zpow(1, 0);
    int last = 0;
    for (const auto& [n, w] : poisson_weights(m)) {
        for (; last < n; ++last) zpow *= z;
        acc += w * zpow;
    }
    return acc;
}

Complex averaged_trace_pgf(Complex z, double nbar) { return std::exp(nbar * (z - 1.0)); }

double peak_width(int n) {
    if (n < 1) throw InvariantError("peak_width: atom count must be at least 1");
    // Re[(cos(theta/2))^n] falls from 1 at theta = 0 to 0 at theta = pi;
    // bisect for the half-maximum crossing.
    auto f = [n](double theta) { return std::pow(std::cos(theta / 2.0), n) - 0.5; };
    double lo = 0.0, hi = M_PI;
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    const double theta_half = 0.5 * (lo + hi);
    return 2.0 * theta_half;  // full width
}

UncertaintyReport trace_uncertainty(const PoissonModel& m, std::span<const double> theta_grid) {
    if (theta_grid.empty()) throw InvariantError("trace_uncertainty: empty grid");
    const auto weights = poisson_weights(m);

    std::vector<double> mean(theta_grid.size()), stdev(theta_grid.size());
    for (std::size_t i = 0; i < theta_grid.size(); ++i) {
        const double x = std::cos(theta_grid[i] / 2.0);
        double m1 = 0.0, m2 = 0.0;
        for (const auto& [n, w] : weights) {
            const double v = std::pow(x, n);
            m1 += w * v;
            m2 += w * v * v;
        }
        mean[i] = m1;
        stdev[i] = std::sqrt(std::max(m2 - m1 * m1, 0.0));
    }

    UncertaintyReport rep;
    const auto [mn, mx] = std::minmax_element(mean.begin(), mean.end());
    rep.dynamic_range = *mx - *mn;
    if (rep.dynamic_range <= 0.0) throw NumericError("trace_uncertainty: flat trace over the grid");
    rep.rel.resize(theta_grid.size());
    for (std::size_t i = 0; i < theta_grid.size(); ++i) {
        rep.rel[i] = stdev[i] / rep.dynamic_range;
        if (rep.rel[i] > rep.max_rel) {
            rep.max_rel = rep.rel[i];
            rep.theta_at_max = theta_grid[i];
        }
    }
    rep.rel_at_theta0 = rep.rel.front();
    return rep;
}

double repetition_overhead(const PoissonModel& m) {
    m.validate();
    return 1.0 / m.single_load_p;
}

}  // namespace rydqc1
