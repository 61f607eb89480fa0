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

#include "rydqc1/discord.hpp"

#include <array>
#include <cmath>

#include "rydqc1/dqc1.hpp"
#include "rydqc1/errors.hpp"

namespace rydqc1 {

namespace {

Eigen::Index register_dim(const CMat& rho, std::span<const int> dims) {
    if (dims.size() != 2 || dims[0] != 2)
        throw InvariantError("discord: expected dims {2, d} with the qubit first");
    if (rho.rows() != rho.cols() || rho.rows() != 2 * dims[1])
        throw InvariantError("discord: state size does not match dims");
    return dims[1];
}

void require_density_matrix(const CMat& rho) {
    const double scale = max_abs(rho);
    if (scale == 0.0) throw InvariantError("discord: zero operator is not a state");
    if (!is_hermitian(rho, 1e-9 * scale)) throw InvariantError("discord: state is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9)
        throw InvariantError("discord: state trace is not 1");
    Eigen::SelfAdjointEigenSolver<CMat> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
        throw InvariantError("discord: state is not positive semidefinite");
}

std::array<Mat2, 3> paulis() { return {sigma_x(), sigma_y(), sigma_z()}; }

// Projector onto the +1 eigenspace of n.sigma for a unit vector n.
Mat2 axis_projector(double nx, double ny, double nz) {
    Mat2 p = 0.5 * (Mat2::Identity() + nx * sigma_x() + ny * sigma_y() + nz * sigma_z());
    return p;
}

// Frobenius distance^2 between rho and its projectively measured image for
// the axis (nx, ny, nz), built block by block on the qubit factor.
double measured_distance_sq(const CMat& rho, Eigen::Index d, double nx, double ny, double nz) {
    const Mat2 p0 = axis_projector(nx, ny, nz);
    const Mat2 p1 = Mat2::Identity() - p0;

    CMat projected = CMat::Zero(2 * d, 2 * d);
    for (const Mat2& p : {p0, p1}) {
        // (P (x) I) rho (P (x) I): qubit-block sandwich with scalar weights.
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Complex w(0, 0);
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) w += p(i, k) * p(l, j) * Complex(0, 0);
                (void)w;
            }
        CMat sandwich = CMat::Zero(2 * d, 2 * d);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                CMat block = CMat::Zero(d, d);
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        block += p(i, k) * p(l, j) * rho.block(k * d, l * d, d, d);
                sandwich.block(i * d, j * d, d, d) = block;
            }
        projected += sandwich;
    }
    return (rho - projected).squaredNorm();
}

}  // namespace

double geometric_discord_closed(const CMat& rho, std::span<const int> dims) {
    const Eigen::Index d = register_dim(rho, dims);
    require_density_matrix(rho);

    const std::array<int, 2> dvec = {2, static_cast<int>(d)};
    const std::array<int, 1> keep_register = {1};
    Eigen::Matrix3d m;
    std::array<CMat, 3> a;
    const auto sig = paulis();
    for (int i = 0; i < 3; ++i) {
        const CMat weighted = kron(CMat(sig[i]), identity(d)) * rho;
        a[i] = static_cast<double>(d) * partial_trace(weighted, dvec, keep_register);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = (a[i] * a[j]).trace().real();

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
    const double value = (m.trace() - es.eigenvalues().maxCoeff()) /
                         (2.0 * static_cast<double>(d) * static_cast<double>(d));
    return std::max(value, 0.0);
}

double geometric_discord_minsearch(const CMat& rho, std::span<const int> dims,
                                   int grid_resolution) {
    const Eigen::Index d = register_dim(rho, dims);
    require_density_matrix(rho);
    const int npts = std::max(grid_resolution, 16);

    // Coarse pass: Fibonacci sphere.
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0.0, best_phi = 0.0;
    for (int k = 0; k < npts; ++k) {
        const double z = 1.0 - 2.0 * (k + 0.5) / npts;
        const double r = std::sqrt(std::max(1.0 - z * z, 0.0));
        const double phi = golden_angle * k;
        const double val = measured_distance_sq(rho, d, r * std::cos(phi), r * std::sin(phi), z);
        if (val < best) {
            best = val;
            best_theta = std::acos(z);
            best_phi = phi;
        }
    }

    // Local refinement: pattern search on the angles with shrinking step.
    auto eval = [&](double theta, double phi) {
        const double s = std::sin(theta);
        return measured_distance_sq(rho, d, s * std::cos(phi), s * std::sin(phi), std::cos(theta));
    };
    double step = 2.0 * M_PI / std::sqrt(static_cast<double>(npts));
    while (step > 1e-7) {
        bool improved = false;
        for (const auto& [dt, dp] : std::initializer_list<std::pair<double, double>>{
                 {step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}) {
            const double val = eval(best_theta + dt, best_phi + dp);
            if (val < best) {
                best = val;
                best_theta += dt;
                best_phi += dp;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return std::max(best, 0.0);
}

double dqc1_discord_from_traces(Complex trace_u2_norm, double alpha, int n) {
    if (std::abs(trace_u2_norm) > 1.0 + 1e-9)
        throw InvariantError("dqc1_discord_from_traces: normalized trace magnitude exceeds 1");
    if (alpha < 0.0 || alpha > 1.0)
        throw InvariantError("dqc1_discord_from_traces: alpha must lie in [0,1]");
    if (n < 0) throw InvariantError("dqc1_discord_from_traces: negative atom count");
    const double dim = std::pow(2.0, n);
    const double value = alpha * alpha / (4.0 * dim) * (1.0 - std::min(std::abs(trace_u2_norm), 1.0));
    return std::max(value, 0.0);
}

double ppt_min_eigenvalue(const CMat& rho, std::span<const int> dims, int cut_subsystem) {
    const CMat pt = partial_transpose(rho, dims, cut_subsystem);
    Eigen::SelfAdjointEigenSolver<CMat> es(pt, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericError("ppt_min_eigenvalue: solver failed");
    return es.eigenvalues().minCoeff();
}

double discord_estimator_discrepancy(int max_n, int trials_per_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int n = 1; n <= max_n; ++n) {
        const Eigen::Index d = Eigen::Index(1) << n;
        for (int trial = 0; trial < trials_per_n; ++trial) {
            const CMat u = random_unitary(d, rng);
            for (double alpha : {1.0, 0.5}) {
                const CMat rho = output_state(u, alpha);
                const std::array<int, 2> dims = {2, static_cast<int>(d)};
                const double closed = geometric_discord_closed(rho, dims);
                const double traces =
                    dqc1_discord_from_traces(trace_exact(CMat(u * u)), alpha, n);
                worst = std::max(worst, std::abs(closed - traces));
            }
        }
    }
    return worst;
}

}  // namespace rydqc1
