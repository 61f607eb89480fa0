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

#include "rydqc1/qmath.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <numeric>

#include "rydqc1/errors.hpp"

namespace rydqc1 {

namespace {

Eigen::Index dims_product(std::span<const int> dims) {
    Eigen::Index p = 1;
    for (int d : dims) {
        if (d <= 0) throw InvariantError("subsystem dimensions must be positive");
        p *= d;
    }
    return p;
}

void require_dims_match(const CMat& rho, std::span<const int> dims) {
    if (rho.rows() != rho.cols()) throw InvariantError("operator must be square");
    if (dims_product(dims) != rho.rows())
        throw InvariantError("product of subsystem dimensions does not match operator size");
}

// Mixed-radix digits of a flat index, most significant subsystem first.
void to_digits(Eigen::Index idx, std::span<const int> dims, std::vector<int>& out) {
    out.resize(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        out[k] = static_cast<int>(idx % dims[k]);
        idx /= dims[k];
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(CMat mat, std::vector<int> subsystem_dims)
    : m(std::move(mat)), dims(std::move(subsystem_dims)) {
    if (!dims.empty()) require_dims_match(m, dims);
}

Mat2 sigma_x() {
    Mat2 s;
    s << 0, 1, 1, 0;
    return s;
}

Mat2 sigma_y() {
    Mat2 s;
    s << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return s;
}

Mat2 sigma_z() {
    Mat2 s;
    s << 1, 0, 0, -1;
    return s;
}

CMat identity(Eigen::Index d) { return CMat::Identity(d, d); }

double max_abs(const CMat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double frobenius_norm(const CMat& a) { return a.norm(); }

double operator_norm(const CMat& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMat> svd(a);
    return svd.singularValues()(0);
}

bool is_hermitian(const CMat& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return max_abs(a - a.adjoint()) <= tol;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    std::vector<int> dims;
    // A plain matrix counts as a single subsystem of its own size.
    auto append = [&dims](const ComplexMatrix& x) {
        if (!x.dims.empty())
            dims.insert(dims.end(), x.dims.begin(), x.dims.end());
        else
            dims.push_back(static_cast<int>(x.rows()));
    };
    append(a);
    append(b);
    return ComplexMatrix(kron(a.m, b.m), std::move(dims));
}

CMat kron_power(const CMat& a, int n) {
    if (n < 0) throw InvariantError("kron_power: negative exponent");
    CMat out = CMat::Identity(1, 1);
    for (int k = 0; k < n; ++k) out = kron(out, a);
    return out;
}

CMat matexp(const CMat& h, double t) {
    if (h.rows() != h.cols()) throw InvariantError("matexp: matrix must be square");
    if (!h.allFinite()) throw NumericError("matexp: non-finite entries");
    const double scale = max_abs(h);
    if (scale == 0.0 || is_hermitian(h, kHermitianTol * scale)) {
        Eigen::SelfAdjointEigenSolver<CMat> es(h);
        if (es.info() != Eigen::Success) throw NumericError("matexp: eigendecomposition failed");
        CVec phases(h.rows());
        for (Eigen::Index k = 0; k < h.rows(); ++k)
            phases(k) = std::exp(Complex(0, -es.eigenvalues()(k) * t));
        return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    }
    CMat a = Complex(0, -t) * h;
    return a.exp();
}

CMat partial_trace(const CMat& rho, std::span<const int> dims, std::span<const int> keep) {
    require_dims_match(rho, dims);
    std::vector<bool> kept(dims.size(), false);
    for (int k : keep) {
        if (k < 0 || static_cast<std::size_t>(k) >= dims.size())
            throw InvariantError("partial_trace: subsystem index out of range");
        kept[static_cast<std::size_t>(k)] = true;
    }
    Eigen::Index dout = 1;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (kept[k]) dout *= dims[k];

    CMat out = CMat::Zero(dout, dout);
    std::vector<int> rd, cd;
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        to_digits(r, dims, rd);
        for (Eigen::Index c = 0; c < rho.cols(); ++c) {
            to_digits(c, dims, cd);
            bool diagonal_on_traced = true;
            Eigen::Index ro = 0, co = 0;
            for (std::size_t k = 0; k < dims.size(); ++k) {
                if (kept[k]) {
                    ro = ro * dims[k] + rd[k];
                    co = co * dims[k] + cd[k];
                } else if (rd[k] != cd[k]) {
                    diagonal_on_traced = false;
                    break;
                }
            }
            if (diagonal_on_traced) out(ro, co) += rho(r, c);
        }
    }
    return out;
}

CMat partial_trace(const ComplexMatrix& rho, std::span<const int> keep) {
    if (rho.dims.empty()) throw InvariantError("partial_trace: missing subsystem dimensions");
    return partial_trace(rho.m, rho.dims, keep);
}

CMat partial_transpose(const CMat& rho, std::span<const int> dims, int subsystem) {
    require_dims_match(rho, dims);
    if (subsystem < 0 || static_cast<std::size_t>(subsystem) >= dims.size())
        throw InvariantError("partial_transpose: subsystem index out of range");

    CMat out(rho.rows(), rho.cols());
    std::vector<int> rd, cd;
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        to_digits(r, dims, rd);
        for (Eigen::Index c = 0; c < rho.cols(); ++c) {
            to_digits(c, dims, cd);
            std::swap(rd[static_cast<std::size_t>(subsystem)], cd[static_cast<std::size_t>(subsystem)]);
            Eigen::Index rt = 0, ct = 0;
            for (std::size_t k = 0; k < dims.size(); ++k) {
                rt = rt * dims[k] + rd[k];
                ct = ct * dims[k] + cd[k];
            }
            out(rt, ct) = rho(r, c);
            std::swap(rd[static_cast<std::size_t>(subsystem)], cd[static_cast<std::size_t>(subsystem)]);
        }
    }
    return out;
}

EigHermitian eig_hermitian(const CMat& h) {
    if (h.rows() != h.cols()) throw InvariantError("eig_hermitian: matrix must be square");
    const double scale = max_abs(h);
    if (scale > 0.0 && !is_hermitian(h, kHermitianTol * scale))
        throw InvariantError("eig_hermitian: matrix is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    if (es.info() != Eigen::Success) throw NumericError("eig_hermitian: solver failed");
    return EigHermitian{es.eigenvalues(), es.eigenvectors()};
}

CMat random_unitary(Eigen::Index d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ() * CMat::Identity(d, d);
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < d; ++k) {
        Complex rkk = r(k, k);
        q.col(k) *= (rkk == Complex(0, 0)) ? Complex(1, 0) : rkk / std::abs(rkk);
    }
    return q;
}

}  // namespace rydqc1
