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

// Dense complex linear algebra substrate: Kronecker products, Hermitian
// eigendecomposition, matrix exponentials, partial trace/transpose, norms.
// Everything here is a pure function on immutable inputs.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <span>
#include <vector>

namespace rydqc1 {

using Complex = std::complex<double>;
using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVec = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;

/// Dense complex matrix with explicit dimension metadata. `dims` lists the
/// subsystem dimensions of a multipartite operator; it is empty for plain
/// matrices and must multiply out to the (square) matrix size when present.
struct ComplexMatrix {
    CMat m;
    std::vector<int> dims;

    ComplexMatrix() = default;
    explicit ComplexMatrix(CMat mat, std::vector<int> subsystem_dims = {});

    Eigen::Index rows() const { return m.rows(); }
    Eigen::Index cols() const { return m.cols(); }
};

inline constexpr double kHermitianTol = 1e-10;  // relative to max-abs entry

// Pauli matrices and small constructors.
Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();
CMat identity(Eigen::Index d);

double max_abs(const CMat& a);
double frobenius_norm(const CMat& a);
/// Largest singular value.
double operator_norm(const CMat& a);
bool is_hermitian(const CMat& a, double tol);

/// Kronecker product, row-major block layout: result(i*p+k, j*q+l) = a(i,j)*b(k,l).
CMat kron(const CMat& a, const CMat& b);
/// Kronecker product with subsystem metadata; dims are concatenated.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// Kronecker power a^(⊗n); n = 0 gives the 1x1 identity.
CMat kron_power(const CMat& a, int n);

/// exp(-i h t). Hermitian h (within kHermitianTol of its max-abs entry) goes
/// through an eigendecomposition; anything else through Pade scaling-and-squaring.
CMat matexp(const CMat& h, double t);

/// Reduced operator on the kept subsystems (ascending original order).
/// `dims` must multiply out to the size of rho; `keep` holds subsystem indices.
CMat partial_trace(const CMat& rho, std::span<const int> dims, std::span<const int> keep);
CMat partial_trace(const ComplexMatrix& rho, std::span<const int> keep);

/// Transpose of one subsystem only.
CMat partial_transpose(const CMat& rho, std::span<const int> dims, int subsystem);

struct EigHermitian {
    Eigen::VectorXd values;  // ascending
    CMat vectors;            // columns; h = V diag(values) V†
};

/// Hermitian eigendecomposition. Throws InvariantError if h is not Hermitian
/// within kHermitianTol of its max-abs entry.
EigHermitian eig_hermitian(const CMat& h);

/// Haar-distributed random unitary (QR of a complex Ginibre matrix with the
/// R-diagonal phase fix). Deterministic for a given generator state.
CMat random_unitary(Eigen::Index d, std::mt19937_64& rng);

}  // namespace rydqc1
