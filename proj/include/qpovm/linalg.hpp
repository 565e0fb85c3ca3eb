// Copyright 2026 The qpovm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra for qubit (d = 2) and two-qubit (d = 4)
 * operators: a general square matrix, a validated Hermitian wrapper, the
 * Hermitian eigensolver and the spectral functions built on top of it.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qpovm {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Square complex matrix of dimension 2 or 4, row-major.
class CMatrix {
  public:
    static constexpr std::size_t kMaxDim = 4;

    explicit CMatrix(std::size_t dim);
    CMatrix(std::size_t dim, std::initializer_list<Complex> row_major);

    static CMatrix identity(std::size_t dim);
    static CMatrix from_rows(const std::vector<std::vector<Complex>> &rows);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex &operator()(std::size_t i, std::size_t j) {
        return data_[i * dim_ + j];
    }
    const Complex &operator()(std::size_t i, std::size_t j) const {
        return data_[i * dim_ + j];
    }

    [[nodiscard]] CMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double max_abs() const;
    /// Largest |A(i,j) - conj(A(j,i))|.
    [[nodiscard]] double hermiticity_defect() const;

    CMatrix &operator+=(const CMatrix &rhs);
    CMatrix &operator-=(const CMatrix &rhs);
    CMatrix &operator*=(Complex scale);

    friend CMatrix operator+(CMatrix lhs, const CMatrix &rhs) {
        return lhs += rhs;
    }
    friend CMatrix operator-(CMatrix lhs, const CMatrix &rhs) {
        return lhs -= rhs;
    }
    friend CMatrix operator*(CMatrix lhs, Complex scale) {
        return lhs *= scale;
    }
    friend CMatrix operator*(Complex scale, CMatrix rhs) {
        return rhs *= scale;
    }
    friend CMatrix operator*(const CMatrix &lhs, const CMatrix &rhs);

  private:
    std::size_t dim_;
    std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Max-abs distance between two matrices of equal dimension.
[[nodiscard]] double max_abs_diff(const CMatrix &a, const CMatrix &b);

/**
 * Hermitian operator. Construction symmetrizes inputs whose Hermiticity
 * defect is at most 1e-12 and rejects anything worse with NotHermitian.
 */
class HermitianOp {
  public:
    static constexpr double kHermitianTol = 1e-12;

    explicit HermitianOp(const CMatrix &m);
    HermitianOp(std::size_t dim, std::initializer_list<Complex> row_major)
        : HermitianOp(CMatrix(dim, row_major)) {}

    static HermitianOp identity(std::size_t dim) {
        return HermitianOp(CMatrix::identity(dim));
    }
    static HermitianOp diag(const std::vector<double> &values);

    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] Complex operator()(std::size_t i, std::size_t j) const {
        return m_(i, j);
    }
    [[nodiscard]] double trace() const { return m_.trace().real(); }

    friend HermitianOp operator+(const HermitianOp &a, const HermitianOp &b) {
        return HermitianOp(a.m_ + b.m_);
    }
    friend HermitianOp operator-(const HermitianOp &a, const HermitianOp &b) {
        return HermitianOp(a.m_ - b.m_);
    }
    friend HermitianOp operator*(double s, const HermitianOp &a) {
        return HermitianOp(a.m_ * Complex(s));
    }

  private:
    CMatrix m_;
};

// Pauli basis.
[[nodiscard]] HermitianOp pauli_x();
[[nodiscard]] HermitianOp pauli_y();
[[nodiscard]] HermitianOp pauli_z();

/// a·𝟙 + b⃗·σ⃗ on a qubit.
[[nodiscard]] HermitianOp bloch_operator(double a, const Vec3 &b);

/// Inverse of bloch_operator: a = Tr[H]/2, b_k = Tr[H σ_k]/2.
struct BlochCoords {
    double a;
    Vec3 b;
};
[[nodiscard]] BlochCoords bloch_coords(const HermitianOp &h);

struct EigenDecomposition {
    std::vector<double> values; ///< ascending
    CMatrix vectors;            ///< orthonormal eigenvectors as columns
};

/**
 * Hermitian eigendecomposition. d = 2 uses the closed form; d = 4 uses
 * cyclic complex Jacobi rotations until the off-diagonal Frobenius norm
 * drops below 1e-14 (relative to max(1, ||H||_F)), capped at 100 sweeps.
 */
[[nodiscard]] EigenDecomposition eig_hermitian(const HermitianOp &h);

/// V diag(λ) V†.
[[nodiscard]] CMatrix reconstruct(const EigenDecomposition &e);

/// Applies f to the spectrum of h.
template <class F>
[[nodiscard]] HermitianOp spectral_map(const HermitianOp &h, F &&f) {
    const EigenDecomposition e = eig_hermitian(h);
    EigenDecomposition mapped = e;
    for (double &v : mapped.values) {
        v = f(v);
    }
    return HermitianOp(reconstruct(mapped));
}

/// Principal square root; eigenvalues in [-1e-10, 0) are clamped to 0.
[[nodiscard]] HermitianOp sqrt_psd(const HermitianOp &h);

[[nodiscard]] double min_eigenvalue(const HermitianOp &h);

/// Tr[√(A†A)] for any square input (sum of singular values).
[[nodiscard]] double trace_norm(const CMatrix &a);
/// Sum of |eigenvalues|.
[[nodiscard]] double trace_norm(const HermitianOp &a);

/// Kronecker product, index (iA·dimB + iB). Throws ResultDimUnsupported
/// when the result would exceed d = 4.
[[nodiscard]] CMatrix kron(const CMatrix &a, const CMatrix &b);
[[nodiscard]] HermitianOp kron(const HermitianOp &a, const HermitianOp &b);

enum class Subsystem { A, B };

/// Partial trace of a two-qubit operator; keeps the named subsystem.
[[nodiscard]] CMatrix partial_trace(const CMatrix &ab, Subsystem keep);
[[nodiscard]] HermitianOp partial_trace(const HermitianOp &ab, Subsystem keep);

[[nodiscard]] double dot(const Vec3 &a, const Vec3 &b);
[[nodiscard]] double norm(const Vec3 &a);

} // namespace qpovm
