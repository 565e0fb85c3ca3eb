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

#include "qpovm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qpovm/error.hpp"

namespace qpovm {

namespace {

void check_dim(std::size_t dim) {
    if (dim != 2 && dim != 4) {
        throw Error(ErrorKind::BadDim,
                    "dimension " + std::to_string(dim) + " not in {2, 4}");
    }
}

void check_same_dim(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimMismatch, "operand dimensions differ");
    }
}

EigenDecomposition eig2(const CMatrix &h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const Complex b = h(0, 1);
    const double mean = 0.5 * (a + d);
    const double half_gap = 0.5 * (a - d);
    const double r = std::hypot(half_gap, std::abs(b));

    EigenDecomposition out{{mean - r, mean + r}, CMatrix::identity(2)};
    if (r == 0.0 || std::abs(b) <= 1e-300) {
        // Already diagonal; order ascending.
        if (a > d) {
            out.values = {d, a};
            out.vectors = CMatrix(2, {0.0, 1.0, 1.0, 0.0});
        } else {
            out.values = {a, d};
        }
        return out;
    }

    // Two algebraically equivalent eigenvectors for λ₊; keep the one with
    // the larger norm to avoid cancellation.
    const double lp = mean + r;
    const Complex u1(b);
    const Complex u2(lp - a);
    const Complex w1(lp - d);
    const Complex w2(std::conj(b));
    const double nu = std::sqrt(std::norm(u1) + std::norm(u2));
    const double nw = std::sqrt(std::norm(w1) + std::norm(w2));
    Complex v1;
    Complex v2;
    if (nu >= nw) {
        v1 = u1 / nu;
        v2 = u2 / nu;
    } else {
        v1 = w1 / nw;
        v2 = w2 / nw;
    }
    // Column 0: λ₋ eigenvector (orthogonal complement), column 1: λ₊.
    out.vectors(0, 0) = -std::conj(v2);
    out.vectors(1, 0) = std::conj(v1);
    out.vectors(0, 1) = v1;
    out.vectors(1, 1) = v2;
    return out;
}

double off_diagonal_norm(const CMatrix &h) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        for (std::size_t j = 0; j < h.dim(); ++j) {
            if (i != j) {
                s += std::norm(h(i, j));
            }
        }
    }
    return std::sqrt(s);
}

double frobenius_norm(const CMatrix &h) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        for (std::size_t j = 0; j < h.dim(); ++j) {
            s += std::norm(h(i, j));
        }
    }
    return std::sqrt(s);
}

EigenDecomposition eig_jacobi(CMatrix h) {
    constexpr int kMaxSweeps = 100;
    constexpr double kOffTol = 1e-14;
    const std::size_t n = h.dim();
    CMatrix v = CMatrix::identity(n);
    const double scale = std::max(1.0, frobenius_norm(h));

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(h) <= kOffTol * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex hpq = h(p, q);
                const double mag = std::abs(hpq);
                if (mag == 0.0) {
                    continue;
                }
                const Complex phase = hpq / mag; // e^{iφ}
                const double theta =
                    (h(q, q).real() - h(p, p).real()) / (2.0 * mag);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // U acts on the (p, q) plane:
                //   [[c, s], [-s e^{-iφ}, c e^{-iφ}]]
                const Complex upp(c);
                const Complex upq(s);
                const Complex uqp = -s * std::conj(phase);
                const Complex uqq = c * std::conj(phase);

                // h <- h U (columns p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex hkp = h(k, p);
                    const Complex hkq = h(k, q);
                    h(k, p) = hkp * upp + hkq * uqp;
                    h(k, q) = hkp * upq + hkq * uqq;
                }
                // h <- U† h (rows p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex hpk = h(p, k);
                    const Complex hqk = h(q, k);
                    h(p, k) = std::conj(upp) * hpk + std::conj(uqp) * hqk;
                    h(q, k) = std::conj(upq) * hpk + std::conj(uqq) * hqk;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(h) > kOffTol * scale) {
        throw Error(ErrorKind::NonConvergence,
                    "Jacobi eigensolver exceeded sweep cap");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return h(i, i).real() < h(j, j).real();
    });
    EigenDecomposition out{std::vector<double>(n), CMatrix(n)};
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = h(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, c) = v(r, order[c]);
        }
    }
    return out;
}

} // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim) { check_dim(dim); }

CMatrix::CMatrix(std::size_t dim, std::initializer_list<Complex> row_major)
    : dim_(dim) {
    check_dim(dim);
    if (row_major.size() != dim * dim) {
        throw Error(ErrorKind::BadDim, "entry count does not match dim*dim");
    }
    std::copy(row_major.begin(), row_major.end(), data_.begin());
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::from_rows(const std::vector<std::vector<Complex>> &rows) {
    const std::size_t n = rows.size();
    for (const auto &row : rows) {
        if (row.size() != n) {
            throw Error(ErrorKind::BadDim, "matrix is not square");
        }
    }
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(i, j) = std::conj((*this)(j, i));
        }
    }
    return out;
}

Complex CMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (std::size_t k = 0; k < dim_ * dim_; ++k) {
        m = std::max(m, std::abs(data_[k]));
    }
    return m;
}

double CMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return m;
}

CMatrix &CMatrix::operator+=(const CMatrix &rhs) {
    check_same_dim(*this, rhs);
    for (std::size_t k = 0; k < dim_ * dim_; ++k) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &rhs) {
    check_same_dim(*this, rhs);
    for (std::size_t k = 0; k < dim_ * dim_; ++k) {
        data_[k] -= rhs.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(Complex scale) {
    for (std::size_t k = 0; k < dim_ * dim_; ++k) {
        data_[k] *= scale;
    }
    return *this;
}

CMatrix operator*(const CMatrix &lhs, const CMatrix &rhs) {
    check_same_dim(lhs, rhs);
    const std::size_t n = lhs.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex l = lhs(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += l * rhs(k, j);
            }
        }
    }
    return out;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    return (a - b).max_abs();
}

HermitianOp::HermitianOp(const CMatrix &m) : m_(m) {
    const double defect = m.hermiticity_defect();
    if (defect > kHermitianTol) {
        throw Error(ErrorKind::NotHermitian,
                    "Hermiticity defect " + std::to_string(defect));
    }
    m_ = (m + m.adjoint()) * Complex(0.5);
}

HermitianOp HermitianOp::diag(const std::vector<double> &values) {
    CMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return HermitianOp(m);
}

HermitianOp pauli_x() { return HermitianOp(2, {0.0, 1.0, 1.0, 0.0}); }

HermitianOp pauli_y() {
    return HermitianOp(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
}

HermitianOp pauli_z() { return HermitianOp(2, {1.0, 0.0, 0.0, -1.0}); }

HermitianOp bloch_operator(double a, const Vec3 &b) {
    return HermitianOp(2, {Complex(a + b[2]), Complex(b[0], -b[1]),
                           Complex(b[0], b[1]), Complex(a - b[2])});
}

BlochCoords bloch_coords(const HermitianOp &h) {
    if (h.dim() != 2) {
        throw Error(ErrorKind::BadDim, "Bloch coordinates need a qubit operator");
    }
    const double a = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double bz = 0.5 * (h(0, 0).real() - h(1, 1).real());
    const Complex off = h(1, 0); // b_x + i b_y
    return {a, {off.real(), off.imag(), bz}};
}

EigenDecomposition eig_hermitian(const HermitianOp &h) {
    if (h.dim() == 2) {
        return eig2(h.matrix());
    }
    return eig_jacobi(h.matrix());
}

CMatrix reconstruct(const EigenDecomposition &e) {
    const std::size_t n = e.vectors.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                s += e.vectors(i, k) * e.values[k] * std::conj(e.vectors(j, k));
            }
            out(i, j) = s;
        }
    }
    return out;
}

HermitianOp sqrt_psd(const HermitianOp &h) {
    const EigenDecomposition e = eig_hermitian(h);
    if (e.values.front() < -1e-10) {
        throw Error(ErrorKind::NotPSD, "min eigenvalue " +
                                           std::to_string(e.values.front()));
    }
    EigenDecomposition root = e;
    for (double &v : root.values) {
        v = std::sqrt(std::max(v, 0.0));
    }
    return HermitianOp(reconstruct(root));
}

double min_eigenvalue(const HermitianOp &h) {
    return eig_hermitian(h).values.front();
}

double trace_norm(const HermitianOp &a) {
    double s = 0.0;
    for (double v : eig_hermitian(a).values) {
        s += std::abs(v);
    }
    return s;
}

double trace_norm(const CMatrix &a) {
    if (a.hermiticity_defect() <= HermitianOp::kHermitianTol) {
        return trace_norm(HermitianOp(a));
    }
    if (a.dim() == 2) {
        // (σ₁ + σ₂)² = ||A||_F² + 2|det A|
        const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        const double f = frobenius_norm(a);
        return std::sqrt(f * f + 2.0 * std::abs(det));
    }
    double s = 0.0;
    for (double v : eig_hermitian(HermitianOp(a.adjoint() * a)).values) {
        s += std::sqrt(std::max(v, 0.0));
    }
    return s;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    const std::size_t n = a.dim() * b.dim();
    if (n > CMatrix::kMaxDim) {
        throw Error(ErrorKind::ResultDimUnsupported,
                    "Kronecker product of dimension " + std::to_string(n));
    }
    CMatrix out(n);
    const std::size_t db = b.dim();
    for (std::size_t ia = 0; ia < a.dim(); ++ia) {
        for (std::size_t ja = 0; ja < a.dim(); ++ja) {
            for (std::size_t ib = 0; ib < db; ++ib) {
                for (std::size_t jb = 0; jb < db; ++jb) {
                    out(ia * db + ib, ja * db + jb) = a(ia, ja) * b(ib, jb);
                }
            }
        }
    }
    return out;
}

HermitianOp kron(const HermitianOp &a, const HermitianOp &b) {
    return HermitianOp(kron(a.matrix(), b.matrix()));
}

CMatrix partial_trace(const CMatrix &ab, Subsystem keep) {
    if (ab.dim() != 4) {
        throw Error(ErrorKind::BadDim, "partial trace needs a two-qubit operator");
    }
    CMatrix out(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < 2; ++k) {
                s += keep == Subsystem::A ? ab(i * 2 + k, j * 2 + k)
                                          : ab(k * 2 + i, k * 2 + j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

HermitianOp partial_trace(const HermitianOp &ab, Subsystem keep) {
    return HermitianOp(partial_trace(ab.matrix(), keep));
}

double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

} // namespace qpovm
