// Copyright 2026 The noisytele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOISYTELE_MATRIX_H
#define NOISYTELE_MATRIX_H

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

#include "noisytele/errors.h"

namespace noisytele {

using Complex = std::complex<double>;

/// Dense complex square matrix with compile-time dimension.
///
/// Only the small sizes used by a three-qubit register are instantiated in
/// practice (2, 4 and 8). Entries are stored row-major. Qubit ordering for
/// Kronecker products is fixed everywhere: the left factor is the most
/// significant block, so a three-qubit index reads (input, alice, bob).
template <std::size_t N>
class SquareMatrix {
    static_assert(N > 0, "dimension must be positive");

 public:
    static constexpr std::size_t kDim = N;

    SquareMatrix() { data_.fill(Complex{0.0, 0.0}); }

    /// Row-major construction; throws UsageError on a shape mismatch.
    SquareMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : SquareMatrix() {
        if (rows.size() != N) {
            throw UsageError("SquareMatrix: wrong number of rows");
        }
        std::size_t r = 0;
        for (const auto &row : rows) {
            if (row.size() != N) {
                throw UsageError("SquareMatrix: wrong number of columns");
            }
            std::size_t c = 0;
            for (const auto &v : row) {
                (*this)(r, c++) = v;
            }
            ++r;
        }
    }

    static SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t k = 0; k < N; ++k) {
            m(k, k) = 1.0;
        }
        return m;
    }

    static SquareMatrix diagonal(const std::array<Complex, N> &d) {
        SquareMatrix m;
        for (std::size_t k = 0; k < N; ++k) {
            m(k, k) = d[k];
        }
        return m;
    }

    /// |v><v|.
    static SquareMatrix outer(const std::array<Complex, N> &v) {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < N; ++c) {
                m(r, c) = v[r] * std::conj(v[c]);
            }
        }
        return m;
    }

    static constexpr std::size_t dim() { return N; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

    SquareMatrix &operator+=(const SquareMatrix &o) {
        for (std::size_t k = 0; k < N * N; ++k) {
            data_[k] += o.data_[k];
        }
        return *this;
    }
    SquareMatrix &operator-=(const SquareMatrix &o) {
        for (std::size_t k = 0; k < N * N; ++k) {
            data_[k] -= o.data_[k];
        }
        return *this;
    }
    SquareMatrix &operator*=(Complex s) {
        for (auto &v : data_) {
            v *= s;
        }
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix &b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix &b) { return a -= b; }
    friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
    friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }
    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) { return matmul(a, b); }

    friend bool operator==(const SquareMatrix &, const SquareMatrix &) = default;

    const std::array<Complex, N * N> &entries() const { return data_; }

 private:
    std::array<Complex, N * N> data_;
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;
using Mat8 = SquareMatrix<8>;

template <std::size_t N>
SquareMatrix<N> matmul(const SquareMatrix<N> &a, const SquareMatrix<N> &b) {
    SquareMatrix<N> out;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t k = 0; k < N; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < N; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

/// Conjugate transpose.
template <std::size_t N>
SquareMatrix<N> dagger(const SquareMatrix<N> &a) {
    SquareMatrix<N> out;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

template <std::size_t N, std::size_t M>
SquareMatrix<N * M> kron(const SquareMatrix<N> &a, const SquareMatrix<M> &b) {
    SquareMatrix<N * M> out;
    for (std::size_t ar = 0; ar < N; ++ar) {
        for (std::size_t ac = 0; ac < N; ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < M; ++br) {
                for (std::size_t bc = 0; bc < M; ++bc) {
                    out(ar * M + br, ac * M + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

template <std::size_t N>
Complex trace(const SquareMatrix<N> &a) {
    Complex t{};
    for (std::size_t k = 0; k < N; ++k) {
        t += a(k, k);
    }
    return t;
}

/// Traces out the two most significant qubits (input and Alice) of a
/// three-qubit operator, leaving Bob's 2x2 block.
Mat2 partial_trace_12(const Mat8 &a);

/// Largest entry-wise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N> &a, const SquareMatrix<N> &b) {
    double m = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

template <std::size_t N>
bool approx_equal(const SquareMatrix<N> &a, const SquareMatrix<N> &b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

// Density-matrix validation. Default tolerances apply to every protocol use.
inline constexpr double kTolHermitian = 1e-10;
inline constexpr double kTolTrace = 1e-10;
inline constexpr double kTolPsd = 1e-10;

template <std::size_t N>
bool is_hermitian(const SquareMatrix<N> &a, double tol = kTolHermitian) {
    return max_abs_diff(a, dagger(a)) <= tol;
}

/// Smallest eigenvalue of the Hermitian part (a + a^dagger) / 2.
double min_eigenvalue(const Mat2 &a);
double min_eigenvalue(const Mat4 &a);
double min_eigenvalue(const Mat8 &a);

template <std::size_t N>
bool is_finite(const SquareMatrix<N> &a) {
    for (const auto &v : a.entries()) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            return false;
        }
    }
    return true;
}

/// Hermitian, unit trace and eigenvalues no lower than -tol_psd.
template <std::size_t N>
bool is_density_matrix(const SquareMatrix<N> &a, double tol_herm = kTolHermitian, double tol_trace = kTolTrace,
                       double tol_psd = kTolPsd) {
    return is_finite(a) && is_hermitian(a, tol_herm) && std::abs(trace(a) - 1.0) <= tol_trace &&
           min_eigenvalue(a) >= -tol_psd;
}

// Pauli matrices.
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

}  // namespace noisytele

#endif
