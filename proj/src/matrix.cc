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

#include "noisytele/matrix.h"

#include <Eigen/Eigenvalues>

namespace noisytele {

Mat2 partial_trace_12(const Mat8 &a) {
    Mat2 out;
    for (std::size_t outer = 0; outer < 4; ++outer) {
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                out(r, c) += a(outer * 2 + r, outer * 2 + c);
            }
        }
    }
    return out;
}

namespace {

template <std::size_t N>
double min_eigenvalue_impl(const SquareMatrix<N> &a) {
    Eigen::Matrix<std::complex<double>, N, N> m;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            m(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
        }
    }
    Eigen::SelfAdjointEigenSolver<decltype(m)> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace

double min_eigenvalue(const Mat2 &a) { return min_eigenvalue_impl(a); }
double min_eigenvalue(const Mat4 &a) { return min_eigenvalue_impl(a); }
double min_eigenvalue(const Mat8 &a) { return min_eigenvalue_impl(a); }

Mat2 pauli_x() { return Mat2{{0.0, 1.0}, {1.0, 0.0}}; }
Mat2 pauli_y() { return Mat2{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}; }
Mat2 pauli_z() { return Mat2{{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace noisytele
