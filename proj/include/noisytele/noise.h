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

#ifndef NOISYTELE_NOISE_H
#define NOISYTELE_NOISE_H

#include <span>
#include <string_view>
#include <vector>

#include "noisytele/matrix.h"

namespace noisytele {

enum class NoiseKind { kNone, kBitFlip, kPhaseFlip, kDepolarizing, kAmplitudeDamping };

/// Short name used in CSV output and on the command line: none, bf, phf, d, ad.
std::string_view to_string(NoiseKind kind);

/// One single-qubit channel. For kNone the probability is ignored.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::kNone;
    double p = 0.0;

    /// Probability as seen by the channel (0 for kNone).
    double effective_p() const { return kind == NoiseKind::kNone ? 0.0 : p; }
    /// Throws UsageError when p is outside [0, 1] for a real channel.
    void validate() const;

    friend bool operator==(const NoiseSpec &, const NoiseSpec &) = default;
};

/// Independent noise on the input qubit, Alice's channel qubit and Bob's
/// channel qubit.
struct NoiseConfig {
    NoiseSpec input;
    NoiseSpec alice;
    NoiseSpec bob;

    void validate() const;

    friend bool operator==(const NoiseConfig &, const NoiseConfig &) = default;
};

/// Kraus operators of the channel. Zero-weight operators (p = 0 or p = 1)
/// are kept so every kind always yields the same operator count.
std::vector<Mat2> kraus_ops(const NoiseSpec &spec);

/// Sum_k E_k^dagger E_k == 1 within tol.
bool check_trace_preserving(std::span<const Mat2> ops, double tol = 1e-12);

/// Embeds a single-qubit operator at qubit `slot` of the three-qubit
/// register (1 = input, 2 = Alice, 3 = Bob).
Mat8 lift(const Mat2 &op, int slot);

/// rho -> Sum_k E_k rho E_k^dagger for operators acting on `qubit`
/// (0-based, most significant first) of an N-dimensional register.
/// No validation; works on arbitrary (also non-Hermitian) operators.
template <std::size_t N>
SquareMatrix<N> apply_local_channel(const SquareMatrix<N> &rho, std::span<const Mat2> ops, std::size_t qubit) {
    // Stride of the target qubit inside the flattened index.
    std::size_t num_qubits = 0;
    for (std::size_t d = N; d > 1; d /= 2) {
        ++num_qubits;
    }
    const std::size_t stride = std::size_t{1} << (num_qubits - 1 - qubit);
    auto bit = [&](std::size_t idx) { return (idx / stride) % 2; };
    auto with_bit = [&](std::size_t idx, std::size_t b) { return idx - bit(idx) * stride + b * stride; };

    SquareMatrix<N> out;
    for (const Mat2 &e : ops) {
        // tmp = E rho, then out += tmp E^dagger, touching only the two
        // entries per row/column that the local operator mixes.
        SquareMatrix<N> tmp;
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < N; ++c) {
                const std::size_t br = bit(r);
                tmp(r, c) = e(br, 0) * rho(with_bit(r, 0), c) + e(br, 1) * rho(with_bit(r, 1), c);
            }
        }
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < N; ++c) {
                const std::size_t bc = bit(c);
                out(r, c) += tmp(r, with_bit(c, 0)) * std::conj(e(bc, 0)) + tmp(r, with_bit(c, 1)) * std::conj(e(bc, 1));
            }
        }
    }
    return out;
}

/// The composite noisy state: Bob's channel first, then Alice's, then the
/// input's. Throws ValidationError if rho is not a density matrix.
Mat8 apply_noise(const Mat8 &rho, const NoiseConfig &config);

/// Same map without validation, via explicitly lifted 8x8 Kraus operators.
Mat8 apply_noise_unchecked(const Mat8 &rho, const NoiseConfig &config);

}  // namespace noisytele

#endif
