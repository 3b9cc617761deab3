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

#include "noisytele/noise.h"

#include <cmath>
#include <string>

namespace noisytele {

std::string_view to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::kNone:
            return "none";
        case NoiseKind::kBitFlip:
            return "bf";
        case NoiseKind::kPhaseFlip:
            return "phf";
        case NoiseKind::kDepolarizing:
            return "d";
        case NoiseKind::kAmplitudeDamping:
            return "ad";
    }
    return "?";
}

void NoiseSpec::validate() const {
    if (kind == NoiseKind::kNone) {
        return;
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError("noise probability must lie in [0, 1], got " + std::to_string(p) + " for " +
                         std::string(to_string(kind)));
    }
}

void NoiseConfig::validate() const {
    input.validate();
    alice.validate();
    bob.validate();
}

std::vector<Mat2> kraus_ops(const NoiseSpec &spec) {
    spec.validate();
    const double p = spec.effective_p();
    const Mat2 id = Mat2::identity();
    switch (spec.kind) {
        case NoiseKind::kNone:
            return {id};
        case NoiseKind::kBitFlip:
            return {std::sqrt(1.0 - p) * id, std::sqrt(p) * pauli_x()};
        case NoiseKind::kPhaseFlip:
            return {std::sqrt(1.0 - p) * id, std::sqrt(p) * pauli_z()};
        case NoiseKind::kDepolarizing: {
            const double w = std::sqrt(p / 4.0);
            return {std::sqrt(1.0 - 3.0 * p / 4.0) * id, w * pauli_x(), w * pauli_y(), w * pauli_z()};
        }
        case NoiseKind::kAmplitudeDamping:
            return {Mat2{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}}, Mat2{{0.0, std::sqrt(p)}, {0.0, 0.0}}};
    }
    throw UsageError("kraus_ops: unknown noise kind");
}

bool check_trace_preserving(std::span<const Mat2> ops, double tol) {
    Mat2 sum;
    for (const Mat2 &e : ops) {
        sum += dagger(e) * e;
    }
    return approx_equal(sum, Mat2::identity(), tol);
}

Mat8 lift(const Mat2 &op, int slot) {
    const Mat2 id = Mat2::identity();
    switch (slot) {
        case 1:
            return kron(kron(op, id), id);
        case 2:
            return kron(kron(id, op), id);
        case 3:
            return kron(kron(id, id), op);
        default:
            throw UsageError("lift: slot must be 1, 2 or 3, got " + std::to_string(slot));
    }
}

namespace {

Mat8 apply_lifted(const Mat8 &rho, const NoiseSpec &spec, int slot) {
    if (spec.kind == NoiseKind::kNone) {
        return rho;
    }
    Mat8 out;
    for (const Mat2 &e : kraus_ops(spec)) {
        const Mat8 big = lift(e, slot);
        out += big * rho * dagger(big);
    }
    return out;
}

}  // namespace

Mat8 apply_noise_unchecked(const Mat8 &rho, const NoiseConfig &config) {
    config.validate();
    const Mat8 after_bob = apply_lifted(rho, config.bob, 3);
    const Mat8 after_alice = apply_lifted(after_bob, config.alice, 2);
    return apply_lifted(after_alice, config.input, 1);
}

Mat8 apply_noise(const Mat8 &rho, const NoiseConfig &config) {
    if (!is_density_matrix(rho)) {
        throw ValidationError("apply_noise: input is not a valid density matrix");
    }
    return apply_noise_unchecked(rho, config);
}

}  // namespace noisytele
