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

#include "noisytele/states.h"

#include <cmath>
#include <numbers>
#include <string>

namespace noisytele {

InputQubit::InputQubit(double prob0, double phase) : prob0_(prob0), phase_(phase) {
    if (!(prob0 >= 0.0 && prob0 <= 1.0)) {
        throw UsageError("InputQubit: prob0 must lie in [0, 1], got " + std::to_string(prob0));
    }
    if (!(phase >= 0.0 && phase < 2.0 * std::numbers::pi)) {
        throw UsageError("InputQubit: phase must lie in [0, 2pi), got " + std::to_string(phase));
    }
}

BellIndex::BellIndex(int j) : j_(j) {
    if (j < 1 || j > 4) {
        throw UsageError("BellIndex: expected 1..4, got " + std::to_string(j));
    }
}

std::array<BellIndex, 4> BellIndex::all() { return {BellIndex(1), BellIndex(2), BellIndex(3), BellIndex(4)}; }

std::string_view to_string(ChannelKind kind) { return kind == ChannelKind::kPhi ? "phi" : "psi"; }

Mat2 input_density(const InputQubit &q) {
    const Complex a = std::sqrt(q.prob0());
    const Complex b = std::sqrt(1.0 - q.prob0()) * std::polar(1.0, q.phase());
    return Mat2{{a * std::conj(a), a * std::conj(b)}, {std::conj(a) * b, b * std::conj(b)}};
}

Vec4 bell_vector(BellIndex j, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    switch (j.value()) {
        case 1:
            return {c, 0.0, 0.0, s};
        case 2:
            return {s, 0.0, 0.0, -c};
        case 3:
            return {0.0, c, s, 0.0};
        default:
            return {0.0, s, -c, 0.0};
    }
}

Mat4 channel_density(const ProtocolParams &params) {
    const BellIndex j(params.channel == ChannelKind::kPhi ? 1 : 3);
    return Mat4::outer(bell_vector(j, params.theta));
}

Mat4 projector(BellIndex j, double phi) { return Mat4::outer(bell_vector(j, phi)); }

Mat2 correction_unitary(BellIndex j, ChannelKind channel) {
    const Mat2 id = Mat2::identity();
    const Mat2 x = pauli_x();
    const Mat2 z = pauli_z();
    const std::array<Mat2, 4> phi_set{id, z, x, z * x};
    const std::array<Mat2, 4> psi_set{x, z * x, id, z};
    const auto &set = channel == ChannelKind::kPhi ? phi_set : psi_set;
    return set[static_cast<std::size_t>(j.value() - 1)];
}

double concurrence(double theta) { return std::abs(std::sin(2.0 * theta)); }

}  // namespace noisytele
