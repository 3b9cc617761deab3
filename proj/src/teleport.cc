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

#include "noisytele/teleport.h"

namespace noisytele {

TeleportResult run(const InputQubit &q, const ProtocolParams &params, const NoiseConfig &config) {
    const Mat2 rho_in = input_density(q);
    const Mat8 noisy = apply_noise(kron(rho_in, channel_density(params)), config);
    const Mat2 id = Mat2::identity();

    TeleportResult result;
    for (const BellIndex j : BellIndex::all()) {
        const Mat8 measure = kron(projector(j, params.phi), id);
        const Mat2 branch = partial_trace_12(measure * noisy * measure);
        const Mat2 u = correction_unitary(j, params.channel);
        const Mat2 corrected = u * branch * dagger(u);

        BranchOutcome &out = result.branches[static_cast<std::size_t>(j.value() - 1)];
        out.j = j;
        out.probability = trace(branch).real();
        if (out.probability >= kDegenerateBranch) {
            out.bob_state = corrected * Complex{1.0 / out.probability};
            out.fidelity = trace(rho_in * *out.bob_state).real();
        }
        result.avg_fidelity += trace(rho_in * corrected).real();
    }
    return result;
}

double avg_fidelity(const InputQubit &q, const ProtocolParams &params, const NoiseConfig &config) {
    return run(q, params, config).avg_fidelity;
}

namespace {

// (<B| (x) 1) rho (|B> (x) 1): Bob's block after projecting qubits 1, 2
// onto |B> and tracing them out.
Mat2 contract_branch(const Mat8 &rho, const Vec4 &b) {
    Mat2 out;
    for (std::size_t x = 0; x < 4; ++x) {
        if (b[x] == Complex{}) {
            continue;
        }
        for (std::size_t y = 0; y < 4; ++y) {
            if (b[y] == Complex{}) {
                continue;
            }
            const Complex w = std::conj(b[x]) * b[y];
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    out(r, c) += w * rho(2 * x + r, 2 * y + c);
                }
            }
        }
    }
    return out;
}

}  // namespace

TransferMap::TransferMap(const ProtocolParams &params, const NoiseConfig &config) {
    config.validate();
    // Noise acts independently per qubit, so N(X (x) rho_ch) factorizes.
    const auto input_ops = kraus_ops(config.input);
    const auto alice_ops = kraus_ops(config.alice);
    const auto bob_ops = kraus_ops(config.bob);
    Mat4 shared = channel_density(params);
    shared = apply_local_channel(shared, bob_ops, 1);
    shared = apply_local_channel(shared, alice_ops, 0);

    std::array<Vec4, 4> bells;
    std::array<Mat2, 4> corrections;
    for (const BellIndex j : BellIndex::all()) {
        bells[static_cast<std::size_t>(j.value() - 1)] = bell_vector(j, params.phi);
        corrections[static_cast<std::size_t>(j.value() - 1)] = correction_unitary(j, params.channel);
    }

    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            Mat2 unit;
            unit(r, c) = 1.0;
            const Mat8 noisy = kron(apply_local_channel(unit, input_ops, 0), shared);
            Mat2 image;
            for (std::size_t k = 0; k < 4; ++k) {
                image += corrections[k] * contract_branch(noisy, bells[k]) * dagger(corrections[k]);
            }
            unit_images_[2 * r + c] = image;
        }
    }
}

Mat2 TransferMap::apply(const Mat2 &x) const {
    Mat2 out;
    for (std::size_t k = 0; k < 4; ++k) {
        out += unit_images_[k] * x(k / 2, k % 2);
    }
    return out;
}

double TransferMap::avg_fidelity(const InputQubit &q) const {
    const Mat2 rho_in = input_density(q);
    return trace(rho_in * apply(rho_in)).real();
}

}  // namespace noisytele
