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

#ifndef NOISYTELE_TELEPORT_H
#define NOISYTELE_TELEPORT_H

#include <array>
#include <optional>

#include "noisytele/matrix.h"
#include "noisytele/noise.h"
#include "noisytele/states.h"

namespace noisytele {

/// Branches with probability below this are reported without a normalized
/// Bob state or fidelity.
inline constexpr double kDegenerateBranch = 1e-12;

struct BranchOutcome {
    BellIndex j{1};
    double probability = 0.0;
    std::optional<Mat2> bob_state;  // U_j rho_Bj U_j^dagger, normalized
    std::optional<double> fidelity;
};

struct TeleportResult {
    std::array<BranchOutcome, 4> branches;
    double avg_fidelity = 0.0;
};

/// Runs the protocol on rho_in (x) rho_ch after noise: projective
/// measurement of qubits 1 and 2 onto B_j^phi, partial trace, Pauli
/// correction on Bob's qubit. The average fidelity is accumulated from the
/// unnormalized branches, so zero-probability branches contribute nothing.
TeleportResult run(const InputQubit &q, const ProtocolParams &params, const NoiseConfig &config);

double avg_fidelity(const InputQubit &q, const ProtocolParams &params, const NoiseConfig &config);

/// The whole protocol as a linear map on the input operator,
///   X -> Sum_j U_j Tr_12[(P_j (x) 1) N(X (x) rho_ch) (P_j (x) 1)] U_j^dagger,
/// stored through its action on the four matrix units |r><c|. Evaluating the
/// average fidelity of a new input then costs a handful of multiplications,
/// which is what makes input averaging and angle scans cheap.
class TransferMap {
 public:
    TransferMap(const ProtocolParams &params, const NoiseConfig &config);

    Mat2 apply(const Mat2 &x) const;
    /// Tr[rho_in T(rho_in)]; equals run(q, ...).avg_fidelity.
    double avg_fidelity(const InputQubit &q) const;
    /// T(|r><c|) at index 2 * r + c.
    const std::array<Mat2, 4> &unit_images() const { return unit_images_; }

 private:
    std::array<Mat2, 4> unit_images_;  // index 2 * r + c holds T(|r><c|)
};

}  // namespace noisytele

#endif
