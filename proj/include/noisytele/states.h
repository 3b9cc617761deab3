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

#ifndef NOISYTELE_STATES_H
#define NOISYTELE_STATES_H

#include <array>
#include <string_view>

#include "noisytele/matrix.h"

namespace noisytele {

using Vec4 = std::array<Complex, 4>;

/// Pure single-qubit input sqrt(prob0)|0> + sqrt(1 - prob0) e^{i phase}|1>.
///
/// prob0 is |a|^2 and phase is the relative phase c; the global phase is
/// dropped. Construction throws UsageError outside prob0 in [0, 1] and
/// phase in [0, 2pi).
class InputQubit {
 public:
    InputQubit(double prob0, double phase);

    double prob0() const { return prob0_; }
    double phase() const { return phase_; }

 private:
    double prob0_;
    double phase_;
};

/// Outcome label of Alice's measurement, 1..4.
class BellIndex {
 public:
    explicit BellIndex(int j);

    int value() const { return j_; }
    static std::array<BellIndex, 4> all();

 private:
    int j_;
};

/// PhiType shares cos(theta)|00> + sin(theta)|11>; PsiType shares
/// cos(theta)|01> + sin(theta)|10>.
enum class ChannelKind { kPhi, kPsi };

std::string_view to_string(ChannelKind kind);

struct ProtocolParams {
    double theta = 0.0;
    double phi = 0.0;
    ChannelKind channel = ChannelKind::kPhi;
};

Mat2 input_density(const InputQubit &q);

/// Generalized Bell vectors in the basis {|00>, |01>, |10>, |11>}:
///   B1 =  cos|00> + sin|11>      B2 = sin|00> - cos|11>
///   B3 =  cos|01> + sin|10>      B4 = sin|01> - cos|10>
Vec4 bell_vector(BellIndex j, double angle);

/// Rank-1 projector onto the shared entangled resource.
Mat4 channel_density(const ProtocolParams &params);

/// |B_j><B_j| at measurement angle phi.
Mat4 projector(BellIndex j, double phi);

/// Bob's Pauli correction for outcome j. PhiType: 1, Z, X, ZX. PsiType:
/// X, ZX, 1, Z.
Mat2 correction_unitary(BellIndex j, ChannelKind channel);

/// Concurrence |sin 2 theta| of the pure channel state.
double concurrence(double theta);

}  // namespace noisytele

#endif
