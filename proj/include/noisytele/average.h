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

#ifndef NOISYTELE_AVERAGE_H
#define NOISYTELE_AVERAGE_H

#include <array>
#include <vector>

#include "noisytele/noise.h"
#include "noisytele/states.h"
#include "noisytele/teleport.h"

namespace noisytele {

/// Node counts for averaging over inputs uniformly distributed in
/// (|a|^2, c) on [0, 1] x [0, 2pi) with density 1 / (2pi).
///
/// The branch-averaged fidelity is a trigonometric polynomial of degree
/// at most 2 in c and, after the phase average, a polynomial of degree at
/// most 2 in |a|^2; 2 Gauss-Legendre nodes and 5 phase nodes already
/// integrate it exactly. The minimums below leave headroom.
struct QuadratureSpec {
    static constexpr int kMinProb0Nodes = 4;
    static constexpr int kMinPhaseNodes = 8;

    int nodes_prob0 = 8;
    int nodes_phase = 16;

    void validate() const;
};

struct QuadratureNode {
    double node;
    double weight;
};

/// n-point Gauss-Legendre rule mapped to [0, 1]; exact for polynomials of
/// degree <= 2n - 1. Nodes ascend.
std::vector<QuadratureNode> gauss_legendre_nodes(int n);

/// Quadrature averages of rho_in(r, c) rho_in(a, b) over the input
/// distribution. Tr[rho T(rho)] is bilinear in rho, so contracting these
/// with a transfer map gives the same quadrature sum as evaluating every
/// node, at a fraction of the cost when many maps share one rule.
class InputMoments {
 public:
    explicit InputMoments(const QuadratureSpec &quad = {});

    double average(const TransferMap &map) const;

 private:
    std::array<Complex, 16> moments_{};  // index 4 * (2r + c) + (2a + b)
};

/// Input-independent efficiency <F> for the given angles and noise.
double haar_average(const ProtocolParams &params, const NoiseConfig &config, const QuadratureSpec &quad = {});

/// Same quadrature over an already built transfer map.
double haar_average(const TransferMap &map, const QuadratureSpec &quad = {});

}  // namespace noisytele

#endif
