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

#include "noisytele/average.h"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace noisytele {

void QuadratureSpec::validate() const {
    if (nodes_prob0 < kMinProb0Nodes) {
        throw UsageError("QuadratureSpec: nodes_prob0 must be >= " + std::to_string(kMinProb0Nodes));
    }
    if (nodes_phase < kMinPhaseNodes) {
        throw UsageError("QuadratureSpec: nodes_phase must be >= " + std::to_string(kMinPhaseNodes));
    }
}

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double prev = 1.0;
    double cur = x;
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    return {cur, n * (x * cur - prev) / (x * x - 1.0)};
}

}  // namespace

std::vector<QuadratureNode> gauss_legendre_nodes(int n) {
    if (n < 1) {
        throw UsageError("gauss_legendre_nodes: n must be >= 1");
    }
    std::vector<QuadratureNode> out(static_cast<std::size_t>(n));
    // Roots are symmetric about 0; Newton from the usual cosine guess for the
    // upper half only.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double dp = legendre(n, x).second;
        const double w = 1.0 / ((1.0 - x * x) * dp * dp);  // half the [-1, 1] weight
        out[static_cast<std::size_t>(n - 1 - i)] = {0.5 * (1.0 + x), w};
        out[static_cast<std::size_t>(i)] = {0.5 * (1.0 - x), w};
    }
    if (n % 2 == 1) {
        out[static_cast<std::size_t>(n / 2)].node = 0.5;
    }
    return out;
}

InputMoments::InputMoments(const QuadratureSpec &quad) {
    quad.validate();
    const double phase_weight = 1.0 / quad.nodes_phase;
    for (const auto &[node, weight] : gauss_legendre_nodes(quad.nodes_prob0)) {
        std::array<Complex, 16> ring{};
        for (int k = 0; k < quad.nodes_phase; ++k) {
            const Mat2 rho = input_density(InputQubit(node, 2.0 * std::numbers::pi * k / quad.nodes_phase));
            for (std::size_t i = 0; i < 16; ++i) {
                ring[i] += rho((i / 4) / 2, (i / 4) % 2) * rho((i % 4) / 2, (i % 4) % 2);
            }
        }
        for (std::size_t i = 0; i < 16; ++i) {
            moments_[i] += ring[i] * (weight * phase_weight);
        }
    }
}

double InputMoments::average(const TransferMap &map) const {
    // Tr[rho T(rho)] = Sum rho(r, c) rho(a, b) T(|r><c|)(b, a).
    double total = 0.0;
    for (std::size_t unit = 0; unit < 4; ++unit) {
        const Mat2 &image = map.unit_images()[unit];
        for (std::size_t ab = 0; ab < 4; ++ab) {
            total += (moments_[4 * unit + ab] * image(ab % 2, ab / 2)).real();
        }
    }
    return total;
}

double haar_average(const TransferMap &map, const QuadratureSpec &quad) {
    static const QuadratureSpec kDefaultSpec;
    static const InputMoments kDefaultMoments(kDefaultSpec);
    if (quad.nodes_prob0 == kDefaultSpec.nodes_prob0 && quad.nodes_phase == kDefaultSpec.nodes_phase) {
        return kDefaultMoments.average(map);
    }
    return InputMoments(quad).average(map);
}

double haar_average(const ProtocolParams &params, const NoiseConfig &config, const QuadratureSpec &quad) {
    return haar_average(TransferMap(params, config), quad);
}

}  // namespace noisytele
