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

#ifndef NOISYTELE_VERIFY_H
#define NOISYTELE_VERIFY_H

#include <random>
#include <string>
#include <vector>

#include "noisytele/matrix.h"

namespace noisytele {

/// G G^dagger / Tr(G G^dagger) for a Gaussian complex G.
template <std::size_t N>
SquareMatrix<N> random_density_matrix(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    SquareMatrix<N> g;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            g(r, c) = Complex{gauss(rng), gauss(rng)};
        }
    }
    SquareMatrix<N> rho = g * dagger(g);
    return rho * Complex{1.0 / trace(rho).real()};
}

struct CheckResult {
    std::string group;
    std::string name;
    double measured = 0.0;   // deviation or margin, depending on the check
    double threshold = 0.0;
    bool passed = false;
};

struct VerifyOptions {
    int grid = 21;       // points per probability axis
    double tol = 1e-9;   // closed-form tolerance; also caps every fixed threshold
    unsigned seed = 20260101;
};

/// Runs the invariant and oracle-equivalence checks. Deterministic for a
/// fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions &options);

}  // namespace noisytele

#endif
