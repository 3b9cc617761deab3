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

#ifndef NOISYTELE_OPTIMIZE_H
#define NOISYTELE_OPTIMIZE_H

#include <functional>
#include <optional>
#include <string>

#include "noisytele/average.h"
#include "noisytele/noise.h"
#include "noisytele/states.h"

namespace noisytele {

struct GoldenResult {
    double x = 0.0;
    double value = 0.0;
    int evaluations = 0;
};

/// Maximizes a unimodal f on [lo, hi] until the bracket is narrower than
/// tol. Returns the best point evaluated.
GoldenResult golden_section_maximize(const std::function<double(double)> &f, double lo, double hi,
                                     double tol = 1e-10);

struct OptimizeReport {
    double best_theta = 0.0;
    double best_phi = 0.0;
    double best_value = 0.0;
    int grid_resolution = 0;
    int refinement_iterations = 0;
};

inline constexpr int kDefaultGrid = 41;
inline constexpr int kMinGrid = 9;

/// Maximizes <F> over (theta, phi) in [-pi/2, pi/2]^2.
///
/// A grid_n x grid_n scan (period pi in both angles) finds the grid local
/// maxima; up to 16 of them, best first, seed coordinate-wise golden-section
/// sweeps over +-one grid step until neither angle moves by more than 1e-10.
/// The best refined point wins; ties within 1e-12 keep the earlier seed
/// (higher grid value, then smaller theta, then smaller phi).
/// refinement_iterations counts the winning seed's sweeps.
OptimizeReport optimize_angles(const NoiseConfig &config, ChannelKind channel, int grid_n = kDefaultGrid,
                               const QuadratureSpec &quad = {});

enum class SignRegime { kSameSign, kOppositeSign, kDegenerate };

std::string_view to_string(SignRegime regime);

/// Classifies angles by the sign of sin(2 theta) sin(2 phi); a factor
/// below 1e-6 in magnitude is degenerate.
SignRegime classify_regime(double theta, double phi);

struct RegimeReport {
    SignRegime observed = SignRegime::kDegenerate;
    /// Regime of the printed optimum; empty when the configuration has no
    /// printed rule, kDegenerate at a regime boundary (either sign optimal).
    std::optional<SignRegime> expected;
    bool matches = false;
    OptimizeReport optimum;

    std::string describe() const;
};

RegimeReport sign_regime(const NoiseConfig &config, ChannelKind channel = ChannelKind::kPhi,
                         int grid_n = kDefaultGrid);

}  // namespace noisytele

#endif
