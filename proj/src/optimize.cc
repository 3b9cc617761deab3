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

#include "noisytele/optimize.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "noisytele/closed_form.h"
#include "noisytele/format.h"
#include "noisytele/teleport.h"

namespace noisytele {

GoldenResult golden_section_maximize(const std::function<double(double)> &f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    GoldenResult best;
    best.value = -std::numeric_limits<double>::infinity();
    auto eval = [&](double x) {
        const double v = f(x);
        ++best.evaluations;
        if (v > best.value) {
            best.value = v;
            best.x = x;
        }
        return v;
    };

    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d);
        }
    }
    eval(0.5 * (a + b));
    return best;
}

namespace {

/// Maps an angle into [-pi/2, pi/2].
double wrap_angle(double x) {
    const double wrapped = std::remainder(x, std::numbers::pi);
    return wrapped < -std::numbers::pi / 2 ? wrapped + std::numbers::pi : wrapped;
}

}  // namespace

OptimizeReport optimize_angles(const NoiseConfig &config, ChannelKind channel, int grid_n,
                               const QuadratureSpec &quad) {
    if (grid_n < kMinGrid) {
        throw UsageError("optimize_angles: grid_n must be >= " + std::to_string(kMinGrid));
    }
    config.validate();
    quad.validate();
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    constexpr double kTieTol = 1e-12;
    constexpr double kMoveTol = 1e-10;
    constexpr int kMaxSweeps = 50;
    constexpr std::size_t kMaxStarts = 16;

    const InputMoments moments(quad);
    auto objective = [&](double theta, double phi) {
        return moments.average(TransferMap(ProtocolParams{theta, phi, channel}, config));
    };

    const double step = std::numbers::pi / (grid_n - 1);
    auto grid = [&](int i) { return i == grid_n - 1 ? kHalfPi : -kHalfPi + i * step; };

    // The last row and column repeat the first (period pi), so the scan
    // works on an (n - 1) x (n - 1) torus.
    const int cells = grid_n - 1;
    std::vector<double> values(static_cast<std::size_t>(cells * cells));
    auto at = [&](int i, int k) -> double & {
        return values[static_cast<std::size_t>(((i + cells) % cells) * cells + (k + cells) % cells)];
    };
    for (int i = 0; i < cells; ++i) {
        for (int k = 0; k < cells; ++k) {
            at(i, k) = objective(grid(i), grid(k));
        }
    }

    // Every grid point no lower than its eight neighbours seeds a
    // refinement. Plateaus and saddles (e.g. along sin 2 theta = 0, where
    // phi has no effect) can trap a single coordinate-wise ascent.
    struct Start {
        double value;
        int i;
        int k;
    };
    std::vector<Start> starts;
    for (int i = 0; i < cells; ++i) {
        for (int k = 0; k < cells; ++k) {
            bool peak = true;
            for (int di = -1; di <= 1 && peak; ++di) {
                for (int dk = -1; dk <= 1 && peak; ++dk) {
                    peak = at(i + di, k + dk) <= at(i, k) + kTieTol;
                }
            }
            if (peak) {
                starts.push_back({at(i, k), i, k});
            }
        }
    }
    std::stable_sort(starts.begin(), starts.end(),
                     [](const Start &a, const Start &b) { return a.value > b.value + kTieTol; });
    if (starts.size() > kMaxStarts) {
        starts.resize(kMaxStarts);
    }

    auto refine = [&](const Start &start) {
        OptimizeReport r;
        r.grid_resolution = grid_n;
        r.best_value = start.value;
        r.best_theta = grid(start.i);
        r.best_phi = grid(start.k);
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            ++r.refinement_iterations;
            const double theta0 = r.best_theta;
            const double phi0 = r.best_phi;

            // Brackets may cross the domain edge; results are wrapped back.
            const GoldenResult t = golden_section_maximize(
                [&](double theta) { return objective(theta, r.best_phi); }, theta0 - step, theta0 + step, kMoveTol);
            if (t.value > r.best_value) {
                r.best_value = t.value;
                r.best_theta = wrap_angle(t.x);
            }
            const GoldenResult p = golden_section_maximize(
                [&](double phi) { return objective(r.best_theta, phi); }, phi0 - step, phi0 + step, kMoveTol);
            if (p.value > r.best_value) {
                r.best_value = p.value;
                r.best_phi = wrap_angle(p.x);
            }

            const double moved = std::max(std::abs(std::remainder(r.best_theta - theta0, std::numbers::pi)),
                                          std::abs(std::remainder(r.best_phi - phi0, std::numbers::pi)));
            if (moved < kMoveTol) {
                break;
            }
        }
        return r;
    };

    OptimizeReport best;
    best.best_value = -std::numeric_limits<double>::infinity();
    for (const Start &start : starts) {
        const OptimizeReport r = refine(start);
        if (r.best_value > best.best_value + kTieTol) {
            best = r;
        }
    }
    return best;
}

std::string_view to_string(SignRegime regime) {
    switch (regime) {
        case SignRegime::kSameSign:
            return "same-sign";
        case SignRegime::kOppositeSign:
            return "opposite-sign";
        case SignRegime::kDegenerate:
            return "degenerate";
    }
    return "?";
}

SignRegime classify_regime(double theta, double phi) {
    constexpr double kZero = 1e-6;
    const double st = std::sin(2.0 * theta);
    const double sp = std::sin(2.0 * phi);
    if (std::abs(st) < kZero || std::abs(sp) < kZero) {
        return SignRegime::kDegenerate;
    }
    return (st > 0) == (sp > 0) ? SignRegime::kSameSign : SignRegime::kOppositeSign;
}

std::string RegimeReport::describe() const {
    std::string out = std::string(to_string(observed));
    if (!expected) {
        return out + " (no printed rule)";
    }
    if (*expected == SignRegime::kDegenerate) {
        return out + " (regime boundary: either sign is optimal)";
    }
    return out + (matches ? " (matches printed rule)" : " (printed rule says " + std::string(to_string(*expected)) + ")");
}

RegimeReport sign_regime(const NoiseConfig &config, ChannelKind channel, int grid_n) {
    RegimeReport report;
    report.optimum = optimize_angles(config, channel, grid_n);
    report.observed = classify_regime(report.optimum.best_theta, report.optimum.best_phi);
    if (const auto scenario = match_scenario(config, channel)) {
        const ClosedForm cf = closed_form(*scenario);
        if (cf.setting.note.starts_with("regime boundary")) {
            report.expected = SignRegime::kDegenerate;
        } else {
            report.expected = classify_regime(cf.setting.theta, cf.setting.phi);
        }
        report.matches = *report.expected == SignRegime::kDegenerate || *report.expected == report.observed;
    }
    return report;
}

}  // namespace noisytele
