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

#include "noisytele/verify.h"

#include <cmath>
#include <numbers>

#include "noisytele/average.h"
#include "noisytele/closed_form.h"
#include "noisytele/format.h"
#include "noisytele/noise.h"
#include "noisytele/teleport.h"

namespace noisytele {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

const std::vector<NoiseKind> kNoisyKinds{NoiseKind::kBitFlip, NoiseKind::kPhaseFlip, NoiseKind::kDepolarizing,
                                         NoiseKind::kAmplitudeDamping};
const std::vector<NoiseKind> kAllKinds{NoiseKind::kNone, NoiseKind::kBitFlip, NoiseKind::kPhaseFlip,
                                       NoiseKind::kDepolarizing, NoiseKind::kAmplitudeDamping};

std::vector<double> unit_grid(int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(n == 1 ? 0.0 : static_cast<double>(i) / (n - 1));
    }
    return out;
}

CheckResult at_most(std::string group, std::string name, double measured, double threshold) {
    return {std::move(group), std::move(name), measured, threshold, measured <= threshold};
}

NoiseConfig random_config(std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> pick(0, kAllKinds.size() - 1);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    auto one = [&] { return NoiseSpec{kAllKinds[pick(rng)], prob(rng)}; };
    const NoiseSpec in = one();
    const NoiseSpec a = one();
    return {in, a, one()};
}

ProtocolParams random_params(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi / 2, std::numbers::pi / 2);
    std::bernoulli_distribution psi(0.5);
    const double theta = angle(rng);
    const double phi = angle(rng);
    return {theta, phi, psi(rng) ? ChannelKind::kPsi : ChannelKind::kPhi};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions &options) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(options.seed);
    // --tol tightens every fixed threshold but never loosens one.
    const auto cap = [&](double threshold) { return std::min(threshold, options.tol); };
    const auto grid = unit_grid(options.grid);

    // Kraus completeness.
    for (NoiseKind kind : kNoisyKinds) {
        for (const double p : unit_grid(50)) {
            const auto ops = kraus_ops({kind, p});
            Mat2 sum;
            for (const Mat2 &e : ops) {
                sum += dagger(e) * e;
            }
            out.push_back(at_most("kraus-completeness", std::string(to_string(kind)) + " p=" + format_number(p),
                                  max_abs_diff(sum, Mat2::identity()), cap(1e-12)));
        }
    }

    // Noise preserves density matrices.
    for (int i = 0; i < 100; ++i) {
        const Mat8 rho = random_density_matrix<8>(rng);
        const Mat8 noisy = apply_noise(rho, random_config(rng));
        const double dev = std::max({std::abs(trace(noisy) - 1.0), max_abs_diff(noisy, dagger(noisy)),
                                     std::max(0.0, -min_eigenvalue(noisy))});
        out.push_back(at_most("noise-keeps-density", "random #" + std::to_string(i), dev, cap(1e-10)));
    }

    // Noiseless protocol is exact on every branch.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const InputQubit q(unit(rng), 2.0 * std::numbers::pi * unit(rng) * 0.999999);
        const TeleportResult r = run(q, {kQuarterPi, kQuarterPi, ChannelKind::kPhi}, {});
        double dev = 0.0;
        for (const auto &b : r.branches) {
            dev = std::max(dev, std::abs(b.probability - 0.25));
            dev = std::max(dev, b.fidelity ? std::abs(*b.fidelity - 1.0) : 1.0);
        }
        out.push_back(at_most("noiseless-exact", "input #" + std::to_string(i), dev, cap(1e-10)));
    }

    // Branch probabilities sum to one.
    for (int i = 0; i < 100; ++i) {
        const InputQubit q(unit(rng), 2.0 * std::numbers::pi * unit(rng) * 0.999999);
        const TeleportResult r = run(q, random_params(rng), random_config(rng));
        double sum = 0.0;
        for (const auto &b : r.branches) {
            sum += b.probability;
        }
        out.push_back(at_most("branch-probabilities", "scenario #" + std::to_string(i), std::abs(sum - 1.0), cap(1e-10)));
    }

    // Closed forms against the numerical pipeline at their optimal angles.
    for (const ScenarioFamily &family : printed_families()) {
        const bool two = parameter_count(family) == 2;
        for (const double p1 : grid) {
            double worst = 0.0;
            for (const double p2 : two ? grid : std::vector<double>{0.0}) {
                const Scenario s{family, p1, p2};
                const ClosedForm cf = closed_form(s);
                const ProtocolParams params{cf.setting.theta, cf.setting.phi, channel_of(family)};
                worst = std::max(worst, std::abs(haar_average(params, noise_config(s)) - cf.value));
            }
            if (two) {
                out.push_back(at_most("oracle-vs-closed-form", label(family) + " p1=" + format_number(p1), worst,
                                      options.tol));
            } else if (p1 == grid.front()) {
                double all = worst;
                for (const double p : grid) {
                    const Scenario s{family, p, 0.0};
                    const ClosedForm cf = closed_form(s);
                    const ProtocolParams params{cf.setting.theta, cf.setting.phi, channel_of(family)};
                    all = std::max(all, std::abs(haar_average(params, noise_config(s)) - cf.value));
                }
                out.push_back(at_most("oracle-vs-closed-form", label(family), all, options.tol));
            }
        }
    }

    // The general input-only form reproduces the optimum at the returned angles.
    for (NoiseKind kind : kNoisyKinds) {
        double worst = 0.0;
        for (const double p : grid) {
            const ClosedForm cf = f_opt_input_only(kind, p);
            worst = std::max(worst,
                             std::abs(f_general_input_only(kind, p, cf.setting.theta, cf.setting.phi) - cf.value));
        }
        out.push_back(at_most("optimum-consistency", std::string(to_string(kind)), worst, cap(1e-12)));
    }

    // Exchange symmetries.
    for (const SymmetryCheck &c : symmetry_check_families({0.0, 0.3, 0.6, 1.0}, options.tol)) {
        const double diff = std::abs(c.lhs - c.rhs);
        out.push_back({"exchange-symmetry", c.name + (c.expect_equal ? "" : " (must differ)"), diff,
                       c.expect_equal ? options.tol : 1e-6, c.passed});
    }

    // Channel choice: Phi beats Psi under amplitude damping, ties otherwise.
    for (int k = 1; k <= 9; ++k) {
        const double p = k / 10.0;
        const double gap = f_channel_choice_ad(ChannelKind::kPhi, p).value - f_channel_choice_ad(ChannelKind::kPsi, p).value;
        out.push_back({"channel-choice", "phi > psi p=" + format_number(p), gap, 0.0, gap > 0.0});
    }
    for (NoiseKind kind : {NoiseKind::kBitFlip, NoiseKind::kPhaseFlip, NoiseKind::kDepolarizing}) {
        for (const double p : {0.2, 0.5, 0.9}) {
            const NoiseConfig config{{}, {kind, p}, {kind, p}};
            double worst = 0.0;
            for (const double phi : {kQuarterPi, -kQuarterPi}) {
                worst = std::max(worst, std::abs(haar_average({kQuarterPi, phi, ChannelKind::kPhi}, config) -
                                                 haar_average({kQuarterPi, phi, ChannelKind::kPsi}, config)));
            }
            out.push_back(at_most("channel-choice",
                                  "phi == psi " + std::string(to_string(kind)) + " p=" + format_number(p), worst,
                                  options.tol));
        }
    }

    // Quadrature plateau.
    for (int i = 0; i < 20; ++i) {
        const ProtocolParams params = random_params(rng);
        const NoiseConfig config = random_config(rng);
        const double base = haar_average(params, config);
        const double doubled = haar_average(params, config, {16, 32});
        out.push_back(at_most("quadrature-plateau", "scenario #" + std::to_string(i), std::abs(base - doubled), cap(1e-12)));
    }
    return out;
}

}  // namespace noisytele
