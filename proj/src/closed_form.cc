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

#include "noisytele/closed_form.h"

#include <cmath>
#include <numbers>

#include "noisytele/average.h"
#include "noisytele/format.h"

namespace noisytele {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kTwoThirds = 2.0 / 3.0;

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError(std::string(what) + " must lie in [0, 1], got " + format_number(p));
    }
}

OptimalSetting same_sign() { return {kQuarterPi, kQuarterPi, "theta = phi = +-pi/4"}; }

OptimalSetting opposite_sign() { return {kQuarterPi, -kQuarterPi, "theta = -phi = +-pi/4"}; }

// Sign of the coefficient multiplying sin(2 theta) sin(2 phi).
OptimalSetting by_sign(double coefficient) {
    if (coefficient > 0.0) {
        return same_sign();
    }
    if (coefficient < 0.0) {
        return opposite_sign();
    }
    OptimalSetting s = same_sign();
    s.note = "regime boundary: either sign is optimal";
    return s;
}

// phi = pi/4 and tan(2 theta) = num / den, quadrant fixed by the signs.
OptimalSetting from_tan(double num, double den) {
    return {0.5 * std::atan2(num, den), kQuarterPi, "phi = pi/4, tan(2 theta) = " + format_number(num) + " / " +
                                                        format_number(den)};
}

double one_minus_sqrt(double p) { return std::sqrt(1.0 - p); }

std::string kind_label(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::kNone:
            return "0";
        case NoiseKind::kBitFlip:
            return "BF";
        case NoiseKind::kPhaseFlip:
            return "PhF";
        case NoiseKind::kDepolarizing:
            return "D";
        case NoiseKind::kAmplitudeDamping:
            return "AD";
    }
    return "?";
}

NoiseSpec spec(NoiseKind kind, double p) { return {kind, kind == NoiseKind::kNone ? 0.0 : p}; }

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double f_general_input_only(NoiseKind kind, double p_in, double theta, double phi) {
    check_probability(p_in, "p_in");
    const double s = std::sin(2.0 * theta) * std::sin(2.0 * phi);
    switch (kind) {
        case NoiseKind::kBitFlip:
            return kTwoThirds * (1.0 - p_in / 2.0 + (1.0 - p_in) / 2.0 * s);
        case NoiseKind::kPhaseFlip:
            return kTwoThirds * (1.0 + (1.0 - 2.0 * p_in) / 2.0 * s);
        case NoiseKind::kDepolarizing:
            return kTwoThirds * (1.0 - p_in / 4.0 + (1.0 - p_in) / 2.0 * s);
        case NoiseKind::kAmplitudeDamping:
            return kTwoThirds * (1.0 - p_in / 4.0 + 0.5 * one_minus_sqrt(p_in) * s);
        case NoiseKind::kNone:
            break;
    }
    throw UsageError("f_general_input_only: needs a noise channel on the input");
}

ClosedForm f_opt_input_only(NoiseKind kind, double p_in) {
    check_probability(p_in, "p_in");
    switch (kind) {
        case NoiseKind::kBitFlip:
            return {1.0 - 2.0 * p_in / 3.0, same_sign()};
        case NoiseKind::kPhaseFlip:
            return {kTwoThirds + std::abs(1.0 - 2.0 * p_in) / 3.0, by_sign(1.0 - 2.0 * p_in)};
        case NoiseKind::kDepolarizing:
            return {1.0 - p_in / 2.0, same_sign()};
        case NoiseKind::kAmplitudeDamping:
            return {kTwoThirds - p_in / 6.0 + one_minus_sqrt(p_in) / 3.0, same_sign()};
        case NoiseKind::kNone:
            break;
    }
    throw UsageError("f_opt_input_only: needs a noise channel on the input");
}

double f_input_bob_ad_at(NoiseKind kind_in, double p_in, double p_bob, double theta) {
    check_probability(p_in, "p_in");
    check_probability(p_bob, "p_bob");
    const double c = std::cos(2.0 * theta);
    const double s = std::sin(2.0 * theta);
    const double rb = one_minus_sqrt(p_bob);
    switch (kind_in) {
        case NoiseKind::kBitFlip:
            return kTwoThirds -
                   (p_in + p_bob / 2.0 * (1.0 - 2.0 * p_in) * (1.0 - c) - (1.0 - p_in) * rb * s) / 3.0;
        case NoiseKind::kPhaseFlip:
            return kTwoThirds * (1.0 - p_bob / 4.0 + p_bob * c / 4.0 + (1.0 - 2.0 * p_in) * rb * s / 2.0);
        case NoiseKind::kDepolarizing:
            return kTwoThirds - p_in / 6.0 - (1.0 - p_in) * p_bob * (1.0 - c) / 6.0 + (1.0 - p_in) * rb * s / 3.0;
        case NoiseKind::kAmplitudeDamping:
            return kTwoThirds - p_in / 6.0 - (1.0 - p_in) * p_bob * (1.0 - c) / 6.0 +
                   std::sqrt((1.0 - p_in) * (1.0 - p_bob)) * s / 3.0;
        case NoiseKind::kNone:
            break;
    }
    throw UsageError("f_input_bob_ad_at: needs a noise channel on the input");
}

ClosedForm f_opt_input_bob(NoiseKind kind_in, NoiseKind kind_bob, double p_in, double p_bob) {
    check_probability(p_in, "p_in");
    check_probability(p_bob, "p_bob");
    if (kind_bob == NoiseKind::kNone) {
        return f_opt_input_only(kind_in, p_in);
    }
    const double pi_ = p_in;
    const double pb = p_bob;
    using K = NoiseKind;
    if (kind_bob == K::kAmplitudeDamping) {
        OptimalSetting setting;
        switch (kind_in) {
            case K::kBitFlip:
                setting = from_tan(2.0 * (1.0 - pi_) * one_minus_sqrt(pb), pb * (1.0 - 2.0 * pi_));
                break;
            case K::kPhaseFlip:
                setting = from_tan(2.0 * (1.0 - 2.0 * pi_) * one_minus_sqrt(pb), pb);
                break;
            case K::kDepolarizing:
                setting = from_tan(2.0 * one_minus_sqrt(pb), pb);
                break;
            case K::kAmplitudeDamping:
                setting = from_tan(2.0 * one_minus_sqrt(pb), pb * one_minus_sqrt(pi_));
                break;
            case K::kNone:
                throw UsageError("f_opt_input_bob: needs a noise channel on the input");
        }
        return {f_input_bob_ad_at(kind_in, pi_, pb, setting.theta), setting};
    }

    switch (kind_in) {
        case K::kBitFlip:
            switch (kind_bob) {
                case K::kBitFlip:
                    return {1.0 - kTwoThirds * (pi_ + pb - 2.0 * pi_ * pb), same_sign()};
                case K::kPhaseFlip:
                    return {kTwoThirds - (pi_ - (1.0 - pi_) * std::abs(1.0 - 2.0 * pb)) / 3.0,
                            by_sign(1.0 - 2.0 * pb)};
                case K::kDepolarizing:
                    return {1.0 - pb / 2.0 - kTwoThirds * pi_ * (1.0 - pb), same_sign()};
                default:
                    break;
            }
            break;
        case K::kPhaseFlip:
            switch (kind_bob) {
                case K::kPhaseFlip:
                    return {kTwoThirds * (1.0 + std::abs((1.0 - 2.0 * pi_) * (1.0 - 2.0 * pb)) / 2.0),
                            by_sign((1.0 - 2.0 * pi_) * (1.0 - 2.0 * pb))};
                case K::kBitFlip:
                    return {kTwoThirds * (1.0 - pb / 2.0 + std::abs(1.0 - 2.0 * pi_) * (1.0 - pb) / 2.0),
                            by_sign(1.0 - 2.0 * pi_)};
                case K::kDepolarizing:
                    return {kTwoThirds * (1.0 - pb / 4.0 + std::abs(1.0 - 2.0 * pi_) * (1.0 - pb) / 2.0),
                            by_sign(1.0 - 2.0 * pi_)};
                default:
                    break;
            }
            break;
        case K::kDepolarizing:
            switch (kind_bob) {
                case K::kDepolarizing:
                    return {1.0 - pi_ / 2.0 - pb * (1.0 - pi_) / 2.0, same_sign()};
                case K::kBitFlip:
                    return {1.0 - pi_ / 2.0 - 2.0 * pb * (1.0 - pi_) / 3.0, same_sign()};
                case K::kPhaseFlip:
                    return {kTwoThirds - pi_ / 6.0 + (1.0 - pi_) * std::abs(1.0 - 2.0 * pb) / 3.0,
                            by_sign(1.0 - 2.0 * pb)};
                default:
                    break;
            }
            break;
        case K::kAmplitudeDamping:
            switch (kind_bob) {
                case K::kBitFlip:
                    return {kTwoThirds - pi_ / 6.0 - (1.0 - pi_) * pb / 3.0 + one_minus_sqrt(pi_) * (1.0 - pb) / 3.0,
                            same_sign()};
                case K::kPhaseFlip:
                    return {kTwoThirds - pi_ / 6.0 + one_minus_sqrt(pi_) * std::abs(1.0 - 2.0 * pb) / 3.0,
                            by_sign(1.0 - 2.0 * pb)};
                case K::kDepolarizing:
                    return {kTwoThirds - pb / 6.0 + (1.0 - pb) / 3.0 * (one_minus_sqrt(pi_) - pi_ / 2.0),
                            same_sign()};
                default:
                    break;
            }
            break;
        case K::kNone:
            break;
    }
    throw UsageError("f_opt_input_bob: needs a noise channel on the input");
}

double f_alice_pair_ad_at(double p, double p_bob, double theta) {
    check_probability(p, "p");
    check_probability(p_bob, "p_bob");
    const double q = p * (1.0 - p);
    return kTwoThirds - p_bob / 6.0 - 2.0 * q * (1.0 - p_bob) / 3.0 +
           (1.0 - 2.0 * p) * (1.0 - 2.0 * p) * p_bob * std::cos(2.0 * theta) / 6.0 +
           (1.0 - 2.0 * q) * one_minus_sqrt(p_bob) * std::sin(2.0 * theta) / 3.0;
}

ClosedForm f_opt_alice_pair(NoiseKind kind_bob, double p, double p_bob) {
    check_probability(p, "p");
    check_probability(p_bob, "p_bob");
    const double q = p * (1.0 - p);
    const double pb = p_bob;
    switch (kind_bob) {
        case NoiseKind::kNone:
            return {1.0 - 4.0 * q / 3.0, same_sign()};
        case NoiseKind::kBitFlip:
            return {1.0 - 2.0 * pb / 3.0 - 4.0 * q * (1.0 - 2.0 * pb) / 3.0, same_sign()};
        case NoiseKind::kPhaseFlip:
            return {kTwoThirds - 2.0 * q / 3.0 + (1.0 - 2.0 * q) * std::abs(1.0 - 2.0 * pb) / 3.0,
                    by_sign(1.0 - 2.0 * pb)};
        case NoiseKind::kDepolarizing:
            return {1.0 - pb / 2.0 - 4.0 * q * (1.0 - pb) / 3.0, same_sign()};
        case NoiseKind::kAmplitudeDamping: {
            const OptimalSetting setting =
                from_tan(2.0 * (1.0 - 2.0 * q) * one_minus_sqrt(pb), (1.0 - 2.0 * p) * (1.0 - 2.0 * p) * pb);
            return {f_alice_pair_ad_at(p, pb, setting.theta), setting};
        }
    }
    throw UsageError("f_opt_alice_pair: unknown noise kind");
}

ClosedForm f_opt_channel_pair(NoiseKind kind_in, double p_in, double p) {
    check_probability(p_in, "p_in");
    check_probability(p, "p");
    const double q = p * (1.0 - p);
    const double pi_ = p_in;
    switch (kind_in) {
        case NoiseKind::kNone:
            return {1.0 - 4.0 * q / 3.0, same_sign()};
        case NoiseKind::kBitFlip:
            return {1.0 - 2.0 * pi_ / 3.0 - 4.0 * (1.0 - 2.0 * pi_) * q / 3.0, same_sign()};
        case NoiseKind::kPhaseFlip:
            return {kTwoThirds - 2.0 * q / 3.0 + std::abs(1.0 - 2.0 * pi_) * (1.0 - 2.0 * q) / 3.0,
                    by_sign(1.0 - 2.0 * pi_)};
        case NoiseKind::kDepolarizing:
            return {1.0 - pi_ / 2.0 - 4.0 * (1.0 - pi_) * q / 3.0, same_sign()};
        case NoiseKind::kAmplitudeDamping:
            return {kTwoThirds - pi_ / 6.0 - 2.0 * (1.0 - pi_) * q / 3.0 + one_minus_sqrt(pi_) * (1.0 - 2.0 * q) / 3.0,
                    same_sign()};
    }
    throw UsageError("f_opt_channel_pair: unknown noise kind");
}

ClosedForm f_channel_choice_ad(ChannelKind channel, double p) {
    check_probability(p, "p");
    if (channel == ChannelKind::kPsi) {
        return {1.0 - 2.0 * p / 3.0, same_sign()};
    }
    OptimalSetting setting = from_tan(1.0, p);
    return {kTwoThirds + (1.0 - p) * (std::sqrt(1.0 + p * p) - p) / 3.0, setting};
}

// ---------------------------------------------------------------------------

std::string label(const ScenarioFamily &family) {
    return std::visit(Overloaded{
                          [](const InputOnly &f) { return kind_label(f.input) + ",0,0"; },
                          [](const InputAndBob &f) { return kind_label(f.input) + ",0," + kind_label(f.bob); },
                          [](const AlicePair &f) { return "BF=BF," + kind_label(f.bob); },
                          [](const ChannelPair &f) { return kind_label(f.input) + ",BF=BF"; },
                          [](const ChannelChoiceAD &f) { return "0,AD=AD/" + std::string(to_string(f.channel)); },
                      },
                      family);
}

int parameter_count(const ScenarioFamily &family) {
    return std::holds_alternative<InputOnly>(family) || std::holds_alternative<ChannelChoiceAD>(family) ? 1 : 2;
}

std::vector<ScenarioFamily> printed_families() {
    using K = NoiseKind;
    const std::vector<K> noisy{K::kBitFlip, K::kPhaseFlip, K::kDepolarizing, K::kAmplitudeDamping};
    const std::vector<K> any{K::kNone, K::kBitFlip, K::kPhaseFlip, K::kDepolarizing, K::kAmplitudeDamping};
    std::vector<ScenarioFamily> out;
    for (K k : noisy) {
        out.emplace_back(InputOnly{k});
    }
    for (K in : noisy) {
        for (K bob : noisy) {
            out.emplace_back(InputAndBob{in, bob});
        }
    }
    for (K bob : any) {
        out.emplace_back(AlicePair{bob});
    }
    for (K in : any) {
        out.emplace_back(ChannelPair{in});
    }
    out.emplace_back(ChannelChoiceAD{ChannelKind::kPhi});
    out.emplace_back(ChannelChoiceAD{ChannelKind::kPsi});
    return out;
}

NoiseConfig noise_config(const Scenario &s) {
    using K = NoiseKind;
    return std::visit(Overloaded{
                          [&](const InputOnly &f) { return NoiseConfig{spec(f.input, s.p1), {}, {}}; },
                          [&](const InputAndBob &f) { return NoiseConfig{spec(f.input, s.p1), {}, spec(f.bob, s.p2)}; },
                          [&](const AlicePair &f) {
                              return NoiseConfig{spec(K::kBitFlip, s.p1), spec(K::kBitFlip, s.p1), spec(f.bob, s.p2)};
                          },
                          [&](const ChannelPair &f) {
                              return NoiseConfig{spec(f.input, s.p1), spec(K::kBitFlip, s.p2), spec(K::kBitFlip, s.p2)};
                          },
                          [&](const ChannelChoiceAD &) {
                              return NoiseConfig{
                                  {}, spec(K::kAmplitudeDamping, s.p1), spec(K::kAmplitudeDamping, s.p1)};
                          },
                      },
                      s.family);
}

ChannelKind channel_of(const ScenarioFamily &family) {
    if (const auto *f = std::get_if<ChannelChoiceAD>(&family)) {
        return f->channel;
    }
    return ChannelKind::kPhi;
}

ClosedForm closed_form(const Scenario &s) {
    return std::visit(Overloaded{
                          [&](const InputOnly &f) { return f_opt_input_only(f.input, s.p1); },
                          [&](const InputAndBob &f) { return f_opt_input_bob(f.input, f.bob, s.p1, s.p2); },
                          [&](const AlicePair &f) { return f_opt_alice_pair(f.bob, s.p1, s.p2); },
                          [&](const ChannelPair &f) { return f_opt_channel_pair(f.input, s.p1, s.p2); },
                          [&](const ChannelChoiceAD &f) { return f_channel_choice_ad(f.channel, s.p1); },
                      },
                      s.family);
}

std::optional<double> closed_form_at(const Scenario &s, double theta, double phi) {
    constexpr double kAngleTol = 1e-9;
    if (const auto *f = std::get_if<InputOnly>(&s.family)) {
        return f_general_input_only(f->input, s.p1, theta, phi);
    }

    // Printed theta-dependent forms at phi = pi/4 (or the sign-flipped image).
    std::optional<double> sign;
    if (std::abs(phi - kQuarterPi) <= kAngleTol) {
        sign = 1.0;
    } else if (std::abs(phi + kQuarterPi) <= kAngleTol) {
        sign = -1.0;
    }
    if (sign) {
        if (const auto *f = std::get_if<InputAndBob>(&s.family); f && f->bob == NoiseKind::kAmplitudeDamping) {
            return f_input_bob_ad_at(f->input, s.p1, s.p2, *sign * theta);
        }
        if (const auto *f = std::get_if<AlicePair>(&s.family); f && f->bob == NoiseKind::kAmplitudeDamping) {
            return f_alice_pair_ad_at(s.p1, s.p2, *sign * theta);
        }
    }

    const ClosedForm cf = closed_form(s);
    const auto near = [&](double a, double b) { return std::abs(a - b) <= kAngleTol; };
    const OptimalSetting &o = cf.setting;
    if ((near(theta, o.theta) && near(phi, o.phi)) || (near(theta, -o.theta) && near(phi, -o.phi))) {
        return cf.value;
    }
    return std::nullopt;
}

std::optional<Scenario> match_scenario(const NoiseConfig &config, ChannelKind channel) {
    using K = NoiseKind;
    const NoiseSpec in = spec(config.input.kind, config.input.p);
    const NoiseSpec a = spec(config.alice.kind, config.alice.p);
    const NoiseSpec b = spec(config.bob.kind, config.bob.p);

    const bool ad_pair = in.kind == K::kNone && a.kind == K::kAmplitudeDamping && b.kind == K::kAmplitudeDamping &&
                         a.p == b.p;
    if (channel == ChannelKind::kPsi) {
        if (ad_pair) {
            return Scenario{ChannelChoiceAD{ChannelKind::kPsi}, a.p, 0.0};
        }
        return std::nullopt;
    }
    if (ad_pair) {
        return Scenario{ChannelChoiceAD{ChannelKind::kPhi}, a.p, 0.0};
    }
    if (a.kind == K::kNone) {
        if (in.kind == K::kNone && b.kind == K::kNone) {
            return Scenario{InputOnly{K::kBitFlip}, 0.0, 0.0};
        }
        if (b.kind == K::kNone) {
            return Scenario{InputOnly{in.kind}, in.p, 0.0};
        }
        if (in.kind == K::kNone) {
            return Scenario{InputAndBob{K::kBitFlip, b.kind}, 0.0, b.p};
        }
        return Scenario{InputAndBob{in.kind, b.kind}, in.p, b.p};
    }
    if (in.kind == K::kBitFlip && a.kind == K::kBitFlip && in.p == a.p) {
        return Scenario{AlicePair{b.kind}, in.p, b.p};
    }
    if (a.kind == K::kBitFlip && b.kind == K::kBitFlip && a.p == b.p) {
        return Scenario{ChannelPair{in.kind}, in.p, a.p};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<SymmetryCheck> symmetry_check_families(const std::vector<double> &probabilities, double tol,
                                                   double min_gap) {
    using K = NoiseKind;
    const std::vector<K> outer{K::kBitFlip, K::kPhaseFlip, K::kDepolarizing};
    const std::vector<K> any{K::kNone, K::kBitFlip, K::kPhaseFlip, K::kDepolarizing, K::kAmplitudeDamping};
    std::vector<SymmetryCheck> out;

    auto compare = [&](K pair_kind, K x, double p, double phi, bool expect_equal) {
        const ProtocolParams params{kQuarterPi, phi, ChannelKind::kPhi};
        const NoiseConfig alice_side{spec(pair_kind, p), spec(pair_kind, p), spec(x, p)};
        const NoiseConfig channel_side{spec(x, p), spec(pair_kind, p), spec(pair_kind, p)};
        SymmetryCheck c;
        c.name = "<" + kind_label(pair_kind) + "," + kind_label(pair_kind) + "," + kind_label(x) + "> vs <" +
                 kind_label(x) + "," + kind_label(pair_kind) + "," + kind_label(pair_kind) + "> p=" + format_number(p) +
                 (phi > 0 ? " phi=+pi/4" : " phi=-pi/4");
        c.lhs = haar_average(params, alice_side);
        c.rhs = haar_average(params, channel_side);
        c.expect_equal = expect_equal;
        const double diff = std::abs(c.lhs - c.rhs);
        c.passed = expect_equal ? diff <= tol : diff > min_gap;
        out.push_back(c);
    };

    for (double p : probabilities) {
        for (K pair_kind : outer) {
            for (K x : any) {
                compare(pair_kind, x, p, kQuarterPi, true);
                compare(pair_kind, x, p, -kQuarterPi, true);
            }
        }
    }
    // Amplitude damping breaks the exchange symmetry.
    compare(K::kAmplitudeDamping, K::kBitFlip, 0.4, kQuarterPi, false);
    return out;
}

}  // namespace noisytele
