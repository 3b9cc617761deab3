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

#ifndef NOISYTELE_CLOSED_FORM_H
#define NOISYTELE_CLOSED_FORM_H

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "noisytele/noise.h"
#include "noisytele/states.h"

namespace noisytele {

/// Angles at which a closed form attains its optimum.
///
/// theta = phi = +-pi/4 is reported as (pi/4, pi/4) and theta = -phi =
/// +-pi/4 as (pi/4, -pi/4); flipping the sign of both angles never changes
/// the efficiency. At an exact sign-regime boundary both regimes give the
/// same value and the same-sign setting is returned.
struct OptimalSetting {
    double theta = 0.0;
    double phi = 0.0;
    std::string note;
};

struct ClosedForm {
    double value = 0.0;
    OptimalSetting setting;
};

// Input qubit noisy, channel clean. The general form is valid for every
// theta and phi; NoNoise is rejected.
double f_general_input_only(NoiseKind kind, double p_in, double theta, double phi);
ClosedForm f_opt_input_only(NoiseKind kind, double p_in);

// Input qubit and Bob's qubit noisy. kind_in must be a real channel; a
// NoNoise Bob reduces to f_opt_input_only.
ClosedForm f_opt_input_bob(NoiseKind kind_in, NoiseKind kind_bob, double p_in, double p_bob);

/// Amplitude damping on Bob with phi = pi/4: the printed efficiency as a
/// function of theta, for any input noise kind.
double f_input_bob_ad_at(NoiseKind kind_in, double p_in, double p_bob, double theta);

// Bit flip on the input and on Alice's qubit with p_in = p_alice = p.
ClosedForm f_opt_alice_pair(NoiseKind kind_bob, double p, double p_bob);

/// f_opt_alice_pair(AD, ...) as a function of theta at phi = pi/4.
double f_alice_pair_ad_at(double p, double p_bob, double theta);

// Bit flip on both channel qubits with p_alice = p_bob = p.
ClosedForm f_opt_channel_pair(NoiseKind kind_in, double p_in, double p);

// Amplitude damping on both channel qubits, clean input, either channel.
ClosedForm f_channel_choice_ad(ChannelKind channel, double p);

// ---------------------------------------------------------------------------
// Scenario families with printed closed forms.

struct InputOnly {
    NoiseKind input;
};
struct InputAndBob {
    NoiseKind input;
    NoiseKind bob;
};
/// Bit flip on input and Alice (shared probability), `bob` on Bob.
struct AlicePair {
    NoiseKind bob;
};
/// Bit flip on both channel qubits (shared probability), `input` on input.
struct ChannelPair {
    NoiseKind input;
};
struct ChannelChoiceAD {
    ChannelKind channel;
};

using ScenarioFamily = std::variant<InputOnly, InputAndBob, AlicePair, ChannelPair, ChannelChoiceAD>;

/// A family plus its probabilities:
///   InputOnly       (p_in, -)        InputAndBob   (p_in, p_bob)
///   AlicePair       (p, p_bob)       ChannelPair   (p_in, p)
///   ChannelChoiceAD (p, -)
struct Scenario {
    ScenarioFamily family;
    double p1 = 0.0;
    double p2 = 0.0;
};

/// Subscript notation, input first: e.g. "BF,0,AD" ("0" is a clean qubit),
/// "0,AD,AD/psi" for the Psi channel.
std::string label(const ScenarioFamily &family);
/// Number of free probabilities (1 or 2).
int parameter_count(const ScenarioFamily &family);
/// Every family with a printed optimum (32 in total).
std::vector<ScenarioFamily> printed_families();

NoiseConfig noise_config(const Scenario &scenario);
ChannelKind channel_of(const ScenarioFamily &family);
ClosedForm closed_form(const Scenario &scenario);

/// Closed-form value at arbitrary angles where one is printed: any angles
/// for InputOnly, any theta at phi = pi/4 for the AD-on-Bob families, and
/// otherwise only at the optimal setting (up to a global sign flip).
std::optional<double> closed_form_at(const Scenario &scenario, double theta, double phi);

/// Recognizes a noise configuration as an instance of a printed family.
/// A clean input with noise on Bob only is read as bit flip with p_in = 0.
std::optional<Scenario> match_scenario(const NoiseConfig &config, ChannelKind channel);

// ---------------------------------------------------------------------------
// Exchange symmetries between "same noise on input and Alice" and "same
// noise on both channel qubits", evaluated on the numerical pipeline.

struct SymmetryCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool expect_equal = true;
    bool passed = false;
};

/// For F in {BF, PhF, D} and X in {0, BF, PhF, D, AD}: <F,F,X> == <X,F,F>
/// with every probability equal and theta = pi/4 (phi = +-pi/4). For F = AD
/// the equality fails; the X = BF case is checked to differ by more than
/// `min_gap`.
std::vector<SymmetryCheck> symmetry_check_families(const std::vector<double> &probabilities, double tol = 1e-9,
                                                   double min_gap = 1e-6);

}  // namespace noisytele

#endif
