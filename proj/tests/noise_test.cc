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

#include "noisytele/noise.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "noisytele/average.h"
#include "noisytele/errors.h"
#include "noisytele/states.h"
#include "noisytele/verify.h"
#include "oracles.h"

using namespace noisytele;

namespace {

constexpr double kTight = 1e-12;
constexpr double kQuarterPi = std::numbers::pi / 4;
const std::vector<NoiseKind> kNoisy{NoiseKind::kBitFlip, NoiseKind::kPhaseFlip, NoiseKind::kDepolarizing,
                                    NoiseKind::kAmplitudeDamping};

NoiseConfig random_config(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_real_distribution<double> p(0.0, 1.0);
    auto one = [&] { return NoiseSpec{static_cast<NoiseKind>(kind(rng)), p(rng)}; };
    const NoiseSpec in = one();
    const NoiseSpec a = one();
    return {in, a, one()};
}

}  // namespace

TEST(NoiseTest, KrausExamples) {
    const auto bf = kraus_ops({NoiseKind::kBitFlip, 0.0});
    ASSERT_EQ(bf.size(), 2u);
    EXPECT_EQ(bf[0], Mat2::identity());
    EXPECT_EQ(bf[1], Mat2{});

    const auto d = kraus_ops({NoiseKind::kDepolarizing, 1.0});
    ASSERT_EQ(d.size(), 4u);
    EXPECT_TRUE(approx_equal(d[0], Mat2::identity() * Complex{0.5}, kTight));
    EXPECT_TRUE(approx_equal(d[1], pauli_x() * Complex{0.5}, kTight));
    EXPECT_TRUE(approx_equal(d[2], pauli_y() * Complex{0.5}, kTight));
    EXPECT_TRUE(approx_equal(d[3], pauli_z() * Complex{0.5}, kTight));

    const auto ad = kraus_ops({NoiseKind::kAmplitudeDamping, 0.36});
    ASSERT_EQ(ad.size(), 2u);
    EXPECT_TRUE(approx_equal(ad[0], Mat2::diagonal({1.0, 0.8}), kTight));
    EXPECT_TRUE(approx_equal(ad[1], Mat2{{0.0, 0.6}, {0.0, 0.0}}, kTight));

    EXPECT_EQ(kraus_ops({NoiseKind::kNone, 0.7}).size(), 1u);
}

TEST(NoiseTest, KrausMatchesOracle) {
    for (NoiseKind kind : kNoisy) {
        for (double p : {0.0, 0.13, 0.5, 1.0}) {
            const auto ours = kraus_ops({kind, p});
            const auto ref = oracle::kraus(kind, p);
            ASSERT_EQ(ours.size(), ref.size());
            for (std::size_t k = 0; k < ours.size(); ++k) {
                EXPECT_LT(oracle::max_abs_diff(oracle::to_eigen(ours[k]), ref[k]), kTight);
            }
        }
    }
}

TEST(NoiseTest, RejectsOutOfRangeProbability) {
    EXPECT_THROW(kraus_ops({NoiseKind::kBitFlip, -0.01}), UsageError);
    EXPECT_THROW(kraus_ops({NoiseKind::kAmplitudeDamping, 1.01}), UsageError);
    EXPECT_THROW((NoiseConfig{{}, {NoiseKind::kDepolarizing, 2.0}, {}}.validate()), UsageError);
}

TEST(NoiseTest, CheckTracePreserving) {
    const auto phf = kraus_ops({NoiseKind::kPhaseFlip, 0.7});
    EXPECT_TRUE(check_trace_preserving(phf));
    const auto ad = kraus_ops({NoiseKind::kAmplitudeDamping, 0.25});
    EXPECT_TRUE(check_trace_preserving(ad));
    const auto half = kraus_ops({NoiseKind::kAmplitudeDamping, 0.5});
    const std::vector<Mat2> first_only{half[0]};
    EXPECT_FALSE(check_trace_preserving(first_only));
}

TEST(NoiseTest, Lift) {
    EXPECT_EQ(lift(pauli_x(), 1), kron(pauli_x(), Mat4::identity()));
    EXPECT_EQ(lift(Mat2::identity(), 2), Mat8::identity());
    const Mat8 z3 = lift(pauli_z(), 3);
    EXPECT_EQ(z3(1, 1), Complex(-1.0));  // |001>
    EXPECT_EQ(z3(0, 0), Complex(1.0));
    EXPECT_THROW(lift(pauli_x(), 0), UsageError);
    EXPECT_THROW(lift(pauli_x(), 4), UsageError);
}

TEST(NoiseTest, NoNoiseLeavesStateUnchanged) {
    std::mt19937_64 rng(21);
    const Mat8 rho = random_density_matrix<8>(rng);
    EXPECT_EQ(apply_noise(rho, {}), rho);
}

TEST(NoiseTest, FullDepolarizationGivesMaximallyMixed) {
    std::mt19937_64 rng(22);
    const NoiseSpec d{NoiseKind::kDepolarizing, 1.0};
    const Mat8 out = apply_noise(random_density_matrix<8>(rng), {d, d, d});
    EXPECT_TRUE(approx_equal(out, Mat8::identity() * Complex{0.125}, kTight));
}

TEST(NoiseTest, FullAmplitudeDampingSendsBobToGround) {
    const Mat8 rho = kron(input_density(InputQubit(0.3, 0.4)), channel_density({kQuarterPi, 0.0, ChannelKind::kPhi}));
    const Mat8 out = apply_noise(rho, {{}, {}, {NoiseKind::kAmplitudeDamping, 1.0}});
    EXPECT_TRUE(approx_equal(partial_trace_12(out), Mat2::diagonal({1.0, 0.0}), kTight));
}

TEST(NoiseTest, RejectsInvalidDensityMatrix) {
    EXPECT_THROW(apply_noise(Mat8::identity(), {}), ValidationError);
    Mat8 not_hermitian = Mat8::identity() * Complex{0.125};
    not_hermitian(0, 1) = 0.1;
    EXPECT_THROW(apply_noise(not_hermitian, {}), ValidationError);
}

TEST(NoiseTest, LocalChannelMatchesLiftedOperators) {
    std::mt19937_64 rng(23);
    const Mat8 rho = random_density_matrix<8>(rng);
    for (NoiseKind kind : kNoisy) {
        const auto ops = kraus_ops({kind, 0.37});
        for (std::size_t qubit = 0; qubit < 3; ++qubit) {
            Mat8 expected;
            for (const Mat2 &e : ops) {
                const Mat8 big = lift(e, static_cast<int>(qubit) + 1);
                expected += big * rho * dagger(big);
            }
            EXPECT_LT(max_abs_diff(apply_local_channel(rho, std::span<const Mat2>(ops), qubit), expected), kTight);
        }
    }
}

TEST(NoiseProperty, KrausSetsTracePreservingOnGrid) {
    for (NoiseKind kind : kNoisy) {
        for (int i = 0; i < 50; ++i) {
            const auto ops = kraus_ops({kind, i / 49.0});
            EXPECT_TRUE(check_trace_preserving(ops)) << to_string(kind) << " p=" << i / 49.0;
        }
    }
}

TEST(NoiseProperty, ApplyNoisePreservesDensityMatrices) {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 100; ++i) {
        const Mat8 out = apply_noise(random_density_matrix<8>(rng), random_config(rng));
        EXPECT_NEAR(trace(out).real(), 1.0, kTight);
        EXPECT_LT(max_abs_diff(out, dagger(out)), kTight);
        EXPECT_GE(min_eigenvalue(out), -1e-10);
    }
}

TEST(NoiseProperty, DistinctSlotsCommute) {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 20; ++i) {
        const Mat8 rho = random_density_matrix<8>(rng);
        const NoiseConfig config = random_config(rng);
        const NoiseConfig input_only{config.input, {}, {}};
        const NoiseConfig bob_only{{}, {}, config.bob};
        const Mat8 input_then_bob = apply_noise(apply_noise(rho, input_only), bob_only);
        const Mat8 bob_then_input = apply_noise(apply_noise(rho, bob_only), input_only);
        EXPECT_LT(max_abs_diff(input_then_bob, bob_then_input), kTight);
    }
}

TEST(NoiseProperty, PhaseFlipMirrorsAboutHalf) {
    // At fixed angles p and 1 - p mirror about 2/3; flipping the sign of
    // phi maps one onto the other, so the optimum depends on |1 - 2p| only.
    const ProtocolParams same{kQuarterPi, kQuarterPi, ChannelKind::kPhi};
    const ProtocolParams opposite{kQuarterPi, -kQuarterPi, ChannelKind::kPhi};
    for (double p : {0.0, 0.1, 0.25, 0.4}) {
        for (int slot = 0; slot < 3; ++slot) {
            auto on_slot = [&](double prob) {
                NoiseConfig c;
                NoiseSpec *specs[3] = {&c.input, &c.alice, &c.bob};
                *specs[slot] = {NoiseKind::kPhaseFlip, prob};
                return c;
            };
            const double low = haar_average(same, on_slot(p));
            const double high = haar_average(same, on_slot(1 - p));
            EXPECT_NEAR(low + high, 4.0 / 3.0, kTight);
            EXPECT_NEAR(low, haar_average(opposite, on_slot(1 - p)), kTight);
            EXPECT_NEAR(std::max(low, haar_average(opposite, on_slot(p))),
                        std::max(high, haar_average(opposite, on_slot(1 - p))), kTight);
        }
    }
}
