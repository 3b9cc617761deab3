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

#include "oracles.h"

#include <cmath>
#include <complex>
#include <unsupported/Eigen/KroneckerProduct>

namespace oracle {

namespace {

using noisytele::ChannelKind;
using noisytele::NoiseConfig;
using noisytele::NoiseKind;
using noisytele::NoiseSpec;
using noisytele::ProtocolParams;
using Cd = std::complex<double>;

Matrix2cd pauli(char which) {
    Matrix2cd m;
    switch (which) {
        case 'x':
            m << 0, 1, 1, 0;
            break;
        case 'y':
            m << 0, Cd(0, -1), Cd(0, 1), 0;
            break;
        case 'z':
            m << 1, 0, 0, -1;
            break;
        default:
            m = Matrix2cd::Identity();
    }
    return m;
}

MatrixXcd kron3(const MatrixXcd &a, const MatrixXcd &b, const MatrixXcd &c) {
    return Eigen::kroneckerProduct(a, Eigen::kroneckerProduct(b, c).eval()).eval();
}

Eigen::Vector4cd two_qubit(double c00, double c01, double c10, double c11) {
    Eigen::Vector4cd v;
    v << c00, c01, c10, c11;
    return v;
}

Eigen::Vector4cd bell(int j, double a) {
    const double c = std::cos(a);
    const double s = std::sin(a);
    switch (j) {
        case 1:
            return two_qubit(c, 0, 0, s);
        case 2:
            return two_qubit(s, 0, 0, -c);
        case 3:
            return two_qubit(0, c, s, 0);
        default:
            return two_qubit(0, s, -c, 0);
    }
}

Matrix2cd correction(int j, ChannelKind channel) {
    const Matrix2cd x = pauli('x');
    const Matrix2cd z = pauli('z');
    const Matrix2cd id = Matrix2cd::Identity();
    const Matrix2cd phi_set[4] = {id, z, x, z * x};
    const Matrix2cd psi_set[4] = {x, z * x, id, z};
    return channel == ChannelKind::kPhi ? phi_set[j - 1] : psi_set[j - 1];
}

MatrixXcd noisy(const MatrixXcd &rho, const NoiseConfig &config) {
    const Matrix2cd id = Matrix2cd::Identity();
    MatrixXcd out = rho;
    // Bob, Alice, then the input; the channels act on different qubits so
    // the order is immaterial, but it mirrors the physical story.
    const NoiseSpec *specs[3] = {&config.bob, &config.alice, &config.input};
    const int slots[3] = {2, 1, 0};
    for (int k = 0; k < 3; ++k) {
        if (specs[k]->kind == NoiseKind::kNone) {
            continue;
        }
        MatrixXcd acc = MatrixXcd::Zero(8, 8);
        for (const Matrix2cd &e : kraus(specs[k]->kind, specs[k]->p)) {
            const MatrixXcd big = kron3(slots[k] == 0 ? e : id, slots[k] == 1 ? e : id, slots[k] == 2 ? e : id);
            acc += big * out * big.adjoint();
        }
        out = acc;
    }
    return out;
}

}  // namespace

std::vector<Matrix2cd> kraus(NoiseKind kind, double p) {
    const Matrix2cd id = Matrix2cd::Identity();
    switch (kind) {
        case NoiseKind::kBitFlip:
            return {std::sqrt(1 - p) * id, std::sqrt(p) * pauli('x')};
        case NoiseKind::kPhaseFlip:
            return {std::sqrt(1 - p) * id, std::sqrt(p) * pauli('z')};
        case NoiseKind::kDepolarizing:
            return {std::sqrt(1 - 3 * p / 4) * id, std::sqrt(p / 4) * pauli('x'), std::sqrt(p / 4) * pauli('y'),
                    std::sqrt(p / 4) * pauli('z')};
        case NoiseKind::kAmplitudeDamping: {
            Matrix2cd e0;
            e0 << 1, 0, 0, std::sqrt(1 - p);
            Matrix2cd e1;
            e1 << 0, std::sqrt(p), 0, 0;
            return {e0, e1};
        }
        case NoiseKind::kNone:
            break;
    }
    return {id};
}

Matrix2cd branch_output(const Matrix2cd &x, const ProtocolParams &params, const NoiseConfig &config, int j) {
    const Eigen::Vector4cd ch = bell(params.channel == ChannelKind::kPhi ? 1 : 3, params.theta);
    const MatrixXcd rho = noisy(Eigen::kroneckerProduct(x, (ch * ch.adjoint()).eval()).eval(), config);
    const Eigen::Vector4cd b = bell(j, params.phi);
    const MatrixXcd proj = Eigen::kroneckerProduct((b * b.adjoint()).eval(), Matrix2cd::Identity()).eval();
    const MatrixXcd post = proj * rho * proj;
    Matrix2cd bob = Matrix2cd::Zero();
    for (int a = 0; a < 4; ++a) {
        bob += post.block(2 * a, 2 * a, 2, 2);
    }
    const Matrix2cd u = correction(j, params.channel);
    return u * bob * u.adjoint();
}

Matrix2cd protocol_channel(const Matrix2cd &x, const ProtocolParams &params, const NoiseConfig &config) {
    Matrix2cd sum = Matrix2cd::Zero();
    for (int j = 1; j <= 4; ++j) {
        sum += branch_output(x, params, config, j);
    }
    return sum;
}

double fidelity(double prob0, double phase, const ProtocolParams &params, const NoiseConfig &config) {
    Eigen::Vector2cd psi;
    psi << std::sqrt(prob0), std::sqrt(1 - prob0) * std::polar(1.0, phase);
    const Matrix2cd rho = psi * psi.adjoint();
    return (psi.adjoint() * protocol_channel(rho, params, config) * psi)(0, 0).real();
}

double entanglement_fidelity(const ProtocolParams &params, const NoiseConfig &config) {
    // <Phi+| (1 (x) E)(|Phi+><Phi+|) |Phi+> = (1/4) Sum_ab E(|a><b|)_ab.
    double sum = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            Matrix2cd unit = Matrix2cd::Zero();
            unit(a, b) = 1.0;
            sum += protocol_channel(unit, params, config)(a, b).real();
        }
    }
    return sum / 4.0;
}

double haar_average(const ProtocolParams &params, const NoiseConfig &config) {
    return (2.0 * entanglement_fidelity(params, config) + 1.0) / 3.0;
}

double max_abs_diff(const MatrixXcd &a, const MatrixXcd &b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace oracle
