// Copyright 2026 The FRIO Authors
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

#include "frio/separation.hpp"

#include "frio/error.hpp"

namespace frio {

namespace {

constexpr double kAngleSlack = 1e-12;

void check_angles(double theta, double theta_out) {
    require(theta >= -kAngleSlack && theta <= kPi / 4 + kAngleSlack, "separation: theta must lie in [0, pi/4]");
    require(theta_out <= kPi / 4 + kAngleSlack, "separation: theta' must not exceed pi/4");
    require(theta_out >= theta - kAngleSlack, "separation: theta' must not be smaller than theta");
    require(theta > 0 || theta_out <= kAngleSlack, "separation: theta = 0 cannot be separated");
}

}  // namespace

SeparationMap::SeparationMap(double theta_in, double theta_out, double phi)
    : theta_in_(theta_in), theta_out_(theta_out), phi_(phi) {
    check_angles(theta_in, theta_out);
    if (theta_out - theta_in <= kAngleSlack) {
        xi_ = 1.0;
        tau_ = 0.0;
        theta_out_ = theta_in;
    } else {
        xi_ = std::tan(theta_in) / std::tan(theta_out);
        tau_ = std::sqrt(std::max(0.0, 1.0 - xi_ * xi_));
    }
}

double success_probability(double theta, double theta_out) {
    check_angles(theta, theta_out);
    if (theta_out - theta <= kAngleSlack) {
        return 1.0;
    }
    double r = std::sin(theta) / std::sin(theta_out);
    return r * r;
}

Mat4 coupling_unitary(const SeparationMap &map) { return coupling_unitary(map.xi(), map.phi()); }

Mat4 coupling_unitary(double xi, double phi) {
    require(xi >= 0 && xi <= 1, "coupling_unitary: xi must lie in [0, 1]");
    const double tau = std::sqrt(1.0 - xi * xi);
    Mat4 u = Mat4::Zero();
    cdouble ph = std::polar(1.0, phi);
    // |0> block acts on the ancilla as [[xi, tau], [-tau, xi]] in (h, v).
    u(joint_index(0, kAncillaH), joint_index(0, kAncillaH)) = ph * xi;
    u(joint_index(0, kAncillaH), joint_index(0, kAncillaV)) = ph * tau;
    u(joint_index(0, kAncillaV), joint_index(0, kAncillaH)) = -ph * tau;
    u(joint_index(0, kAncillaV), joint_index(0, kAncillaV)) = ph * xi;
    u(joint_index(1, kAncillaH), joint_index(1, kAncillaH)) = 1.0;
    u(joint_index(1, kAncillaV), joint_index(1, kAncillaV)) = 1.0;
    return u;
}

PureQubit separated_state(int n, int j, double theta_out) {
    check_state_count(n);
    return PureQubit(std::cos(theta_out), std::sin(theta_out) * root_of_unity(n, j));
}

Vec4 couple(const PureQubit &input, const Mat4 &u) {
    Vec4 in = Vec4::Zero();
    in(joint_index(0, kAncillaV)) = input.amp0();
    in(joint_index(1, kAncillaV)) = input.amp1();
    return u * in;
}

SeparationOutcome separate(int state_index, const SymmetricEnsemble &ensemble, const SeparationMap &map) {
    require(state_index >= 0 && state_index < ensemble.n, "separate: state index out of range");
    SeparationOutcome out;
    out.success_state = separated_state(ensemble.n, state_index, map.theta_out());
    out.failure_state = PureQubit(1.0, 0.0);
    out.p_success = success_probability(map.theta_in(), map.theta_out());
    out.p_failure = 1.0 - out.p_success;
    return out;
}

}  // namespace frio
