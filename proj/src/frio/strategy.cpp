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

#include "frio/strategy.hpp"

#include <algorithm>

#include "frio/error.hpp"
#include "frio/separation.hpp"

namespace frio {

namespace {

constexpr double kRateSlack = 1e-12;

Mat2 projector(const Vec2 &v) {
    Mat2 m = v * v.adjoint();
    m(1, 0) = std::conj(m(0, 1));
    return m;
}

}  // namespace

Povm me_povm(int n) {
    Povm p;
    for (const PureQubit &u : uniform_states(n)) {
        p.elements.push_back((2.0 / n) * projector(u.vec()));
    }
    return p;
}

double me_error_rate(int n, double theta_out) {
    check_state_count(n);
    require(theta_out >= -kRateSlack && theta_out <= kPi / 4 + kRateSlack, "me_error_rate: theta' must lie in [0, pi/4]");
    return 1.0 - (1.0 + std::sin(2.0 * theta_out)) / n;
}

Povm frio_povm(int n, double theta, double theta_out, double phi) {
    check_state_count(n);
    SeparationMap map(theta, theta_out, phi);
    Mat4 u = coupling_unitary(map);

    // <v|U|v> and <h|U|v> as system operators.
    Mat2 pass = Mat2::Zero();
    Mat2 fail = Mat2::Zero();
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            pass(r, c) = u(joint_index(r, kAncillaV), joint_index(c, kAncillaV));
            fail(r, c) = u(joint_index(r, kAncillaH), joint_index(c, kAncillaV));
        }
    }

    Povm p;
    p.has_inconclusive = true;
    const double root_weight = std::sqrt(2.0 / n);
    for (const PureQubit &uk : uniform_states(n)) {
        // (2/N |u><u|)^{1/2} = sqrt(2/N) |u><u| for a rank-one projector.
        Mat2 a = root_weight * projector(uk.vec()) * pass;
        p.elements.push_back(a.adjoint() * a);
    }
    p.elements.push_back(fail.adjoint() * fail);
    return p;
}

FrioProbabilities frio_probabilities(int n, double theta, double theta_out) {
    check_state_count(n);
    double ps = success_probability(theta, theta_out);
    double pe_beta = me_error_rate(n, theta_out);
    FrioProbabilities out;
    out.p_error = ps * pe_beta;
    out.p_correct = ps * (1.0 - pe_beta);
    out.q_inconclusive = 1.0 - ps;
    return out;
}

double q_mc(double theta) {
    require(theta >= -kRateSlack && theta <= kPi / 4 + kRateSlack, "q_mc: theta must lie in [0, pi/4]");
    return std::cos(2.0 * theta);
}

double pe_min(int n, double q, double q_mc) {
    // Standalone formula: any n >= 2 is meaningful, including the n -> infinity limit.
    require(n >= 2, "pe_min: n must be at least 2");
    require(q_mc >= 0 && q_mc < 1, "pe_min: q_mc must lie in [0, 1)");
    require(q >= -kRateSlack, "pe_min: q must be non-negative");
    if (q > q_mc + kRateSlack) {
        throw DomainError("pe_min: q exceeds the critical rate q_mc");
    }
    q = std::clamp(q, 0.0, q_mc);
    double qbar = 1.0 - q;
    double d = q - q_mc;
    double root = std::sqrt(std::max(0.0, qbar * qbar - d * d));
    return ((n - 1) * qbar - root) / n;
}

double theta_out_for_rate(double theta, double q) {
    require(q >= 0 && q <= q_mc(theta) + kRateSlack, "theta_out_for_rate: q outside [0, q_mc]");
    double s = std::sin(theta) / std::sqrt(1.0 - q);
    return std::asin(std::min(1.0, s));
}

double born_probability(const PureQubit &s, const Mat2 &element) {
    Vec2 v = s.vec();
    return v.dot(element * v).real();
}

FrioProbabilities povm_probabilities(const Povm &povm, const std::vector<PureQubit> &states) {
    const int n = static_cast<int>(states.size());
    require(povm.n_conclusive() == n, "povm_probabilities: POVM and ensemble sizes differ");
    FrioProbabilities out;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            double p = born_probability(states[static_cast<size_t>(j)], povm.elements[static_cast<size_t>(k)]);
            (j == k ? out.p_correct : out.p_error) += p;
        }
        if (povm.has_inconclusive) {
            out.q_inconclusive += born_probability(states[static_cast<size_t>(j)], povm.inconclusive());
        }
    }
    out.p_error /= n;
    out.p_correct /= n;
    out.q_inconclusive /= n;
    return out;
}

}  // namespace frio
