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

#include "frio/states.hpp"

#include <string>

#include "frio/error.hpp"

namespace frio {

namespace {

constexpr double kAngleSlack = 1e-12;

}  // namespace

PureQubit::PureQubit(cdouble amp0, cdouble amp1) {
    double norm = std::sqrt(std::norm(amp0) + std::norm(amp1));
    require(norm > 0, "PureQubit: zero vector");
    amp0 /= norm;
    amp1 /= norm;
    if (std::abs(amp0) > 0) {
        cdouble phase = std::conj(amp0) / std::abs(amp0);
        amp0 = std::abs(amp0);
        amp1 *= phase;
    } else if (std::abs(amp1) > 0) {
        amp1 = std::abs(amp1);
    }
    amp0_ = amp0;
    amp1_ = amp1;
}

double PureQubit::relative_phase() const {
    if (std::abs(amp1_) == 0) {
        return 0;
    }
    return wrap_two_pi(std::arg(amp1_) - std::arg(amp0_));
}

QubitDensity::QubitDensity(const Mat2 &m) : m_(m) {
    require(hermiticity_defect(m) <= 1e-12, "QubitDensity: matrix is not Hermitian");
    require(std::abs(m.trace() - cdouble(1.0)) <= 1e-12, "QubitDensity: trace is not 1");
    require(hermitian_eigenvalues(m)[0] >= -1e-10, "QubitDensity: negative eigenvalue");
}

void check_state_count(int n) {
    if (n < 2 || n > kMaxStates) {
        throw DomainError("number of states must be in [2, " + std::to_string(kMaxStates) +
                          "], got " + std::to_string(n));
    }
}

PureQubit fiducial_state(double theta, double phi) {
    require(theta >= -kAngleSlack && theta <= kPi / 4 + kAngleSlack, "fiducial_state: theta must lie in [0, pi/4]");
    require(phi >= 0 && phi < kTwoPi, "fiducial_state: phi must lie in [0, 2pi)");
    return PureQubit(std::cos(theta), std::polar(std::sin(theta), phi));
}

SymmetricEnsemble symmetric_ensemble(int n, double theta, double phi) {
    check_state_count(n);
    PureQubit fid = fiducial_state(theta, phi);
    SymmetricEnsemble e;
    e.n = n;
    e.theta = theta;
    e.phi = phi;
    e.states.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        e.states.emplace_back(fid.amp0(), fid.amp1() * root_of_unity(n, j));
    }
    return e;
}

std::vector<PureQubit> uniform_states(int n) {
    check_state_count(n);
    std::vector<PureQubit> out;
    out.reserve(static_cast<size_t>(n));
    const double h = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < n; ++j) {
        out.emplace_back(h, h * root_of_unity(n, j));
    }
    return out;
}

Mat2 symmetry_unitary(int n) {
    check_state_count(n);
    Mat2 v = Mat2::Zero();
    v(0, 0) = 1.0;
    v(1, 1) = root_of_unity(n, 1);
    return v;
}

QubitDensity to_density(const PureQubit &s) {
    Vec2 v = s.vec();
    Mat2 m = v * v.adjoint();
    // Exact hermiticity and trace regardless of rounding in the outer product.
    m(1, 0) = std::conj(m(0, 1));
    m(0, 0) = m(0, 0).real();
    m(1, 1) = 1.0 - m(0, 0).real();
    return QubitDensity(m);
}

cdouble overlap(const PureQubit &a, const PureQubit &b) { return a.vec().dot(b.vec()); }

BlochPoint bloch(const QubitDensity &rho) {
    const Mat2 &m = rho.matrix();
    BlochPoint p;
    p.x = 2.0 * m(1, 0).real();
    p.y = 2.0 * m(1, 0).imag();
    p.z = (m(0, 0) - m(1, 1)).real();
    return p;
}

QubitDensity from_bloch(const BlochPoint &p) {
    require(p.radius() <= 1.0 + 1e-10, "from_bloch: point outside the Bloch ball");
    Mat2 m;
    m(0, 0) = 0.5 * (1.0 + p.z);
    m(1, 1) = 0.5 * (1.0 - p.z);
    m(1, 0) = cdouble(0.5 * p.x, 0.5 * p.y);
    m(0, 1) = std::conj(m(1, 0));
    return QubitDensity(m);
}

}  // namespace frio
