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

#ifndef FRIO_STATES_HPP
#define FRIO_STATES_HPP

#include <vector>

#include "frio/linalg.hpp"

namespace frio {

/// Largest ensemble size accepted by the public API.
inline constexpr int kMaxStates = 64;

/// Pure qubit state a0|0> + a1|1>. Normalized on construction; the global
/// phase is fixed so that amp0 is real and non-negative.
class PureQubit {
   public:
    PureQubit() = default;
    PureQubit(cdouble amp0, cdouble amp1);

    cdouble amp0() const { return amp0_; }
    cdouble amp1() const { return amp1_; }
    Vec2 vec() const { return Vec2(amp0_, amp1_); }

    /// Relative phase arg(amp1) - arg(amp0), in [0, 2pi).
    double relative_phase() const;

   private:
    cdouble amp0_{1.0, 0.0};
    cdouble amp1_{0.0, 0.0};
};

/// 2x2 Hermitian, unit-trace, positive semidefinite matrix.
class QubitDensity {
   public:
    QubitDensity() : m_(Mat2::Identity() * 0.5) {}
    /// Validates the density-matrix invariants; throws DomainError otherwise.
    explicit QubitDensity(const Mat2 &m);

    const Mat2 &matrix() const { return m_; }
    cdouble operator()(int r, int c) const { return m_(r, c); }
    double purity() const { return (m_ * m_).trace().real(); }
    double min_eigenvalue() const { return hermitian_eigenvalues(m_)[0]; }

   private:
    Mat2 m_;
};

struct BlochPoint {
    double x = 0;
    double y = 0;
    double z = 0;

    double radius() const { return std::sqrt(x * x + y * y + z * z); }
    /// Azimuth atan2(y, x) wrapped to [0, 2pi).
    double azimuth() const { return wrap_two_pi(std::atan2(y, x)); }
};

/// N equiprobable states cos(theta)|0> + e^{i phi} w^j sin(theta)|1>, w = e^{2 pi i/N}.
struct SymmetricEnsemble {
    int n = 2;
    double theta = 0;
    double phi = 0;
    std::vector<PureQubit> states;

    double prior() const { return 1.0 / n; }
    const PureQubit &operator[](int j) const { return states.at(static_cast<size_t>(j)); }
};

PureQubit fiducial_state(double theta, double phi);
SymmetricEnsemble symmetric_ensemble(int n, double theta, double phi);

/// Uniform (equatorial) symmetric states (|0> + w^j|1>)/sqrt(2).
std::vector<PureQubit> uniform_states(int n);

/// The shift operator diag(1, w).
Mat2 symmetry_unitary(int n);

QubitDensity to_density(const PureQubit &s);
/// <a|b>.
cdouble overlap(const PureQubit &a, const PureQubit &b);
BlochPoint bloch(const QubitDensity &rho);
QubitDensity from_bloch(const BlochPoint &p);

void check_state_count(int n);

}  // namespace frio

#endif
