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

#ifndef FRIO_LINALG_HPP
#define FRIO_LINALG_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace frio {

using cdouble = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// exp(2 pi i k / n).
inline cdouble root_of_unity(int n, long long k) {
    // Reduce first so large k keep full precision.
    long long r = ((k % n) + n) % n;
    double a = kTwoPi * static_cast<double>(r) / static_cast<double>(n);
    return {std::cos(a), std::sin(a)};
}

/// Wraps an angle into (-pi, pi].
inline double wrap_pi(double a) {
    double r = std::remainder(a, kTwoPi);
    if (r <= -kPi) {
        r += kTwoPi;
    }
    return r;
}

/// Wraps an angle into [0, 2 pi).
inline double wrap_two_pi(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r -= kTwoPi;
    }
    return r;
}

/// Eigenvalues (ascending) of the Hermitian part of a 2x2 matrix, closed form.
inline std::array<double, 2> hermitian_eigenvalues(const Mat2 &m) {
    double a = m(0, 0).real();
    double d = m(1, 1).real();
    cdouble b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    double mean = 0.5 * (a + d);
    double rad = std::hypot(0.5 * (a - d), std::abs(b));
    return {mean - rad, mean + rad};
}

inline double hermiticity_defect(const Mat2 &m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

/// Operator (spectral) norm of a Hermitian 2x2 matrix.
inline double hermitian_norm(const Mat2 &m) {
    auto ev = hermitian_eigenvalues(m);
    return std::max(std::abs(ev[0]), std::abs(ev[1]));
}

/// Trace distance 0.5 * ||a - b||_1 between two Hermitian 2x2 matrices.
inline double trace_distance(const Mat2 &a, const Mat2 &b) {
    auto ev = hermitian_eigenvalues(a - b);
    return 0.5 * (std::abs(ev[0]) + std::abs(ev[1]));
}

/// Unnormalized sinc, sin(u)/u with sinc(0) = 1.
inline double sinc(double u) {
    if (std::abs(u) < 1e-8) {
        return 1.0 - u * u / 6.0;
    }
    return std::sin(u) / u;
}

}  // namespace frio

#endif
