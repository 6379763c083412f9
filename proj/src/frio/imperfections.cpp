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

#include "frio/imperfections.hpp"

#include <algorithm>
#include <sstream>

#include "frio/error.hpp"

namespace frio {

namespace {

constexpr double kConsistencyTol = 1e-6;

Mat2 hermitian(const Mat2 &m) {
    Mat2 h = 0.5 * (m + m.adjoint());
    h(0, 0) = h(0, 0).real();
    h(1, 1) = h(1, 1).real();
    return h;
}

Mat2 ancilla_block(const Mat4 &joint, int ancilla) {
    Mat2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out(r, c) = joint(joint_index(r, ancilla), joint_index(c, ancilla));
        }
    }
    return out;
}

BranchState make_branch(const Mat2 &unnormalized) {
    Mat2 h = hermitian(unnormalized);
    BranchState b;
    b.weight = h.trace().real();
    if (b.weight > 0) {
        Mat2 s = h / b.weight;
        s(1, 1) = 1.0 - s(0, 0).real();
        b.state = QubitDensity(s);
    } else {
        Mat2 ground = Mat2::Zero();
        ground(0, 0) = 1.0;
        b.state = QubitDensity(ground);
    }
    return b;
}

}  // namespace

CalibrationTable::CalibrationTable(std::vector<CalibrationRow> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw ConfigError("calibration table is empty");
    }
    for (size_t i = 0; i < rows_.size(); ++i) {
        const CalibrationRow &r = rows_[i];
        std::ostringstream where;
        where << "calibration table row for gray level " << r.gray_level << ": ";
        if (r.gray_level < 0 || r.gray_level > 255) {
            throw ConfigError(where.str() + "gray level outside 0..255");
        }
        if (!(r.p_v >= 0 && r.p_v <= 1)) {
            throw ConfigError(where.str() + "p_v outside [0, 1]");
        }
        if (!(r.epsilon >= 0 && r.epsilon <= 1)) {
            throw ConfigError(where.str() + "epsilon outside [0, 1]");
        }
        if (!std::isfinite(r.phase)) {
            throw ConfigError(where.str() + "phase is not finite");
        }
        if (i > 0) {
            if (r.gray_level <= rows_[i - 1].gray_level) {
                throw ConfigError(where.str() + "gray levels must be strictly increasing");
            }
            if (r.p_v > rows_[i - 1].p_v) {
                throw ConfigError(where.str() + "p_v must not increase with the gray level");
            }
        }
    }
}

CalibrationRow CalibrationTable::at(double gl) const {
    if (rows_.empty()) {
        throw ConfigError("calibration table is empty");
    }
    if (gl < min_gray() - 1e-9 || gl > max_gray() + 1e-9) {
        throw DomainError("gray level outside the calibration table range");
    }
    auto it = std::lower_bound(rows_.begin(), rows_.end(), gl,
                               [](const CalibrationRow &r, double g) { return r.gray_level < g; });
    if (it == rows_.end()) {
        return rows_.back();
    }
    if (it->gray_level <= gl || it == rows_.begin()) {
        return *it;
    }
    const CalibrationRow &hi = *it;
    const CalibrationRow &lo = *(it - 1);
    double t = (gl - lo.gray_level) / static_cast<double>(hi.gray_level - lo.gray_level);
    CalibrationRow r;
    r.gray_level = static_cast<int>(std::lround(gl));
    r.p_v = lo.p_v + t * (hi.p_v - lo.p_v);
    r.phase = lo.phase + t * (hi.phase - lo.phase);
    r.epsilon = lo.epsilon + t * (hi.epsilon - lo.epsilon);
    return r;
}

double CalibrationTable::gray_for_theta(double theta_out, double theta) const {
    // theta'(gl) is nondecreasing, so bisection on p_v works.
    double lo = min_gray();
    double hi = max_gray();
    double t_lo = theta_from_gray(lo, theta, *this);
    double t_hi = theta_from_gray(hi, theta, *this);
    if (theta_out < t_lo - kConsistencyTol || theta_out > t_hi + kConsistencyTol) {
        throw DomainError("separation angle is not reachable with this calibration table");
    }
    if (theta_out <= t_lo) {
        return lo;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        if (theta_from_gray(mid, theta, *this) < theta_out) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Prefer an exact integer level when one matches.
    double rounded = std::round(hi);
    if (std::abs(theta_from_gray(rounded, theta, *this) - theta_out) < 1e-9) {
        return rounded;
    }
    return hi;
}

const std::array<OperatingPoint, 7> &operating_points() {
    static const std::array<OperatingPoint, 7> points{{
        {1, 19.5, 0, 0.00},
        {2, 22.6, 142, 0.23},
        {3, 25.5, 163, 0.32},
        {4, 29.5, 180, 0.40},
        {5, 34.2, 195, 0.48},
        {6, 40.0, 214, 0.56},
        {7, 45.0, 255, 0.61},
    }};
    return points;
}

double DepolarizationRamp::at(double gl) const {
    if (gl <= start_gray || epsilon_max <= 0) {
        return 0.0;
    }
    if (gl >= end_gray) {
        return epsilon_max;
    }
    return epsilon_max * (gl - start_gray) / static_cast<double>(end_gray - start_gray);
}

CalibrationTable default_calibration_table(const DepolarizationRamp &ramp) {
    const auto &pts = operating_points();
    const double tan_in = std::tan(deg_to_rad(kInputThetaDeg));
    auto anchor_pv = [&](const OperatingPoint &p) {
        double r = tan_in / std::tan(deg_to_rad(p.theta_out_deg));
        return p.theta_out_deg == kInputThetaDeg ? 1.0 : r * r;
    };

    std::vector<CalibrationRow> rows;
    rows.reserve(256);
    size_t seg = 0;
    for (int gl = 0; gl <= 255; ++gl) {
        while (seg + 2 < pts.size() && gl > pts[seg + 1].gray_level) {
            ++seg;
        }
        const OperatingPoint &a = pts[seg];
        const OperatingPoint &b = pts[seg + 1];
        double t = (gl - a.gray_level) / static_cast<double>(b.gray_level - a.gray_level);
        CalibrationRow r;
        r.gray_level = gl;
        if (gl == a.gray_level) {
            r.p_v = anchor_pv(a);
            r.phase = a.phase_over_pi * kPi;
        } else if (gl == b.gray_level) {
            r.p_v = anchor_pv(b);
            r.phase = b.phase_over_pi * kPi;
        } else {
            r.p_v = anchor_pv(a) + t * (anchor_pv(b) - anchor_pv(a));
            r.phase = (a.phase_over_pi + t * (b.phase_over_pi - a.phase_over_pi)) * kPi;
        }
        r.epsilon = ramp.at(gl);
        rows.push_back(r);
    }
    return CalibrationTable(std::move(rows));
}

double theta_from_gray(double gl, double theta, const CalibrationTable &table) {
    double pv = table.at(gl).p_v;
    if (!(pv > 0)) {
        throw DomainError("theta_from_gray: P_v = 0 would need theta' = pi/2, which is unreachable");
    }
    return std::atan(std::tan(theta) / std::sqrt(pv));
}

void NoiseModel::validate() const {
    if (depolarization && !table) {
        throw ConfigError("noise: depolarization needs a calibration table");
    }
    if (!(phase_resolution >= 0)) {
        throw ConfigError("noise: phase resolution must be non-negative");
    }
    if (!(crosstalk >= 0 && crosstalk <= 0.05)) {
        throw ConfigError("noise: crosstalk must lie in [0, 0.05]");
    }
}

Mat2 depolarized_ancilla(double theta, double theta_out, double epsilon) {
    require(epsilon >= 0 && epsilon <= 1, "depolarized_ancilla: epsilon must lie in [0, 1]");
    SeparationMap map(theta, theta_out);
    Vec2 p(map.tau(), map.xi());
    Mat2 rho = (1.0 - epsilon) * (p * p.adjoint()) + 0.5 * epsilon * Mat2::Identity();
    return hermitian(rho);
}

PureQubit prepared_state(int state_index, const SymmetricEnsemble &ensemble, const NoiseModel &noise) {
    require(state_index >= 0 && state_index < ensemble.n, "prepared_state: state index out of range");
    const PureQubit &ideal = ensemble[state_index];
    if (noise.phase_resolution <= 0) {
        return ideal;
    }
    double phase = ensemble.phi + kTwoPi * state_index / ensemble.n;
    double q = std::round(phase / noise.phase_resolution) * noise.phase_resolution;
    return PureQubit(std::cos(ensemble.theta), std::polar(std::sin(ensemble.theta), q));
}

NoisySeparation noisy_separation(int state_index, const SymmetricEnsemble &ensemble, const SeparationMap &map,
                                 const NoiseModel &noise, double gl) {
    noise.validate();
    require(std::abs(ensemble.theta - map.theta_in()) < kConsistencyTol,
            "noisy_separation: map input angle differs from the ensemble angle");

    double epsilon = 0;
    double p_v = map.xi() * map.xi();
    if (noise.depolarization) {
        CalibrationRow row = noise.table->at(gl);
        double t_gl = theta_from_gray(gl, map.theta_in(), *noise.table);
        if (std::abs(t_gl - map.theta_out()) > kConsistencyTol) {
            throw ConfigError("noisy_separation: gray level does not implement the requested separation angle");
        }
        epsilon = row.epsilon;
        p_v = row.p_v;
    }

    // The measured P_v includes the depolarized fraction: (1 - eps) xi_r^2 + eps/2 = P_v.
    double xi_r = 0;
    if (epsilon < 1) {
        double xi2 = (p_v - 0.5 * epsilon) / (1.0 - epsilon);
        if (xi2 < -1e-12 || xi2 > 1 + 1e-12) {
            throw ConfigError("noisy_separation: depolarization is inconsistent with the calibrated P_v");
        }
        xi_r = std::sqrt(std::clamp(xi2, 0.0, 1.0));
    }

    NoisySeparation out;
    out.epsilon = epsilon;
    out.prepared = prepared_state(state_index, ensemble, noise);
    Vec4 psi = couple(out.prepared, coupling_unitary(xi_r, map.phi()));
    out.joint = (1.0 - epsilon) * (psi * psi.adjoint());
    if (epsilon > 0) {
        // Haar-random polarization on mode 0: no coherence with mode 1 survives.
        double w0 = std::norm(out.prepared.amp0());
        double w1 = std::norm(out.prepared.amp1());
        out.joint(joint_index(0, kAncillaH), joint_index(0, kAncillaH)) += epsilon * 0.5 * w0;
        out.joint(joint_index(0, kAncillaV), joint_index(0, kAncillaV)) += epsilon * 0.5 * w0;
        out.joint(joint_index(1, kAncillaV), joint_index(1, kAncillaV)) += epsilon * w1;
    }
    return out;
}

BranchState success_branch(const NoisySeparation &sep, const NoiseModel &noise) {
    Mat2 s = ancilla_block(sep.joint, kAncillaV);
    Mat2 f = ancilla_block(sep.joint, kAncillaH);
    return make_branch((1.0 - noise.crosstalk) * s + noise.crosstalk * f);
}

BranchState failure_branch(const NoisySeparation &sep, const NoiseModel &noise) {
    Mat2 s = ancilla_block(sep.joint, kAncillaV);
    Mat2 f = ancilla_block(sep.joint, kAncillaH);
    return make_branch((1.0 - noise.crosstalk) * f + noise.crosstalk * s);
}

double BranchState::visibility() const { return 2.0 * std::abs(state(1, 0)); }

}  // namespace frio
