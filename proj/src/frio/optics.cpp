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

#include "frio/optics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frio/error.hpp"

namespace frio {

namespace {

constexpr double kUnreliableVisibility = 0.02;
constexpr double kVisibilityExcess = 0.05;
constexpr double kMaxNegativeEigenvalue = -0.02;
constexpr double kZeroGuard = 1e-3;

}  // namespace

void OpticsConfig::validate() const {
    if (!(wavelength > 0 && focal_length > 0 && mode_separation > 0 && mode_width > 0 && pixel_pitch > 0)) {
        throw ConfigError("optics: all lengths must be positive");
    }
    if (!(mode_width < mode_separation)) {
        throw ConfigError("optics: mode width must be smaller than the mode separation");
    }
    if (samples < 16) {
        throw ConfigError("optics: at least 16 samples are required");
    }
}

double OpticsConfig::kappa() const { return kPi / (wavelength * focal_length); }

double OpticsConfig::halfwidth() const { return grid_halfwidth > 0 ? grid_halfwidth : 2.0 * envelope_zero(); }

double OpticsConfig::fringe_frequency() const { return 2.0 * kappa() * mode_separation; }

double OpticsConfig::envelope_zero() const { return wavelength * focal_length / mode_width; }

std::string branch_name(Branch b) { return b == Branch::Success ? "success" : "failure"; }

double IntensityPattern::total() const { return std::accumulate(values.begin(), values.end(), 0.0); }

std::vector<Eigen::VectorXcd> fourier_basis(int n) {
    check_state_count(n);
    std::vector<Eigen::VectorXcd> basis;
    basis.reserve(static_cast<size_t>(n));
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXcd mu(n);
        for (int m = 0; m < n; ++m) {
            mu(m) = norm * root_of_unity(n, static_cast<long long>(m) * k);
        }
        basis.push_back(std::move(mu));
    }
    return basis;
}

double naimark_probability(const Eigen::VectorXcd &mu, const PureQubit &psi) {
    require(mu.size() >= 2, "naimark_probability: basis vector too short");
    cdouble amp = std::conj(mu(0)) * psi.amp0() + std::conj(mu(1)) * psi.amp1();
    return std::norm(amp);
}

std::vector<double> detector_positions(int n, const OpticsConfig &cfg) {
    check_state_count(n);
    cfg.validate();
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(n));
    const double scale = cfg.wavelength * cfg.focal_length / (n * cfg.mode_separation);
    for (int k = 0; k < n; ++k) {
        int m = 2 * k <= n ? k : k - n;
        double x = -scale * m;
        compensation_factor(x, cfg);
        xs.push_back(x == 0.0 ? 0.0 : x);
    }
    return xs;
}

double compensation_factor(double x, const OpticsConfig &cfg) {
    require(std::isfinite(x), "compensation_factor: position must be finite");
    double u = x / cfg.envelope_zero();
    double m = std::round(u);
    if (m != 0 && std::abs(u - m) < kZeroGuard) {
        throw DomainError("compensation_factor: position lies on a zero of the diffraction envelope");
    }
    double s = sinc(cfg.kappa() * cfg.mode_width * x);
    return s * s;
}

std::vector<double> pattern_grid(const OpticsConfig &cfg) {
    cfg.validate();
    const double hw = cfg.halfwidth();
    std::vector<double> xs(static_cast<size_t>(cfg.samples));
    const double step = 2.0 * hw / (cfg.samples - 1);
    for (int i = 0; i < cfg.samples; ++i) {
        xs[static_cast<size_t>(i)] = -hw + step * i;
    }
    return xs;
}

std::vector<double> camera_grid(const OpticsConfig &cfg) {
    cfg.validate();
    const auto half = static_cast<long>(std::floor(cfg.halfwidth() / cfg.pixel_pitch));
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(2 * half + 1));
    for (long k = -half; k <= half; ++k) {
        xs.push_back(static_cast<double>(k) * cfg.pixel_pitch);
    }
    return xs;
}

double intensity_at(const QubitDensity &rho, const OpticsConfig &cfg, double x, double branch_weight) {
    double env = sinc(cfg.kappa() * cfg.mode_width * x);
    cdouble fringe = std::polar(1.0, cfg.fringe_frequency() * x);
    double inner = rho.matrix().trace().real() + 2.0 * (rho(1, 0) * fringe).real();
    return branch_weight * env * env * std::max(0.0, inner);
}

IntensityPattern intensity_pattern(const QubitDensity &rho, const OpticsConfig &cfg, double branch_weight) {
    return intensity_pattern(rho, cfg, branch_weight, pattern_grid(cfg));
}

IntensityPattern intensity_pattern(const QubitDensity &rho, const OpticsConfig &cfg, double branch_weight,
                                   const std::vector<double> &xs) {
    require(branch_weight >= 0, "intensity_pattern: branch weight must be non-negative");
    IntensityPattern p;
    p.xs = xs;
    p.values.reserve(xs.size());
    for (double x : xs) {
        p.values.push_back(intensity_at(rho, cfg, x, branch_weight));
    }
    return p;
}

double sample_at(const IntensityPattern &p, double x) {
    require(p.xs.size() >= 2 && p.xs.size() == p.values.size(), "sample_at: malformed pattern");
    if (x < p.xs.front() || x > p.xs.back()) {
        throw DomainError("sample_at: position outside the sampled window");
    }
    auto it = std::upper_bound(p.xs.begin(), p.xs.end(), x);
    size_t hi = std::min<size_t>(static_cast<size_t>(it - p.xs.begin()), p.xs.size() - 1);
    size_t lo = hi - 1;
    double t = (x - p.xs[lo]) / (p.xs[hi] - p.xs[lo]);
    return (1.0 - t) * p.values[lo] + t * p.values[hi];
}

std::vector<double> detector_probabilities(const QubitDensity &rho, const OpticsConfig &cfg, int n) {
    std::vector<double> xs = detector_positions(n, cfg);
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        out.push_back(intensity_at(rho, cfg, x) / compensation_factor(x, cfg));
    }
    double total = std::accumulate(out.begin(), out.end(), 0.0);
    if (!(total > 0)) {
        throw ComputeError("detector_probabilities: no light reaches the detectors");
    }
    for (double &v : out) {
        v /= total;
    }
    return out;
}

FitResult fit_pattern(const IntensityPattern &p, const OpticsConfig &cfg) {
    cfg.validate();
    const size_t m = p.xs.size();
    require(m == p.values.size() && m >= 8, "fit_pattern: malformed pattern");
    const double span = p.xs.back() - p.xs.front();
    const double period = kTwoPi / cfg.fringe_frequency();
    require(span >= 3.0 * period, "fit_pattern: pattern must cover at least three fringe periods");
    for (double v : p.values) {
        require(std::isfinite(v), "fit_pattern: non-finite intensity");
    }
    if (std::all_of(p.values.begin(), p.values.end(), [](double v) { return v == 0.0; })) {
        throw ComputeError("fit_pattern: pattern is identically zero");
    }

    // F = sinc^2 (a + b cos(w x) + c sin(w x)) is linear in (a, b, c);
    // a = I_max, b = I_max V cos(phi'), c = -I_max V sin(phi').
    Eigen::MatrixXd design(static_cast<Eigen::Index>(m), 3);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(m));
    const double k_env = cfg.kappa() * cfg.mode_width;
    const double w = cfg.fringe_frequency();
    for (size_t i = 0; i < m; ++i) {
        double s = sinc(k_env * p.xs[i]);
        s *= s;
        auto r = static_cast<Eigen::Index>(i);
        design(r, 0) = s;
        design(r, 1) = s * std::cos(w * p.xs[i]);
        design(r, 2) = s * std::sin(w * p.xs[i]);
        rhs(r) = p.values[i];
    }
    Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
    FitResult fit;
    fit.i_max = coef(0);
    if (!(fit.i_max > 0)) {
        throw ComputeError("fit_pattern: fitted amplitude is not positive");
    }
    double amp = std::hypot(coef(1), coef(2));
    fit.visibility = std::min(1.0, amp / fit.i_max);
    fit.phase_raw = wrap_pi(std::atan2(-coef(2), coef(1)));
    fit.residual = (design * coef - rhs).squaredNorm();
    fit.phase_reliable = fit.visibility >= kUnreliableVisibility;
    return fit;
}

PhaseCorrection phase_correction(const std::vector<FitResult> &fits, int n) {
    check_state_count(n);
    if (fits.size() != static_cast<size_t>(n)) {
        throw DomainError("phase_correction: expected one fit per state");
    }
    // Each phi'_j is unwrapped onto the branch nearest its nominal 2 pi j / N, so
    // the centring pi (N - 1)/N - sum phi'_l / N reduces to minus the mean offset.
    std::vector<double> unwrapped(fits.size());
    double offset_sum = 0;
    int reliable = 0;
    for (int j = 0; j < n; ++j) {
        double nominal = kTwoPi * j / n;
        double phase = nominal + wrap_pi(fits[static_cast<size_t>(j)].phase_raw - nominal);
        unwrapped[static_cast<size_t>(j)] = phase;
        if (fits[static_cast<size_t>(j)].phase_reliable) {
            offset_sum += phase - nominal;
            ++reliable;
        }
    }
    PhaseCorrection out;
    out.phi_corr = reliable > 0 ? -offset_sum / reliable : 0.0;
    out.corrected.reserve(unwrapped.size());
    for (double ph : unwrapped) {
        out.corrected.push_back(ph + out.phi_corr);
    }
    return out;
}

QubitDensity reconstruct_density(double theta_target, const FitResult &fit, double phi_corr) {
    require(theta_target >= 0 && theta_target <= kPi / 4 + 1e-12, "reconstruct_density: target angle outside [0, pi/4]");
    require(fit.visibility >= 0, "reconstruct_density: negative visibility");
    const double v_max = std::sin(2.0 * theta_target);
    if (fit.visibility > v_max + kVisibilityExcess) {
        std::ostringstream msg;
        msg << "reconstruct_density: visibility " << fit.visibility << " exceeds sin(2 theta') = " << v_max
            << " by more than " << kVisibilityExcess;
        throw ComputeError(msg.str());
    }
    const double phase = fit.phase_raw + phi_corr;
    Mat2 m;
    m(0, 0) = std::cos(theta_target) * std::cos(theta_target);
    m(1, 1) = 1.0 - m(0, 0).real();
    m(1, 0) = std::polar(0.5 * fit.visibility, phase);
    m(0, 1) = std::conj(m(1, 0));

    double lo = hermitian_eigenvalues(m)[0];
    if (lo >= 0) {
        return QubitDensity(m);
    }
    if (lo <= kMaxNegativeEigenvalue) {
        std::ostringstream msg;
        msg << "reconstruct_density: eigenvalue " << lo << " is too negative to be measurement noise";
        throw ComputeError(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<Mat2> es(m);
    Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0);
    ev /= ev.sum();
    Mat2 clipped = es.eigenvectors() * ev.cast<cdouble>().asDiagonal() * es.eigenvectors().adjoint();
    clipped(1, 0) = std::conj(clipped(0, 1));
    clipped(0, 0) = clipped(0, 0).real();
    clipped(1, 1) = 1.0 - clipped(0, 0).real();
    return QubitDensity(clipped);
}

}  // namespace frio
