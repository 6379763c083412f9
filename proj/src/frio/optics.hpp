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

#ifndef FRIO_OPTICS_HPP
#define FRIO_OPTICS_HPP

#include <string>
#include <vector>

#include "frio/states.hpp"

namespace frio {

// Path-encoded qubit optics. Two path modes of width Lambda separated by
// Delta are Fourier transformed by a lens of focal length f; at the focal
// plane mode m has amplitude exp(-i kappa (1 - 2m) x Delta) sinc(kappa Lambda x)
// with kappa = pi / (lambda f). A density matrix rho therefore produces
//
//   I(x) = sinc^2(kappa Lambda x) [rho00 + rho11 + 2 Re(rho10 e^{2 i kappa Delta x})].
//
// The minimum-error measurement is a Fourier-basis projection realised by
// pointlike detectors on that plane.

struct OpticsConfig {
    double wavelength = 687e-9;
    double focal_length = 0.30;
    double mode_separation = 288e-6;
    double mode_width = 144e-6;
    double pixel_pitch = 5.2e-6;
    /// Half width of the sampled window; <= 0 selects two envelope zeros, 2 lambda f / Lambda.
    double grid_halfwidth = 0;
    /// Sample count of synthetic (non-camera) patterns.
    int samples = 4096;

    void validate() const;
    double kappa() const;
    double halfwidth() const;
    /// Spatial angular frequency 2 kappa Delta of the fringes.
    double fringe_frequency() const;
    /// First zero of the sinc^2 envelope, lambda f / Lambda.
    double envelope_zero() const;
};

enum class Branch { Success, Failure };

std::string branch_name(Branch b);

struct IntensityPattern {
    std::vector<double> xs;
    std::vector<double> values;
    int state_index = 0;
    Branch branch = Branch::Success;

    double pitch() const { return xs.size() > 1 ? xs[1] - xs[0] : 0.0; }
    double total() const;
};

struct FitResult {
    double i_max = 0;
    double visibility = 0;
    /// Fitted fringe phase phi'_j in (-pi, pi].
    double phase_raw = 0;
    double residual = 0;
    /// False when the fringe is too faint (V < 0.02) for its phase to mean anything.
    bool phase_reliable = true;
};

struct PhaseCorrection {
    double phi_corr = 0;
    /// phi'_j + phi_corr, using the unwrapped phi'_j.
    std::vector<double> corrected;
};

/// Columns of the N-point quantum Fourier transform, |mu_k>_m = w^{mk} / sqrt(N).
std::vector<Eigen::VectorXcd> fourier_basis(int n);

/// |<mu_k|psi>|^2 with the qubit embedded in the first two Fourier modes.
double naimark_probability(const Eigen::VectorXcd &mu, const PureQubit &psi);

/// x_k = -lambda f m_k / (N Delta), m_k = k for k <= N/2 else k - N.
std::vector<double> detector_positions(int n, const OpticsConfig &cfg);

/// sinc^2(pi Lambda x / (lambda f)); rejects positions within 1e-3 (relative) of an envelope zero.
double compensation_factor(double x, const OpticsConfig &cfg);

/// Uniform sample grid of cfg.samples points over [-halfwidth, halfwidth].
std::vector<double> pattern_grid(const OpticsConfig &cfg);
/// Camera pixel centres k * pixel_pitch inside [-halfwidth, halfwidth].
std::vector<double> camera_grid(const OpticsConfig &cfg);

/// Intensity density at a single focal-plane position.
double intensity_at(const QubitDensity &rho, const OpticsConfig &cfg, double x, double branch_weight = 1.0);

IntensityPattern intensity_pattern(const QubitDensity &rho, const OpticsConfig &cfg, double branch_weight = 1.0);
IntensityPattern intensity_pattern(const QubitDensity &rho, const OpticsConfig &cfg, double branch_weight,
                                   const std::vector<double> &xs);

/// Linear interpolation of a sampled pattern at x.
double sample_at(const IntensityPattern &p, double x);

/// Compensated detector intensities I(x_k)/chi_k normalized to sum 1, pointlike detectors.
std::vector<double> detector_probabilities(const QubitDensity &rho, const OpticsConfig &cfg, int n);

/// Least-squares fit of I_max sinc^2(kappa Lambda x)[1 + V cos(2 kappa Delta x + phi')].
FitResult fit_pattern(const IntensityPattern &p, const OpticsConfig &cfg);

PhaseCorrection phase_correction(const std::vector<FitResult> &fits, int n);

/// Density matrix with diagonal (cos^2 t, sin^2 t) and coherence e^{i phi} V / 2 below the diagonal.
QubitDensity reconstruct_density(double theta_target, const FitResult &fit, double phi_corr);

}  // namespace frio

#endif
