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

#ifndef FRIO_IMPERFECTIONS_HPP
#define FRIO_IMPERFECTIONS_HPP

#include <array>
#include <memory>
#include <vector>

#include "frio/separation.hpp"

namespace frio {

struct CalibrationRow {
    int gray_level = 0;
    /// Probability of finding the modulated ancilla in |v>.
    double p_v = 1;
    /// Phase shift imprinted by the modulator, radians.
    double phase = 0;
    /// Depolarization weight.
    double epsilon = 0;
};

/// Gray-level response of the spatial light modulator. Rows are sorted by
/// gray level; p_v must not increase with the gray level.
class CalibrationTable {
   public:
    CalibrationTable() = default;
    explicit CalibrationTable(std::vector<CalibrationRow> rows);

    const std::vector<CalibrationRow> &rows() const { return rows_; }
    int min_gray() const { return rows_.front().gray_level; }
    int max_gray() const { return rows_.back().gray_level; }

    /// Row at a (possibly fractional) gray level, linear between table rows.
    CalibrationRow at(double gl) const;

    /// Fractional gray level where theta'(gl) reaches theta_out.
    double gray_for_theta(double theta_out, double theta) const;

   private:
    std::vector<CalibrationRow> rows_;
};

/// One row of the published operating points (separation angle, gray level, phase / pi).
struct OperatingPoint {
    int t = 1;
    double theta_out_deg = 0;
    int gray_level = 0;
    double phase_over_pi = 0;
};

inline constexpr double kInputThetaDeg = 19.5;

/// The seven operating points used for theta = 19.5 degrees.
const std::array<OperatingPoint, 7> &operating_points();

struct DepolarizationRamp {
    double epsilon_max = 0.1;
    int start_gray = 195;
    int end_gray = 255;

    double at(double gl) const;
};

/// 256-row table: p_v piecewise linear through the operating points (inverted from
/// theta'(gl) = atan(tan theta / sqrt(p_v))), phase piecewise linear, epsilon from the ramp.
CalibrationTable default_calibration_table(const DepolarizationRamp &ramp = {});

/// atan(tan theta / sqrt(P_v(gl))).
double theta_from_gray(double gl, double theta, const CalibrationTable &table);

struct NoiseModel {
    bool depolarization = false;
    std::shared_ptr<const CalibrationTable> table;
    /// Step of the preparable relative phases; 0 disables quantization.
    double phase_resolution = 0;
    /// Probability that the polarizing splitter routes a photon to the wrong port.
    double crosstalk = 0;

    void validate() const;
    bool ideal() const { return !depolarization && phase_resolution == 0 && crosstalk == 0; }
};

/// (1 - eps)|p><p| + eps I/2 with |p> = tau|h> + xi|v>, ancilla basis (h, v).
Mat2 depolarized_ancilla(double theta, double theta_out, double epsilon);

/// Joint system (x) ancilla state after the coupling, before the splitter.
struct NoisySeparation {
    Mat4 joint;
    double epsilon = 0;
    PureQubit prepared;
};

/// Unnormalized branch operator and its normalized state.
struct BranchState {
    double weight = 0;
    QubitDensity state;
    double visibility() const;
};

/// Prepared input (azimuth quantized by the noise model) for state j.
PureQubit prepared_state(int state_index, const SymmetricEnsemble &ensemble, const NoiseModel &noise);

NoisySeparation noisy_separation(int state_index, const SymmetricEnsemble &ensemble, const SeparationMap &map,
                                 const NoiseModel &noise, double gl);

BranchState success_branch(const NoisySeparation &sep, const NoiseModel &noise);
BranchState failure_branch(const NoisySeparation &sep, const NoiseModel &noise);

}  // namespace frio

#endif
