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

#ifndef FRIO_EXPERIMENT_HPP
#define FRIO_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "frio/imperfections.hpp"
#include "frio/optics.hpp"

namespace frio {

enum class Mode { Analytic, MonteCarlo, Optical };

std::string mode_name(Mode m);
Mode parse_mode(const std::string &s);

/// Camera emulation for the optical mode.
struct CameraModel {
    /// Mean count of the brightest pixel over both splitter outputs of one input.
    double peak_counts = 1e4;
    /// Constant background added before Poisson sampling and subtracted afterwards.
    double background = 0;
};

struct RunConfig {
    std::vector<int> n_states{2, 3, 5, 7};
    double theta_deg = kInputThetaDeg;
    /// Target separation angles in degrees. Ignored when gray_levels is non-empty.
    std::vector<double> schedule_deg;
    /// Alternative schedule given as gray levels of the calibration table.
    std::vector<int> gray_levels;
    int64_t shots_per_state = 100000;
    uint64_t seed = 20240607;
    NoiseModel noise;
    DepolarizationRamp ramp;
    OpticsConfig optics;
    CameraModel camera;
    std::vector<Mode> modes{Mode::Analytic, Mode::MonteCarlo};
    /// Worker threads for per-state batches; results do not depend on it.
    int threads = 1;

    /// Fills the defaults that depend on other fields (table, schedule) and checks invariants.
    void finalize();
    double theta() const { return deg_to_rad(theta_deg); }
};

/// One resolved operating point of the schedule.
struct ScheduleEntry {
    double theta_out = 0;
    /// Gray level implementing theta_out (may be fractional); negative if unknown.
    double gray_level = -1;
    /// Input phase phi_t, also imprinted (and removed) by the modulator.
    double phase = 0;
};

std::vector<ScheduleEntry> resolve_schedule(const RunConfig &cfg);

struct TrialRecord {
    int prepared = 0;
    Branch branch = Branch::Success;
    /// Detector index for successful separations, -1 otherwise.
    int detector = -1;
};

struct EstimateSet {
    double p_s_hat = 0;
    double p_c_beta_hat = 0;
    double p_e_hat = 0;
    double q_hat = 0;
    double p_c_hat = 0;
    std::vector<double> p_sj;
    /// p_jk[j][k]: fraction of detections at detector k for input j.
    std::vector<std::vector<double>> p_jk;
    double stderr_ps = 0;
    double stderr_pc = 0;
    double stderr_pe = 0;
    double stderr_q = 0;
};

/// Per-input branch weights and conditional states for one operating point.
struct PointModel {
    int n = 2;
    ScheduleEntry entry;
    std::vector<BranchState> success;
    std::vector<BranchState> failure;
};

PointModel model_point(const RunConfig &cfg, int n, const ScheduleEntry &entry);

/// Shot-level emulation; deterministic in (seed, n, t_index).
std::vector<TrialRecord> run_montecarlo(const RunConfig &cfg, int n, size_t t_index);

/// Success and failure patterns for every input, ordered (j, success), (j, failure).
/// Without shot noise the patterns are the exact expected counts.
std::vector<IntensityPattern> run_optical(const RunConfig &cfg, int n, size_t t_index, bool shot_noise = true);

EstimateSet estimate(const std::vector<TrialRecord> &records, int n);
EstimateSet estimate(const std::vector<IntensityPattern> &patterns, int n, const OpticsConfig &optics);

/// Fits, phase correction and reconstructed density matrices of the success patterns.
struct Characterization {
    std::vector<FitResult> fits;
    PhaseCorrection correction;
    std::vector<QubitDensity> states;
};

Characterization characterize(const std::vector<IntensityPattern> &patterns, int n, double theta_out,
                              const OpticsConfig &optics);

struct SweepRow {
    int n = 2;
    double theta_out_deg = 0;
    Mode mode = Mode::Analytic;
    double p_s = 0;
    double p_c_beta = 0;
    double p_e = 0;
    double q = 0;
    double stderr_ps = 0;
    double stderr_pc = 0;
};

std::vector<SweepRow> sweep(const RunConfig &cfg);

}  // namespace frio

#endif
