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

#include "gtest/gtest.h"

#include "frio/error.hpp"
#include "frio/io.hpp"
#include "test_util.hpp"

using namespace frio;
using frio_test::deg;
using frio_test::sq;

namespace {

/// Success-branch visibility predicted for depolarization weight eps at the
/// calibrated point: the coherent part shrinks to sqrt((1-eps)(xi^2 - eps/2)).
double ref_depolarized_visibility(double t, double tp, double eps) {
    double xi2 = sq(std::tan(t) / std::tan(tp));
    return std::sin(2 * tp) * std::sqrt((1 - eps) * (xi2 - eps / 2)) / std::sqrt(xi2);
}

NoiseModel with_table(const DepolarizationRamp &ramp, bool depol) {
    NoiseModel m;
    m.depolarization = depol;
    m.table = std::make_shared<const CalibrationTable>(default_calibration_table(ramp));
    return m;
}

}  // namespace

TEST(imperfections, operating_points_fixture) {
    const auto &pts = operating_points();
    ASSERT_EQ(pts.size(), 7u);
    EXPECT_EQ(pts[0].gray_level, 0);
    EXPECT_EQ(pts[2].gray_level, 163);
    EXPECT_EQ(pts[2].theta_out_deg, 25.5);
    EXPECT_EQ(pts[6].gray_level, 255);
    EXPECT_EQ(pts[6].phase_over_pi, 0.61);
}

TEST(imperfections, default_table_reproduces_anchors) {
    CalibrationTable t = default_calibration_table();
    EXPECT_EQ(t.rows().size(), 256u);
    for (const auto &p : operating_points()) {
        EXPECT_NEAR(rad_to_deg(theta_from_gray(p.gray_level, deg(19.5), t)), p.theta_out_deg, 1e-9);
        EXPECT_NEAR(t.at(p.gray_level).phase, p.phase_over_pi * kPi, 1e-12);
    }
    EXPECT_NEAR(rad_to_deg(theta_from_gray(142, deg(19.5), t)), 22.6, 1e-9);
    EXPECT_NEAR(t.at(195).epsilon, 0, 0);
    EXPECT_NEAR(t.at(255).epsilon, 0.1, 1e-15);
    EXPECT_NEAR(t.at(225).epsilon, 0.05, 1e-15);
}

TEST(imperfections, shipped_fixture_matches_default) {
    CalibrationTable file = load_calibration(FRIO_DATA_DIR "/calibration_default_v1.csv");
    CalibrationTable def = default_calibration_table();
    ASSERT_EQ(file.rows().size(), def.rows().size());
    for (size_t i = 0; i < def.rows().size(); ++i) {
        EXPECT_EQ(file.rows()[i].gray_level, def.rows()[i].gray_level);
        EXPECT_NEAR(file.rows()[i].p_v, def.rows()[i].p_v, 1e-11);
        EXPECT_NEAR(file.rows()[i].phase, def.rows()[i].phase, 1e-11);
        EXPECT_NEAR(file.rows()[i].epsilon, def.rows()[i].epsilon, 1e-11);
    }
    EXPECT_NEAR(rad_to_deg(theta_from_gray(163, deg(19.5), file)), 25.5, 1e-9);
}

TEST(imperfections, theta_from_gray_examples) {
    CalibrationTable t = default_calibration_table();
    EXPECT_NEAR(theta_from_gray(0, deg(19.5), t), deg(19.5), 1e-15);
    EXPECT_NEAR(t.at(255).p_v, sq(std::tan(deg(19.5))), 1e-12);
    EXPECT_NEAR(t.at(255).p_v, 0.1254, 5e-5);
    CalibrationTable dead({{0, 1, 0, 0}, {10, 0, 0, 0}});
    EXPECT_THROW(theta_from_gray(10, deg(19.5), dead), DomainError);
}

TEST(imperfections, theta_from_gray_monotone) {
    CalibrationTable t = default_calibration_table();
    double prev = 0;
    for (int gl = 0; gl <= 255; ++gl) {
        double th = theta_from_gray(gl, deg(19.5), t);
        EXPECT_GE(th, prev);
        prev = th;
    }
}

TEST(imperfections, table_validation) {
    EXPECT_THROW(CalibrationTable(std::vector<CalibrationRow>{}), ConfigError);
    EXPECT_THROW(CalibrationTable({{0, 1, 0, 0}, {0, 1, 0, 0}}), ConfigError);
    EXPECT_THROW(CalibrationTable({{0, 0.5, 0, 0}, {1, 0.6, 0, 0}}), ConfigError);
    EXPECT_THROW(CalibrationTable({{0, 1, 0, 1.5}}), ConfigError);
    EXPECT_THROW(CalibrationTable({{300, 1, 0, 0}}), ConfigError);
}

TEST(imperfections, gray_for_theta_inverts) {
    CalibrationTable t = default_calibration_table();
    EXPECT_EQ(t.gray_for_theta(deg(29.5), deg(19.5)), 180.0);
    double g = t.gray_for_theta(deg(31), deg(19.5));
    EXPECT_NEAR(theta_from_gray(g, deg(19.5), t), deg(31), 1e-10);
}

TEST(imperfections, depolarized_ancilla_examples) {
    double t = deg(19.5);
    Mat2 pure = depolarized_ancilla(t, deg(40), 0);
    EXPECT_NEAR(pure.trace().real(), 1, 1e-15);
    EXPECT_NEAR((pure * pure).trace().real(), 1, 1e-14);
    Mat2 mixed = depolarized_ancilla(t, deg(40), 1);
    EXPECT_LT((mixed - 0.5 * Mat2::Identity()).cwiseAbs().maxCoeff(), 1e-15);
    Mat2 r = depolarized_ancilla(t, deg(40), 0.1);
    double xi = std::tan(t) / std::tan(deg(40));
    EXPECT_NEAR(r(kAncillaV, kAncillaV).real(), 0.9 * xi * xi + 0.05, 1e-14);
    EXPECT_GE(hermitian_eigenvalues(r)[0], 0);
    EXPECT_THROW(depolarized_ancilla(t, deg(40), 1.1), DomainError);
}

TEST(imperfections, noiseless_reduces_to_ideal) {
    auto ens = symmetric_ensemble(5, deg(19.5), 0);
    NoiseModel m = with_table({}, false);
    CalibrationTable t = *m.table;
    for (const auto &p : operating_points()) {
        SeparationMap map(deg(19.5), deg(p.theta_out_deg));
        for (int j = 0; j < 5; ++j) {
            NoisySeparation s = noisy_separation(j, ens, map, m, p.gray_level);
            BranchState b = success_branch(s, m);
            SeparationOutcome ideal = separate(j, ens, map);
            EXPECT_NEAR(b.weight, ideal.p_success, 1e-12);
            EXPECT_LT(trace_distance(b.state.matrix(), to_density(ideal.success_state).matrix()), 1e-12);
            EXPECT_NEAR(failure_branch(s, m).weight, ideal.p_failure, 1e-12);
        }
    }
}

TEST(imperfections, depolarization_only_lowers_visibility) {
    double t = deg(19.5);
    NoiseModel m = with_table({0.15, 195, 255}, true);
    auto ens = symmetric_ensemble(7, t, 0);
    SeparationMap map(t, kPi / 4);
    for (int j = 0; j < 7; ++j) {
        NoisySeparation s = noisy_separation(j, ens, map, m, 255);
        EXPECT_NEAR(s.epsilon, 0.15, 1e-15);
        BranchState b = success_branch(s, m);
        EXPECT_NEAR(b.visibility(), ref_depolarized_visibility(t, kPi / 4, 0.15), 1e-12);
        EXPECT_LT(b.visibility(), 1.0 - 0.1);
        EXPECT_NEAR(b.weight, success_probability(t, kPi / 4), 1e-12);
        EXPECT_NEAR(b.state(0, 0).real(), 0.5, 1e-12);
    }
}

TEST(imperfections, inconsistent_map_rejected) {
    NoiseModel m = with_table({}, true);
    auto ens = symmetric_ensemble(3, deg(19.5), 0);
    EXPECT_THROW(noisy_separation(0, ens, SeparationMap(deg(19.5), deg(30)), m, 163), ConfigError);
}

TEST(imperfections, phase_quantization_bound) {
    NoiseModel m;
    m.phase_resolution = kTwoPi / 256;
    auto ens = symmetric_ensemble(7, deg(19.5), 0.123);
    for (int j = 0; j < 7; ++j) {
        double got = prepared_state(j, ens, m).relative_phase();
        double want = 0.123 + kTwoPi * j / 7;
        EXPECT_LE(std::abs(std::remainder(got - want, kTwoPi)), kPi / 256 + 1e-12);
        double steps = got / m.phase_resolution;
        EXPECT_NEAR(steps, std::round(steps), 1e-9);
    }
}

TEST(imperfections, crosstalk_mixes_branches) {
    NoiseModel m = with_table({}, false);
    m.crosstalk = 0.02;
    auto ens = symmetric_ensemble(3, deg(19.5), 0);
    SeparationMap map(deg(19.5), deg(34.2));
    NoisySeparation s = noisy_separation(1, ens, map, m, 195);
    double ps = success_probability(deg(19.5), deg(34.2));
    EXPECT_NEAR(success_branch(s, m).weight, 0.98 * ps + 0.02 * (1 - ps), 1e-12);
    EXPECT_NEAR(success_branch(s, m).weight + failure_branch(s, m).weight, 1, 1e-12);
    m.crosstalk = 0.06;
    EXPECT_THROW(m.validate(), ConfigError);
}
