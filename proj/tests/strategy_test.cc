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

#include "gtest/gtest.h"

#include "frio/error.hpp"
#include "frio/oracle.hpp"
#include "frio/separation.hpp"
#include "test_util.hpp"

using namespace frio;
using frio_test::deg;

namespace {

Mat2 sum(const Povm &p) {
    Mat2 s = Mat2::Zero();
    for (const auto &e : p.elements) {
        s += e;
    }
    return s;
}

}  // namespace

TEST(strategy, me_povm_two_is_plus_minus) {
    Povm p = me_povm(2);
    ASSERT_EQ(p.elements.size(), 2u);
    EXPECT_FALSE(p.has_inconclusive);
    Mat2 plus;
    plus << 0.5, 0.5, 0.5, 0.5;
    Mat2 minus;
    minus << 0.5, -0.5, -0.5, 0.5;
    EXPECT_LT((p.elements[0] - plus).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((p.elements[1] - minus).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(strategy, me_povm_completeness_and_traces) {
    for (int n : {3, 5, 7, 64}) {
        Povm p = me_povm(n);
        EXPECT_LT((sum(p) - Mat2::Identity()).cwiseAbs().maxCoeff(), 1e-12);
        for (const auto &e : p.elements) {
            EXPECT_NEAR(e.trace().real(), 2.0 / n, 1e-14);
            EXPECT_NEAR(hermitian_eigenvalues(e)[0], 0, 1e-14);
        }
    }
    EXPECT_THROW(me_povm(1), DomainError);
}

TEST(strategy, me_povm_seven_off_diagonal) {
    Povm p = me_povm(7);
    for (int k = 0; k < 7; ++k) {
        std::complex<double> expect = std::polar(1.0 / 7, -2 * kPi * k / 7);
        EXPECT_NEAR(std::abs(p.elements[size_t(k)](0, 1) - expect), 0, 1e-15);
    }
}

TEST(strategy, me_error_rate_examples) {
    EXPECT_NEAR(me_error_rate(2, kPi / 4), 0, 1e-15);
    EXPECT_NEAR(me_error_rate(3, kPi / 4), 1.0 / 3, 1e-15);
    EXPECT_NEAR(me_error_rate(2, deg(19.5)), 0.18534, 5e-6);
    for (int n : {2, 3, 5, 7}) {
        for (double tp : {19.5, 30.0, 45.0}) {
            auto ens = symmetric_ensemble(n, deg(tp), 0);
            FrioProbabilities b = povm_probabilities(me_povm(n), ens.states);
            EXPECT_NEAR(b.p_error, me_error_rate(n, deg(tp)), 1e-12);
        }
    }
}

TEST(strategy, frio_povm_at_identity_has_no_inconclusive) {
    Povm p = frio_povm(3, deg(19.5), deg(19.5));
    EXPECT_TRUE(p.has_inconclusive);
    EXPECT_LT(p.inconclusive().cwiseAbs().maxCoeff(), 1e-15);
    auto ens = symmetric_ensemble(3, deg(19.5), 0);
    FrioProbabilities b = povm_probabilities(p, ens.states);
    EXPECT_NEAR(b.q_inconclusive, 0, 1e-15);
    EXPECT_NEAR(b.p_error, me_error_rate(3, deg(19.5)), 1e-12);
}

TEST(strategy, frio_povm_n2_at_45) {
    double t = deg(19.5);
    Povm p = frio_povm(2, t, kPi / 4);
    Mat2 inc = p.inconclusive();
    EXPECT_NEAR(inc(0, 0).real(), std::cos(2 * t) / std::pow(std::cos(t), 2), 1e-14);
    EXPECT_NEAR(std::abs(inc(1, 1)), 0, 1e-15);
    EXPECT_NEAR(std::abs(inc(0, 1)), 0, 1e-15);
    auto ens = symmetric_ensemble(2, t, 0);
    for (int j = 0; j < 2; ++j) {
        EXPECT_NEAR(born_probability(ens[j], inc), 0.7771, 5e-5);
    }
}

TEST(strategy, frio_povm_is_valid) {
    for (int n : {2, 3, 5, 7}) {
        for (double tp : {19.5, 25.5, 34.2, 45.0}) {
            EXPECT_TRUE(verify_povm(frio_povm(n, deg(19.5), deg(tp))).valid(1e-10));
        }
    }
    EXPECT_THROW(frio_povm(3, deg(30), deg(20)), DomainError);
}

TEST(strategy, two_path_equality_n3) {
    double t = deg(19.5), tp = deg(25.5);
    auto ens = symmetric_ensemble(3, t, 0);
    FrioProbabilities b = povm_probabilities(frio_povm(3, t, tp), ens.states);
    EXPECT_NEAR(b.p_error, frio_test::ref_pe(3, t, tp), 1e-12);
    EXPECT_NEAR(b.q_inconclusive, frio_test::ref_q(t, tp), 1e-12);
    EXPECT_NEAR(b.p_correct, frio_test::ref_ps(t, tp) * (1 - frio_test::ref_pe_beta(3, tp)), 1e-12);
}

TEST(strategy, frio_probabilities_examples) {
    double t = deg(19.5);
    FrioProbabilities a = frio_probabilities(2, t, t);
    EXPECT_NEAR(a.q_inconclusive, 0, 1e-15);
    EXPECT_NEAR(a.p_error, me_error_rate(2, t), 1e-15);
    FrioProbabilities b = frio_probabilities(2, t, kPi / 4);
    EXPECT_NEAR(b.p_error, 0, 1e-15);
    EXPECT_NEAR(b.p_correct, 0.22285, 5e-6);
    EXPECT_NEAR(b.q_inconclusive, 0.77715, 5e-6);
    FrioProbabilities c = frio_probabilities(3, t, kPi / 4);
    EXPECT_NEAR(c.p_error, b.p_correct / 3, 1e-14);
    EXPECT_NEAR(c.p_error, 0.07428, 5e-6);
    for (auto p : {a, b, c}) {
        EXPECT_NEAR(p.p_error + p.p_correct + p.q_inconclusive, 1, 1e-12);
    }
}

TEST(strategy, q_mc_examples) {
    EXPECT_NEAR(q_mc(kPi / 4), 0, 1e-15);
    EXPECT_NEAR(q_mc(0), 1, 1e-15);
    EXPECT_NEAR(q_mc(deg(19.5)), 0.7771, 5e-5);
}

TEST(strategy, pe_min_examples) {
    double qmc = std::cos(deg(39));
    EXPECT_NEAR(pe_min(2, qmc, qmc), 0, 1e-15);
    EXPECT_NEAR(pe_min(2, 0, qmc), 0.18534, 5e-6);
    EXPECT_THROW(pe_min(2, qmc + 1e-6, qmc), DomainError);
    EXPECT_THROW(pe_min(2, -0.1, qmc), DomainError);
    EXPECT_THROW(pe_min(2, 0, 1.0), DomainError);

    // n = 7, q = 0.3: invert p_f(t') = 0.3 and compare with the product form.
    double t = deg(19.5);
    double tp = std::asin(std::sin(t) / std::sqrt(0.7));
    EXPECT_NEAR(theta_out_for_rate(t, 0.3), tp, 1e-13);
    EXPECT_NEAR(pe_min(7, 0.3, q_mc(t)), frio_test::ref_pe(7, t, tp), 1e-12);
}

TEST(strategy, pe_min_endpoints) {
    for (int n : {2, 3, 5, 7}) {
        for (double tdeg : {5.0, 19.5, 30.0, 44.0}) {
            double t = deg(tdeg);
            double qmc = std::cos(2 * t);
            EXPECT_NEAR(pe_min(n, 0, qmc), 1 - (1 + std::sin(2 * t)) / n, 1e-12);
            EXPECT_NEAR(pe_min(n, qmc, qmc), (1 - qmc) * (1 - 2.0 / n), 1e-12);
        }
    }
}

TEST(strategy, pe_min_convex_nonincreasing) {
    double qmc = q_mc(deg(19.5));
    for (int n : {2, 3, 5, 7}) {
        const int m = 2000;
        double h = qmc / m;
        for (int i = 1; i < m; ++i) {
            double a = pe_min(n, (i - 1) * h, qmc);
            double b = pe_min(n, i * h, qmc);
            double c = pe_min(n, std::min(qmc, (i + 1) * h), qmc);
            EXPECT_GE(a - 2 * b + c, -1e-9);
            EXPECT_LE(b, a + 1e-15);
        }
    }
}

TEST(strategy, pe_min_large_n_limit) {
    double qmc = q_mc(deg(19.5));
    for (double q : {0.0, 0.3, 0.6}) {
        EXPECT_NEAR(pe_min(1000, q, qmc), 1 - q, 1e-2);
    }
}

TEST(strategy, pe_min_matches_independent_formula) {
    double qmc = q_mc(deg(19.5));
    for (int n : {2, 3, 5, 7}) {
        for (int i = 0; i <= 50; ++i) {
            double q = qmc * i / 50;
            EXPECT_NEAR(pe_min(n, q, qmc), frio_test::ref_pe_min(n, q, qmc), 1e-14);
        }
    }
}

TEST(strategy, naimark_consistency) {
    for (int n : {2, 3, 5, 7}) {
        Povm me = me_povm(n);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                PureQubit b = separated_state(n, j, deg(31));
                EXPECT_NEAR(born_probability(b, me.elements[size_t(k)]), frio_test::ref_fourier_prob(n, k, j, deg(31)),
                            1e-12);
            }
        }
    }
}
