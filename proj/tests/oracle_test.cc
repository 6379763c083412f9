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

#include "frio/oracle.hpp"

#include "gtest/gtest.h"

#include "frio/error.hpp"
#include "test_util.hpp"

using namespace frio;
using frio_test::deg;

TEST(oracle, verify_me_povm) {
    PovmCheck c = verify_povm(me_povm(3));
    EXPECT_LT(c.completeness_deviation, 1e-12);
    EXPECT_GE(c.min_eigenvalue, -1e-14);
    EXPECT_TRUE(c.valid());
}

TEST(oracle, verify_frio_povm) { EXPECT_TRUE(verify_povm(frio_povm(5, deg(19.5), deg(34.2))).valid()); }

TEST(oracle, verify_flags_tampering) {
    Povm p = me_povm(3);
    p.elements[0] *= 1.01;
    PovmCheck c = verify_povm(p);
    // The tampered element is rank one with eigenvalue 2/3, so the excess is 0.01 * 2/3.
    EXPECT_NEAR(c.completeness_deviation, 0.01 * 2.0 / 3.0, 1e-12);
    EXPECT_FALSE(c.valid());

    Povm q = me_povm(2);
    q.elements[0](0, 0) -= 0.1;
    q.elements[1](0, 0) += 0.1;
    EXPECT_LT(verify_povm(q).completeness_deviation, 1e-12);
    EXPECT_FALSE(verify_povm(q).valid());
    EXPECT_THROW(verify_povm(Povm{}), DomainError);
}

TEST(oracle, family_names) {
    EXPECT_EQ(parse_family("covariant"), OracleFamily::Covariant);
    EXPECT_EQ(parse_family(family_name(OracleFamily::Unconstrained)), OracleFamily::Unconstrained);
    EXPECT_THROW(parse_family("sdp"), ConfigError);
}

TEST(oracle, covariant_examples) {
    double t = deg(19.5);
    OracleReport a = brute_force_pe(2, t, 0.0, OracleFamily::Covariant);
    EXPECT_NEAR(a.pe_bruteforce, 0.1853, 1e-3);
    EXPECT_LE(a.gap, 1e-3);
    EXPECT_GE(a.gap, -1e-6);
    OracleReport b = brute_force_pe(2, t, q_mc(t), OracleFamily::Covariant);
    EXPECT_LE(b.pe_bruteforce, 1e-3);
    OracleReport c = brute_force_pe(3, t, 0.3, OracleFamily::Covariant);
    EXPECT_LE(c.gap, 2e-3);
    EXPECT_GE(c.gap, -1e-6);
    EXPECT_NEAR(c.achieved_q, 0.3, 1e-9);
    EXPECT_FALSE(c.search_resolution.empty());
    EXPECT_GT(c.evaluated, 0);
}

TEST(oracle, unconstrained_n2) {
    double t = deg(19.5);
    OracleResolution coarse;
    coarse.unconstrained_points = 24;
    coarse.refine_levels = 1;
    for (double q : {0.0, 0.4, q_mc(t)}) {
        OracleReport r = brute_force_pe(2, t, q, OracleFamily::Unconstrained, coarse);
        EXPECT_GE(r.gap, -1e-6) << q;
        EXPECT_LE(r.gap, 5e-3) << q;
    }
}

TEST(oracle, domain_errors) {
    double t = deg(19.5);
    EXPECT_THROW(brute_force_pe(2, t, q_mc(t) + 0.01, OracleFamily::Covariant), DomainError);
    EXPECT_THROW(brute_force_pe(2, t, -0.1, OracleFamily::Covariant), DomainError);
    EXPECT_THROW(brute_force_pe(3, t, 0.1, OracleFamily::Unconstrained), DomainError);
}

TEST(oracle, results_are_reproducible) {
    double t = deg(25);
    OracleResolution r;
    r.covariant_points = 41;
    OracleReport a = brute_force_pe(3, t, 0.2, OracleFamily::Covariant, r);
    OracleReport b = brute_force_pe(3, t, 0.2, OracleFamily::Covariant, r);
    EXPECT_EQ(a.pe_bruteforce, b.pe_bruteforce);
    EXPECT_EQ(a.evaluated, b.evaluated);
}
