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

#ifndef FRIO_ORACLE_HPP
#define FRIO_ORACLE_HPP

#include <cstdint>
#include <string>

#include "frio/strategy.hpp"

namespace frio {

// Brute-force check of the closed-form FRIO error rate. Nothing in here uses
// the separation map or the closed forms except to report the gap.

struct PovmCheck {
    /// Operator norm of sum(elements) - I.
    double completeness_deviation = 0;
    /// Smallest eigenvalue over all elements.
    double min_eigenvalue = 0;

    bool valid(double tol = 1e-10) const { return completeness_deviation <= tol && min_eigenvalue >= -tol; }
};

PovmCheck verify_povm(const Povm &p);

enum class OracleFamily {
    /// Diagonal inconclusive element plus V-covariant conclusive elements.
    Covariant,
    /// All 3-outcome qubit POVMs (n = 2 only), via extremal POVMs and convex mixing.
    Unconstrained,
};

std::string family_name(OracleFamily f);
OracleFamily parse_family(const std::string &s);

struct OracleResolution {
    /// Covariant family: points per free parameter (inconclusive weight and phase).
    int covariant_points = 201;
    /// Unconstrained family: in-plane angle points of the base grid.
    int unconstrained_points = 36;
    /// Refinement passes around the incumbent(s) after the base grid.
    int refine_levels = 2;
};

struct OracleReport {
    int n = 2;
    double theta = 0;
    double q_target = 0;
    double pe_bruteforce = 0;
    double pe_formula = 0;
    double gap = 0;
    OracleFamily family = OracleFamily::Covariant;
    /// Inconclusive rate of the strategy attaining pe_bruteforce.
    double achieved_q = 0;
    std::string search_resolution;
    int64_t evaluated = 0;
    int64_t rejected = 0;
};

/// Minimum average error found by grid search at Q = q_target for N symmetric
/// states with polar angle theta (phi = 0), compared with pe_min.
OracleReport brute_force_pe(int n, double theta, double q_target, OracleFamily family,
                            const OracleResolution &res = {});

}  // namespace frio

#endif
