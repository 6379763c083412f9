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

#ifndef FRIO_STRATEGY_HPP
#define FRIO_STRATEGY_HPP

#include <vector>

#include "frio/states.hpp"

namespace frio {

/// Ordered qubit POVM. Outcome k < n_conclusive() means "state k"; when
/// has_inconclusive is set the last element is the inconclusive outcome.
struct Povm {
    std::vector<Mat2> elements;
    bool has_inconclusive = false;

    int n_conclusive() const { return static_cast<int>(elements.size()) - (has_inconclusive ? 1 : 0); }
    const Mat2 &inconclusive() const { return elements.back(); }
};

/// Average error, correct and inconclusive probabilities over equal priors.
struct FrioProbabilities {
    double p_error = 0;
    double p_correct = 0;
    double q_inconclusive = 0;
};

/// Minimum-error POVM for N symmetric states: (2/N)|u_k><u_k|.
Povm me_povm(int n);

/// 1 - (1 + sin 2 theta') / N.
double me_error_rate(int n, double theta_out);

/// Two-step FRIO POVM: separation followed by the ME measurement on success.
/// N conclusive elements followed by the inconclusive one.
Povm frio_povm(int n, double theta, double theta_out, double phi = 0.0);

/// Closed forms P_e = p_s p_e^beta, P_c = p_s (1 - p_e^beta), Q = p_f.
FrioProbabilities frio_probabilities(int n, double theta, double theta_out);

/// cos(2 theta), the critical (maximum-confidence) inconclusive rate.
double q_mc(double theta);

/// Minimum error rate at a fixed inconclusive rate q in [0, q_mc]:
/// (1/N) [ (N-1)(1-q) - sqrt((1-q)^2 - (q - q_mc)^2) ].
double pe_min(int n, double q, double q_mc);

/// theta' whose failure probability equals q, i.e. sin^2 theta' = sin^2 theta / (1 - q).
double theta_out_for_rate(double theta, double q);

/// Tr(rho E) for a pure state.
double born_probability(const PureQubit &s, const Mat2 &element);

/// Born-rule averages of an arbitrary POVM over an equiprobable ensemble.
FrioProbabilities povm_probabilities(const Povm &povm, const std::vector<PureQubit> &states);

}  // namespace frio

#endif
