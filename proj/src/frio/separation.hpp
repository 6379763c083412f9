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

#ifndef FRIO_SEPARATION_HPP
#define FRIO_SEPARATION_HPP

#include "frio/states.hpp"

namespace frio {

// Optimal probabilistic separation |alpha_j(theta)> -> |beta_j(theta')> of
// symmetric qubit states. The system is coupled to a polarization ancilla
// prepared in |v>; projecting the ancilla on |v> heralds success.
//
// Joint basis ordering is system (x) ancilla with ancilla order (h, v):
//   index 0 = |0,h>, 1 = |0,v>, 2 = |1,h>, 3 = |1,v>.

inline constexpr int kAncillaH = 0;
inline constexpr int kAncillaV = 1;

inline int joint_index(int system, int ancilla) { return 2 * system + ancilla; }

class SeparationMap {
   public:
    /// theta_in <= theta_out <= pi/4 and theta_in > 0 unless theta_out == theta_in.
    SeparationMap(double theta_in, double theta_out, double phi = 0.0);

    double theta_in() const { return theta_in_; }
    double theta_out() const { return theta_out_; }
    double phi() const { return phi_; }
    /// tan(theta_in) cot(theta_out): the v-amplitude of the rotated ancilla.
    double xi() const { return xi_; }
    double tau() const { return tau_; }

   private:
    double theta_in_;
    double theta_out_;
    double phi_;
    double xi_;
    double tau_;
};

struct SeparationOutcome {
    PureQubit success_state;
    PureQubit failure_state;
    double p_success = 1;
    double p_failure = 0;
};

/// (sin theta / sin theta')^2, the maximal separation success probability.
double success_probability(double theta, double theta_out);

/// Controlled ancilla rotation: e^{i phi}|0><0| (x) [[xi, tau], [-tau, xi]] + |1><1| (x) I.
Mat4 coupling_unitary(const SeparationMap &map);
/// Same block structure with an explicit rotation amplitude xi in [0, 1].
Mat4 coupling_unitary(double xi, double phi);

/// |beta_j(theta')> = cos(theta')|0> + w^j sin(theta')|1>.
PureQubit separated_state(int n, int j, double theta_out);

SeparationOutcome separate(int state_index, const SymmetricEnsemble &ensemble, const SeparationMap &map);

/// U |psi>|v> as a joint 4-vector.
Vec4 couple(const PureQubit &input, const Mat4 &u);

}  // namespace frio

#endif
