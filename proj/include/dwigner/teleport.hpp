// Copyright 2026 The dwigner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dwigner/bell.hpp"
#include "dwigner/linalg.hpp"
#include "dwigner/phase_space.hpp"
#include "dwigner/wigner.hpp"

namespace dwigner {

/// Raised when conditioning on a Bell outcome of zero probability.
class DegenerateOutcome : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// rho_1 (x) |Theta_0><Theta_0| on three N-dimensional systems.
DensityOperator prepare_initial(const DensityOperator &rho1, const GridSpec &g);

/// p_beta = Tr[(|Theta_beta><Theta_beta| (x) I) rho123], indexed by BellIndex::index.
std::vector<double> outcome_probabilities(const DensityOperator &rho123, const GridSpec &g);

/// (<Theta_beta| (x) I) rho123 (|Theta_beta> (x) I); trace p_beta.
Operator project_outcome(const DensityOperator &rho123, BellIndex beta, const GridSpec &g);
/// Same operator via the dense projector and a partial trace.
Operator project_outcome_dense(const DensityOperator &rho123, BellIndex beta,
                               const GridSpec &g);
/// Normalized receiver state for outcome beta; throws DegenerateOutcome.
DensityOperator conditional_state(const DensityOperator &rho123, BellIndex beta,
                                  const GridSpec &g);

struct MeasurementOutcome {
  BellIndex outcome;
  double probability;
  DensityOperator conditional;
};

/// Samples a Bell outcome on systems 1 and 2 from a seeded mt19937_64.
/// Outcomes with p_beta < kTolerance are never drawn.
MeasurementOutcome bell_measure(const DensityOperator &rho123, std::uint64_t seed,
                                const GridSpec &g);

/** Map Z(alpha3, alpha1) on G_N x G_N from the sender's to the receiver's Wigner function. */
class ZKernel {
 public:
  ZKernel(const GridSpec &g, BellIndex beta, std::vector<double> values);

  const GridSpec &grid() const { return grid_; }
  BellIndex beta() const { return beta_; }
  double at(PhasePoint a3, PhasePoint a1) const {
    return values_[grid_.sub_index(a3) * grid_.dim() * grid_.dim() + grid_.sub_index(a1)];
  }
  const std::vector<double> &values() const { return values_; }

 private:
  GridSpec grid_;
  BellIndex beta_;
  std::vector<double> values_;
};

/// Z(alpha3, alpha1) = (2N)^4 sum_{alpha2 in G_N} W_0(alpha3, alpha2) W_beta(alpha1, alpha2),
/// with both Wigner functions evaluated as traces against the Bell projectors.
ZKernel z_kernel(const GridSpec &g, BellIndex beta);

/// Closed form of z_kernel: s * delta_N(alpha3 - alpha1 + 2 beta), where s is the
/// sub-grid sign of the point alpha1 - 2 beta on G_2N.
ZKernel z_kernel_closed_form(const GridSpec &g, BellIndex beta);

/// W'(alpha3) = sum_{alpha1 in G_N} Z(alpha3, alpha1) W(alpha1), indexed by sub_index.
std::vector<double> apply_kernel(const ZKernel &z, const WignerGrid &w);

/// The unnormalized receiver operator of outcome beta built from the Bell-operator
/// expansion: (4N)^3 sum W(alpha1) W_0(alpha2, alpha3) K~(alpha1, alpha2 | beta, beta) A(alpha3).
Operator conditional_by_bell_expansion(const WignerGrid &w1, const KCoefficients &k,
                                       BellIndex beta);

/// T(q_beta, p_beta): moves a Wigner function by +2 beta, undoing the -2 beta
/// displacement left by outcome beta.
Operator recovery_operator(const GridSpec &g, BellIndex beta);
DensityOperator recover(const DensityOperator &rho3, BellIndex beta, const GridSpec &g);

struct TeleportRun {
  DensityOperator input_state;
  BellIndex outcome;
  double outcome_probability;
  DensityOperator conditional_state;
  DensityOperator recovered_state;
  /// Uhlmann fidelity between recovered and input; <psi|rho|psi> for pure input.
  double fidelity;
  double trace_distance;
};

/// Full protocol for one fixed Bell outcome.
TeleportRun teleport_branch(const DensityOperator &rho1, BellIndex beta, const GridSpec &g);
/// Full protocol with the outcome sampled from seed.
TeleportRun teleport(const DensityOperator &rho1, std::uint64_t seed, const GridSpec &g);

}  // namespace dwigner
