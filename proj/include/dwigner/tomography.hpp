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

#include "dwigner/linalg.hpp"
#include "dwigner/phase_space.hpp"

namespace dwigner {

struct AncillaCircuitResult {
  /// <sigma_z> of the ancilla; equals Re Tr(M rho).
  double sz;
  /// Reported <sigma_y>, sign-adjusted to equal Im Tr(M rho).
  double sy;
  /// <sigma_y> as read off the ancilla with ctrl-M = |0><0| (x) I + |1><1| (x) M.
  /// Equals -Im Tr(M rho).
  double raw_sy;
  /// Tr(M rho) computed directly.
  Complex direct_value;
};

/// Hadamard on the ancilla, controlled-M, Hadamard; reads the ancilla Pauli
/// expectations from its reduced state. Throws std::invalid_argument if m is
/// not unitary within kTolerance, DimensionMismatch if dimensions differ.
AncillaCircuitResult ancilla_circuit(const DensityOperator &rho, const Operator &m);

/// W(alpha1, alpha2) read from the circuit with M = (2N A(alpha1)) (x) (2N A(alpha2)).
/// Throws NumericalError if the circuit's sigma_y exceeds kTolerance.
double measure_wigner_point(const DensityOperator &rho12, PhasePoint a1, PhasePoint a2,
                            const GridSpec &g);

}  // namespace dwigner
