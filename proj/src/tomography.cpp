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

#include "dwigner/tomography.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dwigner/wigner.hpp"

namespace dwigner {

namespace {

Operator hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  Operator out(2);
  out(0, 0) = h;
  out(0, 1) = h;
  out(1, 0) = h;
  out(1, 1) = -h;
  return out;
}

Operator controlled(const Operator &m) {
  const std::size_t d = m.dim();
  Operator out(2 * d);
  for (std::size_t i = 0; i < d; ++i) out(i, i) = 1.0;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(d + r, d + c) = m(r, c);
  return out;
}

}  // namespace

AncillaCircuitResult ancilla_circuit(const DensityOperator &rho, const Operator &m) {
  if (m.dim() != rho.dim()) {
    throw DimensionMismatch("ancilla_circuit: operator dimension " + std::to_string(m.dim()) +
                            " does not match state dimension " + std::to_string(rho.dim()));
  }
  if (!is_unitary(m)) throw std::invalid_argument("ancilla_circuit: operator is not unitary");

  const std::size_t d = rho.dim();
  Operator zero(2);
  zero(0, 0) = 1.0;
  const Operator h = tensor(hadamard(), Operator::identity(d));
  const Operator u = h * controlled(m) * h;
  const Operator out = u * tensor(zero, rho.op()) * u.adjoint();
  const Operator anc = partial_trace(out, 2, d, Subsystem::First);

  // sigma_z = rho00 - rho11, sigma_y = 2 Im rho10.
  const double sz = (anc(0, 0) - anc(1, 1)).real();
  const double raw_sy = 2.0 * anc(1, 0).imag();
  return {sz, -raw_sy, raw_sy, trace_of_product(m, rho.op())};
}

double measure_wigner_point(const DensityOperator &rho12, PhasePoint a1, PhasePoint a2,
                            const GridSpec &g) {
  const std::size_t n = g.dim();
  if (rho12.dim() != n * n) {
    throw DimensionMismatch("measure_wigner_point: expected dimension " +
                            std::to_string(n * n) + ", got " + std::to_string(rho12.dim()));
  }
  const double s = 2.0 * g.n();
  const Operator m = tensor(s * phase_point_op(g, a1), s * phase_point_op(g, a2));
  const AncillaCircuitResult r = ancilla_circuit(rho12, m);
  if (std::abs(r.sy) >= kTolerance) {
    throw NumericalError("measure_wigner_point: sigma_y = " + std::to_string(r.sy));
  }
  return r.sz / (s * s);
}

}  // namespace dwigner
