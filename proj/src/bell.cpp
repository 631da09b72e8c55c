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

#include "dwigner/bell.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dwigner {

BellIndex BellIndex::checked(const GridSpec &g, int q, int p) {
  if (q < 0 || q >= g.n() || p < 0 || p >= g.n()) {
    throw std::out_of_range("Bell index (" + std::to_string(q) + "," + std::to_string(p) +
                            ") outside [0, " + std::to_string(g.n()) + ")");
  }
  return {q, p};
}

BellIndex BellIndex::wrapped(const GridSpec &g, long q, long p) {
  return {static_cast<int>(mod(q, g.n())), static_cast<int>(mod(p, g.n()))};
}

BellIndex BellIndex::from_index(const GridSpec &g, std::size_t i) {
  return checked(g, static_cast<int>(i / g.dim()), static_cast<int>(i % g.dim()));
}

std::vector<BellIndex> bell_indices(const GridSpec &g) {
  std::vector<BellIndex> out;
  for (int q = 0; q < g.n(); ++q)
    for (int p = 0; p < g.n(); ++p) out.push_back({q, p});
  return out;
}

StateVector bell_state(const GridSpec &g, BellIndex beta) {
  beta = BellIndex::checked(g, beta.q, beta.p);
  const long n = g.n();
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  StateVector v(g.dim() * g.dim());
  for (long k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k * n + mod(k - beta.q, n));
    v[idx] = amp * unit_phase(g, 2 * mod(static_cast<long>(beta.p) * k, n));
  }
  return v;
}

StateVector bell_state_by_displacement(const GridSpec &g, BellIndex beta) {
  beta = BellIndex::checked(g, beta.q, beta.p);
  const Operator d = tensor(boost_v(g, beta.p), shift_u(g, -beta.q));
  return d * bell_state(g, {0, 0});
}

StateVector bell_state_by_translation(const GridSpec &g, BellIndex beta) {
  beta = BellIndex::checked(g, beta.q, beta.p);
  Operator t = translation(g, beta.q, beta.p);
  t *= unit_phase(g, static_cast<long>(beta.q) * beta.p);
  return tensor(t, Operator::identity(g.dim())) * bell_state(g, {0, 0});
}

BellBasis::BellBasis(const GridSpec &g) : grid_(g) {
  for (const auto &beta : bell_indices(g)) states_.push_back(bell_state(g, beta));
}

Operator u_plus(const GridSpec &g) { return tensor(shift_u(g, 1), shift_u(g, 1)); }

Operator v_minus(const GridSpec &g) {
  return tensor(boost_v(g, 1), boost_v(g, 1).adjoint());
}

Complex u_plus_eigenvalue(const GridSpec &g, BellIndex beta) {
  return unit_phase(g, -2L * beta.p);
}

Complex v_minus_eigenvalue(const GridSpec &g, BellIndex beta) {
  return unit_phase(g, 2L * beta.q);
}

double bell_wigner_origin(const GridSpec &g, PhasePoint a1, PhasePoint a2) {
  a1 = g.canonical(a1);
  a2 = g.canonical(a2);
  if (!delta_n(g, a1.q - a2.q) || !delta_n(g, a1.p + a2.p)) return 0.0;
  const long s = static_cast<long>(a1.q) * a1.p + static_cast<long>(a2.q) * a2.p;
  if (mod(s, g.n()) != 0) {
    throw std::logic_error("Bell Wigner sign exponent is not an integer");
  }
  const double sign = mod(s / g.n(), 2) == 0 ? 1.0 : -1.0;
  return sign / (4.0 * g.n() * g.n());
}

double bell_wigner(const GridSpec &g, BellIndex beta, PhasePoint a1, PhasePoint a2) {
  beta = BellIndex::checked(g, beta.q, beta.p);
  return bell_wigner_origin(g, g.point(a1.q - 2L * beta.q, a1.p - 2L * beta.p), a2);
}

Operator bell_operator(const GridSpec &g, BellIndex b1, BellIndex b2) {
  return Operator::outer(bell_state(g, b1), bell_state(g, b2));
}

KCoefficients::KCoefficients(const GridSpec &g, std::vector<Complex> table)
    : grid_(g), table_(std::move(table)) {
  const std::size_t n2 = g.dim() * g.dim();
  if (table_.size() != n2 * n2 * n2 * n2) {
    throw DimensionMismatch("K table needs N^8 entries");
  }
}

std::size_t KCoefficients::index(BellIndex b1, BellIndex b2, PhasePoint a1,
                                 PhasePoint a2) const {
  const std::size_t n2 = grid_.dim() * grid_.dim();
  return ((b1.index(grid_) * n2 + b2.index(grid_)) * n2 + grid_.sub_index(a1)) * n2 +
         grid_.sub_index(a2);
}

Complex KCoefficients::at(BellIndex b1, BellIndex b2, PhasePoint a1, PhasePoint a2) const {
  const double sign = subgrid_sign(grid_, a1) * subgrid_sign(grid_, a2);
  return sign * table_[index(b1, b2, subgrid_representative(grid_, a1),
                             subgrid_representative(grid_, a2))];
}

KCoefficients k_coefficients(const GridSpec &g) {
  // K(beta1, beta2 | alpha) = <Theta_beta2| A(alpha1) (x) A(alpha2) |Theta_beta1>.
  // Both factors are monomial, so A|Theta_beta1> has N nonzero entries
  // (r1, r2), each overlapping only the Bell states with q = r1 - r2.
  const long n = g.n();
  const std::size_t n2 = g.dim() * g.dim();
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  const PointOperatorTable table(g);
  const auto sub = g.points(GridRegion::Sub);
  std::vector<Complex> k(n2 * n2 * n2 * n2, Complex{0.0, 0.0});

  for (const auto &a1 : sub) {
    const auto &m1 = table.monomial(a1);
    for (const auto &a2 : sub) {
      const auto &m2 = table.monomial(a2);
      for (const auto &b1 : bell_indices(g)) {
        for (long col = 0; col < n; ++col) {
          const auto c2 = static_cast<std::size_t>(mod(col - b1.q, n));
          const long r1 = static_cast<long>(m1.row[col]);
          const long r2 = static_cast<long>(m2.row[c2]);
          const Complex val = amp * unit_phase(g, 2 * mod(static_cast<long>(b1.p) * col, n)) *
                              m1.value[col] * m2.value[c2];
          const int q2 = static_cast<int>(mod(r1 - r2, n));
          for (int p2 = 0; p2 < n; ++p2) {
            const BellIndex b2{q2, p2};
            const std::size_t idx =
                ((b1.index(g) * n2 + b2.index(g)) * n2 + g.sub_index(a1)) * n2 + g.sub_index(a2);
            k[idx] += val * amp * unit_phase(g, -2 * mod(static_cast<long>(p2) * r1, n));
          }
        }
      }
    }
  }
  return KCoefficients(g, std::move(k));
}

Operator bell_operator_from_k(const KCoefficients &k, BellIndex b1, BellIndex b2) {
  const GridSpec &g = k.grid();
  const PointOperatorTable table(g);
  const std::size_t n = g.dim();
  const double scale = 16.0 * g.n() * g.n();
  Operator out(n * n);
  for (const auto &a1 : g.points(GridRegion::Sub)) {
    const auto &m1 = table.monomial(a1);
    for (const auto &a2 : g.points(GridRegion::Sub)) {
      const auto &m2 = table.monomial(a2);
      const Complex c = scale * k.at(b1, b2, a1, a2);
      for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = 0; c2 < n; ++c2)
          out(m1.row[c1] * n + m2.row[c2], c1 * n + c2) += c * m1.value[c1] * m2.value[c2];
    }
  }
  return out;
}

Operator point_operator_from_k(const KCoefficients &k, PhasePoint a1, PhasePoint a2) {
  const GridSpec &g = k.grid();
  const BellBasis basis(g);
  Operator out(g.dim() * g.dim());
  for (const auto &b1 : bell_indices(g)) {
    for (const auto &b2 : bell_indices(g)) {
      Operator term = Operator::outer(basis[b1], basis[b2]);
      term *= k.inverse_at(a1, a2, b1, b2);
      out += term;
    }
  }
  return out;
}

Operator transpose_identity_check(const GridSpec &g, PhasePoint alpha) {
  const Operator theta0 = Operator::projector(bell_state(g, {0, 0}));
  const Operator lhs = tensor(phase_point_op(g, alpha), Operator::identity(g.dim())) * theta0;
  return partial_trace(lhs, g.dim(), g.dim(), Subsystem::Second);
}

}  // namespace dwigner
