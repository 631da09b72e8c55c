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

#include "dwigner/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dwigner {

GridSpec::GridSpec(int n) : n_(n) {
  if (n < 2) {
    throw std::invalid_argument("grid dimension N must be >= 2, got " +
                                std::to_string(n));
  }
}

std::vector<PhasePoint> GridSpec::points(GridRegion region) const {
  const int extent = region == GridRegion::Full ? side() : n_;
  std::vector<PhasePoint> out;
  out.reserve(static_cast<std::size_t>(extent) * static_cast<std::size_t>(extent));
  for (int q = 0; q < extent; ++q)
    for (int p = 0; p < extent; ++p) out.push_back({q, p});
  return out;
}

Complex unit_phase(const GridSpec &g, long k) {
  const long two_n = g.side();
  const long r = mod(k, two_n);
  // Exact values at the quarter turns.
  if (r == 0) return {1.0, 0.0};
  if (r == g.n()) return {-1.0, 0.0};
  if (2 * r == g.n()) return {0.0, 1.0};
  if (2 * r == 3 * g.n()) return {0.0, -1.0};
  return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / g.n());
}

StateVector momentum_state(const GridSpec &g, int k) {
  if (k < 0 || k >= g.n()) throw std::out_of_range("momentum index out of range");
  StateVector v(g.dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(g.n()));
  for (int n = 0; n < g.n(); ++n) v[n] = amp * unit_phase(g, 2L * n * k);
  return v;
}

StateVector position_state(const GridSpec &g, int n) {
  if (n < 0 || n >= g.n()) throw std::out_of_range("position index out of range");
  return StateVector::basis(g.dim(), static_cast<std::size_t>(n));
}

Operator shift_u(const GridSpec &g, long m) {
  Operator u(g.dim());
  for (long n = 0; n < g.n(); ++n) u(static_cast<std::size_t>(mod(n + m, g.n())), n) = 1.0;
  return u;
}

Operator boost_v(const GridSpec &g, long m) {
  Operator v(g.dim());
  for (long n = 0; n < g.n(); ++n) v(n, n) = unit_phase(g, 2 * mod(m * n, g.n()));
  return v;
}

Operator reflection(const GridSpec &g) {
  Operator r(g.dim());
  for (long n = 0; n < g.n(); ++n) r(static_cast<std::size_t>(mod(-n, g.n())), n) = 1.0;
  return r;
}

Operator fourier_transform(const GridSpec &g) {
  Operator f(g.dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(g.n()));
  for (long r = 0; r < g.n(); ++r)
    for (long c = 0; c < g.n(); ++c) f(r, c) = amp * unit_phase(g, 2 * mod(r * c, g.n()));
  return f;
}

Operator translation(const GridSpec &g, long a, long b) {
  Operator t = shift_u(g, a) * boost_v(g, b);
  t *= unit_phase(g, mod(a, g.side()) * mod(b, g.side()));
  return t;
}

Operator phase_point_op(const GridSpec &g, PhasePoint alpha) {
  alpha = g.canonical(alpha);
  Operator a = shift_u(g, alpha.q) * reflection(g) * boost_v(g, -alpha.p);
  a *= unit_phase(g, static_cast<long>(alpha.p) * alpha.q) / (2.0 * g.n());
  return a;
}

Operator fourier_of_a(const GridSpec &g, long a, long b) {
  Operator sum(g.dim());
  for (const auto &alpha : g.points(GridRegion::Full)) {
    // e^{-i (2 pi / 2N)(a p - b q)} = e^{i pi (b q - a p) / N}
    Operator term = phase_point_op(g, alpha);
    term *= unit_phase(g, b * alpha.q - a * alpha.p);
    sum += term;
  }
  return sum;
}

int subgrid_sign(const GridSpec &g, PhasePoint alpha) {
  alpha = g.canonical(alpha);
  const int n = g.n();
  const int sq = alpha.q >= n ? 1 : 0;
  const int sp = alpha.p >= n ? 1 : 0;
  const int q = alpha.q - sq * n;
  const int p = alpha.p - sp * n;
  const int exponent = sp * q + sq * p + sq * sp * n;
  return exponent % 2 == 0 ? 1 : -1;
}

PhasePoint subgrid_representative(const GridSpec &g, PhasePoint alpha) {
  return {static_cast<int>(mod(alpha.q, g.n())), static_cast<int>(mod(alpha.p, g.n()))};
}

Operator MonomialOperator::dense() const {
  Operator a(dim());
  for (std::size_t n = 0; n < dim(); ++n) a(row[n], n) = value[n];
  return a;
}

Complex MonomialOperator::trace_with(const Operator &rho) const {
  // Tr(A rho) = sum_n A[row[n], n] rho[n, row[n]]
  Complex t{0.0, 0.0};
  for (std::size_t n = 0; n < dim(); ++n) t += value[n] * rho(n, row[n]);
  return t;
}

Complex trace_with(const MonomialOperator &a, const MonomialOperator &b,
                   const Operator &rho) {
  const std::size_t nb = b.dim();
  if (rho.dim() != a.dim() * nb) {
    throw DimensionMismatch("composite trace: operator dimension does not match");
  }
  Complex t{0.0, 0.0};
  for (std::size_t n1 = 0; n1 < a.dim(); ++n1) {
    const std::size_t col = n1 * nb;
    const std::size_t row = a.row[n1] * nb;
    Complex partial{0.0, 0.0};
    for (std::size_t n2 = 0; n2 < nb; ++n2)
      partial += b.value[n2] * rho(col + n2, row + b.row[n2]);
    t += a.value[n1] * partial;
  }
  return t;
}

MonomialOperator phase_point_monomial(const GridSpec &g, PhasePoint alpha) {
  alpha = g.canonical(alpha);
  const long n = g.n();
  MonomialOperator m;
  m.row.resize(g.dim());
  m.value.resize(g.dim());
  // <q - n| A(q, p) |n> = e^{i pi p (q - 2n) / N} / 2N
  for (long col = 0; col < n; ++col) {
    m.row[col] = static_cast<std::size_t>(mod(alpha.q - col, n));
    m.value[col] = unit_phase(g, static_cast<long>(alpha.p) * (alpha.q - 2 * col)) /
                   (2.0 * static_cast<double>(n));
  }
  return m;
}

PointOperatorTable::PointOperatorTable(const GridSpec &g) : grid_(g) {
  monomials_.reserve(static_cast<std::size_t>(g.side()) * static_cast<std::size_t>(g.side()));
  for (const auto &alpha : g.points(GridRegion::Full))
    monomials_.push_back(phase_point_monomial(g, alpha));
}

}  // namespace dwigner
