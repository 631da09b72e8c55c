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

#include "dwigner/lines.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace dwigner {

namespace {

long linear_form(long a, long b, PhasePoint x) {
  return a * x.p - b * x.q;
}

// residue_sums[r] = sum of A(alpha) over alpha with a*p - b*q = r (mod 2N).
std::vector<Operator> residue_sums(const GridSpec &g, const PointOperatorTable &table,
                                   long a, long b) {
  std::vector<Operator> sums(static_cast<std::size_t>(g.side()), Operator(g.dim()));
  for (const auto &x : g.points(GridRegion::Full)) {
    const auto r = static_cast<std::size_t>(mod(linear_form(a, b, x), g.side()));
    const auto &m = table.monomial(x);
    for (std::size_t col = 0; col < m.dim(); ++col) sums[r](m.row[col], col) += m.value[col];
  }
  return sums;
}

}  // namespace

Line::Line(int a, int b, int c) : a_(a), b_(b), c_(c) {
  if (a == 0 && b == 0) throw std::invalid_argument("line needs (a, b) != (0, 0)");
}

bool Line::contains(const GridSpec &g, PhasePoint x) const {
  return mod(linear_form(a_, b_, g.canonical(x)) - c_, g.side()) == 0;
}

Manifold::Manifold(int a1, int b1, int a2, int b2, int c12)
    : a1_(a1), b1_(b1), a2_(a2), b2_(b2), c12_(c12) {
  if (a1 == 0 && b1 == 0 && a2 == 0 && b2 == 0) {
    throw std::invalid_argument("manifold needs a nonzero slope");
  }
}

bool Manifold::contains(const GridSpec &g, PhasePoint x1, PhasePoint x2) const {
  const long s = linear_form(a1_, b1_, g.canonical(x1)) + linear_form(a2_, b2_, g.canonical(x2));
  return mod(s - c12_, g.side()) == 0;
}

std::vector<PhasePoint> line_points(const GridSpec &g, const Line &l) {
  std::vector<PhasePoint> out;
  for (const auto &x : g.points(GridRegion::Full))
    if (l.contains(g, x)) out.push_back(x);
  return out;
}

std::vector<PointPair> manifold_points(const GridSpec &g, const Manifold &m) {
  const auto pts = g.points(GridRegion::Full);
  std::vector<PointPair> out;
  for (const auto &x1 : pts)
    for (const auto &x2 : pts)
      if (m.contains(g, x1, x2)) out.emplace_back(x1, x2);
  return out;
}

std::vector<PointPair> slice_points(const GridSpec &g, const SeparableSlice &s) {
  std::vector<PointPair> out;
  const auto second = line_points(g, s.second);
  for (const auto &x1 : line_points(g, s.first))
    for (const auto &x2 : second) out.emplace_back(x1, x2);
  return out;
}

std::vector<PointPair> intersect(const std::vector<PointPair> &x,
                                 const std::vector<PointPair> &y) {
  std::vector<PointPair> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

Operator line_projector(const GridSpec &g, const Line &l) {
  const PointOperatorTable table(g);
  Operator sum(g.dim());
  for (const auto &x : line_points(g, l)) {
    const auto &m = table.monomial(x);
    for (std::size_t col = 0; col < m.dim(); ++col) sum(m.row[col], col) += m.value[col];
  }
  return sum;
}

Operator slice_projector(const GridSpec &g, const SeparableSlice &s) {
  // sum over L1 x L2 of A (x) A factorizes by bilinearity.
  return tensor(line_projector(g, s.first), line_projector(g, s.second));
}

Operator manifold_projector(const GridSpec &g, const Manifold &m) {
  // Group the double sum by the residue r of a1*p1 - b1*q1; the second
  // factor then runs over a2*p2 - b2*q2 = c12 - r.
  const PointOperatorTable table(g);
  const auto first = residue_sums(g, table, m.a1(), m.b1());
  const auto second = residue_sums(g, table, m.a2(), m.b2());
  Operator sum(g.dim() * g.dim());
  for (long r = 0; r < g.side(); ++r) {
    const auto r2 = static_cast<std::size_t>(mod(m.c12() - r, g.side()));
    sum += tensor(first[static_cast<std::size_t>(r)], second[r2]);
  }
  return sum;
}

Operator point_pair_sum(const GridSpec &g, const std::vector<PointPair> &points) {
  const PointOperatorTable table(g);
  const std::size_t n = g.dim();
  Operator sum(n * n);
  for (const auto &[x1, x2] : points) {
    const auto &m1 = table.monomial(x1);
    const auto &m2 = table.monomial(x2);
    for (std::size_t c1 = 0; c1 < n; ++c1)
      for (std::size_t c2 = 0; c2 < n; ++c2)
        sum(m1.row[c1] * n + m2.row[c2], c1 * n + c2) += m1.value[c1] * m2.value[c2];
  }
  return sum;
}

Complex line_eigenvalue(const GridSpec &g, const Line &l) { return unit_phase(g, -l.c()); }

Operator collective_translation(const GridSpec &g, const Manifold &m) {
  return tensor(translation(g, m.a1(), m.b1()), translation(g, m.a2(), m.b2()));
}

Complex manifold_eigenvalue(const GridSpec &g, const Manifold &m) {
  return unit_phase(g, -m.c12());
}

Manifold total_momentum_manifold(int p_beta) { return Manifold(1, 0, 1, 0, 2 * p_beta); }

Manifold relative_position_manifold(int q_beta) { return Manifold(0, -1, 0, 1, 2 * q_beta); }

std::vector<PointPair> bell_manifold_points(const GridSpec &g, int q_beta, int p_beta) {
  return intersect(manifold_points(g, total_momentum_manifold(p_beta)),
                   manifold_points(g, relative_position_manifold(q_beta)));
}

double line_sum(const WignerGrid &w, const Line &l) {
  double s = 0.0;
  for (const auto &x : line_points(w.grid(), l)) s += w(x);
  return s;
}

double slice_sum(const CompositeWignerGrid &w, const SeparableSlice &s) {
  double total = 0.0;
  for (const auto &[x1, x2] : slice_points(w.grid(), s)) total += w(x1, x2);
  return total;
}

}  // namespace dwigner
