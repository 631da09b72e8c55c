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

#include "dwigner/wigner.hpp"

#include <cmath>
#include <string>

namespace dwigner {

namespace {

double checked_real(Complex w) {
  if (std::abs(w.imag()) >= kTolerance) {
    throw NumericalError("Wigner value has imaginary part " + std::to_string(w.imag()));
  }
  return w.real();
}

std::size_t grid_points(const GridSpec &g) {
  return static_cast<std::size_t>(g.side()) * static_cast<std::size_t>(g.side());
}

void require_same_grid(const GridSpec &a, const GridSpec &b) {
  if (!(a == b)) {
    throw GridMismatch("Wigner grids have different N: " + std::to_string(a.n()) +
                       " vs " + std::to_string(b.n()));
  }
}

}  // namespace

WignerGrid::WignerGrid(const GridSpec &g) : grid_(g), values_(grid_points(g), 0.0) {}

WignerGrid::WignerGrid(const GridSpec &g, std::vector<double> values)
    : grid_(g), values_(std::move(values)) {
  if (values_.size() != grid_points(g)) {
    throw DimensionMismatch("Wigner grid needs (2N)^2 values");
  }
}

CompositeWignerGrid::CompositeWignerGrid(const GridSpec &g) : grid_(g) {
  if (g.n() > kMaxCompositeGridN) {
    throw std::invalid_argument("composite grids are materialized only for N <= " +
                                std::to_string(kMaxCompositeGridN) +
                                "; use point evaluation");
  }
  values_.assign(grid_points(g) * grid_points(g), 0.0);
}

std::size_t CompositeWignerGrid::index(PhasePoint a1, PhasePoint a2) const {
  return grid_.index(grid_.canonical(a1)) * grid_points(grid_) +
         grid_.index(grid_.canonical(a2));
}

GridSpec grid_for_single(std::size_t dim) { return GridSpec(static_cast<int>(dim)); }

GridSpec grid_for_composite(std::size_t dim) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
  if (n * n != dim) {
    throw DimensionMismatch("bipartite state dimension " + std::to_string(dim) +
                            " is not a perfect square");
  }
  return GridSpec(static_cast<int>(n));
}

WignerEvaluator::WignerEvaluator(const GridSpec &g) : table_(g) {}

double WignerEvaluator::single(const Operator &rho, PhasePoint a) const {
  if (rho.dim() != grid().dim()) throw DimensionMismatch("state does not match grid N");
  return checked_real(table_.monomial(a).trace_with(rho));
}

double WignerEvaluator::composite(const Operator &rho12, PhasePoint a1, PhasePoint a2) const {
  if (rho12.dim() != grid().dim() * grid().dim()) {
    throw DimensionMismatch("bipartite state does not match grid N^2");
  }
  return checked_real(trace_with(table_.monomial(a1), table_.monomial(a2), rho12));
}

double wigner_point(const DensityOperator &rho, PhasePoint alpha) {
  const GridSpec g = grid_for_single(rho.dim());
  return checked_real(phase_point_monomial(g, alpha).trace_with(rho.op()));
}

WignerGrid wigner_grid(const DensityOperator &rho) {
  const WignerEvaluator eval(grid_for_single(rho.dim()));
  WignerGrid w(eval.grid());
  for (const auto &a : eval.grid().points(GridRegion::Full)) w(a) = eval.single(rho.op(), a);
  return w;
}

Operator reconstruct(const WignerGrid &w, GridRegion region) {
  const GridSpec &g = w.grid();
  const PointOperatorTable table(g);
  const double weight = region == GridRegion::Sub ? 4.0 * g.n() : static_cast<double>(g.n());
  Operator rho(g.dim());
  for (const auto &a : g.points(region)) {
    const auto &m = table.monomial(a);
    const double c = weight * w(a);
    for (std::size_t col = 0; col < m.dim(); ++col) rho(m.row[col], col) += c * m.value[col];
  }
  return rho;
}

DensityOperator reconstruct_state(const WignerGrid &w) {
  return DensityOperator(reconstruct(w, GridRegion::Sub));
}

double overlap(const WignerGrid &wa, const WignerGrid &wb) {
  require_same_grid(wa.grid(), wb.grid());
  double s = 0.0;
  for (std::size_t i = 0; i < wa.values().size(); ++i) s += wa.values()[i] * wb.values()[i];
  return wa.grid().n() * s;
}

double momentum_marginal(const WignerGrid &w, int p) {
  double s = 0.0;
  for (int q = 0; q < w.grid().side(); ++q) s += w.at(q, p);
  return s;
}

double position_marginal(const WignerGrid &w, int q) {
  double s = 0.0;
  for (int p = 0; p < w.grid().side(); ++p) s += w.at(q, p);
  return s;
}

double composite_wigner(const DensityOperator &rho12, PhasePoint a1, PhasePoint a2) {
  const GridSpec g = grid_for_composite(rho12.dim());
  return checked_real(
      trace_with(phase_point_monomial(g, a1), phase_point_monomial(g, a2), rho12.op()));
}

CompositeWignerGrid composite_wigner_grid(const DensityOperator &rho12) {
  const WignerEvaluator eval(grid_for_composite(rho12.dim()));
  CompositeWignerGrid w(eval.grid());
  const auto pts = eval.grid().points(GridRegion::Full);
  for (const auto &a1 : pts)
    for (const auto &a2 : pts) w(a1, a2) = eval.composite(rho12.op(), a1, a2);
  return w;
}

WignerGrid reduced_wigner(const CompositeWignerGrid &w12, Subsystem keep) {
  const GridSpec &g = w12.grid();
  const auto pts = g.points(GridRegion::Full);
  WignerGrid out(g);
  for (const auto &kept : pts) {
    double s = 0.0;
    for (const auto &traced : pts)
      s += keep == Subsystem::First ? w12(kept, traced) : w12(traced, kept);
    out(kept) = s;
  }
  return out;
}

double half_sum(const CompositeWignerGrid &wa, const CompositeWignerGrid &wb,
                PhasePoint a1, PhasePoint a1_prime) {
  require_same_grid(wa.grid(), wb.grid());
  double s = 0.0;
  for (const auto &a2 : wa.grid().points(GridRegion::Sub)) s += wa(a1, a2) * wb(a1_prime, a2);
  return s;
}

}  // namespace dwigner
