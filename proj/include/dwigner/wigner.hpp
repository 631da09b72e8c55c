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

#include <stdexcept>
#include <vector>

#include "dwigner/linalg.hpp"
#include "dwigner/phase_space.hpp"

namespace dwigner {

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a Wigner value picks up an imaginary part above tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest N for which a CompositeWignerGrid is materialized; (2N)^4 values.
inline constexpr int kMaxCompositeGridN = 4;

/** Real Wigner function over the 2N x 2N grid, indexed (q, p). */
class WignerGrid {
 public:
  explicit WignerGrid(const GridSpec &g);
  WignerGrid(const GridSpec &g, std::vector<double> values);

  const GridSpec &grid() const { return grid_; }
  double operator()(PhasePoint a) const { return values_[grid_.index(grid_.canonical(a))]; }
  double &operator()(PhasePoint a) { return values_[grid_.index(grid_.canonical(a))]; }
  double at(int q, int p) const { return (*this)(grid_.point(q, p)); }
  const std::vector<double> &values() const { return values_; }

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

/** Real Wigner function over G_2N x G_2N, indexed (q1, p1, q2, p2). */
class CompositeWignerGrid {
 public:
  /// Throws std::invalid_argument for N > kMaxCompositeGridN.
  explicit CompositeWignerGrid(const GridSpec &g);

  const GridSpec &grid() const { return grid_; }
  std::size_t index(PhasePoint a1, PhasePoint a2) const;
  double operator()(PhasePoint a1, PhasePoint a2) const { return values_[index(a1, a2)]; }
  double &operator()(PhasePoint a1, PhasePoint a2) { return values_[index(a1, a2)]; }
  double at(int q1, int p1, int q2, int p2) const {
    return (*this)(grid_.point(q1, p1), grid_.point(q2, p2));
  }
  const std::vector<double> &values() const { return values_; }

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

/// Grid implied by a single-system state's dimension.
GridSpec grid_for_single(std::size_t dim);
/// Grid implied by a bipartite state's dimension N^2; throws DimensionMismatch.
GridSpec grid_for_composite(std::size_t dim);

/// W(alpha) = Re Tr(A(alpha) rho).
double wigner_point(const DensityOperator &rho, PhasePoint alpha);
WignerGrid wigner_grid(const DensityOperator &rho);

/// rho = 4N sum_{G_N} W A (Sub) or N sum_{G_2N} W A (Full). Unvalidated.
Operator reconstruct(const WignerGrid &w, GridRegion region = GridRegion::Sub);
/// reconstruct() followed by density-operator validation (throws InvalidState).
DensityOperator reconstruct_state(const WignerGrid &w);

/// N sum_{G_2N} W_A W_B = Tr(rho_A rho_B).
double overlap(const WignerGrid &wa, const WignerGrid &wb);

/// sum_q W(q, p): <p/2|rho|p/2> for even p, zero for odd p.
double momentum_marginal(const WignerGrid &w, int p);
/// sum_p W(q, p): <q/2|rho|q/2> for even q, zero for odd q.
double position_marginal(const WignerGrid &w, int q);

/// W(alpha1, alpha2) = Re Tr((A(alpha1) (x) A(alpha2)) rho12).
double composite_wigner(const DensityOperator &rho12, PhasePoint a1, PhasePoint a2);
CompositeWignerGrid composite_wigner_grid(const DensityOperator &rho12);

/// W_1(alpha1) = sum_{alpha2 in G_2N} W(alpha1, alpha2), or the mirror for Second.
WignerGrid reduced_wigner(const CompositeWignerGrid &w12, Subsystem keep);

/// F(alpha1, alpha1') = sum_{alpha2 in G_N} W_A(alpha1, alpha2) W_B(alpha1', alpha2).
double half_sum(const CompositeWignerGrid &wa, const CompositeWignerGrid &wb,
                PhasePoint a1, PhasePoint a1_prime);

/**
 * Evaluates W at single or composite points for one state, reusing a
 * shared table of point operators. Stateless after construction.
 */
class WignerEvaluator {
 public:
  explicit WignerEvaluator(const GridSpec &g);

  const GridSpec &grid() const { return table_.grid(); }
  const PointOperatorTable &table() const { return table_; }

  double single(const Operator &rho, PhasePoint a) const;
  double composite(const Operator &rho12, PhasePoint a1, PhasePoint a2) const;

 private:
  PointOperatorTable table_;
};

}  // namespace dwigner
