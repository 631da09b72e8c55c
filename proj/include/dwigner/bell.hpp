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

#include <vector>

#include "dwigner/linalg.hpp"
#include "dwigner/phase_space.hpp"

namespace dwigner {

/// beta = (q_beta, p_beta) on G_N; labels the generalized Bell basis.
struct BellIndex {
  int q = 0;
  int p = 0;

  /// Throws std::out_of_range unless both coordinates lie in [0, N).
  static BellIndex checked(const GridSpec &g, int q, int p);
  /// Reduces both coordinates mod N.
  static BellIndex wrapped(const GridSpec &g, long q, long p);
  /// Inverse of index(): q * N + p.
  static BellIndex from_index(const GridSpec &g, std::size_t i);

  std::size_t index(const GridSpec &g) const {
    return static_cast<std::size_t>(q) * g.dim() + static_cast<std::size_t>(p);
  }
  friend bool operator==(const BellIndex &, const BellIndex &) = default;
};

/// All N^2 Bell indices in index() order.
std::vector<BellIndex> bell_indices(const GridSpec &g);

/// |Theta_beta> = N^{-1/2} sum_n e^{i 2 pi p_beta n / N} |n> (x) |n - q_beta>.
StateVector bell_state(const GridSpec &g, BellIndex beta);
/// (V^{p_beta} (x) U^{-q_beta}) |Theta_0>.
StateVector bell_state_by_displacement(const GridSpec &g, BellIndex beta);
/// (T(q_beta, p_beta) e^{i pi q_beta p_beta / N} (x) I) |Theta_0>.
StateVector bell_state_by_translation(const GridSpec &g, BellIndex beta);

/** The N^2 Bell states of one grid, built once. */
class BellBasis {
 public:
  explicit BellBasis(const GridSpec &g);

  const GridSpec &grid() const { return grid_; }
  const StateVector &operator[](BellIndex beta) const { return states_[beta.index(grid_)]; }
  std::size_t size() const { return states_.size(); }

 private:
  GridSpec grid_;
  std::vector<StateVector> states_;
};

/// U_+ = U (x) U.
Operator u_plus(const GridSpec &g);
/// V_- = V (x) V^dagger.
Operator v_minus(const GridSpec &g);
/// e^{-i 2 pi p_beta / N}
Complex u_plus_eigenvalue(const GridSpec &g, BellIndex beta);
/// e^{i 2 pi q_beta / N}
Complex v_minus_eigenvalue(const GridSpec &g, BellIndex beta);

/// Closed form W_0(alpha1, alpha2) of |Theta_0>.
double bell_wigner_origin(const GridSpec &g, PhasePoint a1, PhasePoint a2);
/// W_beta(alpha1, alpha2) = W_0(alpha1 - 2 beta, alpha2).
double bell_wigner(const GridSpec &g, BellIndex beta, PhasePoint a1, PhasePoint a2);

/// B(beta1, beta2) = |Theta_beta1><Theta_beta2|.
Operator bell_operator(const GridSpec &g, BellIndex b1, BellIndex b2);

/**
 * Basis-change coefficients K(beta1, beta2 | alpha1, alpha2) between the
 * Bell operators and the point operators A(alpha1) (x) A(alpha2).
 * Only alpha1, alpha2 on G_N are stored; other points pick up the
 * sub-grid signs of the point operators.
 */
class KCoefficients {
 public:
  KCoefficients(const GridSpec &g, std::vector<Complex> table);

  const GridSpec &grid() const { return grid_; }
  Complex at(BellIndex b1, BellIndex b2, PhasePoint a1, PhasePoint a2) const;
  /// K~(alpha1, alpha2 | beta1, beta2) = K(beta2, beta1 | alpha1, alpha2).
  Complex inverse_at(PhasePoint a1, PhasePoint a2, BellIndex b1, BellIndex b2) const {
    return at(b2, b1, a1, a2);
  }

 private:
  std::size_t index(BellIndex b1, BellIndex b2, PhasePoint a1, PhasePoint a2) const;

  GridSpec grid_;
  std::vector<Complex> table_;
};

/// K = Tr(B(beta1, beta2) A(alpha1, alpha2)) for all beta pairs and alpha in G_N.
KCoefficients k_coefficients(const GridSpec &g);

/// (4N)^2 sum_{G_N x G_N} K(beta1, beta2 | alpha) A(alpha1) (x) A(alpha2).
Operator bell_operator_from_k(const KCoefficients &k, BellIndex b1, BellIndex b2);
/// sum_{beta1, beta2} K~(alpha | beta1, beta2) B(beta1, beta2).
Operator point_operator_from_k(const KCoefficients &k, PhasePoint a1, PhasePoint a2);

/// Tr_1[(A(alpha) (x) I) |Theta_0><Theta_0|]; equals A(alpha)^T / N.
Operator transpose_identity_check(const GridSpec &g, PhasePoint alpha);

}  // namespace dwigner
