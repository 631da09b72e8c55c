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

#include <cstddef>
#include <vector>

#include "dwigner/linalg.hpp"

namespace dwigner {

/// Non-negative residue of a modulo m (m > 0).
constexpr long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

struct PhasePoint {
  int q = 0;
  int p = 0;
  friend bool operator==(const PhasePoint &, const PhasePoint &) = default;
  friend auto operator<=>(const PhasePoint &, const PhasePoint &) = default;
};

enum class GridRegion {
  Full,  ///< G_2N: q, p in [0, 2N)
  Sub,   ///< G_N: q, p in [0, N)
};

/** Hilbert-space dimension N and the derived 2N x 2N phase-space grid. */
class GridSpec {
 public:
  /// Throws std::invalid_argument if n < 2.
  explicit GridSpec(int n);

  int n() const { return n_; }
  /// Side of the doubled grid, 2N.
  int side() const { return 2 * n_; }
  std::size_t dim() const { return static_cast<std::size_t>(n_); }

  /// Canonical point with both coordinates reduced into [0, 2N).
  PhasePoint point(long q, long p) const {
    return {static_cast<int>(mod(q, side())), static_cast<int>(mod(p, side()))};
  }
  PhasePoint canonical(PhasePoint a) const { return point(a.q, a.p); }
  bool in_subgrid(PhasePoint a) const { return a.q < n_ && a.p < n_; }

  /// Row-major index of a G_2N point (q * 2N + p).
  std::size_t index(PhasePoint a) const {
    return static_cast<std::size_t>(a.q) * static_cast<std::size_t>(side()) +
           static_cast<std::size_t>(a.p);
  }
  /// Row-major index of a G_N point (q * N + p).
  std::size_t sub_index(PhasePoint a) const {
    return static_cast<std::size_t>(a.q) * dim() + static_cast<std::size_t>(a.p);
  }

  /// All points of a region in lexicographic (q, p) order.
  std::vector<PhasePoint> points(GridRegion region) const;

  friend bool operator==(const GridSpec &, const GridSpec &) = default;

 private:
  int n_;
};

/// e^{i pi k / N}; k is reduced mod 2N first so quarter turns are exact.
Complex unit_phase(const GridSpec &g, long k);

/// Periodic delta: true iff z = 0 (mod N).
inline bool delta_n(const GridSpec &g, long z) { return mod(z, g.n()) == 0; }

/// |k> = N^{-1/2} sum_n e^{i 2 pi n k / N} |n>.
StateVector momentum_state(const GridSpec &g, int k);
StateVector position_state(const GridSpec &g, int n);

/// U^m |n> = |n + m mod N>.
Operator shift_u(const GridSpec &g, long m);
/// V^m |n> = e^{i 2 pi m n / N} |n>.
Operator boost_v(const GridSpec &g, long m);
/// R |n> = |-n mod N>.
Operator reflection(const GridSpec &g);
/// Unitary discrete Fourier transform, <n'|U_FT|n> = e^{i 2 pi n n'/N} / sqrt(N).
Operator fourier_transform(const GridSpec &g);
/// T(a, b) = U^a V^b e^{i pi a b / N}.
Operator translation(const GridSpec &g, long a, long b);

/// A(q, p) = (1/2N) U^q R V^{-p} e^{i pi p q / N}.
Operator phase_point_op(const GridSpec &g, PhasePoint alpha);

/// sum over G_2N of A(q, p) e^{-i (2 pi / 2N)(a p - b q)}; equals T(a, b).
Operator fourier_of_a(const GridSpec &g, long a, long b);

/// Sign s with A(alpha) = s * A(alpha mod N), alpha on G_2N.
int subgrid_sign(const GridSpec &g, PhasePoint alpha);
/// Representative of alpha on G_N (coordinates mod N).
PhasePoint subgrid_representative(const GridSpec &g, PhasePoint alpha);

/**
 * A(alpha) in monomial form. Each A(alpha) maps |n> to a multiple of
 * |q - n mod N>, so it is stored as one (row, value) pair per column.
 */
struct MonomialOperator {
  std::vector<std::size_t> row;  // row[n]: image index of column n
  std::vector<Complex> value;    // value[n]: <row[n]|A|n>

  std::size_t dim() const { return row.size(); }
  Operator dense() const;
  /// Tr(A rho).
  Complex trace_with(const Operator &rho) const;
};

/// A(alpha) built directly in monomial form from its matrix elements.
MonomialOperator phase_point_monomial(const GridSpec &g, PhasePoint alpha);

/// Tr((a (x) b) rho) for rho on the product space.
Complex trace_with(const MonomialOperator &a, const MonomialOperator &b,
                   const Operator &rho);

/** Precomputed A(alpha) for every alpha on G_2N. Immutable after construction. */
class PointOperatorTable {
 public:
  explicit PointOperatorTable(const GridSpec &g);

  const GridSpec &grid() const { return grid_; }
  const MonomialOperator &monomial(PhasePoint alpha) const {
    return monomials_[grid_.index(grid_.canonical(alpha))];
  }
  Operator dense(PhasePoint alpha) const { return monomial(alpha).dense(); }

 private:
  GridSpec grid_;
  std::vector<MonomialOperator> monomials_;
};

}  // namespace dwigner
