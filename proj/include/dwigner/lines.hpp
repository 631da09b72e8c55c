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

#include <utility>
#include <vector>

#include "dwigner/linalg.hpp"
#include "dwigner/phase_space.hpp"
#include "dwigner/wigner.hpp"

namespace dwigner {

/// Points (q, p) of G_2N with a*p - b*q = c (mod 2N).
class Line {
 public:
  /// Throws std::invalid_argument when a = b = 0.
  Line(int a, int b, int c);

  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  bool contains(const GridSpec &g, PhasePoint x) const;

 private:
  int a_, b_, c_;
};

/// One line per subsystem.
struct SeparableSlice {
  Line first;
  Line second;
};

/// Points with a1*p1 - b1*q1 + a2*p2 - b2*q2 = c12 (mod 2N).
class Manifold {
 public:
  /// Throws std::invalid_argument when all four slopes vanish.
  Manifold(int a1, int b1, int a2, int b2, int c12);

  int a1() const { return a1_; }
  int b1() const { return b1_; }
  int a2() const { return a2_; }
  int b2() const { return b2_; }
  int c12() const { return c12_; }
  bool contains(const GridSpec &g, PhasePoint x1, PhasePoint x2) const;

 private:
  int a1_, b1_, a2_, b2_, c12_;
};

using PointPair = std::pair<PhasePoint, PhasePoint>;

std::vector<PhasePoint> line_points(const GridSpec &g, const Line &l);
/// Sorted lexicographically.
std::vector<PointPair> manifold_points(const GridSpec &g, const Manifold &m);
std::vector<PointPair> slice_points(const GridSpec &g, const SeparableSlice &s);
/// Both inputs sorted; result sorted.
std::vector<PointPair> intersect(const std::vector<PointPair> &x,
                                 const std::vector<PointPair> &y);

/// A_L = sum over the line of A(alpha).
Operator line_projector(const GridSpec &g, const Line &l);
Operator slice_projector(const GridSpec &g, const SeparableSlice &s);
/// A_L12 = sum over the manifold of A(alpha1) (x) A(alpha2).
Operator manifold_projector(const GridSpec &g, const Manifold &m);
/// sum over an explicit point set of A(alpha1) (x) A(alpha2).
Operator point_pair_sum(const GridSpec &g, const std::vector<PointPair> &points);

/// Eigenvalue of T(a, b) on the range of A_L: e^{-i pi c / N}.
Complex line_eigenvalue(const GridSpec &g, const Line &l);
/// T(a1, b1) (x) T(a2, b2).
Operator collective_translation(const GridSpec &g, const Manifold &m);
/// Eigenvalue of the collective translation on the range: e^{-i pi c12 / N}.
Complex manifold_eigenvalue(const GridSpec &g, const Manifold &m);

/// p1 + p2 = 2 p_beta.
Manifold total_momentum_manifold(int p_beta);
/// q1 - q2 = 2 q_beta.
Manifold relative_position_manifold(int q_beta);
/// Intersection of the two manifolds above; its A-sum projects on a Bell state.
std::vector<PointPair> bell_manifold_points(const GridSpec &g, int q_beta, int p_beta);

double line_sum(const WignerGrid &w, const Line &l);
double slice_sum(const CompositeWignerGrid &w, const SeparableSlice &s);

}  // namespace dwigner
