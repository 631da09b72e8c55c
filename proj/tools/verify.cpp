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

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "dwigner/bell.hpp"
#include "dwigner/lines.hpp"
#include "dwigner/random.hpp"
#include "dwigner/teleport.hpp"
#include "dwigner/tomography.hpp"
#include "dwigner/wigner.hpp"

namespace dwigner::cli {

namespace {

constexpr double kSuiteTolerance = 1e-10;
constexpr int kStatesPerSuite = 4;
// K tables hold N^8 entries.
constexpr int kMaxKCheckN = 4;

// Running maximum of deviations.
struct MaxError {
  double value = 0.0;
  void add(double e) { value = std::max(value, std::isnan(e) ? INFINITY : e); }
};

std::vector<DensityOperator> sample_states(std::size_t dim, std::uint64_t seed) {
  Engine rng(seed);
  std::vector<DensityOperator> out;
  for (int i = 0; i < kStatesPerSuite; ++i) {
    const std::size_t rank = 1 + static_cast<std::size_t>(i) % dim;
    out.push_back(random_density(dim, rank, rng));
  }
  return out;
}

double p1_realness(const GridSpec &g, const std::vector<DensityOperator> &states) {
  const PointOperatorTable table(g);
  MaxError e;
  for (const auto &rho : states)
    for (const auto &a : g.points(GridRegion::Full))
      e.add(std::abs(table.monomial(a).trace_with(rho.op()).imag()));
  return e.value;
}

double p2_overlap(const GridSpec &g, const std::vector<DensityOperator> &states,
                  const std::vector<DensityOperator> &pairs) {
  MaxError e;
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    const double expect = trace_of_product(states[i].op(), states[i + 1].op()).real();
    e.add(std::abs(overlap(wigner_grid(states[i]), wigner_grid(states[i + 1])) - expect));
  }
  const WignerEvaluator eval(g);
  const auto pts = g.points(GridRegion::Full);
  const double expect = trace_of_product(pairs[0].op(), pairs[1].op()).real();
  double s = 0.0;
  for (const auto &a1 : pts)
    for (const auto &a2 : pts)
      s += eval.composite(pairs[0].op(), a1, a2) * eval.composite(pairs[1].op(), a1, a2);
  e.add(std::abs(g.n() * g.n() * s - expect));
  return e.value;
}

double p3_marginals(const GridSpec &g, const std::vector<DensityOperator> &states) {
  const Operator f = fourier_transform(g);
  MaxError e;
  for (const auto &rho : states) {
    const WignerGrid w = wigner_grid(rho);
    const Operator mom = f.adjoint() * rho.op() * f;
    for (int c = 0; c < g.side(); ++c) {
      const bool even = c % 2 == 0;
      const auto k = static_cast<std::size_t>(c / 2);
      e.add(std::abs(momentum_marginal(w, c) - (even ? mom(k, k).real() : 0.0)));
      e.add(std::abs(position_marginal(w, c) - (even ? rho(k, k).real() : 0.0)));
    }
  }
  return e.value;
}

double reconstruction(const std::vector<DensityOperator> &states) {
  MaxError e;
  for (const auto &rho : states) {
    const WignerGrid w = wigner_grid(rho);
    const Operator sub = reconstruct(w, GridRegion::Sub);
    const Operator full = reconstruct(w, GridRegion::Full);
    e.add(max_abs_diff(sub, rho.op()));
    e.add(max_abs_diff(full, rho.op()));
    e.add(max_abs_diff(sub, full));
  }
  return e.value;
}

double bell_suite(const GridSpec &g, std::uint64_t seed) {
  MaxError e;
  const BellBasis basis(g);
  const Operator up = u_plus(g), vm = v_minus(g);
  e.add(commutator(up, vm).max_abs());
  for (const auto &b : bell_indices(g)) {
    const StateVector &v = basis[b];
    for (const auto &c : bell_indices(g))
      e.add(std::abs(inner(v, basis[c]) - Complex(b == c ? 1.0 : 0.0)));
    e.add(max_abs_diff(up * v, u_plus_eigenvalue(g, b) * v));
    e.add(max_abs_diff(vm * v, v_minus_eigenvalue(g, b) * v));
    e.add(max_abs_diff(bell_state_by_displacement(g, b), v));
    e.add(max_abs_diff(bell_state_by_translation(g, b), v));
  }

  // Closed-form Bell Wigner functions against traces at random points.
  const WignerEvaluator eval(g);
  Engine rng(seed);
  auto coord = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(g.side())); };
  for (const auto &b : bell_indices(g)) {
    const Operator p = Operator::projector(basis[b]);
    for (int i = 0; i < 16; ++i) {
      const PhasePoint a1{coord(), coord()}, a2{coord(), coord()};
      e.add(std::abs(bell_wigner(g, b, a1, a2) - eval.composite(p, a1, a2)));
    }
  }

  for (const auto &a : g.points(GridRegion::Full)) {
    const Operator expect = (1.0 / g.n()) * phase_point_op(g, a).transpose();
    e.add(max_abs_diff(transpose_identity_check(g, a), expect));
  }

  if (g.n() <= kMaxKCheckN) {
    const KCoefficients k = k_coefficients(g);
    for (const auto &b : bell_indices(g))
      for (const auto &a1 : g.points(GridRegion::Sub))
        for (const auto &a2 : g.points(GridRegion::Sub)) {
          e.add(std::abs(k.at(b, b, a1, a2) - bell_wigner(g, b, a1, a2)));
          const BellIndex c{b.p, b.q};
          e.add(std::abs(k.inverse_at(a1, a2, b, c) - std::conj(k.at(b, c, a1, a2))));
        }
    const BellIndex b1{0, 0}, b2{1, g.n() - 1};
    e.add(max_abs_diff(bell_operator_from_k(k, b1, b2), bell_operator(g, b1, b2)));
  }
  return e.value;
}

double projector_suite(const GridSpec &g) {
  MaxError e;
  const auto id = Operator::identity(g.dim());
  for (int a = 0; a < g.side(); ++a)
    for (int b = 0; b < g.side(); ++b) {
      if (a == 0 && b == 0) continue;
      const Operator t = translation(g, a, b);
      Operator sum(g.dim());
      for (int c = 0; c < g.side(); ++c) {
        const Line l(a, b, c);
        const Operator p = line_projector(g, l);
        e.add(max_abs_diff(p * p, p));
        e.add(max_abs_diff(p.adjoint(), p));
        e.add(max_abs_diff(t * p, line_eigenvalue(g, l) * p));
        sum += p;
      }
      e.add(max_abs_diff(sum, id));
    }
  for (int c = 1; c < g.side(); c += 2) e.add(line_projector(g, Line(1, 0, c)).max_abs());

  for (const auto &b : bell_indices(g)) {
    const Operator expect = Operator::projector(bell_state(g, b));
    e.add(max_abs_diff(point_pair_sum(g, bell_manifold_points(g, b.q, b.p)), expect));
  }
  for (int c = 0; c < g.side(); ++c) {
    const Operator p = manifold_projector(g, Manifold(1, 1, 2, -1, c));
    e.add(max_abs_diff(p * p, p));
    e.add(max_abs_diff(p.adjoint(), p));
  }
  return e.value;
}

double z_kernel_suite(const GridSpec &g) {
  MaxError e;
  for (const auto &b : bell_indices(g)) {
    const ZKernel lit = z_kernel(g, b), closed = z_kernel_closed_form(g, b);
    for (std::size_t i = 0; i < lit.values().size(); ++i)
      e.add(std::abs(lit.values()[i] - closed.values()[i]));
  }
  return e.value;
}

double tomography_suite(const GridSpec &g, std::uint64_t seed) {
  MaxError e;
  const double s = 2.0 * g.n();
  for (const auto &a : g.points(GridRegion::Full)) {
    const Operator m = s * phase_point_op(g, a);
    e.add(max_abs_diff(m * m.adjoint(), Operator::identity(g.dim())));
  }
  Engine rng(seed);
  auto coord = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(g.side())); };
  for (int i = 0; i < 6; ++i) {
    const DensityOperator rho = random_density(g.dim() * g.dim(), 2, rng);
    const PhasePoint a1{coord(), coord()}, a2{coord(), coord()};
    e.add(std::abs(measure_wigner_point(rho, a1, a2, g) - composite_wigner(rho, a1, a2)));
  }
  return e.value;
}

double teleport_suite(const GridSpec &g, std::uint64_t seed) {
  Engine rng(seed);
  const DensityOperator rho1 = DensityOperator::pure(random_state(g.dim(), rng));
  MaxError e;
  for (const auto &b : bell_indices(g)) {
    const TeleportRun run = teleport_branch(rho1, b, g);
    e.add(1.0 - run.fidelity);
    e.add(std::abs(run.outcome_probability - 1.0 / (g.n() * g.n())));
  }
  return e.value;
}

}  // namespace

std::vector<SuiteResult> verify_dimension(int n) {
  const GridSpec g(n);
  const auto base = static_cast<std::uint64_t>(n);
  const auto states = sample_states(g.dim(), derive_seed(base, 0));
  const auto pairs = sample_states(g.dim() * g.dim(), derive_seed(base, 1));

  std::vector<SuiteResult> out;
  auto record = [&](const char *name, double err) {
    out.push_back({n, name, err, err < kSuiteTolerance});
  };
  record("P1-realness", p1_realness(g, states));
  record("P2-overlap", p2_overlap(g, states, pairs));
  record("P3-marginals", p3_marginals(g, states));
  record("reconstruction", reconstruction(states));
  record("bell", bell_suite(g, derive_seed(base, 2)));
  record("projectors", projector_suite(g));
  record("z-kernel", z_kernel_suite(g));
  record("tomography", tomography_suite(g, derive_seed(base, 3)));
  record("teleport", teleport_suite(g, derive_seed(base, 4)));
  return out;
}

bool run_verify(const std::vector<int> &ns, std::ostream &out) {
  char line[128];
  std::snprintf(line, sizeof line, "%-4s %-16s %-12s %s\n", "N", "suite", "max_error", "result");
  out << line;
  int failures = 0;
  for (int n : ns) {
    for (const auto &r : verify_dimension(n)) {
      std::snprintf(line, sizeof line, "%-4d %-16s %-12.3e %s\n", r.n, r.suite.c_str(),
                    r.max_error, r.pass ? "PASS" : "FAIL");
      out << line;
      failures += r.pass ? 0 : 1;
    }
  }
  if (failures == 0) out << "verify: all suites passed\n";
  else out << "verify: " << failures << " suite(s) failed\n";
  return failures == 0;
}

}  // namespace dwigner::cli
