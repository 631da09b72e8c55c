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

#include "dwigner/teleport.hpp"

#include <cmath>
#include <string>

#include "dwigner/random.hpp"

namespace dwigner {

namespace {

void require_dim(const Operator &op, std::size_t expected, const char *what) {
  if (op.dim() != expected) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " +
                            std::to_string(expected) + ", got " + std::to_string(op.dim()));
  }
}

std::size_t cube(std::size_t n) { return n * n * n; }

DensityOperator normalize(Operator op, double p) {
  op *= 1.0 / p;
  return DensityOperator(0.5 * (op + op.adjoint()));
}

}  // namespace

DensityOperator prepare_initial(const DensityOperator &rho1, const GridSpec &g) {
  require_dim(rho1.op(), g.dim(), "prepare_initial");
  return tensor(rho1, DensityOperator::pure(bell_state(g, {0, 0})));
}

Operator project_outcome(const DensityOperator &rho123, BellIndex beta, const GridSpec &g) {
  const std::size_t n = g.dim();
  require_dim(rho123.op(), cube(n), "project_outcome");
  const StateVector theta = bell_state(g, beta);
  // |Theta_beta> has one nonzero amplitude per k, at k N + (k - q_beta).
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < n; ++k)
    support.push_back(k * n + static_cast<std::size_t>(mod(static_cast<long>(k) - beta.q, g.n())));

  Operator out(n);
  for (std::size_t a : support) {
    const Complex ca = std::conj(theta[a]);
    for (std::size_t b : support) {
      const Complex w = ca * theta[b];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) += w * rho123(a * n + i, b * n + j);
    }
  }
  return out;
}

Operator project_outcome_dense(const DensityOperator &rho123, BellIndex beta,
                               const GridSpec &g) {
  const std::size_t n = g.dim();
  require_dim(rho123.op(), cube(n), "project_outcome_dense");
  const Operator p =
      tensor(Operator::projector(bell_state(g, beta)), Operator::identity(n));
  return partial_trace(p * rho123.op() * p, n * n, n, Subsystem::Second);
}

std::vector<double> outcome_probabilities(const DensityOperator &rho123, const GridSpec &g) {
  std::vector<double> probs;
  for (const auto &beta : bell_indices(g))
    probs.push_back(project_outcome(rho123, beta, g).trace().real());
  return probs;
}

DensityOperator conditional_state(const DensityOperator &rho123, BellIndex beta,
                                  const GridSpec &g) {
  Operator rho3 = project_outcome(rho123, beta, g);
  const double p = rho3.trace().real();
  if (p < kTolerance) {
    throw DegenerateOutcome("Bell outcome (" + std::to_string(beta.q) + "," +
                            std::to_string(beta.p) + ") has probability " + std::to_string(p));
  }
  return normalize(std::move(rho3), p);
}

MeasurementOutcome bell_measure(const DensityOperator &rho123, std::uint64_t seed,
                                const GridSpec &g) {
  const std::vector<double> probs = outcome_probabilities(rho123, g);
  double total = 0.0;
  for (double p : probs)
    if (p >= kTolerance) total += p;

  Engine rng(seed);
  const double target = uniform01(rng) * total;
  const auto betas = bell_indices(g);
  std::size_t chosen = betas.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (probs[i] < kTolerance) continue;
    chosen = i;
    acc += probs[i];
    if (target < acc) break;
  }
  if (chosen == betas.size()) throw DegenerateOutcome("no Bell outcome has nonzero probability");
  return {betas[chosen], probs[chosen], conditional_state(rho123, betas[chosen], g)};
}

ZKernel::ZKernel(const GridSpec &g, BellIndex beta, std::vector<double> values)
    : grid_(g), beta_(beta), values_(std::move(values)) {
  const std::size_t n2 = g.dim() * g.dim();
  if (values_.size() != n2 * n2) throw DimensionMismatch("Z kernel needs N^4 entries");
}

ZKernel z_kernel(const GridSpec &g, BellIndex beta) {
  beta = BellIndex::checked(g, beta.q, beta.p);
  const WignerEvaluator eval(g);
  const Operator p0 = Operator::projector(bell_state(g, {0, 0}));
  const Operator pb = Operator::projector(bell_state(g, beta));
  const auto sub = g.points(GridRegion::Sub);
  const std::size_t n2 = sub.size();

  std::vector<double> w0(n2 * n2), wb(n2 * n2);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      w0[i * n2 + j] = eval.composite(p0, sub[i], sub[j]);
      wb[i * n2 + j] = eval.composite(pb, sub[i], sub[j]);
    }

  const double scale = std::pow(2.0 * g.n(), 4);
  std::vector<double> z(n2 * n2, 0.0);
  for (std::size_t i3 = 0; i3 < n2; ++i3)
    for (std::size_t i1 = 0; i1 < n2; ++i1) {
      double s = 0.0;
      for (std::size_t i2 = 0; i2 < n2; ++i2) s += w0[i3 * n2 + i2] * wb[i1 * n2 + i2];
      z[i3 * n2 + i1] = scale * s;
    }
  return ZKernel(g, beta, std::move(z));
}

ZKernel z_kernel_closed_form(const GridSpec &g, BellIndex beta) {
  beta = BellIndex::checked(g, beta.q, beta.p);
  const auto sub = g.points(GridRegion::Sub);
  const std::size_t n2 = sub.size();
  std::vector<double> z(n2 * n2, 0.0);
  for (std::size_t i3 = 0; i3 < n2; ++i3)
    for (std::size_t i1 = 0; i1 < n2; ++i1) {
      const PhasePoint a3 = sub[i3], a1 = sub[i1];
      if (!delta_n(g, a3.q - a1.q + 2L * beta.q) || !delta_n(g, a3.p - a1.p + 2L * beta.p))
        continue;
      z[i3 * n2 + i1] = subgrid_sign(g, g.point(a1.q - 2L * beta.q, a1.p - 2L * beta.p));
    }
  return ZKernel(g, beta, std::move(z));
}

std::vector<double> apply_kernel(const ZKernel &z, const WignerGrid &w) {
  const GridSpec &g = z.grid();
  if (!(w.grid() == g)) throw GridMismatch("apply_kernel: grid sizes differ");
  const auto sub = g.points(GridRegion::Sub);
  std::vector<double> out(sub.size(), 0.0);
  for (std::size_t i3 = 0; i3 < sub.size(); ++i3)
    for (const auto &a1 : sub) out[i3] += z.at(sub[i3], a1) * w(a1);
  return out;
}

Operator conditional_by_bell_expansion(const WignerGrid &w1, const KCoefficients &k,
                                       BellIndex beta) {
  const GridSpec &g = k.grid();
  if (!(w1.grid() == g)) throw GridMismatch("conditional_by_bell_expansion: grid sizes differ");
  const PointOperatorTable table(g);
  const auto sub = g.points(GridRegion::Sub);
  const double scale = std::pow(4.0 * g.n(), 3);

  Operator out(g.dim());
  for (const auto &a3 : sub) {
    Complex c{0.0, 0.0};
    for (const auto &a1 : sub) {
      if (w1(a1) == 0.0) continue;
      for (const auto &a2 : sub)
        c += w1(a1) * bell_wigner_origin(g, a2, a3) * k.inverse_at(a1, a2, beta, beta);
    }
    if (c == Complex{0.0, 0.0}) continue;
    Operator term = table.dense(a3);
    term *= scale * c;
    out += term;
  }
  return out;
}

Operator recovery_operator(const GridSpec &g, BellIndex beta) {
  beta = BellIndex::checked(g, beta.q, beta.p);
  // T(a, b) shifts W by (2a, 2b). The adjoint fails for N > 2.
  return translation(g, beta.q, beta.p);
}

DensityOperator recover(const DensityOperator &rho3, BellIndex beta, const GridSpec &g) {
  require_dim(rho3.op(), g.dim(), "recover");
  const Operator t = recovery_operator(g, beta);
  const Operator out = t * rho3.op() * t.adjoint();
  return DensityOperator(0.5 * (out + out.adjoint()));
}

TeleportRun teleport_branch(const DensityOperator &rho1, BellIndex beta, const GridSpec &g) {
  const DensityOperator rho123 = prepare_initial(rho1, g);
  Operator projected = project_outcome(rho123, beta, g);
  const double p = projected.trace().real();
  if (p < kTolerance) throw DegenerateOutcome("Bell outcome has zero probability");
  DensityOperator cond = normalize(std::move(projected), p);
  DensityOperator rec = recover(cond, beta, g);
  const double f = fidelity(rec, rho1);
  const double d = trace_distance(rec, rho1);
  return {rho1, beta, p, std::move(cond), std::move(rec), f, d};
}

TeleportRun teleport(const DensityOperator &rho1, std::uint64_t seed, const GridSpec &g) {
  const DensityOperator rho123 = prepare_initial(rho1, g);
  MeasurementOutcome m = bell_measure(rho123, seed, g);
  DensityOperator rec = recover(m.conditional, m.outcome, g);
  const double f = fidelity(rec, rho1);
  const double d = trace_distance(rec, rho1);
  return {rho1, m.outcome, m.probability, std::move(m.conditional), std::move(rec), f, d};
}

}  // namespace dwigner
