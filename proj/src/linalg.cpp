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

#include "dwigner/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace dwigner {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " +
                            std::to_string(a) + " vs " + std::to_string(b));
  }
}

Eigen::MatrixXcd to_eigen(const Operator &a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = a(r, c);
  return m;
}

// Factor X with m = X X^dagger, dropping eigenvalues at rounding-noise level
// so that they do not turn into O(1e-8) square roots.
Eigen::MatrixXcd psd_factor(const Eigen::MatrixXcd &m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const Eigen::VectorXd &ev = es.eigenvalues();
  const double cutoff = 1e-14 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > cutoff) keep.push_back(i);
  Eigen::MatrixXcd x(m.rows(), static_cast<Eigen::Index>(keep.size()));
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    x.col(j) = es.eigenvectors().col(keep[j]) * std::sqrt(ev(keep[j]));
  return x;
}

}  // namespace

// ---- StateVector ----

StateVector::StateVector(std::size_t dim) : amps_(dim, Complex{0.0, 0.0}) {}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("basis index out of range");
  StateVector v(dim);
  v.amps_[index] = 1.0;
  return v;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto &a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidState("cannot normalize the zero vector");
  StateVector v = *this;
  v *= 1.0 / n;
  return v;
}

bool StateVector::is_normalized(double tol) const {
  double s = 0.0;
  for (const auto &a : amps_) s += std::norm(a);
  return std::abs(s - 1.0) < tol;
}

StateVector &StateVector::operator+=(const StateVector &other) {
  require_same_dim(dim(), other.dim(), "vector sum");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
  return *this;
}

StateVector &StateVector::operator-=(const StateVector &other) {
  require_same_dim(dim(), other.dim(), "vector difference");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] -= other.amps_[i];
  return *this;
}

StateVector &StateVector::operator*=(Complex s) {
  for (auto &a : amps_) a *= s;
  return *this;
}

StateVector operator+(StateVector a, const StateVector &b) { return a += b; }
StateVector operator-(StateVector a, const StateVector &b) { return a -= b; }
StateVector operator*(Complex s, StateVector v) { return v *= s; }

Complex inner(const StateVector &a, const StateVector &b) {
  require_same_dim(a.dim(), b.dim(), "inner product");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
  require_same_dim(a.dim(), b.dim(), "vector comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// ---- Operator ----

Operator::Operator(std::size_t dim)
    : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

Operator Operator::identity(std::size_t dim) {
  Operator a(dim);
  for (std::size_t i = 0; i < dim; ++i) a(i, i) = 1.0;
  return a;
}

Operator Operator::diagonal(std::span<const Complex> entries) {
  Operator a(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) a(i, i) = entries[i];
  return a;
}

Operator Operator::outer(const StateVector &ket, const StateVector &bra) {
  require_same_dim(ket.dim(), bra.dim(), "outer product");
  Operator a(ket.dim());
  for (std::size_t r = 0; r < ket.dim(); ++r)
    for (std::size_t c = 0; c < bra.dim(); ++c) a(r, c) = ket[r] * std::conj(bra[c]);
  return a;
}

Operator Operator::adjoint() const {
  Operator a(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) a(c, r) = std::conj((*this)(r, c));
  return a;
}

Operator Operator::transpose() const {
  Operator a(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) a(c, r) = (*this)(r, c);
  return a;
}

Operator Operator::conjugate() const {
  Operator a = *this;
  for (auto &x : a.data_) x = std::conj(x);
  return a;
}

Complex Operator::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Operator::max_abs() const {
  double m = 0.0;
  for (const auto &x : data_) m = std::max(m, std::abs(x));
  return m;
}

Operator &Operator::operator+=(const Operator &other) {
  require_same_dim(dim_, other.dim_, "operator sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Operator &Operator::operator-=(const Operator &other) {
  require_same_dim(dim_, other.dim_, "operator difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Operator &Operator::operator*=(Complex s) {
  for (auto &x : data_) x *= s;
  return *this;
}

Operator operator+(Operator a, const Operator &b) { return a += b; }
Operator operator-(Operator a, const Operator &b) { return a -= b; }
Operator operator*(Complex s, Operator a) { return a *= s; }

Operator operator*(const Operator &a, const Operator &b) {
  require_same_dim(a.dim(), b.dim(), "operator product");
  const std::size_t n = a.dim();
  Operator c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

StateVector operator*(const Operator &a, const StateVector &v) {
  require_same_dim(a.dim(), v.dim(), "operator-vector product");
  StateVector out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Complex s{0.0, 0.0};
    for (std::size_t c = 0; c < a.dim(); ++c) s += a(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

double max_abs_diff(const Operator &a, const Operator &b) {
  require_same_dim(a.dim(), b.dim(), "operator comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

Complex trace_of_product(const Operator &a, const Operator &b) {
  require_same_dim(a.dim(), b.dim(), "trace of product");
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) t += a(i, k) * b(k, i);
  return t;
}

Operator commutator(const Operator &a, const Operator &b) { return a * b - b * a; }

Operator power(const Operator &a, unsigned k) {
  Operator result = Operator::identity(a.dim());
  Operator base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool is_hermitian(const Operator &a, double tol) {
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = r; c < a.dim(); ++c)
      if (std::abs(a(r, c) - std::conj(a(c, r))) >= tol) return false;
  return true;
}

bool is_unitary(const Operator &a, double tol) {
  return max_abs_diff(a * a.adjoint(), Operator::identity(a.dim())) < tol;
}

bool is_projector(const Operator &a, double tol) {
  return is_hermitian(a, tol) && max_abs_diff(a * a, a) < tol;
}

Operator tensor(const Operator &a, const Operator &b) {
  const std::size_t na = a.dim(), nb = b.dim();
  Operator c(na * nb);
  for (std::size_t i1 = 0; i1 < na; ++i1) {
    for (std::size_t j1 = 0; j1 < na; ++j1) {
      const Complex aij = a(i1, j1);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t i2 = 0; i2 < nb; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          c(i1 * nb + i2, j1 * nb + j2) = aij * b(i2, j2);
    }
  }
  return c;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
  StateVector c(a.dim() * b.dim());
  for (std::size_t i1 = 0; i1 < a.dim(); ++i1)
    for (std::size_t i2 = 0; i2 < b.dim(); ++i2) c[i1 * b.dim() + i2] = a[i1] * b[i2];
  return c;
}

Operator partial_trace(const Operator &op, std::size_t d1, std::size_t d2,
                       Subsystem keep) {
  require_same_dim(op.dim(), d1 * d2, "partial trace");
  if (keep == Subsystem::First) {
    Operator out(d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) {
        Complex s{0.0, 0.0};
        for (std::size_t k = 0; k < d2; ++k) s += op(i * d2 + k, j * d2 + k);
        out(i, j) = s;
      }
    return out;
  }
  Operator out(d2);
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d2; ++j) {
      Complex s{0.0, 0.0};
      for (std::size_t k = 0; k < d1; ++k) s += op(k * d2 + i, k * d2 + j);
      out(i, j) = s;
    }
  return out;
}

std::vector<double> hermitian_eigenvalues(const Operator &a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a),
                                                     Eigen::EigenvaluesOnly);
  const auto &ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// ---- DensityOperator ----

DensityOperator::DensityOperator(Operator op, double tol) : op_(std::move(op)) {
  if (op_.dim() == 0) throw InvalidState("density operator of dimension 0");
  for (const auto &x : op_.data())
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw InvalidState("density operator has non-finite entries");
  if (!is_hermitian(op_, tol)) throw InvalidState("density operator is not Hermitian");
  if (std::abs(op_.trace() - Complex{1.0, 0.0}) >= tol)
    throw InvalidState("density operator trace is not 1");
  const auto ev = hermitian_eigenvalues(op_);
  if (!ev.empty() && ev.front() < -tol)
    throw InvalidState("density operator has a negative eigenvalue");
}

DensityOperator DensityOperator::pure(const StateVector &psi) {
  if (!psi.is_normalized()) throw InvalidState("state vector is not normalized");
  return DensityOperator(Operator::projector(psi), Unchecked{});
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw InvalidState("density operator of dimension 0");
  Operator a = Operator::identity(dim);
  a *= 1.0 / static_cast<double>(dim);
  return DensityOperator(std::move(a), Unchecked{});
}

double DensityOperator::purity() const { return trace_of_product(op_, op_).real(); }

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b) {
  return DensityOperator(tensor(a.op(), b.op()));
}

DensityOperator partial_trace(const DensityOperator &rho, std::size_t d1,
                              std::size_t d2, Subsystem keep) {
  return DensityOperator(partial_trace(rho.op(), d1, d2, keep));
}

double fidelity(const DensityOperator &rho, const StateVector &psi) {
  require_same_dim(rho.dim(), psi.dim(), "fidelity");
  return expectation(rho.op(), psi).real();
}

double fidelity(const DensityOperator &a, const DensityOperator &b) {
  require_same_dim(a.dim(), b.dim(), "fidelity");
  // sqrt F = || sqrt(a) sqrt(b) ||_1 = || X^dagger Y ||_1 for a = X X^dagger, b = Y Y^dagger.
  const Eigen::MatrixXcd x = psd_factor(to_eigen(a.op()));
  const Eigen::MatrixXcd y = psd_factor(to_eigen(b.op()));
  const Eigen::MatrixXcd overlap = x.adjoint() * y;
  const double t = Eigen::JacobiSVD<Eigen::MatrixXcd>(overlap).singularValues().sum();
  return t * t;
}

double trace_distance(const DensityOperator &a, const DensityOperator &b) {
  require_same_dim(a.dim(), b.dim(), "trace distance");
  double s = 0.0;
  for (double ev : hermitian_eigenvalues(a.op() - b.op())) s += std::abs(ev);
  return 0.5 * s;
}

Complex expectation(const Operator &op, const StateVector &psi) {
  return inner(psi, op * psi);
}

}  // namespace dwigner
