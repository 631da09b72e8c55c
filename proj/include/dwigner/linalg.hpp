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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwigner {

using Complex = std::complex<double>;

/// Tolerance for equality assertions on computed quantities.
inline constexpr double kTolerance = 1e-10;
/// Tolerance for algebraic identities among exactly representable quantities.
inline constexpr double kStrictTolerance = 1e-12;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Dense complex column vector (a ket). */
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim);
  explicit StateVector(std::vector<Complex> amplitudes);

  /// Computational basis vector |index> in dimension dim.
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amps_.size(); }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  Complex &operator[](std::size_t i) { return amps_[i]; }
  std::span<const Complex> amplitudes() const { return amps_; }

  double norm() const;
  StateVector normalized() const;
  bool is_normalized(double tol = kTolerance) const;

  StateVector &operator+=(const StateVector &other);
  StateVector &operator-=(const StateVector &other);
  StateVector &operator*=(Complex s);

 private:
  std::vector<Complex> amps_;
};

StateVector operator+(StateVector a, const StateVector &b);
StateVector operator-(StateVector a, const StateVector &b);
StateVector operator*(Complex s, StateVector v);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector &a, const StateVector &b);
double max_abs_diff(const StateVector &a, const StateVector &b);

/** Dense square complex matrix stored row-major. */
class Operator {
 public:
  Operator() = default;
  /// Zero operator of the given dimension.
  explicit Operator(std::size_t dim);

  static Operator identity(std::size_t dim);
  static Operator diagonal(std::span<const Complex> entries);
  /// |ket><bra|
  static Operator outer(const StateVector &ket, const StateVector &bra);
  static Operator projector(const StateVector &psi) { return outer(psi, psi); }

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  Complex &operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> data() const { return data_; }

  Operator adjoint() const;
  Operator transpose() const;
  Operator conjugate() const;
  Complex trace() const;
  /// Largest entry modulus.
  double max_abs() const;

  Operator &operator+=(const Operator &other);
  Operator &operator-=(const Operator &other);
  Operator &operator*=(Complex s);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

Operator operator+(Operator a, const Operator &b);
Operator operator-(Operator a, const Operator &b);
Operator operator*(Complex s, Operator a);
Operator operator*(const Operator &a, const Operator &b);
StateVector operator*(const Operator &a, const StateVector &v);

/// Entrywise max |a - b|.
double max_abs_diff(const Operator &a, const Operator &b);
/// Tr(a b) without forming the product.
Complex trace_of_product(const Operator &a, const Operator &b);
Operator commutator(const Operator &a, const Operator &b);
/// a^k for k >= 0.
Operator power(const Operator &a, unsigned k);

bool is_hermitian(const Operator &a, double tol = kTolerance);
bool is_unitary(const Operator &a, double tol = kTolerance);
/// P^2 = P and P^dagger = P.
bool is_projector(const Operator &a, double tol = kTolerance);

/// Kronecker product; composite index (i1, i2) maps to i1 * dim(b) + i2.
Operator tensor(const Operator &a, const Operator &b);
StateVector tensor(const StateVector &a, const StateVector &b);

enum class Subsystem { First, Second };

/// Partial trace of an operator on a d1*d2 space, keeping one factor.
Operator partial_trace(const Operator &op, std::size_t d1, std::size_t d2,
                       Subsystem keep);

/// Eigenvalues of a Hermitian operator in ascending order.
std::vector<double> hermitian_eigenvalues(const Operator &a);

/** Hermitian, unit-trace, positive semidefinite operator. */
class DensityOperator {
 public:
  /// Validates the density-matrix invariants; throws InvalidState.
  explicit DensityOperator(Operator op, double tol = kTolerance);

  static DensityOperator pure(const StateVector &psi);
  static DensityOperator maximally_mixed(std::size_t dim);

  std::size_t dim() const { return op_.dim(); }
  const Operator &op() const { return op_; }
  Complex operator()(std::size_t r, std::size_t c) const { return op_(r, c); }

  double purity() const;

 private:
  struct Unchecked {};
  DensityOperator(Operator op, Unchecked) : op_(std::move(op)) {}
  Operator op_;
};

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b);
DensityOperator partial_trace(const DensityOperator &rho, std::size_t d1,
                              std::size_t d2, Subsystem keep);

/// <psi|rho|psi>.
double fidelity(const DensityOperator &rho, const StateVector &psi);
/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const DensityOperator &a, const DensityOperator &b);
/// (1/2) ||a - b||_1.
double trace_distance(const DensityOperator &a, const DensityOperator &b);
/// <psi|op|psi>.
Complex expectation(const Operator &op, const StateVector &psi);

}  // namespace dwigner
