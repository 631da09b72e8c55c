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

#include "dwigner/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace dwigner {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) + index);
}

double uniform01(Engine &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex complex_gaussian(Engine &rng) {
  // 1 - u keeps the logarithm argument in (0, 1].
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

StateVector random_state(std::size_t dim, Engine &rng) {
  StateVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = complex_gaussian(rng);
  return v.normalized();
}

DensityOperator random_density(std::size_t dim, std::size_t rank, Engine &rng) {
  std::vector<Complex> g(dim * rank);
  for (auto &x : g) x = complex_gaussian(rng);
  Operator rho(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      Complex s{0.0, 0.0};
      for (std::size_t k = 0; k < rank; ++k) s += g[r * rank + k] * std::conj(g[c * rank + k]);
      rho(r, c) = s;
    }
  rho *= 1.0 / rho.trace().real();
  // Exact Hermitian symmetry before validation.
  rho = 0.5 * (rho + rho.adjoint());
  return DensityOperator(std::move(rho));
}

Operator random_unitary(std::size_t dim, Engine &rng) {
  std::vector<StateVector> cols;
  cols.reserve(dim);
  while (cols.size() < dim) {
    StateVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = complex_gaussian(rng);
    // Two passes of modified Gram-Schmidt for orthogonality at 1e-15.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto &c : cols) v -= inner(c, v) * c;
    if (v.norm() < 1e-8) continue;
    cols.push_back(v.normalized());
  }
  Operator u(dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = cols[c][r];
  return u;
}

}  // namespace dwigner
