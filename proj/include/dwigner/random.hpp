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

#include <cstdint>
#include <random>

#include "dwigner/linalg.hpp"

namespace dwigner {

// All randomness flows through std::mt19937_64. Per-trial streams are
// split off a base seed with splitmix64. Deviates are derived from raw
// engine output (not std:: distributions) so that sequences are
// identical across standard library implementations.
using Engine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of the index-th independent stream derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Uniform on [0, 1) with 53 random bits.
double uniform01(Engine &rng);
/// Real and imaginary parts independent N(0, 1), via Box-Muller.
Complex complex_gaussian(Engine &rng);

/// Normalized vector of i.i.d. standard complex Gaussians.
StateVector random_state(std::size_t dim, Engine &rng);
/// G G^dagger / Tr for a dim x rank complex Gaussian G.
DensityOperator random_density(std::size_t dim, std::size_t rank, Engine &rng);
/// Gram-Schmidt orthonormalization of a complex Gaussian matrix.
Operator random_unitary(std::size_t dim, Engine &rng);

}  // namespace dwigner
