// Copyright 2026 The indecomp Authors
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
#include <vector>

#include "indecomp/linalg.hpp"

namespace indecomp {

using Rng = std::mt19937_64;

/// Independent per-task seed from a base seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Haar-random pure state: normalized complex Gaussian vector.
KetVector haar_random_ket(int dim, Rng& rng);
/// i.i.d. standard complex Gaussian entries.
Operator random_ginibre(int dim, Rng& rng);
Operator random_hermitian(int dim, Rng& rng);
/// G G^dagger / Tr with G a dim x rank complex Gaussian matrix.
Operator random_psd(int dim, int rank, Rng& rng);
/// Full-rank random density matrix.
Operator random_state(int dim, Rng& rng);
/// Real orthogonal matrix from Gram-Schmidt on a Gaussian matrix.
Operator random_orthogonal(int dim, Rng& rng);
/// Uniform phases in [0, 2 pi).
std::vector<double> random_phases(int count, Rng& rng);

}  // namespace indecomp
