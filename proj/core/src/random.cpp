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

#include "indecomp/random.hpp"

#include <numbers>

namespace indecomp {

namespace {

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

KetVector haar_random_ket(int dim, Rng& rng) {
  KetVector k(dim);
  for (int i = 0; i < dim; ++i) k(i) = complex_gaussian(rng);
  return k.normalized();
}

Operator random_ginibre(int dim, Rng& rng) {
  Operator g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = complex_gaussian(rng);
  return g;
}

Operator random_hermitian(int dim, Rng& rng) {
  return random_ginibre(dim, rng).hermitian_part();
}

Operator random_psd(int dim, int rank, Rng& rng) {
  if (rank < 1 || rank > dim) throw DimensionError("random_psd: rank must be in [1, dim]");
  ComplexMatrix g(dim, rank);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < rank; ++c) g(r, c) = complex_gaussian(rng);
  Operator q(ComplexMatrix(g * g.adjoint()));
  q = q.hermitian_part();
  return q / q.trace().real();
}

Operator random_state(int dim, Rng& rng) { return random_psd(dim, dim, rng); }

Operator random_orthogonal(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<KetVector> columns;
  columns.reserve(static_cast<std::size_t>(dim));
  for (int c = 0; c < dim; ++c) {
    KetVector v(dim);
    for (int r = 0; r < dim; ++r) v(r) = normal(rng);
    columns.push_back(std::move(v));
  }
  const auto q = orthonormalize(columns);
  Operator out(dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) out(r, c) = q[static_cast<std::size_t>(c)](r).real();
  return out;
}

std::vector<double> random_phases(int count, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (auto& p : out) p = uniform(rng);
  return out;
}

}  // namespace indecomp
