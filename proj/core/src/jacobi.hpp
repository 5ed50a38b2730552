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

#include <vector>

#include "indecomp/linalg.hpp"

namespace indecomp::detail {

struct JacobiResult {
  std::vector<double> values;  // unsorted, diagonal order
  ComplexMatrix vectors;       // columns; empty when not requested
  int sweeps = 0;
};

// Cyclic complex Jacobi on a Hermitian matrix. Only the Hermitian part of
// `a` is used. Stops once the off-diagonal Frobenius norm is at most
// 1e-12 * ||a||_F.
JacobiResult jacobi_hermitian(ComplexMatrix a, bool want_vectors);

}  // namespace indecomp::detail
