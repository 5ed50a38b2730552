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

// Positive maps in the canonical Kraus-pair form
//
//   Lambda(rho) = sum_{m,n} L_mn V_m rho' V_n^dagger,   rho' = rho or rho^T,
//
// with L Hermitian and {V_m} linearly independent, plus the
// Choi-Jamiolkowski correspondence between such maps and witnesses.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "indecomp/linalg.hpp"
#include "indecomp/tolerance.hpp"

namespace indecomp {

/// Raised when family parameters violate a construction precondition.
class MapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class KrausPairMap {
 public:
  /// Validates: every V_m is dim x dim, L is N x N Hermitian (1e-12
  /// relative), the vectorized V_m are linearly independent.
  KrausPairMap(int dim, std::vector<Operator> kraus_basis, Operator coeff, bool transposed_input);

  int dim_in() const noexcept { return dim_; }
  int dim_out() const noexcept { return dim_; }
  std::size_t size() const noexcept { return kraus_basis_.size(); }
  const std::vector<Operator>& kraus_basis() const noexcept { return kraus_basis_; }
  const Operator& coeff() const noexcept { return coeff_; }
  bool transposed_input() const noexcept { return transposed_input_; }

 private:
  int dim_;
  std::vector<Operator> kraus_basis_;
  Operator coeff_;
  bool transposed_input_;
};

/// Hermitian operator on H_A (x) H_B.
class Witness {
 public:
  Witness(Operator op, BipartiteShape shape, const ToleranceConfig& tol = {});

  const Operator& op() const noexcept { return op_; }
  BipartiteShape shape() const noexcept { return shape_; }

 private:
  Operator op_;
  BipartiteShape shape_;
};

/// Orthonormal Hermitian operator basis; elements[0] = I / sqrt(dim).
struct HermitianBasis {
  int dim = 0;
  std::vector<Operator> elements;
};

using LinearAction = std::function<Operator(const Operator&)>;

Operator apply(const KrausPairMap& m, const Operator& rho);

/// W = sum L_mn |V_m><V_n|, partially transposed on B when the map acts on rho^T.
Witness jamiolkowski_witness(const KrausPairMap& m);

/// (Lambda (x) I)(sum_kl |k><l| (x) |k><l|) evaluated by applying `action`
/// to every matrix unit. Independent of any Kraus-pair structure.
Operator jamiolkowski_from_action(const LinearAction& action, int dim);

/// rho -> Tr_B(W (I (x) rho^T)), the map encoded by a witness.
Operator witness_action(const Witness& w, const Operator& rho);

/// Kraus-pair form of the map encoded by w, read off the spectral
/// decomposition of w (eigenvalues with |lambda| <= 1e-12 max(1,|w|) dropped).
KrausPairMap witness_to_map(const Witness& w, const ToleranceConfig& tol = {});

/// A_kl = |k><l| - |l><k|.
Operator antisymmetric_unit(int d, int k, int l);

/// Pairs (k, l), k < l, in the order used for A_kl-indexed coefficients.
std::vector<std::pair<int, int>> antisymmetric_pairs(int d);

/// R(sigma) = Tr(sigma) 1 - sigma, as sum_{k<l} A_kl sigma^T A_kl^dagger.
KrausPairMap reduction_map(int d);

/// U = O D O^T with D = sum_k e^{i phi_k} (|2k><2k+1| - |2k+1><2k|).
/// Throws MapError for odd d (an antisymmetric matrix of odd dimension has
/// a zero eigenvalue, so it cannot be unitary) or a non-orthogonal O.
Operator antisymmetric_unitary(int d, std::span<const double> phases, const Operator& orthogonal,
                               const ToleranceConfig& tol = {});

/// u_(kl) = U_kl for k < l, ordered as antisymmetric_pairs(d).
KetVector antisymmetric_coordinates(const Operator& u);

/// R_E(sigma) = Tr(sigma) 1 - sigma - U sigma^T U^dagger with Kraus basis
/// {A_kl} and coefficients I - |u><u|.
KrausPairMap extended_reduction_map(int d, const Operator& u, const ToleranceConfig& tol = {});

/// Generalized Gell-Mann basis: identity, symmetric, antisymmetric, then diagonal elements.
HermitianBasis gellmann_basis(int d);

/// Lambda_1 (x) I + I (x) Lambda_2 with Lambda_k(rho) = lambda_1 rho +
/// sum_{mu>=2} lambda_mu F_mu rho F_mu over Gell-Mann bases. The last entry of
/// lambda2 may be negative; every other coefficient must be at least
/// max(0, -lambda2.back()).
KrausPairMap piani_map(int d1, int d2, std::span<const double> lambda1,
                       std::span<const double> lambda2);

/// sum_k (2 P_kk rho P_kk^dagger + 2 P_{k-1,k} rho P_{k-1,k}^dagger) - rho on C^3.
KrausPairMap choi_map();

/// Lambda o T: same basis and coefficients, input transposition flipped.
KrausPairMap compose_transpose(const KrausPairMap& m);

struct PositivitySample {
  int samples = 0;
  double min_eigenvalue = 0.0;
  KetVector worst_state;
};

/// Minimum eigenvalue of Lambda(|psi><psi|) over Haar-random pure states.
PositivitySample sample_positivity(const KrausPairMap& m, int samples, std::uint64_t seed);

/// Minimum of <a (x) b|W|a (x) b> over random product states.
double sample_product_expectation(const Witness& w, int samples, std::uint64_t seed);

}  // namespace indecomp
