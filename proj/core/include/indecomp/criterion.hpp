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

// Indecomposability certificates for maps in Kraus-pair form.
//
// A map with coefficient matrix L is indecomposable when L has a negative
// eigenvalue and, for every PSD Q, some |psi> orthogonal to the vectorized
// Kraus span W(V) has <psi|Q^{T_B}|psi> > 0. The second condition is
// established analytically per structural family; the finders below
// evaluate the family's explicit candidate list, so each call is a
// concrete witness of that condition for the given Q.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "indecomp/linalg.hpp"
#include "indecomp/maps.hpp"
#include "indecomp/tolerance.hpp"

namespace indecomp {

class CriterionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FamilyKind { Antisymmetric, PianiSum, Generic };

struct FamilyTag {
  FamilyKind kind = FamilyKind::Generic;
  int d = 0;   // Antisymmetric: dimension of H
  int d1 = 0;  // PianiSum: H = C^d1 (x) C^d2
  int d2 = 0;

  std::string to_string() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Structural recognition of the Kraus span:
///   Antisymmetric(d)  all d(d-1)/2 operators antisymmetric;
///   PianiSum(d1, d2)  span equals {M1 (x) I + I (x) M2};
///   Generic           anything else.
FamilyTag recognize_family(std::span<const Operator> kraus_basis, int dim);

struct MapSubspace {
  int dim = 0;  // dimension of H; vectors live in H (x) H
  std::vector<Operator> operator_basis;
  std::vector<KetVector> vector_basis;      // orthonormal, spans W(V)
  std::vector<KetVector> complement_basis;  // orthonormal, spans W(V)^perp
  FamilyTag family;
};

MapSubspace build_subspace(const KrausPairMap& m);

struct FinderCandidate {
  std::string label;
  KetVector ket;  // not normalized
};

/// Candidate kets in W(V)^perp for a non-generic family.
std::vector<FinderCandidate> finder_candidates(const FamilyTag& family);

struct PositiveExpectation {
  std::string label;
  KetVector ket;
  double value = 0.0;             // <ket|Q^{T_B}|ket>
  double normalized_value = 0.0;  // value / <ket|ket>, the quantity maximized
};

/// Evaluates every candidate and returns the one maximizing the normalized
/// expectation of Q^{T_B}; std::nullopt when that maximum is at most
/// 1e-12 * max(1, Tr Q). Throws CriterionError for Generic families or a
/// Q that is not PSD.
std::optional<PositiveExpectation> find_positive_expectation(const MapSubspace& sub,
                                                             const Operator& q,
                                                             const ToleranceConfig& tol = {});

enum class Verdict { CertifiedIndecomposable, CriterionNotSatisfied, Inapplicable };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct IndecomposabilityCertificate {
  std::string map_id;
  std::vector<double> l_spectrum;  // descending
  double min_l_eigenvalue = 0.0;
  FamilyTag family;
  bool support_check = false;
  double support_residual = 0.0;
  int sampled_q_trials = 0;
  int sampled_q_failures = 0;
  double min_found_value = 0.0;  // smallest normalized finder maximum across trials
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Inapplicable;

  /// Certified => negative L eigenvalue, non-generic family, support check
  /// passed, zero finder failures.
  bool consistent(const ToleranceConfig& tol = {}) const;
};

/// Runs the full pipeline. Sampling over random PSD Q is regression
/// evidence; the family tag is what licenses a CertifiedIndecomposable verdict.
IndecomposabilityCertificate certify(const KrausPairMap& m, int trials, std::uint64_t seed,
                                     const ToleranceConfig& tol = {}, std::string map_id = {});

}  // namespace indecomp
