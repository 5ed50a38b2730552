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

#include "indecomp/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "indecomp/random.hpp"

namespace indecomp {

namespace {

constexpr double kStructureTol = 1e-10;
constexpr double kSupportTol = 1e-9;

bool is_antisymmetric(const Operator& v) {
  return max_abs_diff(v, -v.transpose()) <= 1e-12 * std::max(1.0, v.max_abs());
}

// Orthonormal basis of vec({M1 (x) I + I (x) M2}). The spanning set drops
// I (x) E_{d2-1,d2-1}, which is the only dependency.
std::vector<KetVector> piani_span(int d1, int d2) {
  const Operator id1 = Operator::identity(d1);
  const Operator id2 = Operator::identity(d2);
  std::vector<KetVector> spanning;
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j) spanning.push_back(vectorize(kron(Operator::unit(d1, i, j), id2)));
  for (int k = 0; k < d2; ++k)
    for (int l = 0; l < d2; ++l) {
      if (k == d2 - 1 && l == d2 - 1) continue;
      spanning.push_back(vectorize(kron(id1, Operator::unit(d2, k, l))));
    }
  return orthonormalize(spanning);
}

bool inside_span(const KetVector& v, const std::vector<KetVector>& orthonormal) {
  ComplexVector r = v.amplitudes();
  for (const auto& q : orthonormal) r -= q.amplitudes().dot(r) * q.amplitudes();
  return r.norm() <= kStructureTol * std::max(1.0, v.norm());
}

// Ket on (A_i B_i) for one tensor factor of a PianiSum family.
struct FactorKet {
  std::string label;
  ComplexMatrix coeff;  // coeff(a, b) multiplies |a>_A |b>_B
};

std::vector<FactorKet> factor_candidates(int d, int which) {
  std::vector<FactorKet> out;
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      if (k == l) continue;
      FactorKet f;
      std::ostringstream os;
      os << "|" << k << l << ">_" << which;
      f.label = os.str();
      f.coeff = ComplexMatrix::Zero(d, d);
      f.coeff(k, l) = 1.0;
      out.push_back(std::move(f));
    }
  }
  FactorKet phi;
  phi.label = "|Phi_perp>_" + std::to_string(which);
  phi.coeff = ComplexMatrix::Zero(d, d);
  for (int m = 0; m < d; ++m) phi.coeff(m, m) = std::polar(1.0, 2.0 * std::numbers::pi * m / d);
  out.push_back(std::move(phi));
  return out;
}

}  // namespace

std::string FamilyTag::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::Antisymmetric:
      os << "Antisymmetric(" << d << ")";
      break;
    case FamilyKind::PianiSum:
      os << "PianiSum(" << d1 << "," << d2 << ")";
      break;
    case FamilyKind::Generic:
      os << "Generic";
      break;
  }
  return os.str();
}

FamilyTag recognize_family(std::span<const Operator> kraus_basis, int dim) {
  const int n = static_cast<int>(kraus_basis.size());
  if (n == 0) return {};

  if (n == dim * (dim - 1) / 2 &&
      std::all_of(kraus_basis.begin(), kraus_basis.end(), is_antisymmetric)) {
    return {FamilyKind::Antisymmetric, dim, 0, 0};
  }

  for (int d1 = 2; d1 * 2 <= dim; ++d1) {
    if (dim % d1 != 0) continue;
    const int d2 = dim / d1;
    if (n != d1 * d1 + d2 * d2 - 1) continue;
    const auto span = piani_span(d1, d2);
    const bool all_inside = std::all_of(kraus_basis.begin(), kraus_basis.end(), [&](const Operator& v) {
      return inside_span(vectorize(v), span);
    });
    if (all_inside) return {FamilyKind::PianiSum, 0, d1, d2};
  }
  return {};
}

MapSubspace build_subspace(const KrausPairMap& m) {
  MapSubspace sub;
  sub.dim = m.dim_in();
  sub.operator_basis = m.kraus_basis();
  std::vector<KetVector> vecs;
  vecs.reserve(sub.operator_basis.size());
  for (const auto& v : sub.operator_basis) vecs.push_back(vectorize(v));
  sub.vector_basis = orthonormalize(vecs);
  sub.complement_basis = orthonormal_complement(sub.vector_basis, sub.dim * sub.dim);
  sub.family = recognize_family(sub.operator_basis, sub.dim);
  return sub;
}

std::vector<FinderCandidate> finder_candidates(const FamilyTag& family) {
  std::vector<FinderCandidate> out;
  switch (family.kind) {
    case FamilyKind::Antisymmetric: {
      const int d = family.d;
      for (int k = 0; k < d; ++k) {
        out.push_back({"|" + std::to_string(k) + std::to_string(k) + ">",
                       KetVector::basis(d * d, k * d + k)});
      }
      for (int k = 0; k < d; ++k) {
        for (int l = k + 1; l < d; ++l) {
          KetVector phi = KetVector::basis(d * d, k * d + l) + KetVector::basis(d * d, l * d + k);
          out.push_back({"|Phi+_" + std::to_string(k) + std::to_string(l) + ">", std::move(phi)});
        }
      }
      return out;
    }
    case FamilyKind::PianiSum: {
      const int d1 = family.d1;
      const int d2 = family.d2;
      const int big = d1 * d2;
      const auto first = factor_candidates(d1, 1);
      const auto second = factor_candidates(d2, 2);
      for (const auto& f1 : first) {
        for (const auto& f2 : second) {
          // H_A1 H_B1 H_A2 H_B2 reordered into (A1 A2)(B1 B2).
          KetVector ket(big * big);
          for (int a1 = 0; a1 < d1; ++a1)
            for (int b1 = 0; b1 < d1; ++b1) {
              const Complex c1 = f1.coeff(a1, b1);
              if (c1 == Complex(0.0)) continue;
              for (int a2 = 0; a2 < d2; ++a2)
                for (int b2 = 0; b2 < d2; ++b2) {
                  const Complex c2 = f2.coeff(a2, b2);
                  if (c2 == Complex(0.0)) continue;
                  const int row = a1 * d2 + a2;
                  const int col = b1 * d2 + b2;
                  ket(row * big + col) = c1 * c2;
                }
            }
          out.push_back({f1.label + f2.label, std::move(ket)});
        }
      }
      return out;
    }
    case FamilyKind::Generic:
      break;
  }
  throw CriterionError("no candidate list for a Generic family");
}

std::optional<PositiveExpectation> find_positive_expectation(const MapSubspace& sub,
                                                             const Operator& q,
                                                             const ToleranceConfig& tol) {
  if (sub.family.kind == FamilyKind::Generic) {
    throw CriterionError("finder undefined for a Generic family: candidate lists exist "
                         "only for recognized families");
  }
  const int big = sub.dim * sub.dim;
  if (q.dim() != big) throw DimensionError("find_positive_expectation: Q has the wrong dimension");
  const double scale = std::max(1.0, q.max_abs());
  if (q.hermiticity_error() > tol.hermiticity * scale) throw CriterionError("Q must be Hermitian");
  if (min_eigenvalue(q.hermitian_part(), tol) < tol.psd_cutoff * scale) {
    throw CriterionError("Q must be positive semidefinite");
  }

  const Operator q_tb = partial_transpose(q, BipartiteShape::square(sub.dim));
  std::optional<PositiveExpectation> best;
  for (auto& cand : finder_candidates(sub.family)) {
    const double value = expectation(cand.ket, q_tb).real();
    const double normalized = value / cand.ket.inner(cand.ket).real();
    if (!best || normalized > best->normalized_value) {
      best = PositiveExpectation{std::move(cand.label), std::move(cand.ket), value, normalized};
    }
  }
  const double eps_find = 1e-12 * std::max(1.0, q.trace().real());
  if (!best || best->normalized_value <= eps_find) return std::nullopt;
  return best;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedIndecomposable:
      return "CertifiedIndecomposable";
    case Verdict::CriterionNotSatisfied:
      return "CriterionNotSatisfied";
    case Verdict::Inapplicable:
      return "Inapplicable";
  }
  return "Inapplicable";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "CertifiedIndecomposable") return Verdict::CertifiedIndecomposable;
  if (s == "CriterionNotSatisfied") return Verdict::CriterionNotSatisfied;
  if (s == "Inapplicable") return Verdict::Inapplicable;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

bool IndecomposabilityCertificate::consistent(const ToleranceConfig& tol) const {
  if (verdict != Verdict::CertifiedIndecomposable) return true;
  return min_l_eigenvalue < -tol.equality && family.kind != FamilyKind::Generic && support_check &&
         sampled_q_failures == 0;
}

IndecomposabilityCertificate certify(const KrausPairMap& m, int trials, std::uint64_t seed,
                                     const ToleranceConfig& tol, std::string map_id) {
  IndecomposabilityCertificate cert;
  cert.map_id = std::move(map_id);
  cert.seed = seed;
  cert.l_spectrum = hermitian_eigenvalues(m.coeff(), tol);
  cert.min_l_eigenvalue = cert.l_spectrum.empty() ? 0.0 : cert.l_spectrum.back();

  const MapSubspace sub = build_subspace(m);
  cert.family = sub.family;

  // Witness before any partial transpose, built from the map's action
  // rather than from the coefficient formula.
  const KrausPairMap untransposed(m.dim_in(), m.kraus_basis(), m.coeff(), false);
  const Operator w_pre = jamiolkowski_from_action(
      [&](const Operator& rho) { return apply(untransposed, rho); }, m.dim_in());
  const Operator proj = projector_onto(sub.vector_basis, w_pre.dim());
  cert.support_residual = (w_pre - proj * w_pre * proj).frobenius_norm();
  cert.support_check = cert.support_residual <= kSupportTol;

  if (sub.family.kind != FamilyKind::Generic) {
    const int big = sub.dim * sub.dim;
    cert.min_found_value = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
      std::uniform_int_distribution<int> rank_dist(1, big);
      const Operator q = random_psd(big, rank_dist(rng), rng);
      const auto found = find_positive_expectation(sub, q, tol);
      ++cert.sampled_q_trials;
      if (!found) {
        ++cert.sampled_q_failures;
        cert.min_found_value = 0.0;
      } else {
        cert.min_found_value = std::min(cert.min_found_value, found->normalized_value);
      }
    }
    if (cert.sampled_q_trials == 0) cert.min_found_value = 0.0;
  }

  if (sub.family.kind == FamilyKind::Generic || !cert.support_check) {
    cert.verdict = Verdict::Inapplicable;
  } else if (cert.min_l_eigenvalue >= -tol.equality || cert.sampled_q_failures > 0) {
    cert.verdict = Verdict::CriterionNotSatisfied;
  } else {
    cert.verdict = Verdict::CertifiedIndecomposable;
  }
  return cert;
}

}  // namespace indecomp
