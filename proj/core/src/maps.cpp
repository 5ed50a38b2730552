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

#include "indecomp/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "indecomp/random.hpp"

namespace indecomp {

namespace {

constexpr double kCoeffHermiticity = 1e-12;

ComplexMatrix vectorized_columns(const std::vector<Operator>& ops, int dim) {
  ComplexMatrix out(dim * dim, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t c = 0; c < ops.size(); ++c) {
    out.col(static_cast<Eigen::Index>(c)) = vectorize(ops[c]).amplitudes();
  }
  return out;
}

}  // namespace

KrausPairMap::KrausPairMap(int dim, std::vector<Operator> kraus_basis, Operator coeff,
                           bool transposed_input)
    : dim_(dim),
      kraus_basis_(std::move(kraus_basis)),
      coeff_(std::move(coeff)),
      transposed_input_(transposed_input) {
  if (dim_ < 1) throw MapError("map dimension must be positive");
  for (const auto& v : kraus_basis_) {
    if (v.dim() != dim_) {
      std::ostringstream os;
      os << "Kraus operator of dimension " << v.dim() << " in a map on dimension " << dim_
         << " (maps here are square: dim_in == dim_out)";
      throw MapError(os.str());
    }
  }
  if (coeff_.dim() != static_cast<int>(kraus_basis_.size())) {
    throw MapError("coefficient matrix size does not match the number of Kraus operators");
  }
  if (coeff_.hermiticity_error() > kCoeffHermiticity * std::max(1.0, coeff_.max_abs())) {
    throw MapError("coefficient matrix must be Hermitian");
  }
  std::vector<KetVector> vecs;
  vecs.reserve(kraus_basis_.size());
  for (const auto& v : kraus_basis_) vecs.push_back(vectorize(v));
  try {
    (void)orthonormalize(vecs);
  } catch (const RankDeficientError& e) {
    std::ostringstream os;
    os << "Kraus operators must be linearly independent (rank " << e.rank() << " of "
       << e.expected() << ")";
    throw MapError(os.str());
  }
}

Witness::Witness(Operator op, BipartiteShape shape, const ToleranceConfig& tol)
    : op_(std::move(op)), shape_(shape) {
  if (op_.dim() != shape_.total()) throw DimensionError("witness dimension does not match its shape");
  if (op_.hermiticity_error() > tol.hermiticity * std::max(1.0, op_.max_abs())) {
    throw NotHermitianError("witness operator must be Hermitian");
  }
}

Operator apply(const KrausPairMap& m, const Operator& rho) {
  if (rho.dim() != m.dim_in()) {
    std::ostringstream os;
    os << "apply: input dimension " << rho.dim() << " but map acts on dimension " << m.dim_in();
    throw DimensionError(os.str());
  }
  const ComplexMatrix input = m.transposed_input() ? ComplexMatrix(rho.matrix().transpose())
                                                   : rho.matrix();
  const auto& basis = m.kraus_basis();
  const auto& coeff = m.coeff().matrix();
  const std::size_t n = basis.size();

  std::vector<ComplexMatrix> left(n);
  for (std::size_t a = 0; a < n; ++a) left[a] = basis[a].matrix() * input;

  ComplexMatrix out = ComplexMatrix::Zero(m.dim_out(), m.dim_out());
  for (std::size_t b = 0; b < n; ++b) {
    ComplexMatrix acc = ComplexMatrix::Zero(m.dim_out(), m.dim_in());
    for (std::size_t a = 0; a < n; ++a) {
      const Complex c = coeff(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      if (c != Complex(0.0)) acc += c * left[a];
    }
    out += acc * basis[b].matrix().adjoint();
  }
  return Operator(std::move(out));
}

Witness jamiolkowski_witness(const KrausPairMap& m) {
  if (m.dim_in() != m.dim_out()) throw MapError("Jamiolkowski witness needs a square map");
  const int d = m.dim_in();
  const ComplexMatrix vmat = vectorized_columns(m.kraus_basis(), d);
  Operator w(ComplexMatrix(vmat * m.coeff().matrix() * vmat.adjoint()));
  w = w.hermitian_part();
  const auto shape = BipartiteShape::square(d);
  if (m.transposed_input()) w = partial_transpose(w, shape);
  return Witness(std::move(w), shape);
}

Operator jamiolkowski_from_action(const LinearAction& action, int dim) {
  Operator w(dim * dim);
  for (int k = 0; k < dim; ++k) {
    for (int l = 0; l < dim; ++l) {
      const Operator image = action(Operator::unit(dim, k, l));
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) w(i * dim + k, j * dim + l) = image(i, j);
    }
  }
  return w;
}

Operator witness_action(const Witness& w, const Operator& rho) {
  const auto shape = w.shape();
  if (rho.dim() != shape.dim_b) throw DimensionError("witness_action: input dimension mismatch");
  const Operator lifted = kron(Operator::identity(shape.dim_a), rho.transpose());
  return partial_trace(w.op() * lifted, shape, Subsystem::B);
}

KrausPairMap witness_to_map(const Witness& w, const ToleranceConfig& tol) {
  const auto shape = w.shape();
  if (shape.dim_a != shape.dim_b) throw MapError("witness_to_map needs a witness on H (x) H");
  const int d = shape.dim_a;
  auto eig = hermitian_eig(w.op(), tol);
  const double cutoff = 1e-12 * std::max(1.0, w.op().max_abs());

  std::vector<Operator> basis;
  std::vector<Complex> coeffs;
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    if (std::abs(eig.values[i]) <= cutoff) continue;
    basis.push_back(devectorize(eig.vectors[i], d));
    coeffs.emplace_back(eig.values[i]);
  }
  return KrausPairMap(d, std::move(basis), Operator::diagonal(coeffs), false);
}

Operator antisymmetric_unit(int d, int k, int l) {
  Operator a = Operator::unit(d, k, l);
  a(l, k) -= 1.0;
  return a;
}

std::vector<std::pair<int, int>> antisymmetric_pairs(int d) {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) out.emplace_back(k, l);
  return out;
}

KrausPairMap reduction_map(int d) {
  if (d < 2) throw MapError("reduction map needs d >= 2");
  std::vector<Operator> basis;
  for (auto [k, l] : antisymmetric_pairs(d)) basis.push_back(antisymmetric_unit(d, k, l));
  const int n = static_cast<int>(basis.size());
  return KrausPairMap(d, std::move(basis), Operator::identity(n), true);
}

Operator antisymmetric_unitary(int d, std::span<const double> phases, const Operator& orthogonal,
                               const ToleranceConfig& tol) {
  if (d < 2 || d % 2 != 0) {
    std::ostringstream os;
    os << "no antisymmetric unitary exists in dimension " << d
       << ": eigenvalues of an antisymmetric matrix come in pairs +/-lambda, so odd dimension "
          "forces a zero eigenvalue";
    throw MapError(os.str());
  }
  if (static_cast<int>(phases.size()) != d / 2) {
    std::ostringstream os;
    os << "antisymmetric unitary in dimension " << d << " needs " << d / 2 << " phases, got "
       << phases.size();
    throw MapError(os.str());
  }
  if (orthogonal.dim() != d) throw MapError("orthogonal matrix has the wrong dimension");
  if (orthogonal.matrix().imag().cwiseAbs().maxCoeff() > tol.hermiticity) {
    throw MapError("orthogonal matrix must be real");
  }
  const ComplexMatrix oto = orthogonal.matrix().transpose() * orthogonal.matrix();
  if ((oto - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
    throw MapError("matrix is not orthogonal (O^T O != I)");
  }

  Operator block(d);
  for (int k = 0; k < d / 2; ++k) {
    const Complex e = std::polar(1.0, phases[static_cast<std::size_t>(k)]);
    block(2 * k, 2 * k + 1) = e;
    block(2 * k + 1, 2 * k) = -e;
  }
  const Operator u = orthogonal * block * orthogonal.transpose();
  // Exact antisymmetry; the correction is at roundoff level.
  return (u - u.transpose()) / 2.0;
}

KetVector antisymmetric_coordinates(const Operator& u) {
  const auto pairs = antisymmetric_pairs(u.dim());
  KetVector out(static_cast<int>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i) out(static_cast<int>(i)) = u(pairs[i].first, pairs[i].second);
  return out;
}

KrausPairMap extended_reduction_map(int d, const Operator& u, const ToleranceConfig& tol) {
  if (u.dim() != d) throw MapError("extended reduction map: U has the wrong dimension");
  if (d < 2 || d % 2 != 0) {
    throw MapError("extended reduction map needs an even dimension (antisymmetric unitaries "
                   "do not exist in odd dimension)");
  }
  const double scale = std::max(1.0, u.max_abs());
  if (max_abs_diff(u, -u.transpose()) > 1e-12 * scale) {
    throw MapError("extended reduction map: U is not antisymmetric");
  }
  if (max_abs_diff(u.adjoint() * u, Operator::identity(d)) > std::max(1e-10, tol.hermiticity)) {
    throw MapError("extended reduction map: U is not unitary");
  }

  std::vector<Operator> basis;
  for (auto [k, l] : antisymmetric_pairs(d)) basis.push_back(antisymmetric_unit(d, k, l));
  const KetVector coords = antisymmetric_coordinates(u);
  Operator coeff = Operator::identity(coords.dim()) - Operator::outer(coords, coords);
  return KrausPairMap(d, std::move(basis), coeff.hermitian_part(), true);
}

KrausPairMap choi_map() {
  constexpr int d = 3;
  std::vector<Operator> basis;
  for (int k = 0; k < d; ++k) basis.push_back(Operator::unit(d, k, k));
  for (int k = 0; k < d; ++k) basis.push_back(Operator::unit(d, (k + d - 1) % d, k));

  // -rho = -sum_{m,n} P_mm rho P_nn, so the diagonal block is 2I - J.
  Operator coeff(2 * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) coeff(a, b) = (a == b ? 2.0 : 0.0) - 1.0;
    coeff(d + a, d + a) = 2.0;
  }
  return KrausPairMap(d, std::move(basis), std::move(coeff), false);
}

KrausPairMap compose_transpose(const KrausPairMap& m) {
  return KrausPairMap(m.dim_in(), m.kraus_basis(), m.coeff(), !m.transposed_input());
}

PositivitySample sample_positivity(const KrausPairMap& m, int samples, std::uint64_t seed) {
  Rng rng(seed);
  PositivitySample out;
  out.samples = samples;
  out.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    KetVector psi = haar_random_ket(m.dim_in(), rng);
    const double lo = min_eigenvalue(apply(m, Operator::projector(psi)).hermitian_part());
    if (lo < out.min_eigenvalue) {
      out.min_eigenvalue = lo;
      out.worst_state = std::move(psi);
    }
  }
  if (samples == 0) out.min_eigenvalue = 0.0;
  return out;
}

double sample_product_expectation(const Witness& w, int samples, std::uint64_t seed) {
  Rng rng(seed);
  double lo = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const KetVector a = haar_random_ket(w.shape().dim_a, rng);
    const KetVector b = haar_random_ket(w.shape().dim_b, rng);
    lo = std::min(lo, expectation(kron(a, b), w.op()).real());
  }
  return samples == 0 ? 0.0 : lo;
}

}  // namespace indecomp
