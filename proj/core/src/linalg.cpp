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

#include "indecomp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "jacobi.hpp"

namespace indecomp {

namespace {

std::string dims_message(const char* what, int got, int expected) {
  std::ostringstream os;
  os << what << ": operator dimension " << got << " does not match expected " << expected;
  return os.str();
}

void require_dim(const char* what, int got, int expected) {
  if (got != expected) throw DimensionError(dims_message(what, got, expected));
}

void require_hermitian(const char* what, const Operator& h, const ToleranceConfig& tol) {
  const double err = h.hermiticity_error();
  if (err > tol.hermiticity * std::max(1.0, h.max_abs())) {
    std::ostringstream os;
    os << what << ": input is not Hermitian (max |A - A^dagger| = " << err << ")";
    throw NotHermitianError(os.str());
  }
}

HermitianEigen sorted_eigen(detail::JacobiResult res, bool with_vectors) {
  const std::size_t n = res.values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return res.values[a] > res.values[b]; });

  HermitianEigen out;
  out.values.reserve(n);
  if (with_vectors) out.vectors.reserve(n);
  for (std::size_t idx : order) {
    out.values.push_back(res.values[idx]);
    if (with_vectors) {
      out.vectors.emplace_back(ComplexVector(res.vectors.col(static_cast<Eigen::Index>(idx))));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(int dim) {
  if (dim < 0) throw DimensionError("operator dimension must be non-negative");
  m_ = ComplexMatrix::Zero(dim, dim);
}

Operator::Operator(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    std::ostringstream os;
    os << "operator must be square, got " << m_.rows() << "x" << m_.cols();
    throw DimensionError(os.str());
  }
}

Operator Operator::identity(int dim) {
  return Operator(ComplexMatrix(ComplexMatrix::Identity(dim, dim)));
}

Operator Operator::diagonal(std::initializer_list<double> entries) {
  Operator out(static_cast<int>(entries.size()));
  int i = 0;
  for (double e : entries) {
    out(i, i) = e;
    ++i;
  }
  return out;
}

Operator Operator::diagonal(std::span<const Complex> entries) {
  Operator out(static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out(static_cast<int>(i), static_cast<int>(i)) = entries[i];
  }
  return out;
}

Operator Operator::unit(int dim, int row, int col) {
  if (row < 0 || row >= dim || col < 0 || col >= dim) {
    throw DimensionError("matrix unit index out of range");
  }
  Operator out(dim);
  out(row, col) = 1.0;
  return out;
}

Operator Operator::outer(const KetVector& a, const KetVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("outer product of kets with different dimensions");
  return Operator(ComplexMatrix(a.amplitudes() * b.amplitudes().adjoint()));
}

double Operator::max_abs() const {
  return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
}

double Operator::hermiticity_error() const {
  return m_.size() == 0 ? 0.0 : (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

Operator Operator::hermitian_part() const {
  return Operator(ComplexMatrix(0.5 * (m_ + m_.adjoint())));
}

Operator& Operator::operator+=(const Operator& o) {
  require_dim("operator +", o.dim(), dim());
  m_ += o.m_;
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  require_dim("operator -", o.dim(), dim());
  m_ -= o.m_;
  return *this;
}

Operator& Operator::operator*=(Complex s) {
  m_ *= s;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  require_dim("operator *", b.dim(), a.dim());
  return Operator(ComplexMatrix(a.m_ * b.m_));
}

Complex frobenius_inner(const Operator& a, const Operator& b) {
  require_dim("frobenius_inner", b.dim(), a.dim());
  return (a.matrix().adjoint() * b.matrix()).trace();
}

double max_abs_diff(const Operator& a, const Operator& b) {
  require_dim("max_abs_diff", b.dim(), a.dim());
  return a.dim() == 0 ? 0.0 : (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// KetVector

KetVector::KetVector(int dim) {
  if (dim < 0) throw DimensionError("ket dimension must be non-negative");
  v_ = ComplexVector::Zero(dim);
}

KetVector::KetVector(std::initializer_list<Complex> amps) : v_(static_cast<Eigen::Index>(amps.size())) {
  Eigen::Index i = 0;
  for (Complex a : amps) v_(i++) = a;
}

KetVector KetVector::basis(int dim, int index) {
  if (index < 0 || index >= dim) throw DimensionError("basis index out of range");
  KetVector k(dim);
  k(index) = 1.0;
  return k;
}

KetVector KetVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw LinalgError("cannot normalize the zero vector");
  return KetVector(ComplexVector(v_ / n));
}

KetVector& KetVector::operator+=(const KetVector& o) {
  require_dim("ket +", o.dim(), dim());
  v_ += o.v_;
  return *this;
}

KetVector& KetVector::operator-=(const KetVector& o) {
  require_dim("ket -", o.dim(), dim());
  v_ -= o.v_;
  return *this;
}

KetVector& KetVector::operator*=(Complex s) {
  v_ *= s;
  return *this;
}

KetVector operator*(const Operator& a, const KetVector& k) {
  require_dim("operator * ket", k.dim(), a.dim());
  return KetVector(ComplexVector(a.matrix() * k.v_));
}

Complex expectation(const KetVector& psi, const Operator& a) {
  require_dim("expectation", psi.dim(), a.dim());
  return psi.amplitudes().dot(a.matrix() * psi.amplitudes());
}

// ---------------------------------------------------------------------------
// Bipartite structure

BipartiteShape::BipartiteShape(int a, int b) : dim_a(a), dim_b(b) {
  if (a <= 0 || b <= 0) throw DimensionError("bipartite factor dimensions must be positive");
}

Operator kron(const Operator& a, const Operator& b) {
  const int na = a.dim();
  const int nb = b.dim();
  ComplexMatrix out(na * nb, na * nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b.matrix();
    }
  }
  return Operator(std::move(out));
}

KetVector kron(const KetVector& a, const KetVector& b) {
  ComplexVector out(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i) out.segment(i * b.dim(), b.dim()) = a(i) * b.amplitudes();
  return KetVector(std::move(out));
}

Operator partial_transpose(const Operator& w, BipartiteShape shape) {
  require_dim("partial_transpose", w.dim(), shape.total());
  const int da = shape.dim_a;
  const int db = shape.dim_b;
  Operator out(w.dim());
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      for (int k = 0; k < db; ++k) {
        for (int l = 0; l < db; ++l) {
          out(i * db + l, j * db + k) = w(i * db + k, j * db + l);
        }
      }
    }
  }
  return out;
}

Operator partial_trace(const Operator& w, BipartiteShape shape, Subsystem traced) {
  require_dim("partial_trace", w.dim(), shape.total());
  const int da = shape.dim_a;
  const int db = shape.dim_b;
  if (traced == Subsystem::B) {
    Operator out(da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += w(i * db + k, j * db + k);
    return out;
  }
  Operator out(db);
  for (int k = 0; k < db; ++k)
    for (int l = 0; l < db; ++l)
      for (int i = 0; i < da; ++i) out(k, l) += w(i * db + k, i * db + l);
  return out;
}

KetVector vectorize(const Operator& v) {
  const int d = v.dim();
  KetVector out(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i * d + j) = v(i, j);
  return out;
}

Operator devectorize(const KetVector& k, int d) {
  if (d < 0 || k.dim() != d * d) {
    throw DimensionError(dims_message("devectorize", k.dim(), d * d));
  }
  Operator out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = k(i * d + j);
  return out;
}

Operator devectorize(const KetVector& k) {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(k.dim()))));
  if (d * d != k.dim()) {
    std::ostringstream os;
    os << "devectorize: length " << k.dim() << " is not a perfect square";
    throw DimensionError(os.str());
  }
  return devectorize(k, d);
}

// ---------------------------------------------------------------------------
// Spectra

Operator HermitianEigen::reconstruct() const {
  if (vectors.empty()) return Operator();
  const int n = vectors.front().dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& v = vectors[i].amplitudes();
    out += values[i] * (v * v.adjoint());
  }
  return Operator(std::move(out));
}

HermitianEigen hermitian_eig(const Operator& h, const ToleranceConfig& tol) {
  require_hermitian("hermitian_eig", h, tol);
  return sorted_eigen(detail::jacobi_hermitian(h.matrix(), true), true);
}

std::vector<double> hermitian_eigenvalues(const Operator& h, const ToleranceConfig& tol) {
  require_hermitian("hermitian_eigenvalues", h, tol);
  return sorted_eigen(detail::jacobi_hermitian(h.matrix(), false), false).values;
}

double min_eigenvalue(const Operator& h, const ToleranceConfig& tol) {
  const auto values = hermitian_eigenvalues(h, tol);
  return values.empty() ? 0.0 : values.back();
}

Operator psd_project(const Operator& h, const ToleranceConfig& tol) {
  require_hermitian("psd_project", h, tol);
  const auto res = detail::jacobi_hermitian(h.matrix(), true);
  const Eigen::Index n = h.dim();
  ComplexMatrix scaled = res.vectors;
  for (Eigen::Index c = 0; c < n; ++c) {
    scaled.col(c) *= std::max(res.values[static_cast<std::size_t>(c)], 0.0);
  }
  ComplexMatrix out = scaled * res.vectors.adjoint();
  return Operator(ComplexMatrix(0.5 * (out + out.adjoint())));
}

// ---------------------------------------------------------------------------
// Subspaces

std::vector<KetVector> orthonormalize(std::span<const KetVector> vectors, double rank_tol) {
  std::vector<KetVector> out;
  out.reserve(vectors.size());
  bool dependent = false;
  for (const auto& v : vectors) {
    const double original = v.norm();
    ComplexVector w = v.amplitudes();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out) w -= q.amplitudes().dot(w) * q.amplitudes();
    }
    const double residual = w.norm();
    if (original == 0.0 || residual <= rank_tol * original) {
      dependent = true;
      continue;
    }
    out.emplace_back(ComplexVector(w / residual));
  }
  if (dependent) {
    std::ostringstream os;
    os << "orthonormalize: input vectors are linearly dependent (rank " << out.size() << " of "
       << vectors.size() << ")";
    throw RankDeficientError(os.str(), static_cast<int>(out.size()), static_cast<int>(vectors.size()));
  }
  return out;
}

std::vector<KetVector> orthonormal_complement(std::span<const KetVector> basis, int ambient_dim,
                                              double rank_tol) {
  for (const auto& v : basis) require_dim("orthonormal_complement", v.dim(), ambient_dim);
  const auto q = orthonormalize(basis, rank_tol);

  // Eigenvectors of I - QQ^dagger with eigenvalue 1 span the complement.
  Operator complement_projector = Operator::identity(ambient_dim) - projector_onto(q, ambient_dim);
  auto eig = hermitian_eig(complement_projector);
  const std::size_t expected = static_cast<std::size_t>(ambient_dim) - q.size();
  std::vector<KetVector> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    if (eig.values[i] > 0.5) out.push_back(std::move(eig.vectors[i]));
  }
  if (out.size() != expected) {
    throw LinalgError("orthonormal_complement: complement dimension mismatch");
  }
  return out;
}

Operator projector_onto(std::span<const KetVector> orthonormal, int ambient_dim) {
  ComplexMatrix out = ComplexMatrix::Zero(ambient_dim, ambient_dim);
  for (const auto& v : orthonormal) {
    require_dim("projector_onto", v.dim(), ambient_dim);
    out += v.amplitudes() * v.amplitudes().adjoint();
  }
  return Operator(std::move(out));
}

}  // namespace indecomp
