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

// Dense complex linear algebra on small bipartite systems.
//
// Composite index convention: the basis ket |i>|k> of H_A (x) H_B has flat
// index i * dim_b + k. Every routine in the library uses this ordering.

#include <complex>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "indecomp/tolerance.hpp"

namespace indecomp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public LinalgError {
 public:
  using LinalgError::LinalgError;
};

class NotHermitianError : public LinalgError {
 public:
  using LinalgError::LinalgError;
};

class RankDeficientError : public LinalgError {
 public:
  RankDeficientError(const std::string& what, int rank, int expected)
      : LinalgError(what), rank_(rank), expected_(expected) {}
  int rank() const noexcept { return rank_; }
  int expected() const noexcept { return expected_; }

 private:
  int rank_;
  int expected_;
};

class KetVector;

/// Square complex matrix. States, Kraus operators and witnesses all use it.
class Operator {
 public:
  Operator() = default;
  explicit Operator(int dim);
  explicit Operator(ComplexMatrix m);

  static Operator identity(int dim);
  static Operator zero(int dim) { return Operator(dim); }
  static Operator diagonal(std::initializer_list<double> entries);
  static Operator diagonal(std::span<const Complex> entries);
  /// |row><col| in dimension dim.
  static Operator unit(int dim, int row, int col);
  /// |a><b|
  static Operator outer(const KetVector& a, const KetVector& b);
  static Operator projector(const KetVector& a) { return outer(a, a); }

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  Complex operator()(int r, int c) const { return m_(r, c); }
  Complex& operator()(int r, int c) { return m_(r, c); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

  Operator adjoint() const { return Operator(ComplexMatrix(m_.adjoint())); }
  Operator transpose() const { return Operator(ComplexMatrix(m_.transpose())); }
  Operator conjugate() const { return Operator(ComplexMatrix(m_.conjugate())); }
  Complex trace() const { return m_.trace(); }
  double frobenius_norm() const { return m_.norm(); }
  double max_abs() const;
  /// max |A - A^dagger| over entries.
  double hermiticity_error() const;
  bool is_hermitian(double tol) const { return hermiticity_error() <= tol; }
  /// (A + A^dagger) / 2
  Operator hermitian_part() const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(Complex s);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator-(const Operator& a) { return Operator(ComplexMatrix(-a.m_)); }
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Complex s, Operator a) { return a *= s; }
  friend Operator operator*(Operator a, Complex s) { return a *= s; }
  friend Operator operator/(Operator a, double s) { return a *= Complex(1.0 / s); }

 private:
  ComplexMatrix m_;
};

/// Tr(A^dagger B)
Complex frobenius_inner(const Operator& a, const Operator& b);
/// max_ij |a_ij - b_ij|
double max_abs_diff(const Operator& a, const Operator& b);

class KetVector {
 public:
  KetVector() = default;
  explicit KetVector(int dim);
  explicit KetVector(ComplexVector amps) : v_(std::move(amps)) {}
  KetVector(std::initializer_list<Complex> amps);

  /// Standard basis ket |index>.
  static KetVector basis(int dim, int index);

  int dim() const noexcept { return static_cast<int>(v_.size()); }
  Complex operator()(int i) const { return v_(i); }
  Complex& operator()(int i) { return v_(i); }
  const ComplexVector& amplitudes() const noexcept { return v_; }

  double norm() const { return v_.norm(); }
  KetVector normalized() const;
  /// <this|other>
  Complex inner(const KetVector& other) const { return v_.dot(other.v_); }

  KetVector& operator+=(const KetVector& o);
  KetVector& operator-=(const KetVector& o);
  KetVector& operator*=(Complex s);
  friend KetVector operator+(KetVector a, const KetVector& b) { return a += b; }
  friend KetVector operator-(KetVector a, const KetVector& b) { return a -= b; }
  friend KetVector operator*(Complex s, KetVector a) { return a *= s; }
  friend KetVector operator*(const Operator& a, const KetVector& k);

 private:
  ComplexVector v_;
};

/// <psi|A|psi>
Complex expectation(const KetVector& psi, const Operator& a);

/// Factorization H_A (x) H_B of a composite space.
struct BipartiteShape {
  int dim_a = 1;
  int dim_b = 1;

  BipartiteShape() = default;
  BipartiteShape(int a, int b);
  static BipartiteShape square(int d) { return {d, d}; }
  int total() const noexcept { return dim_a * dim_b; }
  friend bool operator==(const BipartiteShape&, const BipartiteShape&) = default;
};

enum class Subsystem { A, B };

Operator kron(const Operator& a, const Operator& b);
KetVector kron(const KetVector& a, const KetVector& b);

/// Transposes the B factor: result[(i,l),(j,k)] = w[(i,k),(j,l)].
Operator partial_transpose(const Operator& w, BipartiteShape shape);

/// Traces out `traced`; the result lives on the other factor.
Operator partial_trace(const Operator& w, BipartiteShape shape, Subsystem traced);

/// |V> = sum_ij V_ij |i>|j>.
KetVector vectorize(const Operator& v);
/// Inverse of vectorize. Throws DimensionError unless k.dim() == d * d.
Operator devectorize(const KetVector& k, int d);
/// As above with d inferred; throws when k.dim() is not a perfect square.
Operator devectorize(const KetVector& k);

struct HermitianEigen {
  /// Descending.
  std::vector<double> values;
  /// Orthonormal; vectors[i] belongs to values[i].
  std::vector<KetVector> vectors;

  double min() const { return values.empty() ? 0.0 : values.back(); }
  double max() const { return values.empty() ? 0.0 : values.front(); }
  Operator reconstruct() const;
};

/// Cyclic Jacobi diagonalization. Throws NotHermitianError when the input
/// deviates from Hermitian by more than tol.hermiticity * max(1, max|h|).
HermitianEigen hermitian_eig(const Operator& h, const ToleranceConfig& tol = {});
/// Eigenvalues only (descending); skips eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const Operator& h, const ToleranceConfig& tol = {});
double min_eigenvalue(const Operator& h, const ToleranceConfig& tol = {});

/// Nearest PSD operator in Frobenius norm: keeps the positive part of the spectrum.
Operator psd_project(const Operator& h, const ToleranceConfig& tol = {});

/// Modified Gram-Schmidt with one reorthogonalization pass. Throws
/// RankDeficientError if a vector's residual falls below rank_tol times
/// its original norm.
std::vector<KetVector> orthonormalize(std::span<const KetVector> vectors, double rank_tol = 1e-10);

/// Orthonormal basis of span(basis)^perp inside C^ambient_dim.
std::vector<KetVector> orthonormal_complement(std::span<const KetVector> basis, int ambient_dim,
                                              double rank_tol = 1e-10);

/// sum_i |v_i><v_i| for an orthonormal family.
Operator projector_onto(std::span<const KetVector> orthonormal, int ambient_dim);

}  // namespace indecomp
