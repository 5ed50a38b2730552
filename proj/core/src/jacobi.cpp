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

#include "jacobi.hpp"

#include <cmath>

namespace indecomp::detail {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeOffTolerance = 1e-12;

double off_diagonal_norm(const ComplexMatrix& a) {
  const Eigen::Index n = a.rows();
  double sum = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < c; ++r) sum += std::norm(a(r, c));
  }
  return std::sqrt(2.0 * sum);
}

}  // namespace

JacobiResult jacobi_hermitian(ComplexMatrix a, bool want_vectors) {
  const Eigen::Index n = a.rows();
  a = (0.5 * (a + a.adjoint())).eval();

  JacobiResult out;
  if (want_vectors) out.vectors = ComplexMatrix::Identity(n, n);

  const double scale = a.norm();
  const double threshold = kRelativeOffTolerance * scale;

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;

    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase e^{i phi} of a_pq; conjugating column q by it makes the
        // pivot real, after which the classical real rotation applies.
        const Complex phase = apq / r;
        const double theta = (aqq - app) / (2.0 * r);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const Complex g_pp = c;
        const Complex g_pq = s;
        const Complex g_qp = -s * std::conj(phase);
        const Complex g_qq = c * std::conj(phase);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;

        if (want_vectors) {
          auto& v = out.vectors;
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * g_pp + vkq * g_qp;
            v(k, q) = vkp * g_pq + vkq * g_qq;
          }
        }
      }
    }
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(a) > threshold) {
    throw LinalgError("Jacobi eigensolver did not converge");
  }

  out.sweeps = sweep;
  out.values.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = a(i, i).real();
  return out;
}

}  // namespace indecomp::detail
