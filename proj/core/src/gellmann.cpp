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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "indecomp/maps.hpp"

namespace indecomp {

HermitianBasis gellmann_basis(int d) {
  if (d < 2) throw MapError("Gell-Mann basis needs d >= 2");
  HermitianBasis out;
  out.dim = d;
  out.elements.reserve(static_cast<std::size_t>(d * d));

  out.elements.push_back(Operator::identity(d) / std::sqrt(static_cast<double>(d)));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Operator s(d);
      s(j, k) = inv_sqrt2;
      s(k, j) = inv_sqrt2;
      out.elements.push_back(std::move(s));
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Operator a(d);
      a(j, k) = Complex(0.0, -inv_sqrt2);
      a(k, j) = Complex(0.0, inv_sqrt2);
      out.elements.push_back(std::move(a));
    }
  }
  for (int l = 1; l < d; ++l) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    Operator h(d);
    for (int j = 0; j < l; ++j) h(j, j) = norm;
    h(l, l) = -l * norm;
    out.elements.push_back(std::move(h));
  }
  return out;
}

namespace {

void validate_piani(int d1, int d2, std::span<const double> lambda1,
                    std::span<const double> lambda2) {
  if (d1 < 2 || d2 < 2) throw MapError("Piani map needs d1, d2 >= 2");
  if (static_cast<int>(lambda1.size()) != d1 * d1 || static_cast<int>(lambda2.size()) != d2 * d2) {
    std::ostringstream os;
    os << "Piani map needs " << d1 * d1 << " + " << d2 * d2 << " coefficients, got "
       << lambda1.size() << " + " << lambda2.size();
    throw MapError(os.str());
  }
  const double last = lambda2.back();
  const double floor = std::max(0.0, -last);
  auto check = [&](double v, int k, std::size_t mu) {
    if (v < floor) {
      std::ostringstream os;
      os << "Piani positivity condition violated: lambda^(" << k << ")_" << mu + 1 << " = " << v
         << " must be >= " << floor << " (|lambda^(2)_" << d2 * d2 << "|)";
      throw MapError(os.str());
    }
  };
  for (std::size_t mu = 0; mu < lambda1.size(); ++mu) check(lambda1[mu], 1, mu);
  for (std::size_t mu = 0; mu + 1 < lambda2.size(); ++mu) check(lambda2[mu], 2, mu);
}

}  // namespace

KrausPairMap piani_map(int d1, int d2, std::span<const double> lambda1,
                       std::span<const double> lambda2) {
  validate_piani(d1, d2, lambda1, lambda2);
  const auto f1 = gellmann_basis(d1);
  const auto f2 = gellmann_basis(d2);
  const Operator id1 = Operator::identity(d1);
  const Operator id2 = Operator::identity(d2);

  // The identity component of each Lambda_k acts as lambda_1 * rho, so the
  // orthonormal F_1 = I/sqrt(d) is rescaled back to I and both identity
  // terms merge into one Kraus element.
  std::vector<Operator> basis;
  std::vector<Complex> diag;
  basis.push_back(kron(id1, id2));
  diag.emplace_back(lambda1[0] + lambda2[0]);
  for (std::size_t mu = 1; mu < f1.elements.size(); ++mu) {
    basis.push_back(kron(f1.elements[mu], id2));
    diag.emplace_back(lambda1[mu]);
  }
  for (std::size_t mu = 1; mu < f2.elements.size(); ++mu) {
    basis.push_back(kron(id1, f2.elements[mu]));
    diag.emplace_back(lambda2[mu]);
  }
  return KrausPairMap(d1 * d2, std::move(basis), Operator::diagonal(diag), false);
}

}  // namespace indecomp
