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

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "indecomp/linalg.hpp"
#include "indecomp/maps.hpp"
#include "indecomp/random.hpp"
#include "oracles.hpp"

namespace indecomp {
namespace {

Operator pauli(char which) {
  Operator p(2);
  switch (which) {
    case 'x': p(0, 1) = p(1, 0) = 1.0; break;
    case 'y': p(0, 1) = Complex(0.0, -1.0); p(1, 0) = Complex(0.0, 1.0); break;
    case 'z': p(0, 0) = 1.0; p(1, 1) = -1.0; break;
    default: p = Operator::identity(2);
  }
  return p;
}

std::vector<double> ones(int n) { return std::vector<double>(static_cast<std::size_t>(n), 1.0); }

std::vector<double> boundary(int d) {
  auto l = ones(d * d);
  l.back() = -1.0;
  return l;
}

TEST(GellMann, QubitBasisIsPaulisOverRootTwo) {
  const auto b = gellmann_basis(2);
  ASSERT_EQ(b.elements.size(), 4u);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LE(max_abs_diff(b.elements[0], Complex(s) * pauli('i')), 1e-15);
  EXPECT_LE(max_abs_diff(b.elements[1], Complex(s) * pauli('x')), 1e-15);
  EXPECT_LE(max_abs_diff(b.elements[2], Complex(s) * pauli('y')), 1e-15);
  EXPECT_LE(max_abs_diff(b.elements[3], Complex(s) * pauli('z')), 1e-15);
}

TEST(GellMann, GramMatrixIsIdentity) {
  for (int d : {2, 3, 4, 5}) {
    const auto b = gellmann_basis(d);
    ASSERT_EQ(static_cast<int>(b.elements.size()), d * d);
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      EXPECT_LE(b.elements[i].hermiticity_error(), 0.0);
      for (std::size_t j = 0; j < b.elements.size(); ++j)
        EXPECT_NEAR(std::abs(frobenius_inner(b.elements[i], b.elements[j]) - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-12);
    }
  }
}

TEST(GellMann, FirstElementIsScaledIdentityRestTraceless) {
  const auto b = gellmann_basis(3);
  EXPECT_LE(max_abs_diff(b.elements[0], Operator::identity(3) / std::sqrt(3.0)), 1e-15);
  for (std::size_t i = 1; i < b.elements.size(); ++i) EXPECT_NEAR(std::abs(b.elements[i].trace()), 0.0, 1e-15);
}

TEST(GellMann, ExpansionReconstructsArbitraryMatrices) {
  Rng rng(1);
  for (int d : {2, 3, 4}) {
    const auto b = gellmann_basis(d);
    const Operator x = random_ginibre(d, rng);
    Operator sum(d);
    for (const auto& f : b.elements) sum += frobenius_inner(f, x) * f;
    EXPECT_LE(max_abs_diff(sum, x), 1e-13);
    // Completeness in conjugation form: sum_mu F X F = Tr(X) 1.
    Operator twirl(d);
    for (const auto& f : b.elements) twirl += f * x * f;
    EXPECT_LE(max_abs_diff(twirl, x.trace() * Operator::identity(d)), 1e-13);
  }
}

TEST(Piani, QubitPairCoefficientMatrix) {
  const auto m = piani_map(2, 2, ones(4), boundary(2));
  EXPECT_EQ(m.size(), 7u);
  EXPECT_FALSE(m.transposed_input());
  EXPECT_LE(max_abs_diff(m.coeff(), Operator::diagonal({2.0, 1.0, 1.0, 1.0, 1.0, 1.0, -1.0})), 1e-15);
}

TEST(Piani, AgreesWithTwoTermTensorForm) {
  Rng rng(2);
  for (auto [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    std::vector<double> l1(static_cast<std::size_t>(d1 * d1)), l2(static_cast<std::size_t>(d2 * d2));
    std::uniform_real_distribution<double> u(1.0, 2.0);
    for (auto& v : l1) v = u(rng);
    for (auto& v : l2) v = u(rng);
    l2.back() = -1.0;
    const auto m = piani_map(d1, d2, l1, l2);
    const auto g1 = gellmann_basis(d1).elements;
    const auto g2 = gellmann_basis(d2).elements;
    for (int trial = 0; trial < 20; ++trial) {
      const Operator rho = random_ginibre(d1 * d2, rng);
      EXPECT_LE(max_abs_diff(apply(m, rho), oracle::piani_two_term(d1, d2, g1, g2, l1, l2, rho)), 1e-12);
    }
  }
}

TEST(Piani, PositiveAtBoundaryWeights) {
  for (auto [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
    const auto m = piani_map(d1, d2, ones(d1 * d1), boundary(d2));
    EXPECT_GE(sample_positivity(m, 2000, 3).min_eigenvalue, -1e-9) << d1 << "x" << d2;
  }
}

TEST(Piani, AllPositiveWeightsStillConstruct) {
  const auto m = piani_map(2, 2, ones(4), ones(4));
  EXPECT_GE(oracle::min_eigenvalue(m.coeff()), 0.0);
}

TEST(Piani, RejectsWeightsViolatingPositivityCondition) {
  auto weak = ones(4);
  weak[1] = 0.5;
  try {
    piani_map(2, 2, weak, boundary(2));
    FAIL() << "expected MapError";
  } catch (const MapError& e) {
    EXPECT_NE(std::string(e.what()).find("positiv"), std::string::npos);
  }
}

TEST(Piani, RejectsWrongWeightCounts) {
  EXPECT_THROW(piani_map(2, 2, ones(3), boundary(2)), MapError);
  EXPECT_THROW(piani_map(2, 3, ones(4), boundary(2)), MapError);
}

TEST(Choi, Examples) {
  const auto c = choi_map();
  EXPECT_LE(max_abs_diff(apply(c, Operator::unit(3, 0, 0)), Operator::diagonal({1.0, 0.0, 2.0})), 1e-15);
  EXPECT_LE(max_abs_diff(apply(c, Operator::identity(3) / 3.0), Operator::identity(3)), 1e-15);
}

TEST(Choi, AgreesWithEntrywiseForm) {
  Rng rng(4);
  const auto c = choi_map();
  for (int trial = 0; trial < 50; ++trial) {
    const Operator x = random_ginibre(3, rng);
    EXPECT_LE(max_abs_diff(apply(c, x), oracle::choi(x)), 1e-14);
  }
}

TEST(Choi, PositiveButWitnessHasNegativeEigenvalue) {
  const auto c = choi_map();
  EXPECT_GE(sample_positivity(c, 2000, 5).min_eigenvalue, -1e-9);
  EXPECT_LT(oracle::min_eigenvalue(jamiolkowski_witness(c).op()), -0.5);
}

}  // namespace
}  // namespace indecomp
