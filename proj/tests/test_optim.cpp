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

#include <algorithm>
#include <cmath>
#include <vector>

#include "indecomp/linalg.hpp"
#include "indecomp/maps.hpp"
#include "indecomp/optim.hpp"
#include "indecomp/random.hpp"
#include "oracles.hpp"

namespace indecomp {
namespace {

// U = A_01 + A_23: the d = 4 antisymmetric unitary with zero phases and O = 1.
KrausPairMap er4() {
  const std::vector<double> phases{0.0, 0.0};
  return extended_reduction_map(4, antisymmetric_unitary(4, phases, Operator::identity(4)));
}

TEST(Decompose, PositiveWitnessIsItsOwnPositivePart) {
  Rng rng(1);
  const Operator p = random_psd(9, 4, rng);
  const auto r = decompose_witness(Witness(p, BipartiteShape::square(3)));
  EXPECT_EQ(r.iterations, 1);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.residual, 1e-12);
  EXPECT_LE(max_abs_diff(r.p, p), 1e-12);
  EXPECT_LE(r.q.max_abs(), 1e-12);
}

TEST(Decompose, ReductionWitnessIsDecomposable) {
  const auto r = decompose_witness(jamiolkowski_witness(reduction_map(4)));
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.residual, 1e-6);
  EXPECT_LE(r.iterations, 10000);
}

TEST(Decompose, CoPositiveWitnessIsDecomposable) {
  // W = Q^{T_B} with Q PSD. Alternating projections approach the second
  // route sublinearly here, so only require steady progress.
  Rng rng(2);
  const Operator q = random_psd(9, 3, rng);
  const Witness w(partial_transpose(q, BipartiteShape::square(3)), BipartiteShape::square(3));
  DecompositionOptions opts;
  opts.max_iter = 2000;
  const auto r = decompose_witness(w, opts);
  EXPECT_FALSE(r.stalled);
  EXPECT_LT(r.residual, 1e-3);
  EXPECT_LT(r.residual, 1e-2 * r.residual_history.front());
}

TEST(Decompose, ExtendedReductionWitnessStalls) {
  const Witness w = jamiolkowski_witness(er4());
  const auto r = decompose_witness(w);
  EXPECT_FALSE(r.converged);
  EXPECT_TRUE(r.stalled);
  EXPECT_GT(r.residual, 0.1);
  // Frozen regression value of the stalled residual.
  EXPECT_NEAR(r.residual, 1.0690449676, 1e-6);
}

TEST(Decompose, ResidualIsNonincreasingAndReproducible) {
  for (const auto& m : {reduction_map(3), er4(), choi_map()}) {
    const Witness w = jamiolkowski_witness(m);
    const auto r = decompose_witness(w);
    ASSERT_EQ(static_cast<int>(r.residual_history.size()), r.iterations);
    for (std::size_t i = 1; i < r.residual_history.size(); ++i)
      EXPECT_LE(r.residual_history[i], r.residual_history[i - 1] + 1e-12);
    EXPECT_NEAR(decomposition_residual(w, r.p, r.q), r.residual, 1e-12);
    EXPECT_GE(oracle::min_eigenvalue(r.p), -1e-9);
    EXPECT_GE(oracle::min_eigenvalue(r.q), -1e-9);
  }
}

TEST(Decompose, ResidualMatchesDirectFrobeniusNorm) {
  Rng rng(3);
  const Witness w = jamiolkowski_witness(reduction_map(3));
  const Operator p = random_psd(9, 2, rng);
  const Operator q = random_psd(9, 2, rng);
  const double direct = (w.op() - p - oracle::partial_transpose(q, 3, 3)).frobenius_norm();
  EXPECT_NEAR(decomposition_residual(w, p, q), direct, 1e-14);
}

TEST(Search, PositiveWitnessFindsNoViolation) {
  Rng rng(4);
  const Witness w(random_psd(9, 5, rng), BipartiteShape::square(3));
  ViolationSearchOptions opts;
  opts.seed = 5;
  opts.max_iter = 100;
  const auto r = ppt_violation_search(w, opts);
  EXPECT_GE(r.witness_value, -1e-9);
  EXPECT_FALSE(r.certified);
}

TEST(Search, DecomposableWitnessFindsNoViolation) {
  ViolationSearchOptions opts;
  opts.seed = 6;
  const auto r = ppt_violation_search(jamiolkowski_witness(reduction_map(4)), opts);
  EXPECT_GE(r.witness_value, -1e-6);
  EXPECT_FALSE(r.certified);
}

TEST(Search, ExtendedReductionWitnessDetectsPptState) {
  const auto m = er4();
  const Witness w = jamiolkowski_witness(m);
  ViolationSearchOptions opts;
  opts.seed = 7;
  const auto r = ppt_violation_search(w, opts);
  ASSERT_TRUE(r.certified);
  EXPECT_LT(r.witness_value, -1e-4);
  // Frozen regression value: the search approaches -1/3.
  EXPECT_LT(r.witness_value, -0.33);
  EXPECT_GT(r.witness_value, -1.0 / 3.0 - 1e-9);

  // Exact re-verification with the independent eigensolver.
  EXPECT_GE(oracle::min_eigenvalue(r.state), -1e-9);
  EXPECT_GE(oracle::min_eigenvalue(oracle::partial_transpose(r.state, 4, 4)), -1e-9);
  EXPECT_NEAR(r.state.trace().real(), 1.0, 1e-9);
  EXPECT_NEAR(frobenius_inner(w.op(), r.state).real(), r.witness_value, 1e-12);

  const double detection = verify_detection(m, r.state.transpose(), BipartiteShape::square(4));
  EXPECT_LT(detection, 0.0);
}

TEST(Search, ObjectiveIsNonincreasing) {
  ViolationSearchOptions opts;
  opts.seed = 8;
  opts.restarts = 2;
  const auto r = ppt_violation_search(jamiolkowski_witness(er4()), opts);
  ASSERT_FALSE(r.objective_history.empty());
  for (std::size_t i = 1; i < r.objective_history.size(); ++i)
    EXPECT_LE(r.objective_history[i], r.objective_history[i - 1]);
}

TEST(Search, DeterministicForSeedAndSeedSensitive) {
  const Witness w = jamiolkowski_witness(er4());
  ViolationSearchOptions opts;
  opts.restarts = 2;
  opts.max_iter = 30;
  opts.seed = 9;
  const auto a = ppt_violation_search(w, opts);
  const auto b = ppt_violation_search(w, opts);
  EXPECT_EQ(max_abs_diff(a.state, b.state), 0.0);
  EXPECT_EQ(a.witness_value, b.witness_value);
  opts.seed = 10;
  const auto c = ppt_violation_search(w, opts);
  EXPECT_GT(max_abs_diff(a.state, c.state), 0.0);
}

TEST(CheckViolation, RejectsStatesOutsideThePptSet) {
  const auto m = er4();
  const Witness w = jamiolkowski_witness(m);
  // Maximally entangled state: Tr(W rho) < 0 but not PPT.
  const Operator rho = Operator::projector(oracle::psi_plus(4)) / 4.0;
  const auto check = check_violation(w, rho);
  EXPECT_LT(check.min_ppt_eig, -0.1);
  EXPECT_FALSE(check.certified);
  EXPECT_THROW(check_violation(w, Operator::identity(9)), DimensionError);
}

TEST(ProjectPptStates, FeasiblePointIsFixed) {
  const BipartiteShape s = BipartiteShape::square(3);
  const Operator mixed = Operator::identity(9) / 9.0;
  EXPECT_LE(max_abs_diff(project_ppt_states(mixed, s, 20), mixed), 1e-12);
}

TEST(ProjectPptStates, OutputIsNearlyFeasible) {
  Rng rng(11);
  const BipartiteShape s = BipartiteShape::square(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Operator x = random_hermitian(9, rng);
    const Operator coarse = project_ppt_states(x, s, 5);
    const Operator fine = project_ppt_states(x, s, 100);
    auto infeasibility = [&](const Operator& y) {
      return std::max({std::abs(y.trace().real() - 1.0), -oracle::min_eigenvalue(y),
                       -oracle::min_eigenvalue(oracle::partial_transpose(y, 3, 3))});
    };
    EXPECT_LT(infeasibility(fine), 1e-2);
    EXPECT_LE(infeasibility(fine), infeasibility(coarse) + 1e-12);
  }
}

TEST(VerifyDetection, SeparableStatesAreNotDetected) {
  Rng rng(12);
  const auto m = er4();
  const BipartiteShape s = BipartiteShape::square(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Operator a = Operator::projector(haar_random_ket(4, rng));
    const Operator b = Operator::projector(haar_random_ket(4, rng));
    EXPECT_GE(verify_detection(m, kron(a, b), s), -1e-9);
  }
  EXPECT_GE(verify_detection(m, Operator::identity(16) / 16.0, s), -1e-9);
}

TEST(VerifyDetection, PairsWithWitnessExpectation) {
  // <Psi+| (1 x L)(rho^T) |Psi+> = Tr(W rho).
  Rng rng(13);
  const auto m = er4();
  const Witness w = jamiolkowski_witness(m);
  const KetVector psi = oracle::psi_plus(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Operator rho = random_state(16, rng);
    const Operator out = apply_on_b(m, rho.transpose(), BipartiteShape::square(4));
    EXPECT_NEAR(expectation(psi, out).real(), frobenius_inner(w.op(), rho).real(), 1e-12);
  }
}

TEST(VerifyDetection, RejectsNonStates) {
  const auto m = er4();
  EXPECT_THROW(verify_detection(m, Operator::identity(16), BipartiteShape::square(4)), LinalgError);
  EXPECT_THROW(verify_detection(m, Operator::identity(9) / 9.0, BipartiteShape::square(3)), DimensionError);
}

TEST(Duality, NoWitnessIsBothDecomposedAndViolated) {
  for (const auto& m : {reduction_map(4), er4()}) {
    const Witness w = jamiolkowski_witness(m);
    ViolationSearchOptions opts;
    opts.seed = 14;
    opts.restarts = 2;
    const auto search = ppt_violation_search(w, opts);
    const auto dec = decompose_witness(w);
    EXPECT_FALSE(search.certified && dec.residual < 1e-8);
    EXPECT_NE(search.certified, dec.converged);
  }
}

}  // namespace
}  // namespace indecomp
