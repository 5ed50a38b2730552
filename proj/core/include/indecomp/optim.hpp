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

// Convex feasibility numerics around the decomposable cone
// {P + Q^{T_B} : P, Q >= 0} and its dual, the PPT states.

#include <cstdint>
#include <vector>

#include "indecomp/linalg.hpp"
#include "indecomp/maps.hpp"
#include "indecomp/tolerance.hpp"

namespace indecomp {

struct DecompositionOptions {
  int max_iter = 10000;
  /// converged <=> residual < tol
  double tol = 1e-8;
  /// Stall: residual dropped by less than stall_rel (relative) over stall_window iterations.
  int stall_window = 100;
  double stall_rel = 1e-10;
};

struct DecompositionReport {
  Operator p;
  Operator q;
  double residual = 0.0;  // ||W - P - Q^{T_B}||_F
  int iterations = 0;
  bool converged = false;
  bool stalled = false;
  std::vector<double> residual_history;  // one entry per iteration
};

/// Block-coordinate minimization of ||W - P - Q^{T_B}||_F over PSD P, Q.
/// A stalled positive residual means "no decomposition found (numerical)";
/// it is not a proof of indecomposability.
DecompositionReport decompose_witness(const Witness& w, const DecompositionOptions& opts = {},
                                      const ToleranceConfig& tol = {});

/// ||W - P - Q^{T_B}||_F recomputed from the operators.
double decomposition_residual(const Witness& w, const Operator& p, const Operator& q);

struct ViolationSearchOptions {
  int restarts = 4;
  int max_iter = 500;
  /// Gradient step; <= 0 selects 1 / ||W||_F.
  double step = 0.0;
  int dykstra_cycles = 20;
  std::uint64_t seed = 0;
  /// Objective change below which a restart is considered converged.
  double objective_tol = 1e-13;
};

struct ViolationSearchReport {
  Operator state;
  double witness_value = 0.0;  // Tr(W rho)
  double min_state_eig = 0.0;
  double min_ppt_eig = 0.0;    // min eigenvalue of rho^{T_B}
  double trace_err = 0.0;      // |Tr rho - 1|
  int iterations = 0;          // total over restarts
  int best_restart = -1;
  double repair_weight = 0.0;  // weight of I/n mixed in before verification
  bool certified = false;
  std::vector<double> objective_history;  // accepted objectives of the best restart
};

/// Minimizes Tr(W rho) over PSD, PPT, trace-one rho by projected descent
/// with Dykstra projections. `certified` is set only after exact eigen
/// checks on the returned state and witness_value < -tol.equality.
ViolationSearchReport ppt_violation_search(const Witness& w, const ViolationSearchOptions& opts = {},
                                           const ToleranceConfig& tol = {});

struct StateCheck {
  double witness_value = 0.0;
  double min_state_eig = 0.0;
  double min_ppt_eig = 0.0;
  double trace_err = 0.0;
  bool certified = false;
};

/// Exact membership and violation checks for a candidate state.
StateCheck check_violation(const Witness& w, const Operator& rho, const ToleranceConfig& tol = {});

/// Dykstra alternating projection onto PSD, PPT and trace-one operators.
Operator project_ppt_states(const Operator& x, BipartiteShape shape, int cycles,
                            const ToleranceConfig& tol = {});

/// Minimum eigenvalue of (I (x) Lambda)(rho), Lambda acting on the B factor.
/// Negative values certify that rho is entangled. With W the witness of
/// Lambda, <Psi+|(I (x) Lambda)(rho^T)|Psi+> = Tr(W rho).
double verify_detection(const KrausPairMap& m, const Operator& rho, BipartiteShape shape,
                        const ToleranceConfig& tol = {});

/// (I (x) Lambda)(rho).
Operator apply_on_b(const KrausPairMap& m, const Operator& rho, BipartiteShape shape);

}  // namespace indecomp
