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

#include "indecomp/optim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>

#include "indecomp/random.hpp"

namespace indecomp {

namespace {

constexpr double kRepairMargin = 1e-12;
constexpr double kTraceTol = 1e-9;

double witness_value(const Witness& w, const Operator& rho) {
  return frobenius_inner(w.op(), rho).real();  // W Hermitian: Tr(W^dagger rho) = Tr(W rho)
}

Operator trace_one_projection(const Operator& x) {
  const int n = x.dim();
  const double shift = (1.0 - x.trace().real()) / n;
  return x + Complex(shift) * Operator::identity(n);
}

Operator ppt_cone_projection(const Operator& x, BipartiteShape shape, const ToleranceConfig& tol) {
  return partial_transpose(psd_project(partial_transpose(x, shape).hermitian_part(), tol), shape);
}

// Mixes in just enough of I/n that rho and rho^{T_B} are both PSD with a
// small positive margin.
std::pair<Operator, double> repair_state(Operator rho, BipartiteShape shape,
                                         const ToleranceConfig& tol) {
  rho = rho.hermitian_part();
  rho = rho / rho.trace().real();
  const int n = rho.dim();
  const double lo = std::min(min_eigenvalue(rho, tol),
                             min_eigenvalue(partial_transpose(rho, shape).hermitian_part(), tol));
  if (lo >= kRepairMargin) return {rho, 0.0};
  const double t = (kRepairMargin - lo) / (1.0 / n - lo);
  Operator mixed = Complex(1.0 - t) * rho + Complex(t / n) * Operator::identity(n);
  mixed = mixed.hermitian_part();
  return {mixed / mixed.trace().real(), t};
}

struct RestartResult {
  Operator state;
  double repair_weight = 0.0;
  int iterations = 0;
  std::vector<double> history;
  StateCheck check;
};

RestartResult run_restart(const Witness& w, const ViolationSearchOptions& opts,
                          const ToleranceConfig& tol, int restart) {
  const auto shape = w.shape();
  const int n = shape.total();
  const double step = opts.step > 0.0 ? opts.step : 1.0 / std::max(w.op().frobenius_norm(), 1e-300);

  Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(restart)));
  Operator rho = project_ppt_states(random_state(n, rng), shape, opts.dykstra_cycles, tol);
  double objective = witness_value(w, rho);

  RestartResult out;
  out.history.push_back(objective);
  for (int it = 0; it < opts.max_iter; ++it) {
    Operator candidate =
        project_ppt_states(rho - Complex(step) * w.op(), shape, opts.dykstra_cycles, tol);
    const double value = witness_value(w, candidate);
    ++out.iterations;
    if (value > objective) break;  // only nonincreasing steps are accepted
    const double decrease = objective - value;
    rho = std::move(candidate);
    objective = value;
    out.history.push_back(objective);
    if (decrease < opts.objective_tol) break;
  }

  auto [repaired, weight] = repair_state(rho, shape, tol);
  out.state = std::move(repaired);
  out.repair_weight = weight;
  out.check = check_violation(w, out.state, tol);
  return out;
}

}  // namespace

double decomposition_residual(const Witness& w, const Operator& p, const Operator& q) {
  return (w.op() - p - partial_transpose(q, w.shape())).frobenius_norm();
}

DecompositionReport decompose_witness(const Witness& w, const DecompositionOptions& opts,
                                      const ToleranceConfig& tol) {
  const auto shape = w.shape();
  const int n = shape.total();
  DecompositionReport rep;
  rep.p = Operator(n);
  rep.q = Operator(n);
  rep.residual = w.op().frobenius_norm();

  for (int it = 0; it < opts.max_iter; ++it) {
    rep.p = psd_project((w.op() - partial_transpose(rep.q, shape)).hermitian_part(), tol);
    rep.q = psd_project(partial_transpose(w.op() - rep.p, shape).hermitian_part(), tol);
    rep.residual = decomposition_residual(w, rep.p, rep.q);
    rep.residual_history.push_back(rep.residual);
    rep.iterations = it + 1;

    if (rep.residual < opts.tol) {
      rep.converged = true;
      break;
    }
    const auto k = rep.residual_history.size();
    if (opts.stall_window > 0 && k > static_cast<std::size_t>(opts.stall_window)) {
      const double before = rep.residual_history[k - 1 - static_cast<std::size_t>(opts.stall_window)];
      if (before - rep.residual < opts.stall_rel * before) {
        rep.stalled = true;
        break;
      }
    }
  }
  return rep;
}

Operator project_ppt_states(const Operator& x, BipartiteShape shape, int cycles,
                            const ToleranceConfig& tol) {
  if (x.dim() != shape.total()) throw DimensionError("project_ppt_states: dimension mismatch");
  const int n = x.dim();
  Operator y = x.hermitian_part();
  Operator inc_psd(n), inc_ppt(n), inc_trace(n);
  for (int c = 0; c < cycles; ++c) {
    Operator z = y + inc_psd;
    y = psd_project(z, tol);
    inc_psd = z - y;

    z = y + inc_ppt;
    y = ppt_cone_projection(z, shape, tol);
    inc_ppt = z - y;

    z = y + inc_trace;
    y = trace_one_projection(z);
    inc_trace = z - y;
  }
  return y.hermitian_part();
}

StateCheck check_violation(const Witness& w, const Operator& rho, const ToleranceConfig& tol) {
  if (rho.dim() != w.shape().total()) throw DimensionError("check_violation: dimension mismatch");
  StateCheck c;
  const Operator h = rho.hermitian_part();
  c.witness_value = witness_value(w, h);
  c.min_state_eig = min_eigenvalue(h, tol);
  c.min_ppt_eig = min_eigenvalue(partial_transpose(h, w.shape()).hermitian_part(), tol);
  c.trace_err = std::abs(rho.trace() - Complex(1.0));
  c.certified = rho.hermiticity_error() <= tol.hermiticity && c.min_state_eig >= tol.psd_cutoff &&
                c.min_ppt_eig >= tol.psd_cutoff && c.trace_err <= kTraceTol &&
                c.witness_value < -tol.equality;
  return c;
}

ViolationSearchReport ppt_violation_search(const Witness& w, const ViolationSearchOptions& opts,
                                           const ToleranceConfig& tol) {
  const int restarts = std::max(1, opts.restarts);
  std::vector<std::future<RestartResult>> jobs;
  jobs.reserve(static_cast<std::size_t>(restarts));
  for (int r = 0; r < restarts; ++r) {
    jobs.push_back(std::async(std::launch::async, run_restart, std::cref(w), std::cref(opts),
                              std::cref(tol), r));
  }

  ViolationSearchReport rep;
  rep.witness_value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    RestartResult res = jobs[static_cast<std::size_t>(r)].get();
    rep.iterations += res.iterations;
    if (res.check.witness_value < rep.witness_value) {
      rep.state = std::move(res.state);
      rep.witness_value = res.check.witness_value;
      rep.min_state_eig = res.check.min_state_eig;
      rep.min_ppt_eig = res.check.min_ppt_eig;
      rep.trace_err = res.check.trace_err;
      rep.certified = res.check.certified;
      rep.repair_weight = res.repair_weight;
      rep.best_restart = r;
      rep.objective_history = std::move(res.history);
    }
  }
  return rep;
}

Operator apply_on_b(const KrausPairMap& m, const Operator& rho, BipartiteShape shape) {
  if (rho.dim() != shape.total()) throw DimensionError("apply_on_b: state dimension mismatch");
  if (shape.dim_b != m.dim_in()) throw DimensionError("apply_on_b: map does not act on factor B");
  const int da = shape.dim_a;
  const int db = shape.dim_b;
  const int dout = m.dim_out();
  ComplexMatrix out = ComplexMatrix::Zero(da * dout, da * dout);
  for (int a = 0; a < da; ++a) {
    for (int b = 0; b < da; ++b) {
      const Operator block(ComplexMatrix(rho.matrix().block(a * db, b * db, db, db)));
      out.block(a * dout, b * dout, dout, dout) = apply(m, block).matrix();
    }
  }
  return Operator(std::move(out));
}

double verify_detection(const KrausPairMap& m, const Operator& rho, BipartiteShape shape,
                        const ToleranceConfig& tol) {
  if (rho.hermiticity_error() > tol.hermiticity * std::max(1.0, rho.max_abs()) ||
      std::abs(rho.trace() - Complex(1.0)) > kTraceTol ||
      min_eigenvalue(rho.hermitian_part(), tol) < tol.psd_cutoff) {
    throw LinalgError("verify_detection: rho must be a density matrix (PSD, trace one)");
  }
  return min_eigenvalue(apply_on_b(m, rho, shape).hermitian_part(), tol);
}

}  // namespace indecomp
