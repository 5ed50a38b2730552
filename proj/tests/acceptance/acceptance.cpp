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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <Eigen/Eigenvalues>

#include "cli.hpp"
#include "indecomp/criterion.hpp"
#include "indecomp/linalg.hpp"
#include "indecomp/maps.hpp"
#include "indecomp/optim.hpp"
#include "indecomp/random.hpp"
#include "indecomp/serialize.hpp"
#include "oracles.hpp"

namespace {

using namespace indecomp;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Operator er_unitary(int d, std::uint64_t seed) {
  Rng rng(seed);
  const auto phases = random_phases(d / 2, rng);
  return antisymmetric_unitary(d, phases, random_orthogonal(d, rng));
}

KrausPairMap piani_boundary(int d1, int d2) {
  std::vector<double> l1(static_cast<std::size_t>(d1 * d1), 1.0);
  std::vector<double> l2(static_cast<std::size_t>(d2 * d2), 1.0);
  l2.back() = -1.0;
  return piani_map(d1, d2, l1, l2);
}

Outcome exact_identity() {
  const KetVector k0{1.0, 0.0}, k1{0.0, 1.0};
  const KetVector phi_minus{0.0, 1.0, -1.0, 0.0};
  const KetVector psi_minus{1.0, 0.0, 0.0, -1.0};
  const KetVector psi_plus{1.0, 0.0, 0.0, 1.0};
  const Operator rhs = kron(Operator::projector(k0), Operator::projector(k1)) +
                       kron(Operator::projector(k1), Operator::projector(k0)) +
                       Complex(0.5) * (Operator::projector(psi_minus) - Operator::projector(psi_plus));
  const Operator lhs = Operator::projector(phi_minus);
  const auto shape = BipartiteShape::square(2);
  const double dev = max_abs_diff(partial_transpose(lhs, shape), rhs);
  constexpr int reps = 1000;
  const auto t0 = Clock::now();
  double sink = 0.0;
  for (int i = 0; i < reps; ++i) sink += partial_transpose(lhs, shape)(0, 0).real();
  const double per_call = seconds_since(t0) / reps;
  return {dev <= 1e-14 && per_call < 1e-3 && sink == 0.0,
          "max dev " + sci(dev) + " (tol 1e-14), " + sci(per_call * 1e6) + " us/call (budget 1 ms)"};
}

Outcome extended_reduction_spectrum() {
  double worst_spec = 0.0, worst_norm = 0.0;
  for (int d : {4, 6}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Operator u = er_unitary(d, seed);
      const auto m = extended_reduction_map(d, u);
      const auto values = oracle::eigenvalues(m.coeff());
      worst_spec = std::max(worst_spec, std::abs(values.front() - (1.0 - d / 2.0)));
      for (std::size_t i = 1; i < values.size(); ++i) worst_spec = std::max(worst_spec, std::abs(values[i] - 1.0));
      const KetVector c = antisymmetric_coordinates(u);
      worst_norm = std::max(worst_norm, std::abs(c.inner(c).real() - d / 2.0));
      if (static_cast<int>(values.size()) != d * (d - 1) / 2) return {false, "wrong coefficient size"};
    }
  }
  return {worst_spec <= 1e-10 && worst_norm <= 1e-12,
          "L spectrum dev " + sci(worst_spec) + " (tol 1e-10), <u|u> dev " + sci(worst_norm) + " (tol 1e-12)"};
}

Outcome positivity() {
  const auto t0 = Clock::now();
  struct Case {
    std::string name;
    KrausPairMap map;
  };
  const std::vector<Case> cases{{"ER4", extended_reduction_map(4, er_unitary(4, 1))},
                                {"ER6", extended_reduction_map(6, er_unitary(6, 2))},
                                {"Piani2x2", piani_boundary(2, 2)},
                                {"Piani2x3", piani_boundary(2, 3)},
                                {"Choi", choi_map()}};
  double overall = 1e300;
  std::string worst;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    Rng rng(derive_seed(3, c));
    double lowest = 1e300;
    for (int s = 0; s < 10000; ++s) {
      const KetVector psi = haar_random_ket(cases[c].map.dim_in(), rng);
      lowest = std::min(lowest, oracle::min_eigenvalue(apply(cases[c].map, Operator::projector(psi))));
    }
    if (lowest < overall) {
      overall = lowest;
      worst = cases[c].name;
    }
  }
  const double elapsed = seconds_since(t0);
  return {overall >= -1e-9 && elapsed < 30.0, "min eig " + sci(overall) + " (" + worst + ", floor -1e-9) over 5 x 1e4 states, " +
                                                  sci(elapsed) + " s (budget 30 s)"};
}

Outcome reduction_closed_form() {
  Rng rng(4);
  double worst = 0.0;
  for (int d : {2, 3, 4}) {
    const auto r = reduction_map(d);
    for (int i = 0; i < 100; ++i) {
      const Operator s = random_ginibre(d, rng);
      worst = std::max(worst, max_abs_diff(apply(r, s), oracle::reduction(s)));
    }
  }
  return {worst <= 1e-11, "max dev " + sci(worst) + " (tol 1e-11)"};
}

Outcome round_trip() {
  Rng rng(5);
  const std::vector<KrausPairMap> maps{reduction_map(2), reduction_map(3), reduction_map(4),
                                       extended_reduction_map(4, er_unitary(4, 6)),
                                       extended_reduction_map(6, er_unitary(6, 7)),
                                       piani_boundary(2, 2), piani_boundary(2, 3), choi_map()};
  double worst = 0.0;
  for (const auto& m : maps) {
    const Witness w = jamiolkowski_witness(m);
    const KrausPairMap back = witness_to_map(w);
    worst = std::max(worst, max_abs_diff(jamiolkowski_witness(back).op(), w.op()));
    for (int i = 0; i < 20; ++i) {
      const Operator s = random_ginibre(m.dim_in(), rng);
      worst = std::max(worst, max_abs_diff(apply(back, s), apply(m, s)));
    }
  }
  return {worst <= 1e-10, "max dev " + sci(worst) + " over 8 maps (tol 1e-10)"};
}

Outcome er_qubit_zero() {
  Rng rng(8);
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto m = extended_reduction_map(2, er_unitary(2, seed));
    for (int i = 0; i < 100; ++i) worst = std::max(worst, apply(m, random_ginibre(2, rng)).max_abs());
  }
  return {worst <= 1e-12, "max |R_E(sigma)| " + sci(worst) + " (tol 1e-12)"};
}

Outcome certification() {
  struct Case {
    std::string name;
    KrausPairMap map;
    Verdict expected;
  };
  const std::vector<Case> cases{
      {"ER4", extended_reduction_map(4, er_unitary(4, 9)), Verdict::CertifiedIndecomposable},
      {"ER6", extended_reduction_map(6, er_unitary(6, 10)), Verdict::CertifiedIndecomposable},
      {"Piani2x2", piani_boundary(2, 2), Verdict::CertifiedIndecomposable},
      {"Piani2x3", piani_boundary(2, 3), Verdict::CertifiedIndecomposable},
      {"R4", reduction_map(4), Verdict::CriterionNotSatisfied},
      {"Choi", choi_map(), Verdict::Inapplicable}};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    const auto cert = certify(c.map, 1000, 11);
    const bool good = cert.verdict == c.expected && cert.consistent() &&
                      (c.expected != Verdict::CertifiedIndecomposable || cert.sampled_q_failures == 0);
    ok = ok && good;
    if (detail.tellp() > 0) detail << " ";
    detail << c.name << "=" << to_string(cert.verdict);
    if (cert.sampled_q_trials > 0) detail << "(" << cert.sampled_q_failures << "/" << cert.sampled_q_trials << ")";
  }
  std::string text = detail.str();
  return {ok, text};
}

Outcome finder_soundness() {
  const int d = 4;
  const auto sub = build_subspace(extended_reduction_map(d, er_unitary(d, 12)));
  Rng rng(13);
  double worst_margin = 1e300;
  for (int t = 0; t < 1000; ++t) {
    std::uniform_int_distribution<int> rank(1, d * d);
    const Operator q = random_psd(d * d, rank(rng), rng);
    const auto found = find_positive_expectation(sub, q);
    if (!found) return {false, "finder returned nothing at trial " + std::to_string(t)};
    const double bound = q.trace().real() / (3.0 * d * d);
    worst_margin = std::min(worst_margin, found->normalized_value - bound);
  }
  return {worst_margin >= -1e-9, "min(value - Tr(Q)/(3 d^2)) = " + sci(worst_margin) + " over 1e3 Q (floor -1e-9)"};
}

Outcome decomposition() {
  const auto t0 = Clock::now();
  const auto r = decompose_witness(jamiolkowski_witness(reduction_map(4)));
  const std::vector<double> phases{0.0, 0.0};
  const auto re = decompose_witness(
      jamiolkowski_witness(extended_reduction_map(4, antisymmetric_unitary(4, phases, Operator::identity(4)))));
  const double elapsed = seconds_since(t0);
  return {r.residual < 1e-6 && r.iterations <= 10000 && re.residual > 0.1 && re.stalled && elapsed < 60.0,
          "W_R residual " + sci(r.residual) + " in " + std::to_string(r.iterations) + " iters (tol 1e-6), W_RE residual " +
              sci(re.residual) + (re.stalled ? " stalled" : "") + " (floor 0.1), " + sci(elapsed) + " s (budget 60 s)"};
}

Outcome violation_search() {
  const auto t0 = Clock::now();
  const std::vector<double> phases{0.0, 0.0};
  const auto m = extended_reduction_map(4, antisymmetric_unitary(4, phases, Operator::identity(4)));
  const Witness w = jamiolkowski_witness(m);
  ViolationSearchOptions opts;
  opts.seed = 14;
  const auto r = ppt_violation_search(w, opts);
  const double elapsed = seconds_since(t0);
  const double state_eig = oracle::min_eigenvalue(r.state);
  const double ppt_eig = oracle::min_eigenvalue(oracle::partial_transpose(r.state, 4, 4));
  const double trace_err = std::abs(r.state.trace().real() - 1.0);
  const double value = frobenius_inner(w.op(), r.state).real();
  const double detection = verify_detection(m, r.state.transpose(), BipartiteShape::square(4));
  const bool ok = r.certified && value < -1e-4 && state_eig >= -1e-9 && ppt_eig >= -1e-9 && trace_err <= 1e-9 &&
                  detection < 0.0 && elapsed <= 300.0;
  return {ok, "Tr(W rho) " + sci(value) + " (ceiling -1e-4), min eig rho " + sci(state_eig) + ", rho^T_B " + sci(ppt_eig) +
                  ", detection " + sci(detection) + ", " + sci(elapsed) + " s (budget 300 s)"};
}

Outcome antisymmetric_unitaries() {
  for (int d : {1, 3, 5, 7}) {
    try {
      const std::vector<double> phases(static_cast<std::size_t>(d / 2), 0.0);
      antisymmetric_unitary(d, phases, Operator::identity(d));
      return {false, "odd d = " + std::to_string(d) + " accepted"};
    } catch (const MapError&) {
    }
  }
  double unitarity = 0.0, antisym = 0.0, pairing = 0.0;
  for (int d : {4, 6}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Operator u = er_unitary(d, 1000 + seed);
      unitarity = std::max(unitarity, (u.adjoint() * u - Operator::identity(d)).frobenius_norm());
      antisym = std::max(antisym, (u + u.transpose()).frobenius_norm());
      Eigen::ComplexEigenSolver<ComplexMatrix> es((Complex(0.0, 1.0) * u).matrix(), false);
      std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + d);
      std::vector<bool> used(ev.size(), false);
      for (std::size_t i = 0; i < ev.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        double best = 1e300;
        std::size_t at = i;
        for (std::size_t j = 0; j < ev.size(); ++j) {
          if (!used[j] && std::abs(ev[i] + ev[j]) < best) {
            best = std::abs(ev[i] + ev[j]);
            at = j;
          }
        }
        used[at] = true;
        pairing = std::max(pairing, best);
      }
    }
  }
  return {unitarity <= 1e-10 && antisym <= 1e-12 && pairing <= 1e-9,
          "odd d rejected, ||U^+U-1|| " + sci(unitarity) + " (tol 1e-10), ||U+U^T|| " + sci(antisym) +
              " (tol 1e-12), +/- pairing " + sci(pairing) + " (tol 1e-9)"};
}

Outcome cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("indecomp_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto p = [&](const std::string& n) { return (dir / n).string(); };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  auto run = [](std::vector<std::string> args) {
    args.insert(args.begin(), "indecomp");
    std::ostringstream out, err;
    return cli::run(args, out, err);
  };
  std::vector<std::string> artifacts;
  for (const char* tag : {"a", "b"}) {
    const std::string t(tag);
    run({"--reproducible", "--seed", "21", "maps", "build", "--family", "extended-reduction", "--dim", "4", "--phases",
         "0.4,1.3", "--orthogonal-seed", "5", "--out-map", p(t + "map"), "--out-witness", p(t + "wit")});
    run({"--reproducible", "--seed", "21", "certify", "--map", p(t + "map"), "--trials", "200", "--out", p(t + "cert")});
    run({"--reproducible", "--seed", "21", "decompose", "--witness", p(t + "wit"), "--out", p(t + "dec")});
    run({"--reproducible", "--seed", "21", "search", "--witness", p(t + "wit"), "--restarts", "2", "--max-iter", "100",
         "--out", p(t + "search")});
  }
  int compared = 0, identical = 0;
  for (const char* kind : {"map", "wit", "cert", "dec", "search"}) {
    const std::string a = slurp(p(std::string("a") + kind)), b = slurp(p(std::string("b") + kind));
    ++compared;
    identical += (!a.empty() && a == b) ? 1 : 0;
  }
  fs::remove_all(dir);
  return {identical == compared, std::to_string(identical) + "/" + std::to_string(compared) + " artifacts byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact partial-transpose identity", exact_identity},
      {"extended reduction L spectrum and <u|u>", extended_reduction_spectrum},
      {"positivity sampling", positivity},
      {"reduction closed form", reduction_closed_form},
      {"map -> witness -> map round trip", round_trip},
      {"extended reduction vanishes at d=2", er_qubit_zero},
      {"certification verdicts", certification},
      {"finder soundness", finder_soundness},
      {"decomposition numerics", decomposition},
      {"PPT violation search", violation_search},
      {"antisymmetric unitary constructor", antisymmetric_unitaries},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
