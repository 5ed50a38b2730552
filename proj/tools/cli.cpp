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

#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indecomp/criterion.hpp"
#include "indecomp/linalg.hpp"
#include "indecomp/maps.hpp"
#include "indecomp/optim.hpp"
#include "indecomp/random.hpp"
#include "indecomp/serialize.hpp"

namespace indecomp::cli {
namespace {

constexpr const char* kSeedEnv = "INDECOMP_SEED";

// Raised for anything the user can fix: bad parameters, unreadable or
// malformed files. Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  bool reproducible = false;
  std::uint64_t seed = 0;
  ToleranceConfig tol;
};

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string(kSeedEnv) + " is not a non-negative integer: " + env);
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Report files embed their input under a key; accept either form.
const Json& unwrap(const Json& j, const char* key) {
  if (j.is_object() && j.contains(key) && j.at(key).is_object()) return j.at(key);
  return j;
}

void emit(const GlobalOptions& g, Json artifact, const std::string& path, std::ostream& out) {
  if (!g.reproducible) artifact["generated_at"] = utc_timestamp();
  const std::string text = artifact.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

void spectrum_summary(const Witness& w, const ToleranceConfig& tol, std::ostream& err) {
  const auto values = hermitian_eigenvalues(w.op(), tol);
  int negative = 0;
  for (double v : values) negative += v < tol.psd_cutoff ? 1 : 0;
  err << "witness " << w.shape().dim_a << "x" << w.shape().dim_b << ": eigenvalues ["
      << fmt(values.back()) << ", " << fmt(values.front()) << "], " << negative
      << " negative\n";
}

Operator orthogonal_from(int d, std::optional<std::uint64_t> seed) {
  if (!seed) return Operator::identity(d);
  Rng rng(*seed);
  return random_orthogonal(d, rng);
}

struct BuildArgs {
  std::string family;
  int dim = 0;
  std::vector<double> phases;
  std::optional<std::uint64_t> orthogonal_seed;
  int d1 = 2;
  int d2 = 2;
  std::vector<double> lambda1;
  std::vector<double> lambda2;
  std::string out_map;
  std::string out_witness;
};

std::vector<double> default_piani_lambdas(int d, bool negative_last) {
  std::vector<double> l(static_cast<std::size_t>(d * d), 1.0);
  if (negative_last) l.back() = -1.0;
  return l;
}

KrausPairMap build_map(BuildArgs& a, const GlobalOptions& g) {
  if (a.family == "reduction") {
    if (a.dim < 2) throw InputError("reduction requires --dim >= 2");
    return reduction_map(a.dim);
  }
  if (a.family == "extended-reduction") {
    if (a.dim < 2) throw InputError("extended-reduction requires --dim >= 2");
    if (a.phases.empty() && a.dim % 2 == 0) a.phases.assign(static_cast<std::size_t>(a.dim / 2), 0.0);
    const Operator u = antisymmetric_unitary(a.dim, a.phases, orthogonal_from(a.dim, a.orthogonal_seed), g.tol);
    return extended_reduction_map(a.dim, u, g.tol);
  }
  if (a.family == "piani") {
    if (a.d1 < 2 || a.d2 < 2) throw InputError("piani requires --d1, --d2 >= 2");
    if (a.lambda1.empty()) a.lambda1 = default_piani_lambdas(a.d1, false);
    if (a.lambda2.empty()) a.lambda2 = default_piani_lambdas(a.d2, true);
    return piani_map(a.d1, a.d2, a.lambda1, a.lambda2);
  }
  if (a.family == "choi") return choi_map();
  throw InputError("unknown family " + a.family);
}

int cmd_build(BuildArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const KrausPairMap m = build_map(a, g);
  const Witness w = jamiolkowski_witness(m);
  Json jm = to_json(m, a.family);
  Json jw = to_json(w);
  if (!a.out_map.empty() && !a.out_witness.empty()) {
    emit(g, std::move(jm), a.out_map, out);
    emit(g, std::move(jw), a.out_witness, out);
  } else {
    Json both;
    both["map"] = std::move(jm);
    both["witness"] = std::move(jw);
    emit(g, std::move(both), {}, out);
  }
  err << a.family << ": dim " << m.dim_in() << ", " << m.size() << " Kraus operators\n";
  spectrum_summary(w, g.tol, err);
  return kOk;
}

int cmd_certify(const std::string& map_path, int trials, const std::string& out_path,
                const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const Json j = unwrap(read_json(map_path), "map");
  const KrausPairMap m = map_from_json(j);
  const std::string id = j.value("family", std::string("map"));
  const auto cert = certify(m, trials, g.seed, g.tol, id);
  Json jc = to_json(cert);
  if (!revalidate_certificate(jc, g.tol)) throw std::logic_error("certificate failed revalidation");
  emit(g, std::move(jc), out_path, out);
  err << to_string(cert.verdict) << ": min L eigenvalue " << fmt(cert.min_l_eigenvalue) << ", family "
      << cert.family.to_string() << ", " << cert.sampled_q_failures << "/" << cert.sampled_q_trials
      << " finder failures\n";
  switch (cert.verdict) {
    case Verdict::CertifiedIndecomposable: return kOk;
    case Verdict::CriterionNotSatisfied: return kCriterionNotSatisfied;
    case Verdict::Inapplicable: return kInapplicable;
  }
  return kInapplicable;
}

int cmd_decompose(const std::string& witness_path, const DecompositionOptions& opts,
                  const std::string& out_path, const GlobalOptions& g, std::ostream& out,
                  std::ostream& err) {
  const Witness w = witness_from_json(unwrap(read_json(witness_path), "witness"), g.tol);
  const auto report = decompose_witness(w, opts, g.tol);
  Json jr = to_json(report, w);
  if (!revalidate_decomposition(jr, g.tol)) throw std::logic_error("decomposition failed revalidation");
  emit(g, std::move(jr), out_path, out);
  err << (report.converged ? "decomposed" : "no decomposition found (numerical)") << ": residual "
      << fmt(report.residual) << " after " << report.iterations << " iterations"
      << (report.stalled ? " (stalled)" : "") << "\n";
  return report.converged ? kOk : kNoResult;
}

int cmd_search(const std::string& witness_path, ViolationSearchOptions opts, const std::string& out_path,
               const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const Witness w = witness_from_json(unwrap(read_json(witness_path), "witness"), g.tol);
  opts.seed = g.seed;
  const auto report = ppt_violation_search(w, opts, g.tol);
  Json jr = to_json(report, w, g.seed);
  if (!revalidate_search(jr, g.tol)) throw std::logic_error("search report failed revalidation");
  emit(g, std::move(jr), out_path, out);
  err << (report.certified ? "certified PPT violation" : "no certified violation") << ": Tr(W rho) = "
      << fmt(report.witness_value) << ", min eig(rho^T_B) = " << fmt(report.min_ppt_eig) << "\n";
  return report.certified ? kOk : kNoResult;
}

int cmd_verify_state(const std::string& map_path, const std::string& state_path, bool transpose,
                     const std::string& out_path, const GlobalOptions& g, std::ostream& out,
                     std::ostream& err) {
  const KrausPairMap m = map_from_json(unwrap(read_json(map_path), "map"));
  const Json js = read_json(state_path);
  Operator rho = operator_from_json(js.is_object() && js.contains("state") ? js.at("state") : js);
  if (rho.dim() % m.dim_in() != 0) {
    throw InputError("state dimension " + std::to_string(rho.dim()) + " is not a multiple of map dimension " +
                     std::to_string(m.dim_in()));
  }
  if (transpose) rho = rho.transpose();
  const BipartiteShape shape(rho.dim() / m.dim_in(), m.dim_in());
  const double lo = verify_detection(m, rho, shape, g.tol);
  const bool detected = lo < g.tol.psd_cutoff;
  Json j;
  j["kind"] = "verify_state";
  j["transposed"] = transpose;
  j["min_eigenvalue"] = lo;
  j["detected"] = detected;
  emit(g, std::move(j), out_path, out);
  err << (detected ? "entangled" : "not detected") << ": min eig((I x L)(rho)) = " << fmt(lo) << "\n";
  return detected ? kOk : kNoResult;
}

int cmd_gellmann(int dim, const std::string& out_path, const GlobalOptions& g, std::ostream& out,
                 std::ostream& err) {
  if (dim < 2) throw InputError("--dim must be >= 2");
  emit(g, to_json(gellmann_basis(dim)), out_path, out);
  err << "Gell-Mann basis: " << dim * dim << " elements\n";
  return kOk;
}

int cmd_unitary(int dim, const std::vector<double>& phases_in, std::optional<std::uint64_t> orthogonal_seed,
                const std::string& out_path, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  if (dim < 1) throw InputError("--dim must be >= 1");
  std::vector<double> phases = phases_in;
  if (phases.empty() && dim % 2 == 0) phases.assign(static_cast<std::size_t>(dim / 2), 0.0);
  const Operator u = antisymmetric_unitary(dim, phases, orthogonal_from(dim, orthogonal_seed), g.tol);
  Json j;
  j["kind"] = "antisymmetric_unitary";
  j["dim"] = dim;
  j["phases"] = phases;
  j["unitary"] = to_json(u);
  emit(g, std::move(j), out_path, out);
  err << "antisymmetric unitary, dim " << dim << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive maps, entanglement witnesses and indecomposability certificates", "indecomp"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::optional<std::uint64_t> seed_flag;
  app.add_flag("--reproducible", g.reproducible, "Omit the generated_at timestamp from artifacts");
  app.add_option("--seed", seed_flag, std::string("RNG seed (default: $") + kSeedEnv + " or 0)");
  app.add_option("--tol-herm", g.tol.hermiticity, "Hermiticity tolerance")->capture_default_str();
  app.add_option("--tol-psd", g.tol.psd_cutoff, "PSD eigenvalue cutoff")->capture_default_str();
  app.add_option("--tol-eq", g.tol.equality, "Equality tolerance")->capture_default_str();

  // maps build
  BuildArgs build;
  auto* maps = app.add_subcommand("maps", "Construct positive maps");
  maps->require_subcommand(1);
  auto* build_cmd = maps->add_subcommand("build", "Build a map and its witness");
  build_cmd->add_option("--family", build.family, "Map family")
      ->required()
      ->check(CLI::IsMember({"reduction", "extended-reduction", "piani", "choi"}));
  build_cmd->add_option("--dim", build.dim, "Dimension d of the input space");
  build_cmd->add_option("--phases", build.phases, "Antisymmetric-unitary phases (d/2 values)")->delimiter(',');
  build_cmd->add_option("--orthogonal-seed", build.orthogonal_seed,
                        "Seed for a random real orthogonal O (default: identity)");
  build_cmd->add_option("--d1", build.d1, "Piani first factor dimension")->capture_default_str();
  build_cmd->add_option("--d2", build.d2, "Piani second factor dimension")->capture_default_str();
  build_cmd->add_option("--lambda1", build.lambda1, "Piani weights for the first factor")->delimiter(',');
  build_cmd->add_option("--lambda2", build.lambda2, "Piani weights for the second factor")->delimiter(',');
  build_cmd->add_option("--out-map", build.out_map, "Map JSON path");
  build_cmd->add_option("--out-witness", build.out_witness, "Witness JSON path");

  // certify
  std::string map_path;
  std::string out_path;
  int trials = 1000;
  auto* certify_cmd = app.add_subcommand("certify", "Certify indecomposability of a map");
  certify_cmd->add_option("--map", map_path, "Map JSON")->required();
  certify_cmd->add_option("--trials", trials, "Random PSD Q trials for the finder")->capture_default_str();
  certify_cmd->add_option("--out", out_path, "Certificate JSON path (default: stdout)");

  // decompose
  std::string witness_path;
  DecompositionOptions dopts;
  auto* decompose_cmd = app.add_subcommand("decompose", "Search for W = P + Q^T_B");
  decompose_cmd->add_option("--witness", witness_path, "Witness JSON")->required();
  decompose_cmd->add_option("--max-iter", dopts.max_iter, "Iteration cap")->capture_default_str();
  decompose_cmd->add_option("--tol", dopts.tol, "Residual target")->capture_default_str();
  decompose_cmd->add_option("--out", out_path, "Report JSON path (default: stdout)");

  // search
  ViolationSearchOptions sopts;
  auto* search_cmd = app.add_subcommand("search", "Search for a PPT state with Tr(W rho) < 0");
  search_cmd->add_option("--witness", witness_path, "Witness JSON")->required();
  search_cmd->add_option("--restarts", sopts.restarts, "Independent restarts")->capture_default_str();
  search_cmd->add_option("--max-iter", sopts.max_iter, "Iterations per restart")->capture_default_str();
  search_cmd->add_option("--step", sopts.step, "Gradient step (<= 0: 1/||W||_F)")->capture_default_str();
  search_cmd->add_option("--cycles", sopts.dykstra_cycles, "Dykstra cycles per projection")->capture_default_str();
  search_cmd->add_option("--out", out_path, "Report JSON path (default: stdout)");

  // verify-state
  std::string state_path;
  bool transpose_state = false;
  auto* verify_cmd = app.add_subcommand("verify-state", "Evaluate min eig of (I x L)(rho)");
  verify_cmd->add_option("--map", map_path, "Map JSON")->required();
  verify_cmd->add_option("--state", state_path, "State JSON (matrix or search report)")->required();
  verify_cmd->add_flag("--transpose-state", transpose_state, "Use rho^T (pairs with Tr(W rho) of a search report)");
  verify_cmd->add_option("--out", out_path, "Result JSON path (default: stdout)");

  // bases gellmann
  int dim = 0;
  auto* bases = app.add_subcommand("bases", "Operator bases");
  bases->require_subcommand(1);
  auto* gellmann_cmd = bases->add_subcommand("gellmann", "Orthonormal Hermitian Gell-Mann basis");
  gellmann_cmd->add_option("--dim", dim, "Dimension")->required();
  gellmann_cmd->add_option("--out", out_path, "Basis JSON path (default: stdout)");

  // unitary antisym
  std::vector<double> phases;
  std::optional<std::uint64_t> orthogonal_seed;
  auto* unitary = app.add_subcommand("unitary", "Special unitaries");
  unitary->require_subcommand(1);
  auto* antisym_cmd = unitary->add_subcommand("antisym", "Antisymmetric unitary O D O^T");
  antisym_cmd->add_option("--dim", dim, "Dimension (even)")->required();
  antisym_cmd->add_option("--phases", phases, "Phases (d/2 values, default 0)")->delimiter(',');
  antisym_cmd->add_option("--orthogonal-seed", orthogonal_seed, "Seed for a random real orthogonal O");
  antisym_cmd->add_option("--out", out_path, "Unitary JSON path (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    g.seed = seed_flag ? *seed_flag : default_seed();
    if (build_cmd->parsed()) return cmd_build(build, g, out, err);
    if (certify_cmd->parsed()) return cmd_certify(map_path, trials, out_path, g, out, err);
    if (decompose_cmd->parsed()) return cmd_decompose(witness_path, dopts, out_path, g, out, err);
    if (search_cmd->parsed()) return cmd_search(witness_path, sopts, out_path, g, out, err);
    if (verify_cmd->parsed()) return cmd_verify_state(map_path, state_path, transpose_state, out_path, g, out, err);
    if (gellmann_cmd->parsed()) return cmd_gellmann(dim, out_path, g, out, err);
    if (antisym_cmd->parsed()) return cmd_unitary(dim, phases, orthogonal_seed, out_path, g, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SerializationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LinalgError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace indecomp::cli
