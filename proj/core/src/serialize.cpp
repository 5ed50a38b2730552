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

#include "indecomp/serialize.hpp"

#include <cmath>
#include <regex>

namespace indecomp {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SerializationError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SerializationError(std::string("field '") + key + "': " + e.what());
  }
}

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SerializationError("complex entry must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json to_json(const Operator& op) {
  Json entries = Json::array();
  for (int r = 0; r < op.dim(); ++r)
    for (int c = 0; c < op.dim(); ++c) entries.push_back(complex_pair(op(r, c)));
  Json j;
  j["dim"] = op.dim();
  j["entries"] = std::move(entries);
  return j;
}

Operator operator_from_json(const Json& j) {
  const int dim = get_field<int>(j, "dim");
  if (dim < 0) throw SerializationError("matrix dim must be non-negative");
  if (!j.contains("entries")) throw SerializationError("missing field 'entries'");
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim) * dim) {
    throw SerializationError("matrix entries must hold dim*dim [re, im] pairs");
  }
  Operator op(dim);
  std::size_t idx = 0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) op(r, c) = complex_from(entries[idx++]);
  return op;
}

Json to_json(const KetVector& k) {
  Json amps = Json::array();
  for (int i = 0; i < k.dim(); ++i) amps.push_back(complex_pair(k(i)));
  Json j;
  j["dim"] = k.dim();
  j["amps"] = std::move(amps);
  return j;
}

KetVector ket_from_json(const Json& j) {
  const int dim = get_field<int>(j, "dim");
  if (!j.contains("amps")) throw SerializationError("missing field 'amps'");
  const Json& amps = j.at("amps");
  if (!amps.is_array() || amps.size() != static_cast<std::size_t>(dim)) {
    throw SerializationError("ket amps must hold dim [re, im] pairs");
  }
  KetVector k(dim);
  for (int i = 0; i < dim; ++i) k(i) = complex_from(amps[static_cast<std::size_t>(i)]);
  return k;
}

Json to_json(const KrausPairMap& m, const std::string& family) {
  Json j;
  if (!family.empty()) j["family"] = family;
  j["dim_in"] = m.dim_in();
  j["dim_out"] = m.dim_out();
  j["transposed_input"] = m.transposed_input();
  Json basis = Json::array();
  for (const auto& v : m.kraus_basis()) basis.push_back(to_json(v));
  j["kraus_basis"] = std::move(basis);
  j["coeff"] = to_json(m.coeff());
  return j;
}

KrausPairMap map_from_json(const Json& j) {
  const int dim_in = get_field<int>(j, "dim_in");
  const int dim_out = get_field<int>(j, "dim_out");
  if (dim_in != dim_out) throw SerializationError("only square maps (dim_in == dim_out) are supported");
  const bool transposed = get_field<bool>(j, "transposed_input");
  if (!j.contains("kraus_basis") || !j.at("kraus_basis").is_array()) {
    throw SerializationError("missing array field 'kraus_basis'");
  }
  std::vector<Operator> basis;
  for (const auto& v : j.at("kraus_basis")) basis.push_back(operator_from_json(v));
  if (!j.contains("coeff")) throw SerializationError("missing field 'coeff'");
  Operator coeff = operator_from_json(j.at("coeff"));
  try {
    return KrausPairMap(dim_in, std::move(basis), std::move(coeff), transposed);
  } catch (const std::exception& e) {
    throw SerializationError(std::string("invalid map: ") + e.what());
  }
}

Json to_json(const Witness& w) {
  Json j;
  j["shape"] = {{"dim_a", w.shape().dim_a}, {"dim_b", w.shape().dim_b}};
  j["op"] = to_json(w.op());
  return j;
}

Witness witness_from_json(const Json& j, const ToleranceConfig& tol) {
  if (!j.contains("shape") || !j.contains("op")) throw SerializationError("witness needs 'shape' and 'op'");
  const Json& s = j.at("shape");
  try {
    BipartiteShape shape(get_field<int>(s, "dim_a"), get_field<int>(s, "dim_b"));
    return Witness(operator_from_json(j.at("op")), shape, tol);
  } catch (const SerializationError&) {
    throw;
  } catch (const std::exception& e) {
    throw SerializationError(std::string("invalid witness: ") + e.what());
  }
}

Json to_json(const HermitianBasis& b) {
  Json j;
  j["dim"] = b.dim;
  Json elems = Json::array();
  for (const auto& f : b.elements) elems.push_back(to_json(f));
  j["elements"] = std::move(elems);
  return j;
}

FamilyTag family_from_string(const std::string& s) {
  static const std::regex anti(R"(Antisymmetric\((\d+)\))");
  static const std::regex piani(R"(PianiSum\((\d+),(\d+)\))");
  std::smatch m;
  if (std::regex_match(s, m, anti)) return {FamilyKind::Antisymmetric, std::stoi(m[1]), 0, 0};
  if (std::regex_match(s, m, piani)) {
    return {FamilyKind::PianiSum, 0, std::stoi(m[1]), std::stoi(m[2])};
  }
  if (s == "Generic") return {};
  throw SerializationError("unknown family '" + s + "'");
}

Json to_json(const IndecomposabilityCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["min_l_eigenvalue"] = c.min_l_eigenvalue;
  j["l_spectrum"] = c.l_spectrum;
  j["family"] = c.family.to_string();
  j["support_check"] = c.support_check;
  j["trials"] = c.sampled_q_trials;
  j["failures"] = c.sampled_q_failures;
  j["seed"] = c.seed;
  j["map_id"] = c.map_id;
  j["support_residual"] = c.support_residual;
  j["min_found_value"] = c.min_found_value;
  return j;
}

IndecomposabilityCertificate certificate_from_json(const Json& j) {
  IndecomposabilityCertificate c;
  try {
    c.verdict = verdict_from_string(get_field<std::string>(j, "verdict"));
  } catch (const std::invalid_argument& e) {
    throw SerializationError(e.what());
  }
  c.min_l_eigenvalue = get_field<double>(j, "min_l_eigenvalue");
  c.l_spectrum = get_field<std::vector<double>>(j, "l_spectrum");
  c.family = family_from_string(get_field<std::string>(j, "family"));
  c.support_check = get_field<bool>(j, "support_check");
  c.sampled_q_trials = get_field<int>(j, "trials");
  c.sampled_q_failures = get_field<int>(j, "failures");
  c.seed = get_field<std::uint64_t>(j, "seed");
  if (j.contains("map_id")) c.map_id = get_field<std::string>(j, "map_id");
  if (j.contains("support_residual")) c.support_residual = get_field<double>(j, "support_residual");
  if (j.contains("min_found_value")) c.min_found_value = get_field<double>(j, "min_found_value");
  return c;
}

Json to_json(const DecompositionReport& r, const Witness& w) {
  Json j;
  j["kind"] = "decomposition";
  j["status"] = r.converged ? "decomposed" : "no decomposition found (numerical)";
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["stalled"] = r.stalled;
  j["p"] = to_json(r.p);
  j["q"] = to_json(r.q);
  j["witness"] = to_json(w);
  return j;
}

Json to_json(const ViolationSearchReport& r, const Witness& w, std::uint64_t seed) {
  Json j;
  j["kind"] = "ppt_violation_search";
  j["certified"] = r.certified;
  j["witness_value"] = r.witness_value;
  j["min_state_eig"] = r.min_state_eig;
  j["min_ppt_eig"] = r.min_ppt_eig;
  j["trace_err"] = r.trace_err;
  j["iterations"] = r.iterations;
  j["best_restart"] = r.best_restart;
  j["repair_weight"] = r.repair_weight;
  j["seed"] = seed;
  j["state"] = to_json(r.state);
  j["witness"] = to_json(w);
  return j;
}

bool revalidate_certificate(const Json& j, const ToleranceConfig& tol) {
  const auto c = certificate_from_json(j);
  if (!c.consistent(tol)) return false;
  if (c.l_spectrum.empty()) return c.verdict != Verdict::CertifiedIndecomposable;
  const double lo = *std::min_element(c.l_spectrum.begin(), c.l_spectrum.end());
  return std::abs(lo - c.min_l_eigenvalue) <= tol.equality && c.sampled_q_failures <= c.sampled_q_trials;
}

bool revalidate_decomposition(const Json& j, const ToleranceConfig& tol) {
  const Witness w = witness_from_json(j.at("witness"), tol);
  const Operator p = operator_from_json(j.at("p"));
  const Operator q = operator_from_json(j.at("q"));
  const double residual = decomposition_residual(w, p, q);
  const double stored = get_field<double>(j, "residual");
  const bool psd = min_eigenvalue(p, tol) >= tol.psd_cutoff && min_eigenvalue(q, tol) >= tol.psd_cutoff;
  return psd && std::abs(residual - stored) <= 1e-12 * std::max(1.0, stored);
}

bool revalidate_search(const Json& j, const ToleranceConfig& tol) {
  const Witness w = witness_from_json(j.at("witness"), tol);
  const Operator rho = operator_from_json(j.at("state"));
  const StateCheck check = check_violation(w, rho, tol);
  const bool claimed = get_field<bool>(j, "certified");
  const double stored = get_field<double>(j, "witness_value");
  return check.certified == claimed &&
         std::abs(check.witness_value - stored) <= 1e-12 * std::max(1.0, std::abs(stored));
}

}  // namespace indecomp
