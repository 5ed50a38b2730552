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

// JSON artifacts. Matrices are {"dim": n, "entries": [[re, im], ...]} in
// row-major order; every other artifact embeds matrices in that form.

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "indecomp/criterion.hpp"
#include "indecomp/linalg.hpp"
#include "indecomp/maps.hpp"
#include "indecomp/optim.hpp"

namespace indecomp {

using Json = nlohmann::ordered_json;

class SerializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Operator& op);
Operator operator_from_json(const Json& j);

Json to_json(const KetVector& k);
KetVector ket_from_json(const Json& j);

/// {dim_in, dim_out, transposed_input, kraus_basis, coeff}; `family` is an
/// optional descriptive label written only when non-empty.
Json to_json(const KrausPairMap& m, const std::string& family = {});
KrausPairMap map_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j, const ToleranceConfig& tol = {});

Json to_json(const HermitianBasis& b);

FamilyTag family_from_string(const std::string& s);

/// {verdict, min_l_eigenvalue, l_spectrum, family, support_check, trials, failures, seed, ...}
Json to_json(const IndecomposabilityCertificate& c);
IndecomposabilityCertificate certificate_from_json(const Json& j);

/// Embeds the witness so the residual can be recomputed from the file alone.
Json to_json(const DecompositionReport& r, const Witness& w);
/// Embeds the witness and the full candidate state.
Json to_json(const ViolationSearchReport& r, const Witness& w, std::uint64_t seed);

/// Standalone re-validation from an emitted artifact. Each returns true when
/// the stored claims agree with a fresh recomputation from the stored data.
bool revalidate_certificate(const Json& j, const ToleranceConfig& tol = {});
bool revalidate_decomposition(const Json& j, const ToleranceConfig& tol = {});
bool revalidate_search(const Json& j, const ToleranceConfig& tol = {});

}  // namespace indecomp
