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

namespace indecomp {

/// Numerical thresholds shared by every module. The CLI exposes each field
/// as a flag; library entry points take a ToleranceConfig by const reference
/// and default-construct it when the caller does not care.
struct ToleranceConfig {
  /// max |A - A^dagger| accepted for an operator that must be Hermitian.
  double hermiticity = 1e-10;
  /// Smallest eigenvalue still counted as positive semidefinite.
  double psd_cutoff = -1e-9;
  /// Generic equality threshold (spectra, witness values, residual checks).
  double equality = 1e-9;
};

}  // namespace indecomp
