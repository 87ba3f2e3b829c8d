// Copyright (c) 2026 the floquet toolkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace floqcli {

/// Configuration load/validation failure; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoefficientSpec {
  int p = 0;
  int q = 0;
  std::vector<std::complex<double>> matrix;  // dim_a * dim_a, row-major
};

/// Parsed experiment description with defaults filled in. The schema is
/// strict: unknown keys are rejected at load.
struct ExperimentConfig {
  // system
  bool builtin = true;           // the omega,2omega benchmark
  double phi_2omega = 0.0;       // builtin only
  int dim_a = 2;                 // custom only
  int n1 = 1;
  int n2 = 2;
  double omega_b = 1.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  std::vector<CoefficientSpec> coefficients;

  // truncation
  int sft_n_max = 10;
  int mmft_n_max = 9;
  int orbit_n_min = -8;
  int orbit_n_max = 8;
  int orbit_n_ell = 12;

  // time grid
  double t_start = 0.0;
  double t_end = 6.28318530717958647692;
  int time_points = 200;

  // phase grid (spectrum sweep)
  int phase_points = 64;

  // integrator
  double dt = 0.0;  // 0 selects the library default period/4096
  int renormalize_every = 0;

  // outputs
  std::string format = "csv";  // csv | json
  std::string out_path = "-";  // "-" = stdout

  std::vector<std::string> engines{"tdse", "sft", "mmft"};

  /// Canonical JSON of the effective configuration (defaults and overrides
  /// applied); the provenance hash is taken over this string.
  std::string canonical_json() const;
};

/// Load from a JSON file; empty path yields the default configuration.
ExperimentConfig load_config(const std::string& path);

struct Overrides {
  std::optional<double> phi2;
  std::optional<int> sft_n_max;
  std::optional<int> mmft_n_max;
  std::optional<double> t_end;
  std::optional<int> points;
  std::vector<std::string> engines;
  std::optional<std::string> out_path;
  std::optional<std::string> format;
};

void apply_overrides(ExperimentConfig& cfg, const Overrides& ov);

}  // namespace floqcli
