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

#include <map>
#include <utility>

#include "floquet/basis.hpp"
#include "floquet/linalg.hpp"

namespace floquet::model {

/// A driven Hamiltonian given by its two-mode Fourier coefficients:
///
///   H(t) = sum_{p,q} C(p,q) exp(i p (omega_1 t + phi1) + i q (omega_2 t + phi2))
///
/// in units with hbar = 1. The phases live here, not inside the coefficient
/// matrices, so one canonical coefficient set describes the whole phase
/// family. Hermiticity of H(t) requires C(-p,-q) = C(p,q)^dag for every
/// stored coefficient; validate() enforces this.
struct FourierHamiltonian {
  int dim_a = 0;
  basis::ModePair modes;
  std::map<std::pair<int, int>, linalg::ComplexMatrix> coeffs;
  double phi1 = 0.0;
  double phi2 = 0.0;

  /// Throws NotHermitianError naming the offending (p, q), or
  /// InvalidArgumentError for shape mismatches.
  void validate() const;

  /// H(t). Result is Hermitian within 1e-12 relative to its magnitude.
  linalg::ComplexMatrix evaluate_time(double t) const;

  /// Collapse onto the common base frequency: coefficient of exp(i r omega_B t)
  /// is sum over all (p,q) with p*N1 + q*N2 = r of e^{i(p phi1 + q phi2)} C(p,q).
  /// The phases are folded in, so synthesizing this single-mode series
  /// reproduces evaluate_time exactly.
  std::map<int, linalg::ComplexMatrix> fold_single_mode() const;

  /// Largest |p| and |q| over stored coefficients (0 for an empty map).
  int max_abs_p() const;
  int max_abs_q() const;
};

/// The two-level benchmark system driven at omega and 2*omega:
///   H(t) = diag(0, 3/2) + 2V (cos(w t) + cos(2 w t + phi)) sigma_x
/// with E_u = 3/2, E_l = 0, omega_B = 1, V = 1, realized as N1 = 1, N2 = 2,
/// coefficients {(0,0): diag, (+-1,0): V sx, (0,+-1): V sx}, phi1 = 0 and
/// phi2 = phi carrying the relative phase.
FourierHamiltonian make_omega_2omega_example(double phi_2omega);

}  // namespace floquet::model
