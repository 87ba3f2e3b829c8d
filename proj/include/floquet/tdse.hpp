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

#include "floquet/linalg.hpp"
#include "floquet/model.hpp"

namespace floquet::tdse {

/// Fixed-step classical 4th-order Runge-Kutta configuration.
/// renormalize_every = 0 disables the periodic re-orthonormalization
/// (modified Gram-Schmidt); it is off by default so the reference results
/// stay unbiased.
struct IntegratorConfig {
  double dt = 0.0;
  int renormalize_every = 0;
};

/// dt = period / 4096, the default step for a given model.
IntegratorConfig default_config(const model::FourierHamiltonian& h);

/// Unitarity drift bound enforced after integration.
inline constexpr double kUnitarityDriftTol = 1e-8;

/// Propagate the full U(t_end, 0) by integrating dU/dt = -i H(t) U column by
/// column (one RK4 sweep advances the whole matrix). Negative t_end is
/// rejected. Throws NonUnitaryDriftError when the drift bound fails, which
/// signals that dt is too large.
linalg::ComplexMatrix integrate(const model::FourierHamiltonian& h, double t_end,
                                const IntegratorConfig& cfg);

/// Constructive Floquet decomposition from the one-period propagator:
/// U(T,0) = W e^{-i diag(quasi_phases)} W^dag, and
/// Phi(t) = U(t mod T, 0) W e^{i diag(quasi_phases) (t mod T)/T}, so that
/// U(t,0) = Phi(t) e^{-i diag(quasi_phases) t/T} Phi(0)^dag with Phi periodic.
/// Quasi-energies are quasi_phases / T, in (-omega_B/2, omega_B/2].
class MonodromyDecomposition {
 public:
  MonodromyDecomposition(model::FourierHamiltonian h, IntegratorConfig cfg);

  double period() const { return period_; }
  const linalg::RealVector& quasi_phases() const { return phases_; }
  const linalg::ComplexMatrix& w() const { return w_; }
  linalg::RealVector quasi_energies() const { return phases_ / period_; }

  /// Phi(t); equals w() at t = 0.
  linalg::ComplexMatrix phi(double t) const;
  /// U(t, 0) reconstructed as Phi(t) e^{-i L t/T} Phi(0)^dag; uses the
  /// stroboscopic decomposition U(t mod T, 0) U(T, 0)^n internally, so only
  /// one fractional period is ever integrated.
  linalg::ComplexMatrix propagator(double t) const;
  /// Floquet solution column psi_j(t) = Phi_{:,j}(t) e^{-i E_j t}.
  linalg::ComplexVector column_solution(Eigen::Index j, double t) const;

 private:
  model::FourierHamiltonian model_;
  IntegratorConfig config_;
  double period_;
  linalg::RealVector phases_;
  linalg::ComplexMatrix w_;
};

MonodromyDecomposition monodromy_floquet(const model::FourierHamiltonian& h,
                                         const IntegratorConfig& cfg);

}  // namespace floquet::tdse
