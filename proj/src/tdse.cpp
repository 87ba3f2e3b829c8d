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

#include "floquet/tdse.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace floquet::tdse {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

namespace {

// Flattened coefficient list so the hot loop avoids map lookups and
// revalidation.
class Evaluator {
 public:
  explicit Evaluator(const model::FourierHamiltonian& h) : dim_(h.dim_a) {
    h.validate();
    terms_.reserve(h.coeffs.size());
    for (const auto& [pq, c] : h.coeffs) {
      const auto [p, q] = pq;
      terms_.push_back({p * h.modes.omega1() + q * h.modes.omega2(),
                        p * h.phi1 + q * h.phi2, c});
    }
  }

  ComplexMatrix at(double t) const {
    ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& term : terms_) {
      out += std::exp(Complex(0.0, term.freq * t + term.phase)) * term.coeff;
    }
    return out;
  }

 private:
  struct Term {
    double freq;
    double phase;
    ComplexMatrix coeff;
  };
  int dim_;
  std::vector<Term> terms_;
};

void rk4_step(const Evaluator& ev, double t, double dt, ComplexMatrix& u) {
  const Complex mi(0.0, -1.0);
  const ComplexMatrix k1 = mi * (ev.at(t) * u);
  const ComplexMatrix k2 = mi * (ev.at(t + 0.5 * dt) * (u + 0.5 * dt * k1));
  const ComplexMatrix k3 = mi * (ev.at(t + 0.5 * dt) * (u + 0.5 * dt * k2));
  const ComplexMatrix k4 = mi * (ev.at(t + dt) * (u + dt * k3));
  u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Modified Gram-Schmidt on the columns.
void orthonormalize(ComplexMatrix& u) {
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      const Complex overlap = (u.col(i).adjoint() * u.col(j)).value();
      u.col(j) -= overlap * u.col(i);
    }
    u.col(j) /= u.col(j).norm();
  }
}

}  // namespace

IntegratorConfig default_config(const model::FourierHamiltonian& h) {
  return IntegratorConfig{h.modes.period() / 4096.0, 0};
}

ComplexMatrix integrate(const model::FourierHamiltonian& h, double t_end,
                        const IntegratorConfig& cfg) {
  if (t_end < 0.0) {
    throw InvalidArgumentError("integrate: negative evolution time is not supported");
  }
  if (!(cfg.dt > 0.0)) {
    throw InvalidArgumentError("integrate: dt must be positive");
  }
  const Evaluator ev(h);
  ComplexMatrix u = ComplexMatrix::Identity(h.dim_a, h.dim_a);
  const auto full_steps = static_cast<long long>(std::floor(t_end / cfg.dt));
  for (long long i = 0; i < full_steps; ++i) {
    rk4_step(ev, static_cast<double>(i) * cfg.dt, cfg.dt, u);
    if (cfg.renormalize_every > 0 && (i + 1) % cfg.renormalize_every == 0) {
      orthonormalize(u);
    }
  }
  const double rem = t_end - static_cast<double>(full_steps) * cfg.dt;
  if (rem > 1e-9 * cfg.dt) {
    rk4_step(ev, static_cast<double>(full_steps) * cfg.dt, rem, u);
  }
  const double drift = linalg::unitarity_deviation(u);
  if (drift > kUnitarityDriftTol) {
    std::ostringstream os;
    os << "integrate: unitarity drift " << drift << " exceeds " << kUnitarityDriftTol
       << "; reduce dt";
    throw NonUnitaryDriftError(os.str(), drift);
  }
  return u;
}

MonodromyDecomposition::MonodromyDecomposition(model::FourierHamiltonian h,
                                               IntegratorConfig cfg)
    : model_(std::move(h)), config_(cfg), period_(model_.modes.period()) {
  const ComplexMatrix u_period = integrate(model_, period_, config_);
  const linalg::UnitaryLog ul = linalg::log_unitary(u_period);
  phases_ = ul.phases;
  w_ = ul.eigenvectors;
}

ComplexMatrix MonodromyDecomposition::phi(double t) const {
  if (t < 0.0) {
    throw InvalidArgumentError("MonodromyDecomposition: negative time is not supported");
  }
  const double cycles = std::floor(t / period_);
  const double tau = t - cycles * period_;
  const ComplexMatrix u_tau = integrate(model_, tau, config_);
  ComplexVector ph(phases_.size());
  for (Eigen::Index j = 0; j < phases_.size(); ++j) {
    ph(j) = std::exp(Complex(0.0, phases_(j) * tau / period_));
  }
  return u_tau * w_ * ph.asDiagonal();
}

ComplexMatrix MonodromyDecomposition::propagator(double t) const {
  const ComplexMatrix phi_t = phi(t);
  ComplexVector ph(phases_.size());
  for (Eigen::Index j = 0; j < phases_.size(); ++j) {
    ph(j) = std::exp(Complex(0.0, -phases_(j) * t / period_));
  }
  // Phi(0) = W.
  return phi_t * ph.asDiagonal() * w_.adjoint();
}

ComplexVector MonodromyDecomposition::column_solution(Eigen::Index j, double t) const {
  if (j < 0 || j >= phases_.size()) {
    throw IndexOutOfRangeError("column_solution: column index out of range");
  }
  const double energy = phases_(j) / period_;
  return phi(t).col(j) * std::exp(Complex(0.0, -energy * t));
}

MonodromyDecomposition monodromy_floquet(const model::FourierHamiltonian& h,
                                         const IntegratorConfig& cfg) {
  return MonodromyDecomposition(h, cfg);
}

}  // namespace floquet::tdse
