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

#include "floquet/model.hpp"

#include <cmath>
#include <sstream>

namespace floquet::model {

using linalg::Complex;
using linalg::ComplexMatrix;

void FourierHamiltonian::validate() const {
  if (dim_a < 1) throw InvalidArgumentError("FourierHamiltonian: dim_a must be >= 1");
  double scale = 1.0;
  for (const auto& [pq, c] : coeffs) scale = std::max(scale, linalg::max_abs(c));
  for (const auto& [pq, c] : coeffs) {
    const auto [p, q] = pq;
    if (c.rows() != dim_a || c.cols() != dim_a) {
      std::ostringstream os;
      os << "FourierHamiltonian: coefficient (" << p << ", " << q << ") is " << c.rows()
         << "x" << c.cols() << ", expected " << dim_a << "x" << dim_a;
      throw InvalidArgumentError(os.str());
    }
    const auto partner = coeffs.find({-p, -q});
    if (partner == coeffs.end()) {
      std::ostringstream os;
      os << "FourierHamiltonian: coefficient (" << p << ", " << q << ") has no (" << -p
         << ", " << -q << ") partner";
      throw NotHermitianError(os.str(), linalg::max_abs(c));
    }
    const double dev = linalg::max_abs(partner->second - c.adjoint());
    if (dev > linalg::kHermiticityTol * scale) {
      std::ostringstream os;
      os << "FourierHamiltonian: coefficient pair (" << p << ", " << q
         << ") violates C(-p,-q) = C(p,q)^dag (deviation " << dev << ")";
      throw NotHermitianError(os.str(), dev);
    }
  }
}

ComplexMatrix FourierHamiltonian::evaluate_time(double t) const {
  validate();
  ComplexMatrix h = ComplexMatrix::Zero(dim_a, dim_a);
  const double w1 = modes.omega1();
  const double w2 = modes.omega2();
  for (const auto& [pq, c] : coeffs) {
    const auto [p, q] = pq;
    const double arg = p * (w1 * t + phi1) + q * (w2 * t + phi2);
    h += std::exp(Complex(0.0, arg)) * c;
  }
  return h;
}

std::map<int, ComplexMatrix> FourierHamiltonian::fold_single_mode() const {
  validate();
  std::map<int, ComplexMatrix> folded;
  for (const auto& [pq, c] : coeffs) {
    const auto [p, q] = pq;
    const int r = p * modes.N1() + q * modes.N2();
    const Complex phase = std::exp(Complex(0.0, p * phi1 + q * phi2));
    auto [it, inserted] = folded.try_emplace(r, ComplexMatrix::Zero(dim_a, dim_a));
    it->second += phase * c;
  }
  return folded;
}

int FourierHamiltonian::max_abs_p() const {
  int m = 0;
  for (const auto& [pq, c] : coeffs) m = std::max(m, std::abs(pq.first));
  return m;
}

int FourierHamiltonian::max_abs_q() const {
  int m = 0;
  for (const auto& [pq, c] : coeffs) m = std::max(m, std::abs(pq.second));
  return m;
}

FourierHamiltonian make_omega_2omega_example(double phi_2omega) {
  const double e_upper = 1.5;
  const double coupling = 1.0;  // V
  ComplexMatrix h0 = ComplexMatrix::Zero(2, 2);
  h0(1, 1) = e_upper;
  ComplexMatrix sx(2, 2);
  sx << 0.0, 1.0, 1.0, 0.0;

  FourierHamiltonian h{2, basis::make_mode_pair(1, 2, 1.0), {}, 0.0, phi_2omega};
  h.coeffs[{0, 0}] = h0;
  h.coeffs[{1, 0}] = coupling * sx;
  h.coeffs[{-1, 0}] = coupling * sx;
  h.coeffs[{0, 1}] = coupling * sx;
  h.coeffs[{0, -1}] = coupling * sx;
  return h;
}

}  // namespace floquet::model
