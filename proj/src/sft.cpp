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

#include "floquet/sft.hpp"

#include <cmath>
#include <sstream>

namespace floquet::sft {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

Eigen::Index SftHamiltonian::block_offset(int n) const {
  const auto idx = n_set.index_of(n);
  if (!idx) {
    std::ostringstream os;
    os << "SftHamiltonian: harmonic " << n << " is outside the basis";
    throw IndexOutOfRangeError(os.str());
  }
  return static_cast<Eigen::Index>(*idx) * dim_a;
}

SftHamiltonian build_sft(const model::FourierHamiltonian& h,
                         const basis::SingleModeBasis& n_set) {
  h.validate();
  const auto folded = h.fold_single_mode();
  const int na = h.dim_a;
  const Eigen::Index dim = static_cast<Eigen::Index>(n_set.size()) * na;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < n_set.size(); ++i) {
    const int n = n_set.at(i);
    m.block(i * na, i * na, na, na) =
        Complex(n * h.modes.omega_b()) * ComplexMatrix::Identity(na, na);
    for (const auto& [r, c] : folded) {
      // Shift term: harmonic-r coupling sends |n> to |n + r>; targets
      // outside the basis are dropped.
      const auto j = n_set.index_of(n + r);
      if (j) m.block(*j * na, i * na, na, na) += c;
    }
  }
  return SftHamiltonian{n_set, na, h.modes.omega_b(), std::move(m)};
}

QuasiEnergySpectrum sft_spectrum(const SftHamiltonian& sh) {
  const auto ed = linalg::eig_hermitian(sh.matrix);
  QuasiEnergySpectrum s;
  s.energies = ed.eigenvalues;
  s.vectors = ed.eigenvectors;
  s.fold_omega = sh.omega_b;
  s.ladder_reps.resize(s.energies.size());
  for (Eigen::Index j = 0; j < s.energies.size(); ++j) {
    s.ladder_reps(j) = linalg::fold_energy(s.energies(j), sh.omega_b);
  }
  return s;
}

SftPropagator::SftPropagator(const SftHamiltonian& sh)
    : SftPropagator(sh, sft_spectrum(sh)) {}

SftPropagator::SftPropagator(const SftHamiltonian& sh, const QuasiEnergySpectrum& spectrum)
    : dim_a_(sh.dim_a), omega_b_(sh.omega_b) {
  if (!sh.n_set.contains(0)) {
    throw ZeroBlockMissingError("SftPropagator: the basis must contain the n = 0 block");
  }
  harmonics_.reserve(static_cast<size_t>(sh.n_set.size()));
  for (int i = 0; i < sh.n_set.size(); ++i) harmonics_.push_back(sh.n_set.at(i));
  energies_ = spectrum.energies;
  vectors_ = spectrum.vectors;
  const Eigen::Index src = sh.block_offset(0);
  source_rows_conj_ = vectors_.middleRows(src, dim_a_).conjugate();
}

ComplexMatrix SftPropagator::amplitudes(double t) const {
  const Eigen::Index m = energies_.size();
  ComplexVector evo(m);
  for (Eigen::Index j = 0; j < m; ++j) evo(j) = std::exp(Complex(0.0, -energies_(j) * t));
  ComplexMatrix g = ComplexMatrix::Zero(dim_a_, dim_a_);
  for (int alpha = 0; alpha < dim_a_; ++alpha) {
    // e^{-iHt}|0, alpha> through the spectrum, then the harmonic phase sum.
    const ComplexVector weights = evo.cwiseProduct(source_rows_conj_.row(alpha).transpose());
    const ComplexVector column = vectors_ * weights;
    for (size_t i = 0; i < harmonics_.size(); ++i) {
      const Complex phase = std::exp(Complex(0.0, harmonics_[i] * omega_b_ * t));
      for (int beta = 0; beta < dim_a_; ++beta) {
        g(beta, alpha) += phase * column(static_cast<Eigen::Index>(i) * dim_a_ + beta);
      }
    }
  }
  return g;
}

std::complex<double> SftPropagator::amplitude(double t, Eigen::Index alpha,
                                              Eigen::Index beta) const {
  if (alpha < 0 || alpha >= dim_a_ || beta < 0 || beta >= dim_a_) {
    throw IndexOutOfRangeError("SftPropagator: atomic index out of range");
  }
  return amplitudes(t)(beta, alpha);
}

std::complex<double> shirley_propagator(const SftHamiltonian& sh, double t,
                                        Eigen::Index alpha, Eigen::Index beta) {
  return SftPropagator(sh).amplitude(t, alpha, beta);
}

}  // namespace floquet::sft
