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

#include <optional>

#include "floquet/basis.hpp"
#include "floquet/linalg.hpp"
#include "floquet/model.hpp"

namespace floquet::sft {

/// The single-mode Floquet Hamiltonian on the truncated F (x) A space.
/// Layout: harmonic index n outer (ascending over the basis), atomic index
/// inner. Diagonal blocks are C_fold(0) + n*omega_B*I; block (n', n'') is
/// C_fold(n' - n'') when both harmonics are in the basis; couplings reaching
/// outside the basis are dropped without renormalization.
struct SftHamiltonian {
  basis::SingleModeBasis n_set;
  int dim_a = 0;
  double omega_b = 0.0;
  linalg::ComplexMatrix matrix;

  Eigen::Index size() const { return matrix.rows(); }
  /// Row/column offset of the block for harmonic n (n must be in the basis).
  Eigen::Index block_offset(int n) const;
};

SftHamiltonian build_sft(const model::FourierHamiltonian& h,
                         const basis::SingleModeBasis& n_set);

/// Eigenpairs of a Floquet-type Hamiltonian plus folding metadata.
/// ladder_reps[j] is energies[j] folded into (-fold_omega/2, fold_omega/2].
/// k_label is set for translation-symmetry block spectra.
struct QuasiEnergySpectrum {
  linalg::RealVector energies;
  linalg::ComplexMatrix vectors;
  linalg::RealVector ladder_reps;
  double fold_omega = 0.0;
  std::optional<double> k_label;
};

QuasiEnergySpectrum sft_spectrum(const SftHamiltonian& sh);

/// Propagator amplitudes from a diagonalized SFT Hamiltonian:
///   G(t)[beta][alpha] = sum_{n in basis} e^{i n omega_B t}
///                       <n, beta| e^{-i H t} |0, alpha>
/// with the matrix exponential evaluated through the spectrum. The basis must
/// contain n = 0. Caches the eigendecomposition, so amplitudes(t) is cheap on
/// a time grid.
class SftPropagator {
 public:
  explicit SftPropagator(const SftHamiltonian& sh);
  /// Reuse an already computed spectrum of the same Hamiltonian.
  SftPropagator(const SftHamiltonian& sh, const QuasiEnergySpectrum& spectrum);

  /// N_A x N_A amplitude matrix; entry (beta, alpha).
  linalg::ComplexMatrix amplitudes(double t) const;
  std::complex<double> amplitude(double t, Eigen::Index alpha, Eigen::Index beta) const;

 private:
  int dim_a_;
  double omega_b_;
  std::vector<int> harmonics_;
  linalg::RealVector energies_;
  linalg::ComplexMatrix vectors_;
  linalg::ComplexMatrix source_rows_conj_;  // conj(W) rows of the |0, alpha> slots
};

/// One-shot convenience form; diagonalizes on every call.
std::complex<double> shirley_propagator(const SftHamiltonian& sh, double t,
                                        Eigen::Index alpha, Eigen::Index beta);

}  // namespace floquet::sft
