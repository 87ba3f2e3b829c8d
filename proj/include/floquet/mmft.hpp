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

#include <variant>
#include <vector>

#include "floquet/basis.hpp"
#include "floquet/linalg.hpp"
#include "floquet/model.hpp"
#include "floquet/sft.hpp"

namespace floquet::mmft {

/// Open square truncation {(n1, n2) : -n_max <= n1, n2 <= n_max}.
/// Ordering contract: n1 outer ascending, n2 inner ascending, atomic index
/// innermost once tensored.
class SquareBasis {
 public:
  explicit SquareBasis(int n_max);

  int n_max() const { return n_max_; }
  int side() const { return 2 * n_max_ + 1; }
  int size() const { return side() * side(); }
  basis::LatticePoint point(int slot) const;
  std::optional<int> slot(const basis::LatticePoint& p) const;

 private:
  int n_max_;
};

/// The two-mode Floquet Hamiltonian on a finite F1 (x) F2 (x) A basis.
///
/// Diagonal F-part: n1*omega_1 + n2*omega_2 per lattice point. Couplings:
/// C(p,q) with phase factor e^{i(p phi1 + q phi2)} connects a point to the
/// point displaced by (p, q). Open (square) mode drops couplings leaving the
/// basis; periodic (orbit) mode wraps them cyclically along translation
/// orbits, which makes the matrix commute with the translation permutation
/// exactly.
struct MmftHamiltonian {
  std::variant<SquareBasis, basis::OrbitBasis> lattice;
  int dim_a = 0;
  basis::ModePair modes;
  linalg::ComplexMatrix matrix;

  bool periodic() const { return std::holds_alternative<basis::OrbitBasis>(lattice); }
  const SquareBasis& square() const;
  const basis::OrbitBasis& orbit() const;
  Eigen::Index size() const { return matrix.rows(); }
};

MmftHamiltonian build_mmft(const model::FourierHamiltonian& h, int n_max);
MmftHamiltonian build_mmft_periodic(const model::FourierHamiltonian& h,
                                    const basis::OrbitBasis& ob);

/// Unitary permutation advancing every orbit slot (n, ell) to (n, ell + 1),
/// cyclic over the ell window; its order divides N_L.
struct TranslationMatrix {
  std::vector<int> slot_image;  // slot -> image slot
  int ell_count = 0;

  /// Dense matrix on the tensored basis (identity on the atomic factor).
  linalg::ComplexMatrix to_dense(int dim_a) const;
};

TranslationMatrix translation_matrix(const basis::OrbitBasis& ob);

/// Block diagonalization of a periodic MMFT Hamiltonian by translation
/// eigenvalue e^{-ik}. k grid: k = 2 pi j / N_L with j in [-N_L/2, N_L/2 - 1]
/// for even N_L and j in [-(N_L-1)/2, (N_L-1)/2] for odd N_L. The transform
/// is an explicit discrete-Fourier change of basis; block b lives on the
/// (n, k_b) vectors with n ascending, atomic index innermost.
struct KBlockDecomposition {
  std::vector<double> k_values;
  std::vector<linalg::ComplexMatrix> blocks;
  /// Change-of-basis matrix Q (orbit basis -> k outer, n inner, atomic
  /// innermost); column groups of size |N|*dim_a per k.
  linalg::ComplexMatrix transform;
  int dim_a = 0;
  double omega_b = 0.0;

  /// Lift a block eigenvector back to the orbit basis.
  linalg::ComplexVector to_orbit_vector(int k_index, const linalg::ComplexVector& block_vec) const;
};

/// Throws NotPeriodicError when H was built on a square basis.
KBlockDecomposition k_block_decompose(const MmftHamiltonian& h);

/// Spectrum of one k block, labeled with its k value.
sft::QuasiEnergySpectrum k_block_spectrum(const KBlockDecomposition& kd, int k_index);

/// Raw spectrum of a two-mode Hamiltonian (square or periodic), folded by
/// the base frequency. Square-basis eigenvalues are reported as they come:
/// mid-spectrum entries may belong to other relative phases or be truncation
/// artifacts, so they are not quasi-energies of the given drive in general.
sft::QuasiEnergySpectrum mmft_spectrum(const MmftHamiltonian& h);

/// Propagator amplitudes from a diagonalized square-basis MMFT Hamiltonian:
///   G(t)[beta][alpha] = sum_{n1,n2} e^{i(n1 w1 + n2 w2) t}
///                       <n1, n2, beta| e^{-i H t} |0, 0, alpha>.
class MmftPropagator {
 public:
  explicit MmftPropagator(const MmftHamiltonian& h);
  /// Reuse an already computed spectrum of the same Hamiltonian.
  MmftPropagator(const MmftHamiltonian& h, const sft::QuasiEnergySpectrum& spectrum);

  linalg::ComplexMatrix amplitudes(double t) const;
  std::complex<double> amplitude(double t, Eigen::Index alpha, Eigen::Index beta) const;

 private:
  int dim_a_;
  std::vector<double> slot_freqs_;  // n1*w1 + n2*w2 per lattice slot
  linalg::RealVector energies_;
  linalg::ComplexMatrix vectors_;
  linalg::ComplexMatrix source_rows_conj_;
};

/// One-shot convenience form; diagonalizes on every call.
std::complex<double> mmft_propagator(const MmftHamiltonian& h, double t,
                                     Eigen::Index alpha, Eigen::Index beta);

/// Entrywise deviation between the square-basis H(phi1, phi2) and the
/// conjugation of H(0, 0) by the diagonal phase unitaries
/// U_F1(phi1) (x) U_F2(phi2) (x) I. The conjugation is truncation-exact, so
/// the deviation is at rounding level; its consequence is that square-basis
/// eigenvalues are independent of the drive phases.
double phase_shift_conjugation_check(const model::FourierHamiltonian& h,
                                     double phi1, double phi2, int n_max);

/// Finite-matrix check of the demotion/promotion relations between the
/// single-mode and two-mode Floquet Hamiltonians. D sums two-mode slots onto
/// their total harmonic; P places each harmonic on its canonical lattice
/// point. On columns at least `margin` away from the square truncation edge,
/// H_F D - D H_F1F2 vanishes, and D P is the identity on the harmonics whose
/// canonical point lies inside the square.
struct IntertwiningReport {
  double intertwining_deviation = 0.0;
  double dp_identity_deviation = 0.0;
};

/// Throws MarginTooSmallError when margin < max|p| + max|q| or when the
/// interior is empty.
IntertwiningReport demotion_intertwining_check(const model::FourierHamiltonian& h,
                                               int n_max, int margin);

}  // namespace floquet::mmft
