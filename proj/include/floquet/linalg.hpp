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

#include <Eigen/Dense>
#include <complex>

#include "floquet/errors.hpp"

namespace floquet::linalg {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

/// Hermiticity acceptance, relative to max|M|.
inline constexpr double kHermiticityTol = 1e-12;
/// Residual bound for eigendecompositions and functions built on them.
inline constexpr double kEigTol = 1e-10;
/// Unitarity acceptance for log_unitary inputs. Looser than kEigTol so that
/// one-period propagators from the fixed-step integrator (drift bound 1e-8)
/// are accepted.
inline constexpr double kUnitaryInputTol = 1e-8;
/// Eigenvalues closer than this are treated as one degenerate cluster.
inline constexpr double kDegeneracyGap = 1e-9;

double max_abs(const ComplexMatrix& m);

/// max|M - M^dag|; 0 for empty matrices.
double hermiticity_deviation(const ComplexMatrix& m);

/// max|U^dag U - I|.
double unitarity_deviation(const ComplexMatrix& u);

/// Eigenpairs of a Hermitian matrix: M = W diag(eigenvalues) W^dag.
///
/// eigenvalues are ascending; column j of eigenvectors pairs with
/// eigenvalues[j]. Columns are orthonormal. Output is deterministic for
/// bitwise-identical input: inside each degenerate cluster (gap below
/// kDegeneracyGap) columns are phase-fixed (largest-magnitude component made
/// real positive) and ordered lexicographically.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Throws NotSquareError, NotHermitianError, ConvergenceError.
EigenDecomposition eig_hermitian(const ComplexMatrix& m);

/// exp(-i * scale * M) for Hermitian M, computed as W e^{-i scale L} W^dag.
ComplexMatrix unitary_from_hermitian_exponent(const ComplexMatrix& m, double scale);

/// Eigenphases of a unitary matrix: U = W e^{-i diag(phases)} W^dag with each
/// phase in (-pi, pi].
///
/// Route: U = X + iY with X = (U+U^dag)/2 and Y = (U-U^dag)/(2i) commuting
/// Hermitian matrices; diagonalize X, then re-diagonalize Y within each
/// X-eigenvalue cluster (this separates conjugate phase pairs +t, -t which X
/// alone cannot), and read the phase off the joint eigenvalue cos - i sin.
/// Phases are returned ascending with their paired columns.
struct UnitaryLog {
  RealVector phases;
  ComplexMatrix eigenvectors;
};

/// Throws NotSquareError, NotUnitaryError, ConvergenceError.
UnitaryLog log_unitary(const ComplexMatrix& u);

/// Fold an energy into (-omega/2, omega/2].
double fold_energy(double energy, double omega);

}  // namespace floquet::linalg
