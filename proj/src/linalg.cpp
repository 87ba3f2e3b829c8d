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

#include "floquet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace floquet::linalg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lexicographic (re, im) comparison of two eigenvector columns.
bool column_less(const ComplexMatrix& w, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    const Complex za = w(i, a);
    const Complex zb = w(i, b);
    if (za.real() != zb.real()) return za.real() < zb.real();
    if (za.imag() != zb.imag()) return za.imag() < zb.imag();
  }
  return false;
}

// Scale each column so its largest-magnitude component is real positive,
// then order columns inside each degenerate value cluster lexicographically.
// Values stay in place; only columns are permuted, which is valid because
// values inside a cluster differ by less than `gap`.
void canonicalize_columns(ComplexMatrix& w, const RealVector& values, double gap) {
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      const double a = std::abs(w(i, j));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    const Complex z = w(imax, j);
    if (std::abs(z) > 0.0) w.col(j) *= std::conj(z) / std::abs(z);
  }
  Eigen::Index start = 0;
  while (start < w.cols()) {
    Eigen::Index end = start + 1;
    while (end < w.cols() && values(end) - values(end - 1) < gap) ++end;
    if (end - start > 1) {
      std::vector<Eigen::Index> order(static_cast<size_t>(end - start));
      std::iota(order.begin(), order.end(), start);
      std::sort(order.begin(), order.end(),
                [&w](Eigen::Index a, Eigen::Index b) { return column_less(w, a, b); });
      ComplexMatrix block(w.rows(), end - start);
      for (Eigen::Index j = 0; j < end - start; ++j) block.col(j) = w.col(order[static_cast<size_t>(j)]);
      w.middleCols(start, end - start) = block;
    }
    start = end;
  }
}

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << who << ": matrix is " << m.rows() << "x" << m.cols() << ", not square";
    throw NotSquareError(os.str());
  }
}

// Diagonalize the projection of `a` onto each cluster of columns of `w`
// whose `values` agree within `tol`, rotating those columns in place.
// Returns the projected eigenvalue per column.
RealVector refine_within_clusters(ComplexMatrix& w, const RealVector& values,
                                  const ComplexMatrix& a, double tol) {
  RealVector out(w.cols());
  Eigen::Index start = 0;
  while (start < w.cols()) {
    Eigen::Index end = start + 1;
    while (end < w.cols() && values(end) - values(end - 1) < tol) ++end;
    const Eigen::Index size = end - start;
    if (size == 1) {
      const ComplexVector col = w.col(start);
      out(start) = (col.adjoint() * (a * col)).value().real();
    } else {
      ComplexMatrix block = w.middleCols(start, size);
      ComplexMatrix proj = block.adjoint() * a * block;
      proj = 0.5 * (proj + proj.adjoint().eval());
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(proj);
      if (es.info() != Eigen::Success) {
        throw ConvergenceError("log_unitary: projected subproblem failed to converge");
      }
      w.middleCols(start, size) = block * es.eigenvectors();
      out.segment(start, size) = es.eigenvalues();
    }
    start = end;
  }
  return out;
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_deviation(const ComplexMatrix& u) {
  if (u.size() == 0) return 0.0;
  ComplexMatrix g = u.adjoint() * u;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff();
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  require_square(m, "eig_hermitian");
  const double scale = max_abs(m);
  const double dev = hermiticity_deviation(m);
  if (dev > kHermiticityTol * std::max(scale, 1.0)) {
    std::ostringstream os;
    os << "eig_hermitian: input is not Hermitian (max|M - M^dag| = " << dev << ")";
    throw NotHermitianError(os.str(), dev);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  if (es.info() != Eigen::Success) {
    throw ConvergenceError("eig_hermitian: iteration failed to converge");
  }
  EigenDecomposition out{es.eigenvalues(), es.eigenvectors()};
  canonicalize_columns(out.eigenvectors, out.eigenvalues, kDegeneracyGap);
  return out;
}

ComplexMatrix unitary_from_hermitian_exponent(const ComplexMatrix& m, double scale) {
  const EigenDecomposition ed = eig_hermitian(m);
  const ComplexVector phases =
      (Complex(0.0, -scale) * ed.eigenvalues.array().cast<Complex>()).exp();
  return ed.eigenvectors * phases.asDiagonal() * ed.eigenvectors.adjoint();
}

UnitaryLog log_unitary(const ComplexMatrix& u) {
  require_square(u, "log_unitary");
  const double dev = unitarity_deviation(u);
  if (dev > kUnitaryInputTol) {
    std::ostringstream os;
    os << "log_unitary: input is not unitary (max|U^dag U - I| = " << dev << ")";
    throw NotUnitaryError(os.str(), dev);
  }
  const Eigen::Index n = u.rows();
  // Commuting Hermitian parts; both expressions are Hermitian bitwise.
  const ComplexMatrix x = 0.5 * (u + u.adjoint().eval());
  const ComplexMatrix y = Complex(0.0, -0.5) * (u - u.adjoint().eval());

  // Joint diagonalization in three passes. A single pass on x cannot separate
  // conjugate phase pairs (cos is even); a y pass inside each x cluster can,
  // and a final x pass fixes bases inside y-degenerate subspaces. Whatever
  // remains degenerate after that shares one eigenphase, so any orthonormal
  // basis is exact. The cluster width 1e-6 keeps cross-cluster leakage,
  // about eps/width, at the 1e-10 level.
  constexpr double cluster_tol = 1e-6;
  EigenDecomposition ex = eig_hermitian(x);
  ComplexMatrix w = ex.eigenvectors;
  RealVector yvals = refine_within_clusters(w, ex.eigenvalues, y, cluster_tol);
  // Re-partition jointly: a new cluster starts where either value jumps.
  RealVector joint(n);
  {
    double offset = 0.0;
    joint(0) = 0.0;
    for (Eigen::Index j = 1; j < n; ++j) {
      if (ex.eigenvalues(j) - ex.eigenvalues(j - 1) >= cluster_tol ||
          std::abs(yvals(j) - yvals(j - 1)) >= cluster_tol) {
        offset += 1.0;
      }
      joint(j) = offset;
    }
  }
  refine_within_clusters(w, joint, x, 0.5);

  // Eigenphase per column from the Rayleigh quotient, folded into (-pi, pi].
  RealVector phases(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex mu = (w.col(j).adjoint() * (u * w.col(j))).value();
    double lam = -std::arg(mu);
    if (lam <= -kPi) lam += 2.0 * kPi;
    phases(j) = lam;
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&phases](Eigen::Index a, Eigen::Index b) { return phases(a) < phases(b); });
  UnitaryLog out;
  out.phases.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.phases(j) = phases(order[static_cast<size_t>(j)]);
    out.eigenvectors.col(j) = w.col(order[static_cast<size_t>(j)]);
  }
  canonicalize_columns(out.eigenvectors, out.phases, kDegeneracyGap);

  const ComplexVector eig_phases =
      (Complex(0.0, -1.0) * out.phases.array().cast<Complex>()).exp();
  const ComplexMatrix rebuilt =
      out.eigenvectors * eig_phases.asDiagonal() * out.eigenvectors.adjoint();
  const double residual = (u - rebuilt).cwiseAbs().maxCoeff();
  if (residual > 1e-9) {
    std::ostringstream os;
    os << "log_unitary: reconstruction residual " << residual << " exceeds 1e-9";
    throw ConvergenceError(os.str());
  }
  return out;
}

double fold_energy(double energy, double omega) {
  double f = energy - omega * std::round(energy / omega);
  if (f <= -0.5 * omega) f += omega;
  if (f > 0.5 * omega) f -= omega;
  return f;
}

}  // namespace floquet::linalg
