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

#include "floquet/mmft.hpp"

#include <cmath>
#include <sstream>

namespace floquet::mmft {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void require_same_modes(const basis::ModePair& a, const basis::ModePair& b,
                        const char* who) {
  if (a.N1() != b.N1() || a.N2() != b.N2() || a.omega_b() != b.omega_b()) {
    std::ostringstream os;
    os << who << ": model and basis disagree on the mode pair";
    throw InvalidArgumentError(os.str());
  }
}

}  // namespace

SquareBasis::SquareBasis(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw InvalidArgumentError("SquareBasis: n_max must be >= 0");
}

basis::LatticePoint SquareBasis::point(int slot) const {
  return basis::LatticePoint{slot / side() - n_max_, slot % side() - n_max_};
}

std::optional<int> SquareBasis::slot(const basis::LatticePoint& p) const {
  if (std::abs(p.n1) > n_max_ || std::abs(p.n2) > n_max_) return std::nullopt;
  return (p.n1 + n_max_) * side() + (p.n2 + n_max_);
}

const SquareBasis& MmftHamiltonian::square() const {
  if (periodic()) throw InvalidArgumentError("MmftHamiltonian: basis is periodic, not square");
  return std::get<SquareBasis>(lattice);
}

const basis::OrbitBasis& MmftHamiltonian::orbit() const {
  if (!periodic()) throw NotPeriodicError("MmftHamiltonian: basis is square, not periodic");
  return std::get<basis::OrbitBasis>(lattice);
}

MmftHamiltonian build_mmft(const model::FourierHamiltonian& h, int n_max) {
  h.validate();
  const SquareBasis sq(n_max);
  const int na = h.dim_a;
  const double wb = h.modes.omega_b();
  const Eigen::Index dim = static_cast<Eigen::Index>(sq.size()) * na;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (int s = 0; s < sq.size(); ++s) {
    const basis::LatticePoint p = sq.point(s);
    // n1*w1 + n2*w2 == (n1 N1 + n2 N2) * w_B; the total-harmonic form keeps
    // the diagonal bitwise identical across bases and with the SFT build.
    m.block(s * na, s * na, na, na) =
        Complex(p.n(h.modes) * wb) * ComplexMatrix::Identity(na, na);
    for (const auto& [pq, c] : h.coeffs) {
      const auto tgt = sq.slot(basis::LatticePoint{p.n1 + pq.first, p.n2 + pq.second});
      if (!tgt) continue;  // couplings leaving the square are dropped
      const Complex phase =
          std::exp(Complex(0.0, pq.first * h.phi1 + pq.second * h.phi2));
      m.block(*tgt * na, s * na, na, na) += phase * c;
    }
  }
  return MmftHamiltonian{sq, na, h.modes, std::move(m)};
}

MmftHamiltonian build_mmft_periodic(const model::FourierHamiltonian& h,
                                    const basis::OrbitBasis& ob) {
  h.validate();
  require_same_modes(h.modes, ob.mode_pair(), "build_mmft_periodic");
  const int na = h.dim_a;
  const double wb = h.modes.omega_b();
  const Eigen::Index dim = static_cast<Eigen::Index>(ob.size()) * na;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (int s = 0; s < ob.size(); ++s) {
    const basis::LatticePoint p = ob.point(s);
    m.block(s * na, s * na, na, na) =
        Complex(p.n(h.modes) * wb) * ComplexMatrix::Identity(na, na);
    for (const auto& [pq, c] : h.coeffs) {
      const basis::LatticePoint tgt{p.n1 + pq.first, p.n2 + pq.second};
      const auto wrapped = basis::wrap_to_orbit(tgt, ob);
      if (!wrapped) continue;  // out of band: target harmonic not in the n set
      const Complex phase =
          std::exp(Complex(0.0, pq.first * h.phi1 + pq.second * h.phi2));
      m.block(wrapped->slot * na, s * na, na, na) += phase * c;
    }
  }
  return MmftHamiltonian{ob, na, h.modes, std::move(m)};
}

ComplexMatrix TranslationMatrix::to_dense(int dim_a) const {
  const Eigen::Index dim = static_cast<Eigen::Index>(slot_image.size()) * dim_a;
  ComplexMatrix t = ComplexMatrix::Zero(dim, dim);
  for (size_t s = 0; s < slot_image.size(); ++s) {
    for (int a = 0; a < dim_a; ++a) {
      t(static_cast<Eigen::Index>(slot_image[s]) * dim_a + a,
        static_cast<Eigen::Index>(s) * dim_a + a) = 1.0;
    }
  }
  return t;
}

TranslationMatrix translation_matrix(const basis::OrbitBasis& ob) {
  TranslationMatrix t;
  t.ell_count = ob.ell_count();
  t.slot_image.resize(static_cast<size_t>(ob.size()));
  const int nl = ob.ell_count();
  for (int ni = 0; ni < ob.n_set().size(); ++ni) {
    for (int li = 0; li < nl; ++li) {
      t.slot_image[static_cast<size_t>(ob.slot(ni, li))] = ob.slot(ni, (li + 1) % nl);
    }
  }
  return t;
}

KBlockDecomposition k_block_decompose(const MmftHamiltonian& h) {
  if (!h.periodic()) {
    throw NotPeriodicError("k_block_decompose: requires a periodic-basis Hamiltonian");
  }
  const basis::OrbitBasis& ob = h.orbit();
  const int na = h.dim_a;
  const int nl = ob.ell_count();
  const int nn = ob.n_set().size();
  const Eigen::Index dim = h.size();

  KBlockDecomposition kd;
  kd.dim_a = na;
  kd.omega_b = h.modes.omega_b();
  kd.k_values.reserve(static_cast<size_t>(nl));
  const int j_min = (nl % 2 == 0) ? -nl / 2 : -(nl - 1) / 2;
  for (int j = j_min; j < j_min + nl; ++j) {
    kd.k_values.push_back(kTwoPi * j / nl);
  }

  // Discrete Fourier change of basis: |n,k> = sum_l e^{i l k} |point(n,l)> / sqrt(N_L).
  // Column layout: k outer, n inner, atomic innermost.
  kd.transform = ComplexMatrix::Zero(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(nl));
  for (int ki = 0; ki < nl; ++ki) {
    const double k = kd.k_values[static_cast<size_t>(ki)];
    for (int ni = 0; ni < nn; ++ni) {
      for (int li = 0; li < nl; ++li) {
        const int ell = ob.ell_min() + li;
        const Complex w = norm * std::exp(Complex(0.0, ell * k));
        const Eigen::Index row0 = static_cast<Eigen::Index>(ob.slot(ni, li)) * na;
        const Eigen::Index col0 = (static_cast<Eigen::Index>(ki) * nn + ni) * na;
        for (int a = 0; a < na; ++a) kd.transform(row0 + a, col0 + a) = w;
      }
    }
  }

  const ComplexMatrix full = kd.transform.adjoint() * h.matrix * kd.transform;
  const Eigen::Index bs = static_cast<Eigen::Index>(nn) * na;
  kd.blocks.reserve(static_cast<size_t>(nl));
  for (int ki = 0; ki < nl; ++ki) {
    kd.blocks.push_back(full.block(ki * bs, ki * bs, bs, bs));
  }
  return kd;
}

ComplexVector KBlockDecomposition::to_orbit_vector(int k_index,
                                                   const ComplexVector& block_vec) const {
  const Eigen::Index bs = blocks.empty() ? 0 : blocks.front().rows();
  if (k_index < 0 || static_cast<size_t>(k_index) >= blocks.size()) {
    throw IndexOutOfRangeError("KBlockDecomposition: k index out of range");
  }
  if (block_vec.size() != bs) {
    throw InvalidArgumentError("KBlockDecomposition: block vector has wrong size");
  }
  return transform.middleCols(k_index * bs, bs) * block_vec;
}

sft::QuasiEnergySpectrum k_block_spectrum(const KBlockDecomposition& kd, int k_index) {
  if (k_index < 0 || static_cast<size_t>(k_index) >= kd.blocks.size()) {
    throw IndexOutOfRangeError("k_block_spectrum: k index out of range");
  }
  const auto ed = linalg::eig_hermitian(kd.blocks[static_cast<size_t>(k_index)]);
  sft::QuasiEnergySpectrum s;
  s.energies = ed.eigenvalues;
  s.vectors = ed.eigenvectors;
  s.fold_omega = kd.omega_b;
  s.k_label = kd.k_values[static_cast<size_t>(k_index)];
  s.ladder_reps.resize(s.energies.size());
  for (Eigen::Index j = 0; j < s.energies.size(); ++j) {
    s.ladder_reps(j) = linalg::fold_energy(s.energies(j), kd.omega_b);
  }
  return s;
}

sft::QuasiEnergySpectrum mmft_spectrum(const MmftHamiltonian& h) {
  const auto ed = linalg::eig_hermitian(h.matrix);
  sft::QuasiEnergySpectrum s;
  s.energies = ed.eigenvalues;
  s.vectors = ed.eigenvectors;
  s.fold_omega = h.modes.omega_b();
  s.ladder_reps.resize(s.energies.size());
  for (Eigen::Index j = 0; j < s.energies.size(); ++j) {
    s.ladder_reps(j) = linalg::fold_energy(s.energies(j), s.fold_omega);
  }
  return s;
}

MmftPropagator::MmftPropagator(const MmftHamiltonian& h)
    : MmftPropagator(h, mmft_spectrum(h)) {}

MmftPropagator::MmftPropagator(const MmftHamiltonian& h,
                               const sft::QuasiEnergySpectrum& spectrum)
    : dim_a_(h.dim_a) {
  const SquareBasis& sq = h.square();
  const auto src = sq.slot(basis::LatticePoint{0, 0});
  if (!src) {
    throw ZeroBlockMissingError("MmftPropagator: the basis must contain the (0,0) block");
  }
  slot_freqs_.reserve(static_cast<size_t>(sq.size()));
  const double wb = h.modes.omega_b();
  for (int s = 0; s < sq.size(); ++s) {
    slot_freqs_.push_back(sq.point(s).n(h.modes) * wb);
  }
  energies_ = spectrum.energies;
  vectors_ = spectrum.vectors;
  source_rows_conj_ =
      vectors_.middleRows(static_cast<Eigen::Index>(*src) * dim_a_, dim_a_).conjugate();
}

ComplexMatrix MmftPropagator::amplitudes(double t) const {
  const Eigen::Index m = energies_.size();
  ComplexVector evo(m);
  for (Eigen::Index j = 0; j < m; ++j) evo(j) = std::exp(Complex(0.0, -energies_(j) * t));
  ComplexMatrix g = ComplexMatrix::Zero(dim_a_, dim_a_);
  for (int alpha = 0; alpha < dim_a_; ++alpha) {
    const ComplexVector weights = evo.cwiseProduct(source_rows_conj_.row(alpha).transpose());
    const ComplexVector column = vectors_ * weights;
    for (size_t s = 0; s < slot_freqs_.size(); ++s) {
      const Complex phase = std::exp(Complex(0.0, slot_freqs_[s] * t));
      for (int beta = 0; beta < dim_a_; ++beta) {
        g(beta, alpha) += phase * column(static_cast<Eigen::Index>(s) * dim_a_ + beta);
      }
    }
  }
  return g;
}

std::complex<double> MmftPropagator::amplitude(double t, Eigen::Index alpha,
                                               Eigen::Index beta) const {
  if (alpha < 0 || alpha >= dim_a_ || beta < 0 || beta >= dim_a_) {
    throw IndexOutOfRangeError("MmftPropagator: atomic index out of range");
  }
  return amplitudes(t)(beta, alpha);
}

std::complex<double> mmft_propagator(const MmftHamiltonian& h, double t,
                                     Eigen::Index alpha, Eigen::Index beta) {
  return MmftPropagator(h).amplitude(t, alpha, beta);
}

double phase_shift_conjugation_check(const model::FourierHamiltonian& h, double phi1,
                                     double phi2, int n_max) {
  model::FourierHamiltonian shifted = h;
  shifted.phi1 = phi1;
  shifted.phi2 = phi2;
  model::FourierHamiltonian zero = h;
  zero.phi1 = 0.0;
  zero.phi2 = 0.0;

  const MmftHamiltonian ha = build_mmft(shifted, n_max);
  const MmftHamiltonian h0 = build_mmft(zero, n_max);
  const SquareBasis& sq = ha.square();
  const int na = h.dim_a;

  // U_F(phi) = sum_n e^{-i n phi} |n><n|, so the tensored conjugation is
  // diagonal and leaves the square truncation invariant: the identity is
  // exact at finite size.
  ComplexVector u(ha.size());
  for (int s = 0; s < sq.size(); ++s) {
    const basis::LatticePoint p = sq.point(s);
    const Complex d = std::exp(Complex(0.0, -(p.n1 * phi1 + p.n2 * phi2)));
    for (int a = 0; a < na; ++a) u(static_cast<Eigen::Index>(s) * na + a) = d;
  }
  const ComplexMatrix conjugated =
      u.conjugate().asDiagonal() * h0.matrix * u.asDiagonal();
  return linalg::max_abs(ha.matrix - conjugated);
}

IntertwiningReport demotion_intertwining_check(const model::FourierHamiltonian& h,
                                               int n_max, int margin) {
  h.validate();
  const int reach = h.max_abs_p() + h.max_abs_q();
  if (margin < reach) {
    std::ostringstream os;
    os << "demotion_intertwining_check: margin " << margin
       << " is smaller than the coupling reach " << reach;
    throw MarginTooSmallError(os.str());
  }
  if (margin > n_max) {
    std::ostringstream os;
    os << "demotion_intertwining_check: margin " << margin << " leaves no interior in a "
       << "square of half-width " << n_max;
    throw MarginTooSmallError(os.str());
  }

  const MmftHamiltonian hsq = build_mmft(h, n_max);
  const SquareBasis& sq = hsq.square();
  const int na = h.dim_a;
  // The demoted harmonic range covers every n reachable from the square.
  const int nf = (h.modes.N1() + h.modes.N2()) * n_max;
  const basis::SingleModeBasis nset = basis::SingleModeBasis::symmetric(nf);
  const sft::SftHamiltonian hf = sft::build_sft(h, nset);

  ComplexMatrix d = ComplexMatrix::Zero(hf.size(), hsq.size());
  for (int s = 0; s < sq.size(); ++s) {
    const int n = sq.point(s).n(h.modes);
    const Eigen::Index row0 = hf.block_offset(n);
    for (int a = 0; a < na; ++a) d(row0 + a, static_cast<Eigen::Index>(s) * na + a) = 1.0;
  }
  ComplexMatrix p = ComplexMatrix::Zero(hsq.size(), hf.size());
  for (int ni = 0; ni < nset.size(); ++ni) {
    const auto slot = sq.slot(basis::canonical_point(nset.at(ni), h.modes));
    if (!slot) continue;
    for (int a = 0; a < na; ++a) {
      p(static_cast<Eigen::Index>(*slot) * na + a,
        static_cast<Eigen::Index>(ni) * na + a) = 1.0;
    }
  }

  const ComplexMatrix lhs = hf.matrix * d;
  const ComplexMatrix rhs = d * hsq.matrix;
  IntertwiningReport report;
  for (int s = 0; s < sq.size(); ++s) {
    const basis::LatticePoint pt = sq.point(s);
    if (std::abs(pt.n1) > n_max - margin || std::abs(pt.n2) > n_max - margin) continue;
    const double dev = linalg::max_abs(lhs.middleCols(static_cast<Eigen::Index>(s) * na, na) -
                                       rhs.middleCols(static_cast<Eigen::Index>(s) * na, na));
    report.intertwining_deviation = std::max(report.intertwining_deviation, dev);
  }

  const ComplexMatrix dp = d * p;
  for (int ni = 0; ni < nset.size(); ++ni) {
    if (!sq.slot(basis::canonical_point(nset.at(ni), h.modes))) continue;
    ComplexMatrix expected = ComplexMatrix::Zero(hf.size(), na);
    expected.middleRows(static_cast<Eigen::Index>(ni) * na, na) =
        ComplexMatrix::Identity(na, na);
    const double dev =
        linalg::max_abs(dp.middleCols(static_cast<Eigen::Index>(ni) * na, na) - expected);
    report.dp_identity_deviation = std::max(report.dp_identity_deviation, dev);
  }
  return report;
}

}  // namespace floquet::mmft
