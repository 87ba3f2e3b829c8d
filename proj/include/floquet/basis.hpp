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
#include <vector>

#include "floquet/errors.hpp"

namespace floquet::basis {

/// A pair of commensurate drive harmonics: omega_1 = N1 * omega_B and
/// omega_2 = N2 * omega_B with gcd(N1, N2) = 1 enforced at construction.
class ModePair {
 public:
  static ModePair make(int n1, int n2, double omega_b);

  int N1() const { return n1_; }
  int N2() const { return n2_; }
  double omega_b() const { return omega_b_; }
  double omega1() const { return n1_ * omega_b_; }
  double omega2() const { return n2_ * omega_b_; }
  /// Common period 2*pi / omega_B.
  double period() const;

 private:
  ModePair(int n1, int n2, double omega_b) : n1_(n1), n2_(n2), omega_b_(omega_b) {}
  int n1_;
  int n2_;
  double omega_b_;
};

ModePair make_mode_pair(int n1, int n2, double omega_b);

/// A point (n1, n2) on the two-mode harmonic lattice. The total harmonic
/// n = n1*N1 + n2*N2 is always recomputed from the coordinates.
struct LatticePoint {
  int n1 = 0;
  int n2 = 0;

  int n(const ModePair& mp) const { return n1 * mp.N1() + n2 * mp.N2(); }
  bool operator==(const LatticePoint&) const = default;
};

/// Contiguous single-mode harmonic index set {n_min, ..., n_max}.
class SingleModeBasis {
 public:
  SingleModeBasis(int n_min, int n_max);
  /// {-n_max, ..., n_max}.
  static SingleModeBasis symmetric(int n_max);

  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }
  int size() const { return n_max_ - n_min_ + 1; }
  int at(int index) const { return n_min_ + index; }
  bool contains(int n) const { return n >= n_min_ && n <= n_max_; }
  /// Position of harmonic n, or nullopt when outside the range.
  std::optional<int> index_of(int n) const;

 private:
  int n_min_;
  int n_max_;
};

/// Bezout coefficients (x, y) with x*N1 + y*N2 = 1, minimal x^2 + y^2
/// (the extended Euclidean algorithm yields the minimal-norm pair).
struct BezoutPair {
  int x = 0;
  int y = 0;
};
BezoutPair bezout_unit(const ModePair& mp);

/// Canonical lattice representative of harmonic n: (x*n, y*n) with (x, y)
/// the Bezout pair above, so canonical(n).n == n.
LatticePoint canonical_point(int n, const ModePair& mp);

/// Apply the lattice translation `steps` times:
/// (n1, n2) -> (n1 + steps*N2, n2 - steps*N1). Preserves n.
LatticePoint translate(const LatticePoint& p, int steps, const ModePair& mp);

/// Finite two-mode basis built from translation orbits: for each n in the
/// single-mode set and each ell in {ell_min..ell_max}, the point
/// translate(canonical(n), ell). Ordering contract (public API): n outer
/// ascending, ell inner ascending; the atomic index is innermost once the
/// basis is tensored with the atomic space.
class OrbitBasis {
 public:
  OrbitBasis(const ModePair& mp, const SingleModeBasis& n_set, int ell_min, int ell_max);

  const ModePair& mode_pair() const { return mode_pair_; }
  const SingleModeBasis& n_set() const { return n_set_; }
  int ell_min() const { return ell_min_; }
  int ell_max() const { return ell_max_; }
  /// Orbit length N_L.
  int ell_count() const { return ell_max_ - ell_min_ + 1; }
  int size() const { return static_cast<int>(points_.size()); }
  const LatticePoint& point(int slot) const { return points_[static_cast<size_t>(slot)]; }
  const std::vector<LatticePoint>& points() const { return points_; }

  int slot(int n_index, int ell_index) const { return n_index * ell_count() + ell_index; }
  int n_of_slot(int slot) const { return n_set_.at(slot / ell_count()); }
  int ell_of_slot(int slot) const { return ell_min_ + slot % ell_count(); }

 private:
  ModePair mode_pair_;
  SingleModeBasis n_set_;
  int ell_min_;
  int ell_max_;
  std::vector<LatticePoint> points_;
};

OrbitBasis build_orbit_basis(const ModePair& mp, const SingleModeBasis& n_set,
                             int ell_min, int ell_max);

/// Result of wrapping an arbitrary lattice point into an orbit basis: the
/// basis slot it lands on and the wrap count q, i.e. translating the point by
/// q * N_L steps reaches the slot. q = 0 when the point is already in the
/// basis. Points whose total harmonic lies outside the n set do not wrap
/// (out of band) and yield nullopt.
struct WrapResult {
  int slot = 0;
  int wrap_count = 0;
};
std::optional<WrapResult> wrap_to_orbit(const LatticePoint& p, const OrbitBasis& ob);

}  // namespace floquet::basis
