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

#include "floquet/basis.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace floquet::basis {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Floor division for possibly negative numerators.
int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

ModePair ModePair::make(int n1, int n2, double omega_b) {
  if (n1 < 1 || n2 < 1) {
    std::ostringstream os;
    os << "ModePair: harmonic numbers must be positive, got N1=" << n1 << " N2=" << n2;
    throw InvalidArgumentError(os.str());
  }
  if (!(omega_b > 0.0)) {
    std::ostringstream os;
    os << "ModePair: base frequency must be positive, got omega_B=" << omega_b;
    throw InvalidArgumentError(os.str());
  }
  if (std::gcd(n1, n2) != 1) {
    std::ostringstream os;
    os << "ModePair: N1=" << n1 << " and N2=" << n2
       << " share a common divisor; reduce the ratio first";
    throw NotCoprimeError(os.str(), n1, n2);
  }
  return ModePair(n1, n2, omega_b);
}

double ModePair::period() const { return kTwoPi / omega_b_; }

ModePair make_mode_pair(int n1, int n2, double omega_b) {
  return ModePair::make(n1, n2, omega_b);
}

SingleModeBasis::SingleModeBasis(int n_min, int n_max) : n_min_(n_min), n_max_(n_max) {
  if (n_min > n_max) {
    std::ostringstream os;
    os << "SingleModeBasis: empty range [" << n_min << ", " << n_max << "]";
    throw InvalidArgumentError(os.str());
  }
}

SingleModeBasis SingleModeBasis::symmetric(int n_max) {
  if (n_max < 0) throw InvalidArgumentError("SingleModeBasis: n_max must be >= 0");
  return SingleModeBasis(-n_max, n_max);
}

std::optional<int> SingleModeBasis::index_of(int n) const {
  if (!contains(n)) return std::nullopt;
  return n - n_min_;
}

BezoutPair bezout_unit(const ModePair& mp) {
  // Iterative extended Euclid on (N1, N2); gcd is 1 by construction.
  int old_r = mp.N1(), r = mp.N2();
  int old_x = 1, x = 0;
  int old_y = 0, y = 1;
  while (r != 0) {
    const int q = old_r / r;
    int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  return BezoutPair{old_x, old_y};
}

LatticePoint canonical_point(int n, const ModePair& mp) {
  const BezoutPair b = bezout_unit(mp);
  return LatticePoint{b.x * n, b.y * n};
}

LatticePoint translate(const LatticePoint& p, int steps, const ModePair& mp) {
  return LatticePoint{p.n1 + steps * mp.N2(), p.n2 - steps * mp.N1()};
}

OrbitBasis::OrbitBasis(const ModePair& mp, const SingleModeBasis& n_set, int ell_min,
                       int ell_max)
    : mode_pair_(mp), n_set_(n_set), ell_min_(ell_min), ell_max_(ell_max) {
  if (ell_min > ell_max) {
    std::ostringstream os;
    os << "OrbitBasis: empty ell range [" << ell_min << ", " << ell_max << "]";
    throw InvalidArgumentError(os.str());
  }
  points_.reserve(static_cast<size_t>(n_set.size()) * static_cast<size_t>(ell_count()));
  for (int ni = 0; ni < n_set.size(); ++ni) {
    const LatticePoint c = canonical_point(n_set.at(ni), mp);
    for (int ell = ell_min_; ell <= ell_max_; ++ell) {
      points_.push_back(translate(c, ell, mp));
    }
  }
}

OrbitBasis build_orbit_basis(const ModePair& mp, const SingleModeBasis& n_set,
                             int ell_min, int ell_max) {
  return OrbitBasis(mp, n_set, ell_min, ell_max);
}

std::optional<WrapResult> wrap_to_orbit(const LatticePoint& p, const OrbitBasis& ob) {
  const ModePair& mp = ob.mode_pair();
  const int n = p.n(mp);
  const auto n_index = ob.n_set().index_of(n);
  if (!n_index) return std::nullopt;
  // ell coordinate of p along its orbit; exact because p and canonical(n)
  // solve the same harmonic equation.
  const LatticePoint c = canonical_point(n, mp);
  const int ell_raw = (p.n1 - c.n1) / mp.N2();
  const int nl = ob.ell_count();
  const int shift = floor_div(ell_raw - ob.ell_min(), nl);
  const int ell = ell_raw - shift * nl;
  return WrapResult{ob.slot(*n_index, ell - ob.ell_min()), -shift};
}

}  // namespace floquet::basis
