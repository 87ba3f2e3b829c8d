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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "floquet/basis.hpp"

using namespace floquet;
using basis::LatticePoint;

namespace {

// Brute-force oracle: minimal-norm integer solution of x*N1 + y*N2 = n over
// a window guaranteed to contain the optimum.
std::optional<LatticePoint> minimal_norm_solution(int n, int n1, int n2, int window) {
  std::optional<LatticePoint> best;
  long best_norm = 0;
  for (int x = -window; x <= window; ++x) {
    for (int y = -window; y <= window; ++y) {
      if (x * n1 + y * n2 != n) continue;
      const long norm = static_cast<long>(x) * x + static_cast<long>(y) * y;
      if (!best || norm < best_norm) {
        best = LatticePoint{x, y};
        best_norm = norm;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("make_mode_pair accepts reduced ratios") {
  const auto mp = basis::make_mode_pair(1, 2, 1.0);
  CHECK(mp.omega1() == doctest::Approx(1.0));
  CHECK(mp.omega2() == doctest::Approx(2.0));
  const auto mp2 = basis::make_mode_pair(2, 3, 0.5);
  CHECK(mp2.omega1() == doctest::Approx(1.0));
  CHECK(mp2.omega2() == doctest::Approx(1.5));
}

TEST_CASE("make_mode_pair rejects invalid input") {
  CHECK_THROWS_AS(basis::make_mode_pair(2, 4, 1.0), NotCoprimeError);
  CHECK_THROWS_AS(basis::make_mode_pair(0, 1, 1.0), InvalidArgumentError);
  CHECK_THROWS_AS(basis::make_mode_pair(1, 1, -1.0), InvalidArgumentError);
  try {
    basis::make_mode_pair(6, 4, 1.0);
    FAIL("expected NotCoprimeError");
  } catch (const NotCoprimeError& e) {
    CHECK(e.n1() == 6);
    CHECK(e.n2() == 4);
  }
}

TEST_CASE("canonical_point forced cases") {
  const auto mp = basis::make_mode_pair(1, 2, 1.0);
  CHECK(basis::canonical_point(1, mp) == LatticePoint{1, 0});
  CHECK(basis::canonical_point(0, mp) == LatticePoint{0, 0});
  const auto mp23 = basis::make_mode_pair(2, 3, 1.0);
  CHECK(basis::canonical_point(0, mp23) == LatticePoint{0, 0});
}

TEST_CASE("canonical_point n=5 on the (2,3) lattice against brute force") {
  const auto mp = basis::make_mode_pair(2, 3, 1.0);
  const auto unit = minimal_norm_solution(1, 2, 3, 3);
  REQUIRE(unit.has_value());
  CHECK(*unit == LatticePoint{-1, 1});
  const LatticePoint p = basis::canonical_point(5, mp);
  CHECK(p == LatticePoint{unit->n1 * 5, unit->n2 * 5});
  CHECK(p.n(mp) == 5);
  CHECK(p == LatticePoint{-5, 5});
}

TEST_CASE("bezout pair has minimal norm for coprime pairs up to 8") {
  for (int n1 = 1; n1 <= 8; ++n1) {
    for (int n2 = 1; n2 <= 8; ++n2) {
      if (std::gcd(n1, n2) != 1) continue;
      const auto mp = basis::make_mode_pair(n1, n2, 1.0);
      const auto b = basis::bezout_unit(mp);
      CHECK(b.x * n1 + b.y * n2 == 1);
      const auto best = minimal_norm_solution(1, n1, n2, n1 + n2 + 1);
      REQUIRE(best.has_value());
      const long got = static_cast<long>(b.x) * b.x + static_cast<long>(b.y) * b.y;
      const long want =
          static_cast<long>(best->n1) * best->n1 + static_cast<long>(best->n2) * best->n2;
      CHECK(got == want);
    }
  }
}

TEST_CASE("translate moves along the constant-n diagonal") {
  const auto mp12 = basis::make_mode_pair(1, 2, 1.0);
  CHECK(basis::translate({0, 0}, 1, mp12) == LatticePoint{2, -1});
  CHECK(basis::translate({2, -1}, -1, mp12) == LatticePoint{0, 0});
  const auto mp23 = basis::make_mode_pair(2, 3, 1.0);
  const LatticePoint p = basis::translate({1, 1}, 3, mp23);
  CHECK(p == LatticePoint{10, -5});
  CHECK(p.n(mp23) == 5);
}

TEST_CASE("translate preserves n for random points") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> coord(-50, 50);
  std::uniform_int_distribution<int> steps(-10, 10);
  std::uniform_int_distribution<int> mode(1, 6);
  int tested = 0;
  while (tested < 200) {
    const int n1 = mode(rng), n2 = mode(rng);
    if (std::gcd(n1, n2) != 1) continue;
    ++tested;
    const auto mp = basis::make_mode_pair(n1, n2, 1.0);
    const LatticePoint p{coord(rng), coord(rng)};
    const int s = steps(rng);
    CHECK(basis::translate(p, s, mp).n(mp) == p.n(mp));
  }
}

TEST_CASE("canonical plus translate enumerates every solution") {
  // Every lattice solution of x*N1 + y*N2 = n inside the window must be a
  // translate of the canonical point, and translates must be solutions.
  for (auto [n1, n2] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 5}}) {
    const auto mp = basis::make_mode_pair(n1, n2, 1.0);
    for (int n : {-7, -1, 0, 3, 11}) {
      const LatticePoint c = basis::canonical_point(n, mp);
      std::set<std::pair<int, int>> family;
      for (int ell = -60; ell <= 60; ++ell) {
        const LatticePoint t = basis::translate(c, ell, mp);
        CHECK(t.n(mp) == n);
        family.insert({t.n1, t.n2});
      }
      for (int x = -20; x <= 20; ++x) {
        for (int y = -20; y <= 20; ++y) {
          if (x * n1 + y * n2 == n) CHECK(family.count({x, y}) == 1);
        }
      }
    }
  }
}

TEST_CASE("orbit basis layout matches the translation construction") {
  const auto mp = basis::make_mode_pair(1, 2, 1.0);
  const auto ob = basis::build_orbit_basis(mp, basis::SingleModeBasis(-2, 2), -2, 2);
  CHECK(ob.size() == 25);
  std::set<std::pair<int, int>> seen;
  for (int ni = 0; ni < ob.n_set().size(); ++ni) {
    const int n = ob.n_set().at(ni);
    for (int li = 0; li < ob.ell_count(); ++li) {
      const int ell = ob.ell_min() + li;
      const LatticePoint p = ob.point(ob.slot(ni, li));
      const LatticePoint c = basis::canonical_point(n, mp);
      CHECK(p == LatticePoint{c.n1 + ell * mp.N2(), c.n2 - ell * mp.N1()});
      CHECK(p.n(mp) == n);
      CHECK(seen.insert({p.n1, p.n2}).second);  // each point appears once
    }
  }
}

TEST_CASE("orbit basis single point and production size") {
  const auto mp = basis::make_mode_pair(1, 2, 1.0);
  const auto tiny = basis::build_orbit_basis(mp, basis::SingleModeBasis(0, 0), 0, 0);
  CHECK(tiny.size() == 1);
  CHECK(tiny.point(0) == LatticePoint{0, 0});
  const auto prod = basis::build_orbit_basis(mp, basis::SingleModeBasis(-8, 8), -6, 5);
  CHECK(prod.ell_count() == 12);
  CHECK(prod.size() == 204);
}

TEST_CASE("wrap_to_orbit identifies slots and wrap counts") {
  const auto mp = basis::make_mode_pair(1, 2, 1.0);
  const auto ob = basis::build_orbit_basis(mp, basis::SingleModeBasis(-2, 2), -2, 2);
  const int nl = ob.ell_count();

  for (int s = 0; s < ob.size(); ++s) {
    const auto r = basis::wrap_to_orbit(ob.point(s), ob);
    REQUIRE(r.has_value());
    CHECK(r->slot == s);
    CHECK(r->wrap_count == 0);
  }

  const LatticePoint origin{0, 0};
  const auto r = basis::wrap_to_orbit(basis::translate(origin, nl, mp), ob);
  REQUIRE(r.has_value());
  const auto origin_slot = basis::wrap_to_orbit(origin, ob);
  CHECK(r->slot == origin_slot->slot);
  CHECK(r->wrap_count == -1);

  CHECK(!basis::wrap_to_orbit(LatticePoint{3, 0}, ob).has_value());  // n = 3 out of band
}

TEST_CASE("wrapping a whole-orbit translation is the identity on slots") {
  const auto mp = basis::make_mode_pair(2, 3, 1.0);
  const auto ob = basis::build_orbit_basis(mp, basis::SingleModeBasis(-3, 3), -2, 3);
  const int nl = ob.ell_count();
  for (int k = -3; k <= 3; ++k) {
    for (int s = 0; s < ob.size(); ++s) {
      const auto r = basis::wrap_to_orbit(basis::translate(ob.point(s), k * nl, mp), ob);
      REQUIRE(r.has_value());
      CHECK(r->slot == s);
      CHECK(r->wrap_count == -k);
    }
  }
}
