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

#include "floquet/sft.hpp"
#include "floquet/tdse.hpp"

using namespace floquet;
using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kT = 2.0 * kPi;

model::FourierHamiltonian static_two_level() {
  ComplexMatrix h0 = ComplexMatrix::Zero(2, 2);
  h0(1, 1) = 1.5;
  return model::FourierHamiltonian{2, basis::make_mode_pair(1, 2, 1.0), {{{0, 0}, h0}}, 0.0, 0.0};
}

}  // namespace

TEST_CASE("integration over zero time is the identity") {
  const auto h = model::make_omega_2omega_example(0.0);
  const auto u = tdse::integrate(h, 0.0, tdse::default_config(h));
  CHECK(linalg::max_abs(u - ComplexMatrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("static Hamiltonian evolves analytically") {
  const auto h = static_two_level();
  const auto u = tdse::integrate(h, kT, tdse::default_config(h));
  // diag(exp(0), exp(-3 i pi)) = diag(1, -1)
  CHECK(std::abs(u(0, 0) - Complex(1.0)) < 1e-8);
  CHECK(std::abs(u(1, 1) - Complex(-1.0)) < 1e-8);
  CHECK(std::abs(u(0, 1)) < 1e-10);
  CHECK(std::abs(u(1, 0)) < 1e-10);
}

TEST_CASE("step-halving self-consistency and unitarity at the default step") {
  for (double phi : {0.0, kPi / 2}) {
    const auto h = model::make_omega_2omega_example(phi);
    const auto cfg = tdse::default_config(h);
    const auto u1 = tdse::integrate(h, kT, cfg);
    const auto u2 = tdse::integrate(h, kT, {cfg.dt / 2.0, 0});
    CHECK(linalg::max_abs(u1 - u2) < 1e-9);
    CHECK(linalg::unitarity_deviation(u1) < 1e-8);
  }
}

TEST_CASE("global error shrinks at fourth order") {
  const auto h = model::make_omega_2omega_example(0.0);
  // Coarse enough that truncation dominates rounding, fine enough to stay
  // inside the unitarity drift bound.
  const double dt = kT / 1024.0;
  const auto ua = tdse::integrate(h, kT, {dt, 0});
  const auto ub = tdse::integrate(h, kT, {dt / 2.0, 0});
  const auto uc = tdse::integrate(h, kT, {dt / 4.0, 0});
  const double ratio = linalg::max_abs(ua - ub) / linalg::max_abs(ub - uc);
  CHECK(ratio > 8.0);
  CHECK(ratio < 32.0);
}

TEST_CASE("integration argument validation") {
  const auto h = model::make_omega_2omega_example(0.0);
  CHECK_THROWS_AS(tdse::integrate(h, -1.0, tdse::default_config(h)), InvalidArgumentError);
  CHECK_THROWS_AS(tdse::integrate(h, 1.0, {0.0, 0}), InvalidArgumentError);
  // A step near the RK4 stability edge accumulates visible drift.
  CHECK_THROWS_AS(tdse::integrate(h, 10.0 * kT, {0.5, 0}), NonUnitaryDriftError);
}

TEST_CASE("optional re-orthonormalization stays consistent") {
  const auto h = model::make_omega_2omega_example(kPi / 2);
  const auto cfg = tdse::default_config(h);
  const auto plain = tdse::integrate(h, 2.0 * kT, cfg);
  const auto renorm = tdse::integrate(h, 2.0 * kT, {cfg.dt, 1024});
  CHECK(linalg::unitarity_deviation(renorm) < 1e-10);
  CHECK(linalg::max_abs(plain - renorm) < 1e-8);
}

TEST_CASE("the relative phase changes the time evolution") {
  const auto h0 = model::make_omega_2omega_example(0.0);
  const auto hq = model::make_omega_2omega_example(kPi / 2);
  double dev = 0.0;
  for (double t : {kT / 4, kT / 2, 3 * kT / 4, kT}) {
    const double p0 = std::norm(tdse::integrate(h0, t, tdse::default_config(h0))(1, 0));
    const double pq = std::norm(tdse::integrate(hq, t, tdse::default_config(hq))(1, 0));
    dev = std::max(dev, std::abs(p0 - pq));
  }
  CHECK(dev > 0.1);
}

TEST_CASE("monodromy of the undriven system folds the splitting") {
  const auto h = static_two_level();
  const auto md = tdse::monodromy_floquet(h, tdse::default_config(h));
  const auto e = md.quasi_energies();
  // E_l = 0 stays 0; E_u = 3/2 folds to 1/2 under the (-1/2, 1/2] convention.
  CHECK(e(0) == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(e(1) == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("monodromy quasi-energies agree with the large-basis spectral route") {
  for (double phi : {0.0, kPi / 2}) {
    const auto h = model::make_omega_2omega_example(phi);
    const auto md = tdse::monodromy_floquet(h, tdse::default_config(h));
    linalg::RealVector direct = md.quasi_energies();
    std::sort(direct.data(), direct.data() + direct.size());

    const auto sh = sft::build_sft(h, basis::SingleModeBasis::symmetric(20));
    const auto sp = sft::sft_spectrum(sh);
    // The eigenvalues already inside the fold window are the converged
    // central ladder copies.
    std::vector<double> central;
    for (Eigen::Index j = 0; j < sp.energies.size(); ++j) {
      if (sp.energies(j) == sp.ladder_reps(j)) central.push_back(sp.energies(j));
    }
    REQUIRE(central.size() == 2);
    std::sort(central.begin(), central.end());
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(direct(j) - central[static_cast<size_t>(j)]) < 1e-6);
    }
  }
}

TEST_CASE("stroboscopic decomposition matches direct integration") {
  const auto h = model::make_omega_2omega_example(0.0);
  const auto cfg = tdse::default_config(h);
  const auto md = tdse::monodromy_floquet(h, cfg);
  const double t = 7.3 * kT;
  const auto direct = tdse::integrate(h, t, cfg);
  CHECK(linalg::max_abs(md.propagator(t) - direct) < 1e-7);
}

TEST_CASE("reconstruction holds on a grid over three periods") {
  const auto h = model::make_omega_2omega_example(kPi / 2);
  const auto cfg = tdse::default_config(h);
  const auto md = tdse::monodromy_floquet(h, cfg);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t = 3.0 * kT * i / 49.0;
    worst = std::max(worst, linalg::max_abs(md.propagator(t) - tdse::integrate(h, t, cfg)));
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("phi is periodic and phi(0) equals the monodromy eigenvectors") {
  const auto h = model::make_omega_2omega_example(0.0);
  const auto md = tdse::monodromy_floquet(h, tdse::default_config(h));
  CHECK(linalg::max_abs(md.phi(0.0) - md.w()) < 1e-12);
  for (double t : {0.3, 2.9, 5.1}) {
    CHECK(linalg::max_abs(md.phi(t) - md.phi(t + kT)) < 1e-7);
    CHECK(linalg::unitarity_deviation(md.phi(t)) < 1e-7);
  }
}

TEST_CASE("one-period shift invariance of the propagator") {
  // U(2T, T) computed by phase-shifting the drive equals U(T, 0).
  const auto h = model::make_omega_2omega_example(kPi / 2);
  const auto cfg = tdse::default_config(h);
  model::FourierHamiltonian shifted = h;
  shifted.phi1 += h.modes.omega1() * kT;
  shifted.phi2 += h.modes.omega2() * kT;
  const auto base = tdse::integrate(h, kT, cfg);
  const auto moved = tdse::integrate(shifted, kT, cfg);
  CHECK(linalg::max_abs(base - moved) < 1e-7);
}

TEST_CASE("column solutions solve the equation of motion") {
  const auto h = model::make_omega_2omega_example(0.0);
  const auto cfg = tdse::default_config(h);
  const auto md = tdse::monodromy_floquet(h, cfg);

  for (Eigen::Index j = 0; j < 2; ++j) {
    CHECK(linalg::max_abs(md.column_solution(j, 0.0) - md.w().col(j)) < 1e-12);
    // Floquet form: advancing one period multiplies by e^{-i E T}.
    const Complex factor = std::exp(Complex(0.0, -md.quasi_energies()(j) * kT));
    CHECK(linalg::max_abs(md.column_solution(j, kT) - factor * md.column_solution(j, 0.0)) <
          1e-7);
  }

  // TDSE residual with a central-difference derivative.
  const double delta = 1e-4;
  for (double t : {0.7, 3.3}) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      const ComplexVector fwd = md.column_solution(j, t + delta);
      const ComplexVector bwd = md.column_solution(j, t - delta);
      const ComplexVector dpsi = (fwd - bwd) / (2.0 * delta);
      const ComplexVector residual =
          Complex(0.0, 1.0) * dpsi - h.evaluate_time(t) * md.column_solution(j, t);
      CHECK(residual.cwiseAbs().maxCoeff() < 1e-5);
    }
  }

  // Orthonormal overlaps at sampled times.
  for (double t : {0.0, 1.1, 4.4, 6.6}) {
    for (Eigen::Index a = 0; a < 2; ++a) {
      for (Eigen::Index b = 0; b < 2; ++b) {
        const Complex overlap = md.column_solution(a, t).dot(md.column_solution(b, t));
        CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-7);
      }
    }
  }

  CHECK_THROWS_AS(md.column_solution(5, 0.0), IndexOutOfRangeError);
  CHECK_THROWS_AS(md.phi(-0.5), InvalidArgumentError);
}
