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

#include "floquet/floquet_c.h"

#include <optional>
#include <string>
#include <vector>

#include "floquet/mmft.hpp"
#include "floquet/sft.hpp"
#include "floquet/tdse.hpp"

using floquet::linalg::ComplexMatrix;

struct fq_model {
  floquet::model::FourierHamiltonian h;
};

struct fq_sft {
  floquet::sft::SftHamiltonian h;
  floquet::sft::QuasiEnergySpectrum spectrum;
  floquet::sft::SftPropagator propagator;
};

struct fq_mmft {
  floquet::mmft::MmftHamiltonian h;
  floquet::sft::QuasiEnergySpectrum spectrum;
  std::optional<floquet::mmft::MmftPropagator> propagator;        // square basis
  std::optional<floquet::mmft::KBlockDecomposition> kblocks;      // periodic basis
  std::vector<floquet::sft::QuasiEnergySpectrum> block_spectra;   // periodic basis
};

struct fq_monodromy {
  floquet::tdse::MonodromyDecomposition md;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& msg) { t_last_error = msg; }

template <typename Fn>
fq_status wrap(Fn&& fn) noexcept {
  try {
    fn();
    return FQ_OK;
  } catch (const floquet::NotCoprimeError& e) {
    set_error(e.what());
    return FQ_ERR_NOT_COPRIME;
  } catch (const floquet::NotHermitianError& e) {
    set_error(e.what());
    return FQ_ERR_NOT_HERMITIAN;
  } catch (const floquet::NotUnitaryError& e) {
    set_error(e.what());
    return FQ_ERR_NOT_UNITARY;
  } catch (const floquet::NotSquareError& e) {
    set_error(e.what());
    return FQ_ERR_NOT_SQUARE;
  } catch (const floquet::ConvergenceError& e) {
    set_error(e.what());
    return FQ_ERR_CONVERGENCE;
  } catch (const floquet::IndexOutOfRangeError& e) {
    set_error(e.what());
    return FQ_ERR_INDEX_OUT_OF_RANGE;
  } catch (const floquet::ZeroBlockMissingError& e) {
    set_error(e.what());
    return FQ_ERR_ZERO_BLOCK_MISSING;
  } catch (const floquet::MarginTooSmallError& e) {
    set_error(e.what());
    return FQ_ERR_MARGIN_TOO_SMALL;
  } catch (const floquet::NotPeriodicError& e) {
    set_error(e.what());
    return FQ_ERR_NOT_PERIODIC;
  } catch (const floquet::NonUnitaryDriftError& e) {
    set_error(e.what());
    return FQ_ERR_NONUNITARY_DRIFT;
  } catch (const floquet::InvalidArgumentError& e) {
    set_error(e.what());
    return FQ_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FQ_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return FQ_ERR_INTERNAL;
  }
}

fq_status require(bool ok, const char* msg) {
  if (!ok) {
    set_error(msg);
    return FQ_ERR_INVALID_ARGUMENT;
  }
  return FQ_OK;
}

void copy_matrix(const ComplexMatrix& m, double* re, double* im) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re[i * m.cols() + j] = m(i, j).real();
      im[i * m.cols() + j] = m(i, j).imag();
    }
  }
}

floquet::tdse::IntegratorConfig make_config(const fq_model* model, double dt,
                                            int renormalize_every) {
  floquet::tdse::IntegratorConfig cfg = floquet::tdse::default_config(model->h);
  if (dt > 0.0) cfg.dt = dt;
  cfg.renormalize_every = renormalize_every;
  return cfg;
}

}  // namespace

extern "C" {

const char* fq_version(void) { return "1.0.0"; }

const char* fq_status_name(fq_status status) {
  switch (status) {
    case FQ_OK: return "ok";
    case FQ_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case FQ_ERR_NOT_COPRIME: return "not-coprime";
    case FQ_ERR_NOT_HERMITIAN: return "not-hermitian";
    case FQ_ERR_NOT_UNITARY: return "not-unitary";
    case FQ_ERR_NOT_SQUARE: return "not-square";
    case FQ_ERR_CONVERGENCE: return "convergence-failure";
    case FQ_ERR_INDEX_OUT_OF_RANGE: return "index-out-of-range";
    case FQ_ERR_ZERO_BLOCK_MISSING: return "zero-block-missing";
    case FQ_ERR_MARGIN_TOO_SMALL: return "margin-too-small";
    case FQ_ERR_NOT_PERIODIC: return "not-periodic";
    case FQ_ERR_NONUNITARY_DRIFT: return "non-unitary-drift";
    case FQ_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* fq_last_error_message(void) { return t_last_error.c_str(); }

fq_status fq_model_omega_2omega(double phi_2omega, fq_model** out) {
  if (auto rc = require(out != nullptr, "fq_model_omega_2omega: out is null")) return rc;
  return wrap([&] {
    *out = new fq_model{floquet::model::make_omega_2omega_example(phi_2omega)};
  });
}

fq_status fq_model_create(int dim_a, int n1, int n2, double omega_b, double phi1,
                          double phi2, int n_coeffs, const int* ps, const int* qs,
                          const double* re, const double* im, fq_model** out) {
  if (auto rc = require(out != nullptr, "fq_model_create: out is null")) return rc;
  if (auto rc = require(n_coeffs >= 0, "fq_model_create: negative coefficient count"))
    return rc;
  if (auto rc = require(n_coeffs == 0 || (ps && qs && re && im),
                        "fq_model_create: null coefficient arrays"))
    return rc;
  return wrap([&] {
    floquet::model::FourierHamiltonian h{
        dim_a, floquet::basis::make_mode_pair(n1, n2, omega_b), {}, phi1, phi2};
    const size_t block = static_cast<size_t>(dim_a) * static_cast<size_t>(dim_a);
    for (int c = 0; c < n_coeffs; ++c) {
      ComplexMatrix m(dim_a, dim_a);
      for (int i = 0; i < dim_a; ++i) {
        for (int j = 0; j < dim_a; ++j) {
          const size_t idx = static_cast<size_t>(c) * block +
                             static_cast<size_t>(i) * static_cast<size_t>(dim_a) +
                             static_cast<size_t>(j);
          m(i, j) = std::complex<double>(re[idx], im[idx]);
        }
      }
      auto [it, inserted] = h.coeffs.try_emplace({ps[c], qs[c]}, std::move(m));
      if (!inserted) {
        throw floquet::InvalidArgumentError("fq_model_create: duplicate coefficient (" +
                                            std::to_string(ps[c]) + ", " +
                                            std::to_string(qs[c]) + ")");
      }
    }
    h.validate();
    *out = new fq_model{std::move(h)};
  });
}

void fq_model_free(fq_model* model) { delete model; }

int fq_model_dim(const fq_model* model) { return model ? model->h.dim_a : 0; }

double fq_model_omega_b(const fq_model* model) {
  return model ? model->h.modes.omega_b() : 0.0;
}

double fq_model_period(const fq_model* model) {
  return model ? model->h.modes.period() : 0.0;
}

fq_status fq_model_evaluate(const fq_model* model, double t, double* re, double* im) {
  if (auto rc = require(model && re && im, "fq_model_evaluate: null argument")) return rc;
  return wrap([&] { copy_matrix(model->h.evaluate_time(t), re, im); });
}

fq_status fq_model_phase_pair_for_k(const fq_model* model, double k, double* phi1_out,
                                    double* phi2_out) {
  if (auto rc = require(model && phi1_out && phi2_out,
                        "fq_model_phase_pair_for_k: null argument"))
    return rc;
  return wrap([&] {
    const auto b = floquet::basis::bezout_unit(model->h.modes);
    *phi1_out = model->h.phi1 - b.y * k;
    *phi2_out = model->h.phi2 + b.x * k;
  });
}

fq_status fq_sft_build(const fq_model* model, int n_max, fq_sft** out) {
  if (auto rc = require(model && out, "fq_sft_build: null argument")) return rc;
  if (auto rc = require(n_max >= 0, "fq_sft_build: n_max must be >= 0")) return rc;
  return wrap([&] {
    auto h = floquet::sft::build_sft(model->h,
                                     floquet::basis::SingleModeBasis::symmetric(n_max));
    auto spectrum = floquet::sft::sft_spectrum(h);
    floquet::sft::SftPropagator propagator(h, spectrum);
    *out = new fq_sft{std::move(h), std::move(spectrum), std::move(propagator)};
  });
}

void fq_sft_free(fq_sft* sft) { delete sft; }

int fq_sft_size(const fq_sft* sft) {
  return sft ? static_cast<int>(sft->h.size()) : 0;
}

fq_status fq_sft_eigenvalues(const fq_sft* sft, double* energies, double* folded) {
  if (auto rc = require(sft && energies, "fq_sft_eigenvalues: null argument")) return rc;
  return wrap([&] {
    for (Eigen::Index j = 0; j < sft->spectrum.energies.size(); ++j) {
      energies[j] = sft->spectrum.energies(j);
      if (folded) folded[j] = sft->spectrum.ladder_reps(j);
    }
  });
}

fq_status fq_sft_amplitudes(const fq_sft* sft, double t, double* re, double* im) {
  if (auto rc = require(sft && re && im, "fq_sft_amplitudes: null argument")) return rc;
  return wrap([&] { copy_matrix(sft->propagator.amplitudes(t), re, im); });
}

fq_status fq_mmft_build_square(const fq_model* model, int n_max, fq_mmft** out) {
  if (auto rc = require(model && out, "fq_mmft_build_square: null argument")) return rc;
  return wrap([&] {
    auto h = floquet::mmft::build_mmft(model->h, n_max);
    auto spectrum = floquet::mmft::mmft_spectrum(h);
    floquet::mmft::MmftPropagator propagator(h, spectrum);
    *out = new fq_mmft{std::move(h), std::move(spectrum), std::move(propagator), {}, {}};
  });
}

fq_status fq_mmft_build_periodic(const fq_model* model, int n_min, int n_max, int n_ell,
                                 fq_mmft** out) {
  if (auto rc = require(model && out, "fq_mmft_build_periodic: null argument")) return rc;
  if (auto rc = require(n_ell >= 1, "fq_mmft_build_periodic: n_ell must be >= 1"))
    return rc;
  return wrap([&] {
    const int ell_min = -(n_ell / 2);
    const auto ob = floquet::basis::build_orbit_basis(
        model->h.modes, floquet::basis::SingleModeBasis(n_min, n_max), ell_min,
        ell_min + n_ell - 1);
    auto h = floquet::mmft::build_mmft_periodic(model->h, ob);
    auto spectrum = floquet::mmft::mmft_spectrum(h);
    auto kblocks = floquet::mmft::k_block_decompose(h);
    std::vector<floquet::sft::QuasiEnergySpectrum> block_spectra;
    block_spectra.reserve(kblocks.blocks.size());
    for (size_t ki = 0; ki < kblocks.blocks.size(); ++ki) {
      block_spectra.push_back(floquet::mmft::k_block_spectrum(kblocks, static_cast<int>(ki)));
    }
    *out = new fq_mmft{std::move(h), std::move(spectrum), {}, std::move(kblocks),
                       std::move(block_spectra)};
  });
}

void fq_mmft_free(fq_mmft* mmft) { delete mmft; }

int fq_mmft_size(const fq_mmft* mmft) {
  return mmft ? static_cast<int>(mmft->h.size()) : 0;
}

fq_status fq_mmft_eigenvalues(const fq_mmft* mmft, double* energies, double* folded) {
  if (auto rc = require(mmft && energies, "fq_mmft_eigenvalues: null argument")) return rc;
  return wrap([&] {
    for (Eigen::Index j = 0; j < mmft->spectrum.energies.size(); ++j) {
      energies[j] = mmft->spectrum.energies(j);
      if (folded) folded[j] = mmft->spectrum.ladder_reps(j);
    }
  });
}

fq_status fq_mmft_amplitudes(const fq_mmft* mmft, double t, double* re, double* im) {
  if (auto rc = require(mmft && re && im, "fq_mmft_amplitudes: null argument")) return rc;
  return wrap([&] {
    if (!mmft->propagator) {
      throw floquet::NotPeriodicError(
          "fq_mmft_amplitudes: propagation requires the square (non-periodic) basis");
    }
    copy_matrix(mmft->propagator->amplitudes(t), re, im);
  });
}

int fq_mmft_k_count(const fq_mmft* mmft) {
  return (mmft && mmft->kblocks) ? static_cast<int>(mmft->kblocks->k_values.size()) : 0;
}

fq_status fq_mmft_k_values(const fq_mmft* mmft, double* k_values) {
  if (auto rc = require(mmft && k_values, "fq_mmft_k_values: null argument")) return rc;
  return wrap([&] {
    if (!mmft->kblocks) {
      throw floquet::NotPeriodicError("fq_mmft_k_values: requires the periodic basis");
    }
    for (size_t i = 0; i < mmft->kblocks->k_values.size(); ++i) {
      k_values[i] = mmft->kblocks->k_values[i];
    }
  });
}

int fq_mmft_k_block_size(const fq_mmft* mmft) {
  if (!mmft || !mmft->kblocks || mmft->kblocks->blocks.empty()) return 0;
  return static_cast<int>(mmft->kblocks->blocks.front().rows());
}

fq_status fq_mmft_k_block_eigenvalues(const fq_mmft* mmft, int k_index, double* energies,
                                      double* folded) {
  if (auto rc = require(mmft && energies, "fq_mmft_k_block_eigenvalues: null argument"))
    return rc;
  return wrap([&] {
    if (!mmft->kblocks) {
      throw floquet::NotPeriodicError(
          "fq_mmft_k_block_eigenvalues: requires the periodic basis");
    }
    if (k_index < 0 || static_cast<size_t>(k_index) >= mmft->block_spectra.size()) {
      throw floquet::IndexOutOfRangeError("fq_mmft_k_block_eigenvalues: bad k index");
    }
    const auto& sp = mmft->block_spectra[static_cast<size_t>(k_index)];
    for (Eigen::Index j = 0; j < sp.energies.size(); ++j) {
      energies[j] = sp.energies(j);
      if (folded) folded[j] = sp.ladder_reps(j);
    }
  });
}

fq_status fq_mmft_commutation_deviation(const fq_mmft* mmft, double* deviation) {
  if (auto rc = require(mmft && deviation, "fq_mmft_commutation_deviation: null argument"))
    return rc;
  return wrap([&] {
    const auto& orbit = mmft->h.orbit();  // throws NotPeriodicError on square
    const ComplexMatrix t = floquet::mmft::translation_matrix(orbit).to_dense(mmft->h.dim_a);
    *deviation = floquet::linalg::max_abs(mmft->h.matrix * t - t * mmft->h.matrix);
  });
}

fq_status fq_mmft_k0_sft_deviation(const fq_model* model, const fq_mmft* mmft,
                                   double* deviation) {
  if (auto rc = require(model && mmft && deviation, "fq_mmft_k0_sft_deviation: null argument"))
    return rc;
  return wrap([&] {
    const auto& orbit = mmft->h.orbit();
    const auto& kd = *mmft->kblocks;
    int k0 = -1;
    for (size_t i = 0; i < kd.k_values.size(); ++i) {
      if (kd.k_values[i] == 0.0) k0 = static_cast<int>(i);
    }
    if (k0 < 0) throw floquet::InvalidArgumentError("no k = 0 block present");
    const auto sh = floquet::sft::build_sft(model->h, orbit.n_set());
    *deviation =
        floquet::linalg::max_abs(kd.blocks[static_cast<size_t>(k0)] - sh.matrix);
  });
}

fq_status fq_check_phase_conjugation(const fq_model* model, double phi1, double phi2,
                                     int n_max, double* deviation) {
  if (auto rc = require(model && deviation, "fq_check_phase_conjugation: null argument"))
    return rc;
  return wrap([&] {
    *deviation = floquet::mmft::phase_shift_conjugation_check(model->h, phi1, phi2, n_max);
  });
}

fq_status fq_check_intertwining(const fq_model* model, int n_max, int margin,
                                double* intertwining_dev, double* dp_identity_dev) {
  if (auto rc = require(model && intertwining_dev && dp_identity_dev,
                        "fq_check_intertwining: null argument"))
    return rc;
  return wrap([&] {
    const auto report = floquet::mmft::demotion_intertwining_check(model->h, n_max, margin);
    *intertwining_dev = report.intertwining_deviation;
    *dp_identity_dev = report.dp_identity_deviation;
  });
}

fq_status fq_integrate(const fq_model* model, double t_end, double dt,
                       int renormalize_every, double* re, double* im) {
  if (auto rc = require(model && re && im, "fq_integrate: null argument")) return rc;
  return wrap([&] {
    copy_matrix(
        floquet::tdse::integrate(model->h, t_end, make_config(model, dt, renormalize_every)),
        re, im);
  });
}

fq_status fq_monodromy_build(const fq_model* model, double dt, int renormalize_every,
                             fq_monodromy** out) {
  if (auto rc = require(model && out, "fq_monodromy_build: null argument")) return rc;
  return wrap([&] {
    *out = new fq_monodromy{floquet::tdse::MonodromyDecomposition(
        model->h, make_config(model, dt, renormalize_every))};
  });
}

void fq_monodromy_free(fq_monodromy* monodromy) { delete monodromy; }

fq_status fq_monodromy_quasi_energies(const fq_monodromy* monodromy, double* energies) {
  if (auto rc = require(monodromy && energies, "fq_monodromy_quasi_energies: null argument"))
    return rc;
  return wrap([&] {
    const auto e = monodromy->md.quasi_energies();
    for (Eigen::Index j = 0; j < e.size(); ++j) energies[j] = e(j);
  });
}

fq_status fq_monodromy_propagator(const fq_monodromy* monodromy, double t, double* re,
                                  double* im) {
  if (auto rc = require(monodromy && re && im, "fq_monodromy_propagator: null argument"))
    return rc;
  return wrap([&] { copy_matrix(monodromy->md.propagator(t), re, im); });
}

}  // extern "C"
