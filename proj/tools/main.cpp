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

// Command-line front end. Links against the C interface of the shared
// library only; everything numerical happens behind fq_* calls.

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "experiment_config.hpp"
#include "floquet/floquet_c.h"
#include "result_table.hpp"

namespace {

using floqcli::ConfigError;
using floqcli::ExperimentConfig;
using floqcli::ResultTable;

constexpr double kTwoPi = 6.28318530717958647692;

// Exit codes: 0 success, 2 config error, 3 numerical-check failure,
// 4 convergence failure.
enum ExitCode : int { kOk = 0, kConfigError = 2, kCheckFailure = 3, kConvergence = 4 };

class CApiError : public std::runtime_error {
 public:
  CApiError(fq_status status, const std::string& context)
      : std::runtime_error(context + ": [" + fq_status_name(status) + "] " +
                           fq_last_error_message()),
        status_(status) {}
  fq_status status() const { return status_; }

 private:
  fq_status status_;
};

void check(fq_status status, const std::string& context) {
  if (status != FQ_OK) throw CApiError(status, context);
}

struct ModelDeleter {
  void operator()(fq_model* p) const { fq_model_free(p); }
};
struct SftDeleter {
  void operator()(fq_sft* p) const { fq_sft_free(p); }
};
struct MmftDeleter {
  void operator()(fq_mmft* p) const { fq_mmft_free(p); }
};
struct MonodromyDeleter {
  void operator()(fq_monodromy* p) const { fq_monodromy_free(p); }
};
using ModelPtr = std::unique_ptr<fq_model, ModelDeleter>;
using SftPtr = std::unique_ptr<fq_sft, SftDeleter>;
using MmftPtr = std::unique_ptr<fq_mmft, MmftDeleter>;
using MonodromyPtr = std::unique_ptr<fq_monodromy, MonodromyDeleter>;

// Builds the configured system; `phi1`/`phi2` override the drive phases when
// given (the built-in system keeps its first phase at zero by construction).
ModelPtr build_model(const ExperimentConfig& cfg, std::optional<double> phi1 = {},
                     std::optional<double> phi2 = {}) {
  fq_model* raw = nullptr;
  if (cfg.builtin) {
    if (phi1 && *phi1 != 0.0) {
      throw ConfigError("the builtin system fixes the first drive phase at zero");
    }
    const double phase = phi2.value_or(cfg.phi_2omega);
    check(fq_model_omega_2omega(phase, &raw), "loading the omega-2omega system");
  } else {
    std::vector<int> ps, qs;
    std::vector<double> re, im;
    for (const auto& c : cfg.coefficients) {
      ps.push_back(c.p);
      qs.push_back(c.q);
      for (const auto& z : c.matrix) {
        re.push_back(z.real());
        im.push_back(z.imag());
      }
    }
    check(fq_model_create(cfg.dim_a, cfg.n1, cfg.n2, cfg.omega_b,
                          phi1.value_or(cfg.phi1), phi2.value_or(cfg.phi2),
                          static_cast<int>(ps.size()), ps.data(), qs.data(), re.data(),
                          im.data(), &raw),
          "loading the custom system");
  }
  return ModelPtr(raw);
}

std::vector<double> time_grid(const ExperimentConfig& cfg) {
  std::vector<double> ts;
  ts.reserve(static_cast<size_t>(cfg.time_points));
  if (cfg.time_points == 1) {
    ts.push_back(cfg.t_start);
    return ts;
  }
  for (int i = 0; i < cfg.time_points; ++i) {
    ts.push_back(cfg.t_start +
                 (cfg.t_end - cfg.t_start) * i / static_cast<double>(cfg.time_points - 1));
  }
  return ts;
}

double effective_dt(const ExperimentConfig& cfg, const fq_model* model) {
  return cfg.dt > 0.0 ? cfg.dt : fq_model_period(model) / 4096.0;
}

struct AmpMatrix {
  int dim = 0;
  std::vector<double> re, im;
  std::complex<double> at(int row, int col) const {
    return {re[static_cast<size_t>(row * dim + col)],
            im[static_cast<size_t>(row * dim + col)]};
  }
};

AmpMatrix make_buffer(int dim) {
  AmpMatrix m;
  m.dim = dim;
  m.re.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0.0);
  m.im.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0.0);
  return m;
}

double unitarity_deviation(const AmpMatrix& g) {
  double worst = 0.0;
  for (int i = 0; i < g.dim; ++i) {
    for (int j = 0; j < g.dim; ++j) {
      std::complex<double> acc = 0.0;
      for (int r = 0; r < g.dim; ++r) acc += std::conj(g.at(r, i)) * g.at(r, j);
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

void write_table(const ResultTable& table, const ExperimentConfig& cfg) {
  if (cfg.out_path == "-") {
    if (cfg.format == "csv") {
      table.write_csv(std::cout);
    } else {
      table.write_json(std::cout);
    }
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output path \"" + cfg.out_path + "\"");
  if (cfg.format == "csv") {
    table.write_csv(out);
  } else {
    table.write_json(out);
  }
}

void stamp_provenance(ResultTable& table, const ExperimentConfig& cfg,
                      const std::string& command) {
  table.set_provenance("tool", "floquet");
  table.set_provenance("library_version", fq_version());
  table.set_provenance("command", command);
  std::ostringstream hash;
  hash << std::hex << floqcli::fnv1a64(cfg.canonical_json());
  table.set_provenance("config_hash", hash.str());
}

// ---- propagate -----------------------------------------------------------

int run_propagate(const ExperimentConfig& cfg) {
  ModelPtr model = build_model(cfg);
  const int dim = fq_model_dim(model.get());
  const double dt = effective_dt(cfg, model.get());

  SftPtr sft;
  MmftPtr mmft;
  for (const auto& engine : cfg.engines) {
    if (engine == "sft" && !sft) {
      fq_sft* raw = nullptr;
      check(fq_sft_build(model.get(), cfg.sft_n_max, &raw), "building the SFT engine");
      sft.reset(raw);
    }
    if (engine == "mmft" && !mmft) {
      fq_mmft* raw = nullptr;
      check(fq_mmft_build_square(model.get(), cfg.mmft_n_max, &raw),
            "building the MMFT engine");
      mmft.reset(raw);
    }
  }

  std::vector<std::string> columns{"t", "engine"};
  for (int beta = 0; beta < dim; ++beta) {
    for (int alpha = 0; alpha < dim; ++alpha) {
      const std::string suffix = std::to_string(beta) + "_" + std::to_string(alpha);
      columns.push_back("pop_" + suffix);
      columns.push_back("re_" + suffix);
      columns.push_back("im_" + suffix);
    }
  }
  ResultTable table(columns);
  stamp_provenance(table, cfg, "propagate");
  table.set_provenance("sft_n_max", static_cast<double>(cfg.sft_n_max));
  table.set_provenance("mmft_n_max", static_cast<double>(cfg.mmft_n_max));
  table.set_provenance("integrator_dt", dt);

  AmpMatrix g = make_buffer(dim);
  for (const double t : time_grid(cfg)) {
    for (const auto& engine : cfg.engines) {
      if (engine == "tdse") {
        check(fq_integrate(model.get(), t, cfg.dt, cfg.renormalize_every, g.re.data(),
                           g.im.data()),
              "integrating the equation of motion");
      } else if (engine == "sft") {
        check(fq_sft_amplitudes(sft.get(), t, g.re.data(), g.im.data()),
              "evaluating the SFT propagator");
      } else {
        check(fq_mmft_amplitudes(mmft.get(), t, g.re.data(), g.im.data()),
              "evaluating the MMFT propagator");
      }
      std::vector<ResultTable::Cell> row{t, engine};
      for (int beta = 0; beta < dim; ++beta) {
        for (int alpha = 0; alpha < dim; ++alpha) {
          const std::complex<double> amp = g.at(beta, alpha);
          row.emplace_back(std::norm(amp));
          row.emplace_back(amp.real());
          row.emplace_back(amp.imag());
        }
      }
      table.add_row(std::move(row));
    }
  }
  write_table(table, cfg);
  return kOk;
}

// ---- spectrum --------------------------------------------------------------

int run_spectrum(const ExperimentConfig& cfg, const std::string& mode) {
  if (mode == "sft-sweep") {
    ResultTable table({"phi2", "index", "energy", "folded"});
    stamp_provenance(table, cfg, "spectrum/sft-sweep");
    table.set_provenance("sft_n_max", static_cast<double>(cfg.sft_n_max));
    table.set_provenance("phase_points", static_cast<double>(cfg.phase_points));
    for (int i = 0; i < cfg.phase_points; ++i) {
      const double phi = kTwoPi * i / static_cast<double>(cfg.phase_points);
      ModelPtr model = build_model(cfg, std::nullopt, phi);
      fq_sft* raw = nullptr;
      check(fq_sft_build(model.get(), cfg.sft_n_max, &raw), "building the swept spectrum");
      SftPtr sft(raw);
      const int size = fq_sft_size(sft.get());
      std::vector<double> energies(static_cast<size_t>(size)),
          folded(static_cast<size_t>(size));
      check(fq_sft_eigenvalues(sft.get(), energies.data(), folded.data()),
            "reading the swept spectrum");
      for (int j = 0; j < size; ++j) {
        table.add_row({phi, static_cast<double>(j), energies[static_cast<size_t>(j)],
                       folded[static_cast<size_t>(j)]});
      }
    }
    write_table(table, cfg);
    return kOk;
  }

  ModelPtr model = build_model(cfg);
  if (mode == "mmft-square") {
    fq_mmft* raw = nullptr;
    check(fq_mmft_build_square(model.get(), cfg.mmft_n_max, &raw),
          "building the square-basis spectrum");
    MmftPtr mmft(raw);
    const int size = fq_mmft_size(mmft.get());
    std::vector<double> energies(static_cast<size_t>(size)),
        folded(static_cast<size_t>(size));
    check(fq_mmft_eigenvalues(mmft.get(), energies.data(), folded.data()),
          "reading the square-basis spectrum");
    ResultTable table({"index", "energy", "folded"});
    stamp_provenance(table, cfg, "spectrum/mmft-square");
    table.set_provenance("mmft_n_max", static_cast<double>(cfg.mmft_n_max));
    table.set_provenance(
        "note",
        "raw square-truncation eigenvalues: mid-spectrum values may belong to "
        "other relative phases or be truncation artifacts");
    for (int j = 0; j < size; ++j) {
      table.add_row({static_cast<double>(j), energies[static_cast<size_t>(j)],
                     folded[static_cast<size_t>(j)]});
    }
    write_table(table, cfg);
    return kOk;
  }

  // mmft-periodic
  fq_mmft* raw = nullptr;
  check(fq_mmft_build_periodic(model.get(), cfg.orbit_n_min, cfg.orbit_n_max,
                               cfg.orbit_n_ell, &raw),
        "building the periodic-basis spectrum");
  MmftPtr mmft(raw);
  const int kcount = fq_mmft_k_count(mmft.get());
  std::vector<double> ks(static_cast<size_t>(kcount));
  check(fq_mmft_k_values(mmft.get(), ks.data()), "reading the k grid");
  const int bs = fq_mmft_k_block_size(mmft.get());
  ResultTable table({"k", "phi1_equiv", "phi2_equiv", "index", "energy", "folded"});
  stamp_provenance(table, cfg, "spectrum/mmft-periodic");
  table.set_provenance("orbit_n_min", static_cast<double>(cfg.orbit_n_min));
  table.set_provenance("orbit_n_max", static_cast<double>(cfg.orbit_n_max));
  table.set_provenance("orbit_n_ell", static_cast<double>(cfg.orbit_n_ell));
  std::vector<double> energies(static_cast<size_t>(bs)), folded(static_cast<size_t>(bs));
  for (int ki = 0; ki < kcount; ++ki) {
    check(fq_mmft_k_block_eigenvalues(mmft.get(), ki, energies.data(), folded.data()),
          "reading a k block");
    double phi1 = 0.0, phi2 = 0.0;
    check(fq_model_phase_pair_for_k(model.get(), ks[static_cast<size_t>(ki)], &phi1, &phi2),
          "mapping k to drive phases");
    for (int j = 0; j < bs; ++j) {
      table.add_row({ks[static_cast<size_t>(ki)], phi1, phi2, static_cast<double>(j),
                     energies[static_cast<size_t>(j)], folded[static_cast<size_t>(j)]});
    }
  }
  write_table(table, cfg);
  return kOk;
}

// ---- validate --------------------------------------------------------------

struct CheckRow {
  std::string name;
  double measured;
  double threshold;
  bool pass;
};

int run_validate(const ExperimentConfig& cfg) {
  ModelPtr model = build_model(cfg);
  const int dim = fq_model_dim(model.get());
  const double period = fq_model_period(model.get());
  const double dt = effective_dt(cfg, model.get());
  const double omega_b = fq_model_omega_b(model.get());
  std::vector<CheckRow> checks;
  auto record = [&checks](const std::string& name, double measured, double threshold) {
    checks.push_back({name, measured, threshold, measured <= threshold});
  };

  // Direct integration quality at the configured step.
  {
    AmpMatrix u1 = make_buffer(dim), u2 = make_buffer(dim);
    check(fq_integrate(model.get(), period, dt, cfg.renormalize_every, u1.re.data(),
                       u1.im.data()),
          "one-period integration");
    record("rk4-unitarity", unitarity_deviation(u1), 1e-8);
    check(fq_integrate(model.get(), period, dt / 2.0, cfg.renormalize_every, u2.re.data(),
                       u2.im.data()),
          "half-step integration");
    double diff = 0.0;
    for (size_t i = 0; i < u1.re.size(); ++i) {
      diff = std::max(diff, std::abs(std::complex<double>(u1.re[i] - u2.re[i],
                                                          u1.im[i] - u2.im[i])));
    }
    record("rk4-step-halving", diff, 1e-9);
  }

  // Translation symmetry of the periodic two-mode Hamiltonian.
  MmftPtr periodic;
  {
    fq_mmft* raw = nullptr;
    check(fq_mmft_build_periodic(model.get(), cfg.orbit_n_min, cfg.orbit_n_max,
                                 cfg.orbit_n_ell, &raw),
          "building the periodic-basis Hamiltonian");
    periodic.reset(raw);
    double dev = 0.0;
    check(fq_mmft_commutation_deviation(periodic.get(), &dev), "commutation check");
    record("translation-commutation", dev, 1e-14);
    check(fq_mmft_k0_sft_deviation(model.get(), periodic.get(), &dev), "k = 0 identity");
    record("k0-block-identity", dev, 1e-12);
  }

  // Every k block matches the single-mode spectrum at its equivalent phases.
  {
    if (cfg.orbit_n_min != -cfg.orbit_n_max) {
      throw ConfigError("validate: the k-block comparison needs a symmetric orbit range");
    }
    const int kcount = fq_mmft_k_count(periodic.get());
    const int bs = fq_mmft_k_block_size(periodic.get());
    std::vector<double> ks(static_cast<size_t>(kcount));
    check(fq_mmft_k_values(periodic.get(), ks.data()), "reading the k grid");
    std::vector<double> block(static_cast<size_t>(bs)), ref(static_cast<size_t>(bs));
    double worst = 0.0;
    for (int ki = 0; ki < kcount; ++ki) {
      check(fq_mmft_k_block_eigenvalues(periodic.get(), ki, block.data(), nullptr),
            "reading a k block");
      double phi1 = 0.0, phi2 = 0.0;
      check(fq_model_phase_pair_for_k(model.get(), ks[static_cast<size_t>(ki)], &phi1, &phi2),
            "mapping k to drive phases");
      ModelPtr shifted = build_model(cfg, phi1, phi2);
      fq_sft* raw = nullptr;
      check(fq_sft_build(shifted.get(), cfg.orbit_n_max, &raw), "phase-shifted spectrum");
      SftPtr sft(raw);
      check(fq_sft_eigenvalues(sft.get(), ref.data(), nullptr), "phase-shifted spectrum");
      for (int j = 0; j < bs; ++j) {
        worst = std::max(worst, std::abs(block[static_cast<size_t>(j)] -
                                         ref[static_cast<size_t>(j)]));
      }
    }
    record("k-blocks-vs-phase-spectra", worst, 1e-8);
  }

  // Exact structural identities on the square basis.
  {
    double dev = 0.0;
    check(fq_check_phase_conjugation(model.get(), 0.0, kTwoPi / 4.0, 4, &dev),
          "phase conjugation check");
    record("phase-conjugation", dev, 1e-12);
    int reach = 0;
    for (const auto& c : cfg.coefficients) {
      reach = std::max(reach, std::abs(c.p) + std::abs(c.q));
    }
    const int margin = cfg.builtin ? 3 : std::max(3, reach);
    const int n_max = std::max(6, 2 * margin);
    double hd = 0.0, dp = 0.0;
    check(fq_check_intertwining(model.get(), n_max, margin, &hd, &dp),
          "intertwining check");
    record("intertwining-hd-dh", hd, 1e-12);
    record("intertwining-dp-identity", dp, 0.0);
  }

  // Quasi-energy ladder repetition in the converged central window. The
  // repetition degrades toward the truncation edge, so the check covers
  // |E| <= 2 omega_B, where a ten-harmonic basis is converged to a few 1e-4.
  {
    fq_sft* raw = nullptr;
    check(fq_sft_build(model.get(), cfg.sft_n_max, &raw), "ladder spectrum");
    SftPtr sft(raw);
    const int size = fq_sft_size(sft.get());
    std::vector<double> energies(static_cast<size_t>(size));
    check(fq_sft_eigenvalues(sft.get(), energies.data(), nullptr), "ladder spectrum");
    double worst = 0.0;
    for (int j = 0; j < size; ++j) {
      const double e = energies[static_cast<size_t>(j)];
      if (std::abs(e) > 2.0 * omega_b) continue;
      double best = 1e300;
      for (int i = 0; i < size; ++i) {
        best = std::min(best, std::abs(energies[static_cast<size_t>(i)] - (e + omega_b)));
      }
      worst = std::max(worst, best);
    }
    record("ladder-repetition-central", worst, 5e-4);
  }

  // Cross-method agreement: monodromy quasi-energies against a wide
  // single-mode basis.
  {
    MonodromyPtr monodromy;
    {
      fq_monodromy* raw = nullptr;
      check(fq_monodromy_build(model.get(), cfg.dt, cfg.renormalize_every, &raw),
            "monodromy decomposition");
      monodromy.reset(raw);
    }
    std::vector<double> direct(static_cast<size_t>(dim));
    check(fq_monodromy_quasi_energies(monodromy.get(), direct.data()),
          "monodromy quasi-energies");
    fq_sft* raw = nullptr;
    check(fq_sft_build(model.get(), 20, &raw), "reference spectrum");
    SftPtr sft(raw);
    const int size = fq_sft_size(sft.get());
    std::vector<double> energies(static_cast<size_t>(size)),
        folded(static_cast<size_t>(size));
    check(fq_sft_eigenvalues(sft.get(), energies.data(), folded.data()),
          "reference spectrum");
    double worst = 0.0;
    for (int j = 0; j < dim; ++j) {
      double best = 1e300;
      for (int i = 0; i < size; ++i) {
        if (energies[static_cast<size_t>(i)] != folded[static_cast<size_t>(i)]) continue;
        best = std::min(best, std::abs(direct[static_cast<size_t>(j)] -
                                       energies[static_cast<size_t>(i)]));
      }
      worst = std::max(worst, best);
    }
    record("cross-oracle-quasi-energies", worst, 1e-6);
  }

  // One-period propagator agreement across all three engines.
  {
    fq_sft* sraw = nullptr;
    check(fq_sft_build(model.get(), cfg.sft_n_max, &sraw), "SFT engine");
    SftPtr sft(sraw);
    fq_mmft* mraw = nullptr;
    check(fq_mmft_build_square(model.get(), cfg.mmft_n_max, &mraw), "MMFT engine");
    MmftPtr mmft(mraw);
    AmpMatrix gt = make_buffer(dim), gs = make_buffer(dim), gm = make_buffer(dim);
    check(fq_integrate(model.get(), period, cfg.dt, cfg.renormalize_every, gt.re.data(),
                       gt.im.data()),
          "reference propagator");
    check(fq_sft_amplitudes(sft.get(), period, gs.re.data(), gs.im.data()),
          "SFT propagator");
    check(fq_mmft_amplitudes(mmft.get(), period, gm.re.data(), gm.im.data()),
          "MMFT propagator");
    const double ps = std::norm(gs.at(dim - 1, 0));
    const double pm = std::norm(gm.at(dim - 1, 0));
    const double pt = std::norm(gt.at(dim - 1, 0));
    record("sft-population-vs-oracle", std::abs(ps - pt), 1e-2);
    record("mmft-population-vs-oracle", std::abs(pm - pt), 1e-2);
  }

  ResultTable table({"check", "measured", "threshold", "pass"});
  stamp_provenance(table, cfg, "validate");
  bool all_pass = true;
  for (const auto& row : checks) {
    all_pass = all_pass && row.pass;
    table.add_row({row.name, row.measured, row.threshold,
                   std::string(row.pass ? "yes" : "no")});
  }
  write_table(table, cfg);
  return all_pass ? kOk : kCheckFailure;
}

int map_failure(const CApiError& e, bool loading) {
  if (e.status() == FQ_ERR_CONVERGENCE || e.status() == FQ_ERR_NONUNITARY_DRIFT) {
    return kConvergence;
  }
  if (loading) return kConfigError;
  switch (e.status()) {
    case FQ_ERR_NOT_COPRIME:
    case FQ_ERR_NOT_HERMITIAN:
    case FQ_ERR_INVALID_ARGUMENT:
      return kConfigError;
    default:
      return kCheckFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-energy spectra and unitary time evolution for systems driven by "
               "two commensurate periodic fields"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("config", config_path, "JSON experiment configuration")
      ->check(CLI::ExistingFile);

  floqcli::Overrides ov;
  double phi2_val = 0.0;
  int sft_n_max = 0, mmft_n_max = 0, points = 0;
  double t_end = 0.0;
  std::string out_path, format;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--phi2", phi2_val, "Override the relative drive phase");
    cmd->add_option("--sft-n-max", sft_n_max, "Single-mode harmonic cut");
    cmd->add_option("--mmft-n-max", mmft_n_max, "Two-mode square half-width");
    cmd->add_option("--t-end", t_end, "End of the time grid");
    cmd->add_option("--points", points, "Grid resolution (time or phase)");
    cmd->add_option("--engine", ov.engines, "Engines to run (repeatable)");
    cmd->add_option("--out", out_path, "Output path (- for stdout)");
    cmd->add_option("--format", format, "Output format: csv or json");
  };
  auto collect_overrides = [&](CLI::App* cmd) {
    if (cmd->count("--phi2")) ov.phi2 = phi2_val;
    if (cmd->count("--sft-n-max")) ov.sft_n_max = sft_n_max;
    if (cmd->count("--mmft-n-max")) ov.mmft_n_max = mmft_n_max;
    if (cmd->count("--t-end")) ov.t_end = t_end;
    if (cmd->count("--points")) ov.points = points;
    if (cmd->count("--out")) ov.out_path = out_path;
    if (cmd->count("--format")) ov.format = format;
  };

  CLI::App* propagate =
      app.add_subcommand("propagate", "Population and amplitude curves per engine");
  add_common(propagate);

  CLI::App* spectrum = app.add_subcommand("spectrum", "Quasi-energy spectra");
  std::string mode;
  spectrum->add_option("--mode", mode, "sft-sweep | mmft-square | mmft-periodic")
      ->required()
      ->check(CLI::IsMember({"sft-sweep", "mmft-square", "mmft-periodic"}));
  add_common(spectrum);

  CLI::App* validate =
      app.add_subcommand("validate", "Structural and cross-method consistency checks");
  add_common(validate);

  CLI11_PARSE(app, argc, argv);

  bool loading = true;
  try {
    collect_overrides(propagate->parsed() ? propagate
                                          : (spectrum->parsed() ? spectrum : validate));
    ExperimentConfig cfg = floqcli::load_config(config_path);
    floqcli::apply_overrides(cfg, ov);
    loading = false;
    if (propagate->parsed()) return run_propagate(cfg);
    if (spectrum->parsed()) return run_spectrum(cfg, mode);
    return run_validate(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const CApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return map_failure(e, loading);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
}
