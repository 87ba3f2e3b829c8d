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

#include "experiment_config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

namespace floqcli {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("config: unknown key \"" + key + "\" in " + where);
    }
  }
}

template <typename T>
T get_or(const json& obj, const std::string& key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config: bad type for \"" + key + "\"");
  }
}

void parse_system(const json& sys, ExperimentConfig& cfg) {
  require_keys(sys, "system",
               {"type", "phi_2omega", "dim_A", "N1", "N2", "omega_B", "phi1", "phi2",
                "coefficients"});
  const std::string type = get_or<std::string>(sys, "type", "omega-2omega");
  if (type == "omega-2omega") {
    cfg.builtin = true;
    cfg.phi_2omega = get_or(sys, "phi_2omega", 0.0);
  } else if (type == "custom") {
    cfg.builtin = false;
    cfg.dim_a = get_or(sys, "dim_A", 2);
    cfg.n1 = get_or(sys, "N1", 1);
    cfg.n2 = get_or(sys, "N2", 2);
    cfg.omega_b = get_or(sys, "omega_B", 1.0);
    cfg.phi1 = get_or(sys, "phi1", 0.0);
    cfg.phi2 = get_or(sys, "phi2", 0.0);
    if (!sys.contains("coefficients") || !sys.at("coefficients").is_array()) {
      throw ConfigError("config: custom system needs a \"coefficients\" array");
    }
    for (const auto& entry : sys.at("coefficients")) {
      require_keys(entry, "coefficients[]", {"p", "q", "matrix"});
      CoefficientSpec spec;
      spec.p = get_or(entry, "p", 0);
      spec.q = get_or(entry, "q", 0);
      if (!entry.contains("matrix") || !entry.at("matrix").is_array()) {
        throw ConfigError("config: coefficient matrix missing");
      }
      const auto& mat = entry.at("matrix");
      const size_t want = static_cast<size_t>(cfg.dim_a) * static_cast<size_t>(cfg.dim_a);
      if (mat.size() != want) {
        throw ConfigError("config: coefficient (" + std::to_string(spec.p) + ", " +
                          std::to_string(spec.q) + ") matrix needs " +
                          std::to_string(want) + " [re, im] entries (row-major)");
      }
      for (const auto& pair : mat) {
        if (!pair.is_array() || pair.size() != 2) {
          throw ConfigError("config: matrix entries must be [re, im] pairs");
        }
        spec.matrix.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
      }
      cfg.coefficients.push_back(std::move(spec));
    }
  } else {
    throw ConfigError("config: system type must be \"omega-2omega\" or \"custom\"");
  }
}

}  // namespace

ExperimentConfig load_config(const std::string& path) {
  ExperimentConfig cfg;
  if (path.empty()) return cfg;

  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open \"" + path + "\"");
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);  // allow comments
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: JSON parse failure: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  require_keys(doc, "top level",
               {"system", "truncation", "time_grid", "phase_grid", "integrator",
                "outputs", "engines"});

  if (doc.contains("system")) parse_system(doc.at("system"), cfg);

  if (doc.contains("truncation")) {
    const auto& tr = doc.at("truncation");
    require_keys(tr, "truncation", {"sft_n_max", "mmft_n_max", "orbit"});
    cfg.sft_n_max = get_or(tr, "sft_n_max", cfg.sft_n_max);
    cfg.mmft_n_max = get_or(tr, "mmft_n_max", cfg.mmft_n_max);
    if (tr.contains("orbit")) {
      const auto& orbit = tr.at("orbit");
      require_keys(orbit, "truncation.orbit", {"n_min", "n_max", "N_L"});
      cfg.orbit_n_min = get_or(orbit, "n_min", cfg.orbit_n_min);
      cfg.orbit_n_max = get_or(orbit, "n_max", cfg.orbit_n_max);
      cfg.orbit_n_ell = get_or(orbit, "N_L", cfg.orbit_n_ell);
    }
  }

  if (doc.contains("time_grid")) {
    const auto& tg = doc.at("time_grid");
    require_keys(tg, "time_grid", {"t_start", "t_end", "points"});
    cfg.t_start = get_or(tg, "t_start", cfg.t_start);
    cfg.t_end = get_or(tg, "t_end", cfg.t_end);
    cfg.time_points = get_or(tg, "points", cfg.time_points);
  }

  if (doc.contains("phase_grid")) {
    const auto& pg = doc.at("phase_grid");
    require_keys(pg, "phase_grid", {"points"});
    cfg.phase_points = get_or(pg, "points", cfg.phase_points);
  }

  if (doc.contains("integrator")) {
    const auto& ig = doc.at("integrator");
    require_keys(ig, "integrator", {"dt", "renormalize_every"});
    cfg.dt = get_or(ig, "dt", cfg.dt);
    cfg.renormalize_every = get_or(ig, "renormalize_every", cfg.renormalize_every);
  }

  if (doc.contains("outputs")) {
    const auto& out = doc.at("outputs");
    require_keys(out, "outputs", {"format", "path"});
    cfg.format = get_or(out, "format", cfg.format);
    cfg.out_path = get_or(out, "path", cfg.out_path);
  }

  if (doc.contains("engines")) {
    cfg.engines = doc.at("engines").get<std::vector<std::string>>();
  }

  if (cfg.format != "csv" && cfg.format != "json") {
    throw ConfigError("config: outputs.format must be \"csv\" or \"json\"");
  }
  if (cfg.time_points < 1) throw ConfigError("config: time_grid.points must be >= 1");
  if (cfg.phase_points < 1) throw ConfigError("config: phase_grid.points must be >= 1");
  if (cfg.orbit_n_ell < 1) throw ConfigError("config: truncation.orbit.N_L must be >= 1");
  if (cfg.t_end < cfg.t_start) throw ConfigError("config: time_grid.t_end < t_start");
  for (const auto& engine : cfg.engines) {
    if (engine != "tdse" && engine != "sft" && engine != "mmft") {
      throw ConfigError("config: unknown engine \"" + engine + "\"");
    }
  }
  if (cfg.engines.empty()) throw ConfigError("config: engines must not be empty");
  return cfg;
}

void apply_overrides(ExperimentConfig& cfg, const Overrides& ov) {
  if (ov.phi2) {
    if (cfg.builtin) {
      cfg.phi_2omega = *ov.phi2;
    } else {
      cfg.phi2 = *ov.phi2;
    }
  }
  if (ov.sft_n_max) cfg.sft_n_max = *ov.sft_n_max;
  if (ov.mmft_n_max) cfg.mmft_n_max = *ov.mmft_n_max;
  if (ov.t_end) cfg.t_end = *ov.t_end;
  if (ov.points) {
    cfg.time_points = *ov.points;
    cfg.phase_points = *ov.points;
  }
  if (!ov.engines.empty()) cfg.engines = ov.engines;
  if (ov.out_path) cfg.out_path = *ov.out_path;
  if (ov.format) cfg.format = *ov.format;
  if (cfg.format != "csv" && cfg.format != "json") {
    throw ConfigError("config: --format must be \"csv\" or \"json\"");
  }
  if (cfg.time_points < 1) throw ConfigError("config: --points must be >= 1");
  for (const auto& engine : cfg.engines) {
    if (engine != "tdse" && engine != "sft" && engine != "mmft") {
      throw ConfigError("config: unknown engine \"" + engine + "\"");
    }
  }
}

std::string ExperimentConfig::canonical_json() const {
  json doc;
  json sys;
  if (builtin) {
    sys["type"] = "omega-2omega";
    sys["phi_2omega"] = phi_2omega;
  } else {
    sys["type"] = "custom";
    sys["dim_A"] = dim_a;
    sys["N1"] = n1;
    sys["N2"] = n2;
    sys["omega_B"] = omega_b;
    sys["phi1"] = phi1;
    sys["phi2"] = phi2;
    json coeffs = json::array();
    for (const auto& c : coefficients) {
      json entry;
      entry["p"] = c.p;
      entry["q"] = c.q;
      json mat = json::array();
      for (const auto& z : c.matrix) mat.push_back({z.real(), z.imag()});
      entry["matrix"] = std::move(mat);
      coeffs.push_back(std::move(entry));
    }
    sys["coefficients"] = std::move(coeffs);
  }
  doc["system"] = std::move(sys);
  doc["truncation"] = {{"sft_n_max", sft_n_max},
                       {"mmft_n_max", mmft_n_max},
                       {"orbit", {{"n_min", orbit_n_min}, {"n_max", orbit_n_max}, {"N_L", orbit_n_ell}}}};
  doc["time_grid"] = {{"t_start", t_start}, {"t_end", t_end}, {"points", time_points}};
  doc["phase_grid"] = {{"points", phase_points}};
  doc["integrator"] = {{"dt", dt}, {"renormalize_every", renormalize_every}};
  // The outputs block routes the bytes but does not shape the experiment, so
  // it stays out of the fingerprint.
  doc["engines"] = engines;
  return doc.dump();
}

}  // namespace floqcli
