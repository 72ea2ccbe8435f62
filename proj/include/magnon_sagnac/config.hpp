// Copyright 2026 The magnon-sagnac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef MAGNON_SAGNAC_CONFIG_HPP
#define MAGNON_SAGNAC_CONFIG_HPP

#include <array>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "magnon_sagnac/analysis.hpp"
#include "magnon_sagnac/error.hpp"
#include "magnon_sagnac/model.hpp"

namespace magnon_sagnac {

// Configuration document. Frequencies are linear MHz; the rotation block is
// SI. Every field has a default, and the defaults give the symmetric
// experimental set (Delta = 0, g0 = 41 MHz, G = 0.5, kappa = 1.1 MHz,
// gamma_m = 4 MHz, eta = 0.5, 100 mW drives, omega_s = 0).
struct RotationConfig {
  double omega_rot_hz = 6.6e3;
  std::string direction = "cw";  // cw | ccw | none
  double n = 2.2;
  double r_m = 1.1e-3;
  double lambda_m = PhysicalConstants::speed_of_light / 193e12;
  double dn_dlambda = 0.0;
  double omega0_thz = 193.0;
  bool first_term_only = true;

  bool operator==(const RotationConfig&) const = default;
};

struct DriveConfig {
  // Exactly one of power_w / eps is used; eps wins when both are set.
  std::optional<std::array<double, 3>> power_w = std::array<double, 3>{0.1, 0.1, 0.1};
  std::optional<std::array<double, 3>> eps;  // eps1, eps2, eps3'
  double omega_p_thz = 193.0;
  // For power_w: "symmetric" pins eps3' = eps1, "squeezed" uses eps3 e^{-G}.
  std::string magnon_drive = "symmetric";

  bool operator==(const DriveConfig&) const = default;
};

struct SqueezeConfig {
  double delta_m_mhz = 0.0;
  double e_pump_mhz = 0.0;

  bool operator==(const SqueezeConfig&) const = default;
};

struct ConfigDocument {
  std::array<double, 2> g0_mhz{41.0, 41.0};
  double G = 0.5;
  std::array<double, 2> kappa_mhz{1.1, 1.1};
  std::array<double, 2> eta{0.5, 0.5};
  double gamma_m_mhz = 4.0;
  double eta3 = 0.5;
  double delta_mhz = 0.0;
  std::optional<double> delta_f_mhz;
  std::optional<double> omega_s_mhz;
  double omega_m_mhz = 10100.0;
  std::optional<SqueezeConfig> squeeze;
  DriveConfig drive;
  std::optional<RotationConfig> rotation;
  std::array<double, 2> band_mhz{-65.0, 65.0};

  bool operator==(const ConfigDocument&) const = default;
};

namespace config_detail {

using json = nlohmann::json;

inline Error config_error(const std::string& code, const std::string& msg) {
  return validation_error(code, "config: " + msg);
}

inline void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto a : allowed) ok |= it.key() == a;
    if (!ok) throw config_error("UNKNOWN_KEY", "unknown key '" + where + it.key() + "'");
  }
}

inline double number(const json& v, const std::string& key) {
  if (!v.is_number()) throw config_error("CONFIG_TYPE", "'" + key + "' must be a number");
  return v.get<double>();
}

inline std::array<double, 2> scalar_or_pair(const json& v, const std::string& key) {
  if (v.is_number()) {
    const double x = v.get<double>();
    return {x, x};
  }
  if (v.is_array() && v.size() == 2) return {number(v[0], key), number(v[1], key)};
  throw config_error("CONFIG_TYPE", "'" + key + "' must be a number or a pair");
}

inline std::array<double, 3> triple(const json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 3) {
    throw config_error("CONFIG_TYPE", "'" + key + "' must be an array of three numbers");
  }
  return {number(v[0], key), number(v[1], key), number(v[2], key)};
}

inline std::string text(const json& v, const std::string& key) {
  if (!v.is_string()) throw config_error("CONFIG_TYPE", "'" + key + "' must be a string");
  return v.get<std::string>();
}

inline bool boolean(const json& v, const std::string& key) {
  if (!v.is_boolean()) throw config_error("CONFIG_TYPE", "'" + key + "' must be true or false");
  return v.get<bool>();
}

// kappa_mhz: number | [k1, k2] | {"total": .., "external": ..} | [mode1, mode2]
// where each mode is a number or a {"total", "external"} object. When the
// external part is given, eta for that mode follows from it.
inline void parse_kappa(const json& v, ConfigDocument& doc, std::array<bool, 2>& eta_from_kappa) {
  auto parse_mode = [&](const json& m, std::size_t idx) {
    if (m.is_number()) {
      doc.kappa_mhz[idx] = m.get<double>();
      return;
    }
    if (!m.is_object()) throw config_error("CONFIG_TYPE", "'kappa_mhz' entries must be numbers or objects");
    reject_unknown(m, {"total", "external"}, "kappa_mhz.");
    if (!m.contains("total")) throw config_error("CONFIG_TYPE", "'kappa_mhz.total' is required");
    doc.kappa_mhz[idx] = number(m["total"], "kappa_mhz.total");
    if (m.contains("external")) {
      doc.eta[idx] = number(m["external"], "kappa_mhz.external") / doc.kappa_mhz[idx];
      eta_from_kappa[idx] = true;
    }
  };
  if (v.is_array() && v.size() == 2) {
    parse_mode(v[0], 0);
    parse_mode(v[1], 1);
  } else if (v.is_object() && v.contains("total") && v["total"].is_array()) {
    reject_unknown(v, {"total", "external"}, "kappa_mhz.");
    const auto total = scalar_or_pair(v["total"], "kappa_mhz.total");
    for (std::size_t i = 0; i < 2; ++i) {
      json m = {{"total", total[i]}};
      if (v.contains("external")) m["external"] = scalar_or_pair(v["external"], "kappa_mhz.external")[i];
      parse_mode(m, i);
    }
  } else {
    parse_mode(v, 0);
    parse_mode(v, 1);
  }
}

}  // namespace config_detail

/// Parses a (possibly partial) config object; missing keys keep defaults.
inline ConfigDocument parse_config(const nlohmann::json& j) {
  using namespace config_detail;
  if (!j.is_object()) throw config_error("CONFIG_TYPE", "top level must be a JSON object");
  reject_unknown(j,
                 {"g0_mhz", "G", "kappa_mhz", "gamma_m_mhz", "eta", "eta3", "delta_mhz",
                  "delta_f_mhz", "omega_s_mhz", "omega_m_mhz", "squeeze", "drive", "rotation",
                  "band_mhz"},
                 "");
  ConfigDocument doc;
  std::array<bool, 2> eta_from_kappa{false, false};
  if (j.contains("g0_mhz")) doc.g0_mhz = scalar_or_pair(j["g0_mhz"], "g0_mhz");
  if (j.contains("G")) doc.G = number(j["G"], "G");
  if (j.contains("eta")) doc.eta = scalar_or_pair(j["eta"], "eta");
  if (j.contains("kappa_mhz")) {
    const auto eta_given = doc.eta;
    parse_kappa(j["kappa_mhz"], doc, eta_from_kappa);
    if (j.contains("eta")) {
      for (std::size_t i = 0; i < 2; ++i) {
        if (eta_from_kappa[i] && !detail::close_rel(doc.eta[i], eta_given[i], 1e-12)) {
          throw config_error("ETA_MISMATCH", "'eta' disagrees with kappa_mhz external/total");
        }
      }
    }
  }
  if (j.contains("gamma_m_mhz")) doc.gamma_m_mhz = number(j["gamma_m_mhz"], "gamma_m_mhz");
  if (j.contains("eta3")) doc.eta3 = number(j["eta3"], "eta3");
  if (j.contains("delta_mhz")) doc.delta_mhz = number(j["delta_mhz"], "delta_mhz");
  if (j.contains("delta_f_mhz")) doc.delta_f_mhz = number(j["delta_f_mhz"], "delta_f_mhz");
  if (j.contains("omega_s_mhz")) doc.omega_s_mhz = number(j["omega_s_mhz"], "omega_s_mhz");
  if (j.contains("omega_m_mhz")) doc.omega_m_mhz = number(j["omega_m_mhz"], "omega_m_mhz");
  if (j.contains("squeeze")) {
    const json& s = j["squeeze"];
    if (!s.is_object()) throw config_error("CONFIG_TYPE", "'squeeze' must be an object");
    reject_unknown(s, {"delta_m_mhz", "e_pump_mhz"}, "squeeze.");
    if (!s.contains("delta_m_mhz") || !s.contains("e_pump_mhz")) {
      throw config_error("CONFIG_TYPE", "'squeeze' needs delta_m_mhz and e_pump_mhz");
    }
    doc.squeeze = SqueezeConfig{number(s["delta_m_mhz"], "squeeze.delta_m_mhz"),
                                number(s["e_pump_mhz"], "squeeze.e_pump_mhz")};
  }
  if (j.contains("drive")) {
    const json& d = j["drive"];
    if (!d.is_object()) throw config_error("CONFIG_TYPE", "'drive' must be an object");
    reject_unknown(d, {"power_w", "eps", "omega_p_thz", "magnon_drive"}, "drive.");
    if (d.contains("power_w") && d.contains("eps")) {
      throw config_error("CONFIG_TYPE", "'drive' takes either power_w or eps, not both");
    }
    if (d.contains("eps")) {
      doc.drive.eps = triple(d["eps"], "drive.eps");
      doc.drive.power_w.reset();
    }
    if (d.contains("power_w")) {
      doc.drive.power_w = triple(d["power_w"], "drive.power_w");
      doc.drive.eps.reset();
    }
    if (d.contains("omega_p_thz")) doc.drive.omega_p_thz = number(d["omega_p_thz"], "drive.omega_p_thz");
    if (d.contains("magnon_drive")) {
      doc.drive.magnon_drive = text(d["magnon_drive"], "drive.magnon_drive");
      if (doc.drive.magnon_drive != "symmetric" && doc.drive.magnon_drive != "squeezed") {
        throw config_error("CONFIG_VALUE", "'drive.magnon_drive' must be symmetric or squeezed");
      }
    }
  }
  if (j.contains("rotation")) {
    const json& r = j["rotation"];
    if (!r.is_object()) throw config_error("CONFIG_TYPE", "'rotation' must be an object");
    reject_unknown(r,
                   {"omega_rot_hz", "direction", "n", "r_m", "lambda_m", "dn_dlambda", "omega0_thz",
                    "first_term_only"},
                   "rotation.");
    RotationConfig rc;
    if (r.contains("omega_rot_hz")) rc.omega_rot_hz = number(r["omega_rot_hz"], "rotation.omega_rot_hz");
    if (r.contains("direction")) {
      rc.direction = text(r["direction"], "rotation.direction");
      if (rc.direction != "cw" && rc.direction != "ccw" && rc.direction != "none") {
        throw config_error("CONFIG_VALUE", "'rotation.direction' must be cw, ccw or none");
      }
    }
    if (r.contains("n")) rc.n = number(r["n"], "rotation.n");
    if (r.contains("r_m")) rc.r_m = number(r["r_m"], "rotation.r_m");
    if (r.contains("lambda_m")) rc.lambda_m = number(r["lambda_m"], "rotation.lambda_m");
    if (r.contains("dn_dlambda")) rc.dn_dlambda = number(r["dn_dlambda"], "rotation.dn_dlambda");
    if (r.contains("omega0_thz")) rc.omega0_thz = number(r["omega0_thz"], "rotation.omega0_thz");
    if (r.contains("first_term_only")) {
      rc.first_term_only = boolean(r["first_term_only"], "rotation.first_term_only");
    }
    doc.rotation = rc;
  }
  if (j.contains("band_mhz")) {
    const json& b = j["band_mhz"];
    if (!b.is_array() || b.size() != 2) throw config_error("CONFIG_TYPE", "'band_mhz' must be [min, max]");
    doc.band_mhz = {number(b[0], "band_mhz"), number(b[1], "band_mhz")};
  }
  return doc;
}

/// Canonical JSON form; parse_config(config_to_json(d)) == d.
inline nlohmann::ordered_json config_to_json(const ConfigDocument& d) {
  nlohmann::ordered_json j;
  j["g0_mhz"] = d.g0_mhz;
  j["G"] = d.G;
  j["kappa_mhz"] = d.kappa_mhz;
  j["eta"] = d.eta;
  j["gamma_m_mhz"] = d.gamma_m_mhz;
  j["eta3"] = d.eta3;
  j["delta_mhz"] = d.delta_mhz;
  if (d.delta_f_mhz) j["delta_f_mhz"] = *d.delta_f_mhz;
  if (d.omega_s_mhz) j["omega_s_mhz"] = *d.omega_s_mhz;
  j["omega_m_mhz"] = d.omega_m_mhz;
  if (d.squeeze) {
    j["squeeze"] = {{"delta_m_mhz", d.squeeze->delta_m_mhz}, {"e_pump_mhz", d.squeeze->e_pump_mhz}};
  }
  nlohmann::ordered_json drive;
  if (d.drive.eps) {
    drive["eps"] = *d.drive.eps;
  } else if (d.drive.power_w) {
    drive["power_w"] = *d.drive.power_w;
  }
  drive["omega_p_thz"] = d.drive.omega_p_thz;
  drive["magnon_drive"] = d.drive.magnon_drive;
  j["drive"] = drive;
  if (d.rotation) {
    const RotationConfig& r = *d.rotation;
    j["rotation"] = {{"omega_rot_hz", r.omega_rot_hz}, {"direction", r.direction},
                     {"n", r.n},                       {"r_m", r.r_m},
                     {"lambda_m", r.lambda_m},         {"dn_dlambda", r.dn_dlambda},
                     {"omega0_thz", r.omega0_thz},     {"first_term_only", r.first_term_only}};
  }
  j["band_mhz"] = d.band_mhz;
  return j;
}

inline RotationSpec rotation_spec(const RotationConfig& r) {
  RotationSpec spec;
  spec.omega_rot_hz = r.omega_rot_hz;
  spec.direction = r.direction == "cw"    ? RotationDirection::Cw
                   : r.direction == "ccw" ? RotationDirection::Ccw
                                          : RotationDirection::None;
  spec.n = r.n;
  spec.radius_m = r.r_m;
  spec.lambda_m = r.lambda_m;
  spec.dn_dlambda = r.dn_dlambda;
  spec.omega0 = Frequency::thz(r.omega0_thz);
  return spec;
}

inline RotationSpec rotation_spec(const ConfigDocument& d) {
  return rotation_spec(d.rotation.value_or(RotationConfig{}));
}

inline Band band(const ConfigDocument& d) {
  return {Frequency::mhz(d.band_mhz[0]), Frequency::mhz(d.band_mhz[1])};
}

/// Builds the parameter record. Delta_F comes from `delta_f_mhz`, else from
/// the rotation block when present, else 0.
inline SystemParams to_system_params(const ConfigDocument& d) {
  SystemParams p;
  p.cavity_1 = CavityModeParams::from_total(Frequency::mhz(d.kappa_mhz[0]), d.eta[0]);
  p.cavity_2 = CavityModeParams::from_total(Frequency::mhz(d.kappa_mhz[1]), d.eta[1]);
  p.magnon.omega_m = Frequency::mhz(d.omega_m_mhz);
  p.magnon.gamma_m = Frequency::mhz(d.gamma_m_mhz);
  p.magnon.eta3 = d.eta3;

  std::optional<Frequency> omega_s;
  if (d.omega_s_mhz) omega_s = Frequency::mhz(*d.omega_s_mhz);
  if (d.squeeze) {
    p.squeeze = SqueezeSpec::from_pump(Frequency::mhz(d.squeeze->delta_m_mhz),
                                       Frequency::mhz(d.squeeze->e_pump_mhz), omega_s);
  } else {
    p.squeeze = SqueezeSpec::direct(d.G, omega_s.value_or(Frequency::mhz(0.0)));
  }

  const Frequency omega_p = Frequency::thz(d.drive.omega_p_thz);
  if (d.drive.eps) {
    p.drives.omega_p = omega_p;
    p.drives.eps_1 = (*d.drive.eps)[0];
    p.drives.eps_2 = (*d.drive.eps)[1];
    p.drives.eps3_eff_fixed = (*d.drive.eps)[2];
  } else {
    const auto pw = d.drive.power_w.value_or(std::array<double, 3>{0.0, 0.0, 0.0});
    p.drives = drives_from_powers(pw[0], pw[1], pw[2], omega_p);
    if (d.drive.magnon_drive == "symmetric") p.drives.eps3_eff_fixed = p.drives.eps_1;
  }

  p.g0_1 = Frequency::mhz(d.g0_mhz[0]);
  p.g0_2 = Frequency::mhz(d.g0_mhz[1]);
  p.delta = Frequency::mhz(d.delta_mhz);
  if (d.delta_f_mhz) {
    p.delta_f = Frequency::mhz(*d.delta_f_mhz);
  } else if (d.rotation) {
    p.delta_f = fizeau_shift(rotation_spec(*d.rotation), d.rotation->first_term_only);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Layering: defaults < config file < --set overrides.
// ---------------------------------------------------------------------------

inline nlohmann::json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "IO_ERROR", "cannot read config '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw validation_error("CONFIG_SYNTAX", std::string("config: malformed JSON: ") + e.what());
  }
}

/// Applies `key.path=value`; the value is read as JSON when it parses as
/// JSON and as a plain string otherwise.
inline void apply_override(nlohmann::json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorKind::Usage, "BAD_OVERRIDE", "--set expects key=value, got '" + assignment + "'");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  nlohmann::json value = nlohmann::json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;

  nlohmann::json* node = &doc;
  std::size_t start = 0;
  for (;;) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) throw Error(ErrorKind::Usage, "BAD_OVERRIDE", "bad --set key '" + key + "'");
    if (!node->is_object()) *node = nlohmann::json::object();
    if (dot == std::string::npos) {
      (*node)[part] = value;
      // drive amplitudes and powers are alternatives; the override wins.
      if (key == "drive.eps") node->erase("power_w");
      if (key == "drive.power_w") node->erase("eps");
      return;
    }
    node = &(*node)[part];
    start = dot + 1;
  }
}

inline ConfigDocument resolve_config(const std::optional<std::string>& path,
                                     const std::vector<std::string>& overrides) {
  nlohmann::json doc = path ? load_config_file(*path) : nlohmann::json::object();
  for (const auto& o : overrides) apply_override(doc, o);
  return parse_config(doc);
}

}  // namespace magnon_sagnac

#endif  // MAGNON_SAGNAC_CONFIG_HPP
