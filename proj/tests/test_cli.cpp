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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "magnon_sagnac/cli.hpp"

namespace ms = magnon_sagnac;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "magnon_sagnac");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = ms::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// `key = value` report lines as a map.
std::map<std::string, std::string> report(const std::string& text) {
  std::map<std::string, std::string> m;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) m[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return m;
}

double num(const std::map<std::string, std::string>& m, const std::string& key) {
  const auto it = m.find(key);
  EXPECT_NE(it, m.end()) << key;
  return it == m.end() ? std::nan("") : std::stod(it->second);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("magnon_sagnac_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

}  // namespace

TEST(Cli, ReproduceIsolationCurve) {
  TempDir dir;
  const auto r = run({"reproduce", "fig2b", "--out", dir.path().string(), "--threads", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(dir.path() / "fig2b.csv");
  EXPECT_TRUE(fs::exists(dir.path() / "fig2b.svg"));
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, ms::kCsvHeader);
  double best = 0.0;
  while (std::getline(is, line)) {
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
    best = std::max(best, std::stod(f[6]));
  }
  EXPECT_NEAR(best, 41.63, 0.02);

  TempDir again;
  ASSERT_EQ(run({"reproduce", "fig2b", "--out", again.path().string(), "--threads", "1"}).code, 0);
  EXPECT_EQ(slurp(again.path() / "fig2b.csv"), csv);
  EXPECT_EQ(slurp(again.path() / "fig2b.svg"), slurp(dir.path() / "fig2b.svg"));
}

TEST(Cli, ReproduceHeatmapWritesRidge) {
  TempDir dir;
  const auto r = run({"reproduce", "fig4b", "--out", dir.path().string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir.path() / "fig4b.json"));
  EXPECT_TRUE(fs::exists(dir.path() / "fig4b_ridge.csv"));
  const auto j = nlohmann::json::parse(slurp(dir.path() / "fig4b.json"));
  EXPECT_EQ(j.size(), 301u * 301u);
}

TEST(Cli, IsolateNonRotating) {
  const auto r = run({"isolate", "--set", "delta_f_mhz=0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = report(r.out);
  EXPECT_EQ(num(m, "I_db"), 0.0);
  EXPECT_EQ(m.at("direction"), "RECIPROCAL");
  EXPECT_EQ(num(m, "T12"), num(m, "T21"));
}

TEST(Cli, IsolateHeadline) {
  const auto r = run({"isolate", "--set", "delta_f_mhz=33.18"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = report(r.out);
  EXPECT_NEAR(num(m, "I_db"), 41.63, 0.01);
  EXPECT_NEAR(num(m, "T12"), 0.67, 0.01);
  EXPECT_EQ(m.at("direction"), "FORWARD");
}

TEST(Cli, IsolateJson) {
  const auto r = run({"--format", "json", "isolate", "--set", "delta_f_mhz=33.18"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["I_db"].get<double>(), 41.63, 0.01);
}

TEST(Cli, OptimizeAnalyticMatchesBrute) {
  const auto a = run({"optimize", "--analytic"});
  const auto b = run({"optimize", "--brute"});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  const auto ma = report(a.out);
  const auto mb = report(b.out);
  EXPECT_EQ(ma.at("method"), "analytic");
  EXPECT_EQ(mb.at("method"), "brute");
  EXPECT_NEAR(num(ma, "delta_f_mhz"), 33.18, 0.005);
  EXPECT_NEAR(num(ma, "I_db"), 41.63, 0.01);
  EXPECT_NEAR(num(ma, "delta_f_mhz"), num(mb, "delta_f_mhz"), 1e-3);
  EXPECT_NEAR(num(ma, "I_db"), num(mb, "I_db"), 1e-6);
}

TEST(Cli, OptimizeBandWithoutExtremum) {
  const auto r = run({"optimize", "--analytic", "--band", "0,10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NO_EXTREMUM_IN_BAND"), std::string::npos);
  EXPECT_EQ(run({"optimize", "--band", "nonsense"}).code, 3);
}

TEST(Cli, Fizeau) {
  auto r = run({"fizeau", "--first-term-only"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(num(report(r.out), "delta_f_a1_mhz"), 64.61, 0.005);
  r = run({"fizeau"});
  EXPECT_NEAR(num(report(r.out), "delta_f_a1_mhz"), 51.26, 0.005);
  r = run({"fizeau", "--set", "rotation.direction=ccw", "--first-term-only"});
  EXPECT_NEAR(num(report(r.out), "delta_f_a1_mhz"), -64.61, 0.005);
  r = run({"fizeau", "--set", "rotation.n=0.5"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, RotationBlockSetsFizeauShift) {
  const auto r = run({"isolate", "--set", "rotation={}"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(num(report(r.out), "delta_f_mhz"), 64.61, 0.005);
}

TEST(Cli, Steady) {
  const auto r = run({"steady", "--side", "right", "--solver", "generic", "--set", "delta_f_mhz=33.18"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = report(r.out);
  EXPECT_EQ(m.at("side"), "right");
  // largest drive term: sqrt(eta kappa) eps at 100 mW
  const double scale = std::sqrt(0.5 * 1.1) * ms::drive_amplitude(0.1, ms::Frequency::thz(193.0));
  for (const char* k : {"residual_1", "residual_2", "residual_3"}) EXPECT_LE(num(m, k), 1e-10 * scale);
  EXPECT_GT(num(m, "A1_out_abs"), 0.0);
}

TEST(Cli, Sweep) {
  TempDir dir;
  const auto out = dir.file("s.csv");
  const auto ridge = dir.file("r.csv");
  auto r = run({"sweep", "--axis", "delta_f:-10:10:5:gamma_m", "--axis2", "gamma_m:2:4:3", "--out", out,
                "--ridge-out", ridge});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream is(slurp(out));
  std::size_t n = 0;
  for (std::string l; std::getline(is, l);) ++n;
  EXPECT_EQ(n, 16u);
  EXPECT_TRUE(fs::exists(ridge));

  r = run({"sweep", "--axis", "gamma_m:1:12:12", "--optimal", "negative", "--set", "g0_mhz=[41,82]",
           "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  r = run({"sweep", "--axis", "bogus:1:2:3", "--out", out});
  EXPECT_EQ(r.code, 3);
  r = run({"sweep", "--axis", "gamma_m:1:2:3", "--out", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"isolate", "--set", "gamma_m_mhz=-1"}).code, 1);
  EXPECT_EQ(run({"isolate", "--config", "/nonexistent/config.json"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({"isolate", "--no-such-flag"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"reproduce", "fig9", "--out", "x"}).code, 3);
  EXPECT_EQ(run({"isolate", "--set", "novalue"}).code, 3);
  const auto v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, std::string(ms::kVersion) + "\n");
}

TEST(Cli, UnknownConfigKey) {
  TempDir dir;
  const auto cfg = dir.file("c.json");
  write_file(cfg, R"({"gamma_m_mhz": 4, "kappa": 1.1})");
  const auto r = run({"validate", "--config", cfg});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("UNKNOWN_KEY"), std::string::npos);
  write_file(cfg, "{ not json");
  EXPECT_EQ(run({"validate", "--config", cfg}).code, 1);
}

TEST(Cli, ValidateReportsViolations) {
  EXPECT_EQ(run({"validate"}).out, "valid\n");
  const auto r = run({"validate", "--set", "eta=1.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("ETA_RANGE"), std::string::npos);
}

TEST(Cli, OverridePrecedence) {
  TempDir dir;
  const auto cfg = dir.file("c.json");
  write_file(cfg, R"({"gamma_m_mhz": 6, "delta_mhz": 3})");
  const auto r = run({"validate", "--print-resolved", "--config", cfg, "--set", "gamma_m_mhz=8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto json_end = r.out.rfind('}');
  const auto j = nlohmann::json::parse(r.out.substr(0, json_end + 1));
  EXPECT_EQ(j["gamma_m_mhz"], 8.0);  // --set beats file
  EXPECT_EQ(j["delta_mhz"], 3.0);    // file beats default
  EXPECT_EQ(j["G"], 0.5);            // default
}

TEST(Config, KappaForms) {
  auto d = ms::parse_config(nlohmann::json::parse(R"({"kappa_mhz": {"total": 1.2, "external": 0.3}})"));
  EXPECT_EQ(d.kappa_mhz[0], 1.2);
  EXPECT_NEAR(d.eta[1], 0.25, 1e-15);
  d = ms::parse_config(nlohmann::json::parse(R"({"kappa_mhz": [1.0, {"total": 2.0, "external": 1.0}]})"));
  EXPECT_EQ(d.kappa_mhz[1], 2.0);
  EXPECT_EQ(d.eta[0], 0.5);
  EXPECT_EQ(d.eta[1], 0.5);
  EXPECT_THROW(ms::parse_config(nlohmann::json::parse(R"({"eta": 0.4, "kappa_mhz": {"total": 1, "external": 0.5}})")),
               ms::Error);
}

TEST(Config, RoundTripProperty) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 300; ++i) {
    ms::ConfigDocument d;
    d.g0_mhz = {80.0 * u(rng), 80.0 * u(rng)};
    d.G = u(rng);
    d.kappa_mhz = {0.1 + 5.0 * u(rng), 0.1 + 5.0 * u(rng)};
    d.eta = {u(rng), u(rng)};
    d.gamma_m_mhz = 0.1 + 10.0 * u(rng);
    d.eta3 = u(rng);
    d.delta_mhz = 40.0 * u(rng) - 20.0;
    if (coin(rng)) d.delta_f_mhz = 130.0 * u(rng) - 65.0;
    if (coin(rng)) d.omega_s_mhz = 10.0 * u(rng);
    if (coin(rng)) d.squeeze = ms::SqueezeConfig{5.0 + u(rng), u(rng)};
    if (coin(rng)) {
      d.drive.eps = std::array<double, 3>{u(rng), u(rng), u(rng)};
      d.drive.power_w.reset();
    } else {
      d.drive.power_w = std::array<double, 3>{u(rng), u(rng), u(rng)};
    }
    d.drive.magnon_drive = coin(rng) ? "symmetric" : "squeezed";
    if (coin(rng)) {
      ms::RotationConfig r;
      r.omega_rot_hz = 1e4 * u(rng);
      r.direction = coin(rng) ? "ccw" : "none";
      r.dn_dlambda = u(rng);
      r.first_term_only = coin(rng);
      d.rotation = r;
    }
    d.band_mhz = {-100.0 * u(rng), 100.0 * u(rng)};
    const auto text = ms::config_to_json(d).dump();
    EXPECT_EQ(ms::parse_config(nlohmann::json::parse(text)), d) << text;
  }
}

TEST(Config, OverrideSwapsDriveForm) {
  nlohmann::json doc = nlohmann::json::parse(R"({"drive": {"power_w": [0.1, 0.1, 0.1]}})");
  ms::apply_override(doc, "drive.eps=[1,1,1]");
  EXPECT_FALSE(doc["drive"].contains("power_w"));
  const auto d = ms::parse_config(doc);
  EXPECT_TRUE(d.drive.eps.has_value());
  ms::apply_override(doc, "rotation.direction=ccw");
  EXPECT_EQ(doc["rotation"]["direction"], "ccw");
}
