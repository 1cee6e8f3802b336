// Copyright 2026 The jcstrong Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// jcs: command-line front end for the strong-coupling ladder models.

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/os.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jcs/algebra.hpp"
#include "jcs/dynamics.hpp"
#include "jcs/errors.hpp"
#include "jcs/gates.hpp"
#include "jcs/hamiltonian.hpp"
#include "jcs/kernels.hpp"
#include "jcs/matelem.hpp"

namespace {

using jcs::AlgebraKind;
using jcs::cplx;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParameter = 2;
constexpr int kExitConvergence = 3;

constexpr double kEvolveNormDrift = 1e-6;

struct RunConfig {
  std::string config;
  std::string model = "N";
  double omega = 1.0;
  double delta = 0.1;
  double g = 0.5;
  double spin = 0.5;
  int cutoff = 120;
  int m = 0;
  int n = 1;
  std::string csv;

  // matelem
  std::string z = "0.5";
  double tol = 1e-10;
  // spectrum
  int nmax = 10;
  bool numeric = false;
  // rabi
  std::vector<std::string> sweep;
  // evolve / gate
  int sigma = 1;
  std::string method = "rwa";
  double t_end = 0.0;
  double dt = 0.0;
  int samples = 201;
  int every = 0;
  std::string init = "1,0,0,0";
  std::string label;
  double t = 0.0;
  double rabi = 0.0;
  std::string u;
  // validate
  std::vector<std::string> suites;
};

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw jcs::ParameterError("not a number: '" + text + "'");
  }
  if (used != text.size()) {
    throw jcs::ParameterError("not a number: '" + text + "'");
  }
  return v;
}

// Accepts "a", "bi", "a+bi", "a-bi" (i or j) and "a,b".
cplx parse_complex(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
             text.end());
  if (text.empty()) {
    throw jcs::ParameterError("empty complex number");
  }
  if (const auto comma = text.find(','); comma != std::string::npos) {
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
  }
  const char last = static_cast<char>(std::tolower(static_cast<unsigned char>(text.back())));
  if (last != 'i' && last != 'j') {
    return {parse_real(text), 0.0};
  }
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    const char prev = static_cast<char>(std::tolower(static_cast<unsigned char>(text[k - 1])));
    if ((text[k] == '+' || text[k] == '-') && prev != 'e') {
      split = k;
      break;
    }
  }
  const auto imag = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string::npos) {
    return {0.0, imag(text)};
  }
  return {parse_real(text.substr(0, split)), imag(text.substr(split))};
}

// Entries separated by ';' when any is present, otherwise by ','.
std::vector<cplx> parse_complex_list(const std::string& text, std::size_t count) {
  const char sep = text.find(';') != std::string::npos ? ';' : ',';
  std::vector<cplx> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(parse_complex(item));
  if (out.size() != count) {
    throw jcs::ParameterError(fmt::format("expected {} amplitudes, got '{}'", count, text));
  }
  return out;
}

// Flat key = value file with # comments.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw jcs::ParameterError("cannot open config file '" + path + "'");
  }
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw jcs::ParameterError(fmt::format("{}:{}: expected 'key = value'", path, lineno));
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    std::replace(key.begin(), key.end(), '_', '-');
    out[key] = value;
  }
  return out;
}

// File values fill every option the command line left unset.
void apply_config(CLI::App& sub, const RunConfig& cfg) {
  if (cfg.config.empty()) return;
  for (const auto& [key, value] : read_config(cfg.config)) {
    if (key == "config") continue;
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw jcs::ParameterError("unknown config key '" + key + "' for '" + sub.get_name() + "'");
    }
    if (opt->count() > 0) continue;
    if (opt->get_type_size() == 0) {  // flag
      const std::string v = CLI::detail::to_lower(value);
      if (v == "true" || v == "1" || v == "yes" || v == "on") {
        opt->add_result("true");
      } else if (v == "false" || v == "0" || v == "no" || v == "off") {
        opt->add_result("false");
      } else {
        throw jcs::ParameterError("flag '" + key + "' needs true or false, got '" + value + "'");
      }
    } else {
      opt->add_result(value);
    }
    opt->run_callback();
  }
}

jcs::ModelParams model_params(const RunConfig& cfg) {
  jcs::ModelParams p;
  p.kind = jcs::parse_algebra_kind(cfg.model);
  p.omega = cfg.omega;
  p.delta = cfg.delta;
  p.g = cfg.g;
  p.spin = cfg.spin;
  jcs::validate(p);
  if (!jcs::in_strong_coupling_regime(p)) {
    fmt::print(stderr, "warning: delta = {} is not below g = {}; the strong-coupling split assumes "
                       "delta << g\n", p.delta, p.g);
  }
  return p;
}

void require_cutoff(const jcs::ModelParams& p, int cutoff, int top) {
  if (p.kind == AlgebraKind::SU2J) return;
  const int need = 4 * top + 20;
  if (cutoff < need) {
    throw jcs::ParameterError(fmt::format("cutoff {} too small for level {}: need at least {}",
                                          cutoff, top, need));
  }
}

// CSV to --csv when given; returns nullptr otherwise.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) {
      throw jcs::ParameterError("cannot write CSV file '" + path + "'");
    }
  }
  bool active() const { return file_ != nullptr; }
  void row(const std::string& line) {
    if (file_) *file_ << line << '\n';
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string model_tag(const jcs::ModelParams& p) {
  return std::string(p.kind == AlgebraKind::HeisenbergN ? "N" : p.kind == AlgebraKind::SU11K ? "K" : "J");
}

// ---------------------------------------------------------------- matelem
int cmd_matelem(const RunConfig& cfg) {
  const auto p = model_params(cfg);
  const cplx z = parse_complex(cfg.z);
  if (cfg.n < 0 || cfg.m < 0) throw jcs::ParameterError("n and m must be non-negative");
  require_cutoff(p, cfg.cutoff, std::max(cfg.n, cfg.m));
  const int dim = jcs::model_dimension(p, cfg.cutoff);
  const auto rep = jcs::build_rep(p.kind, p.spin, dim);
  const cplx closed = jcs::closed_form_element(p.kind, p.spin, cfg.n, cfg.m, z);
  const cplx oracle = jcs::oracle_element(rep, cfg.n, cfg.m, z, cfg.tol);
  const double diff = std::abs(closed - oracle);
  fmt::print("model {}  spin {}  cutoff {}  z = {}{:+}i  <{}|U(z)|{}>\n", model_tag(p), p.spin, dim,
             z.real(), z.imag(), cfg.n, cfg.m);
  fmt::print("  closed form  {:>24} {:>24}\n", num(closed.real()), num(closed.imag()));
  fmt::print("  oracle       {:>24} {:>24}\n", num(oracle.real()), num(oracle.imag()));
  fmt::print("  |difference| {:>24}\n", num(diff));
  CsvSink csv(cfg.csv);
  csv.row("model,spin,cutoff,n,m,re_z,im_z,re_closed,im_closed,re_oracle,im_oracle,abs_diff");
  csv.row(fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}", model_tag(p), num(p.spin), dim, cfg.n,
                      cfg.m, num(z.real()), num(z.imag()), num(closed.real()), num(closed.imag()),
                      num(oracle.real()), num(oracle.imag()), num(diff)));
  return kExitOk;
}

// --------------------------------------------------------------- spectrum
int cmd_spectrum(const RunConfig& cfg) {
  auto p = model_params(cfg);
  int nmax = cfg.nmax;
  if (p.kind == AlgebraKind::SU2J) nmax = std::min(nmax, jcs::validate_spin(p.kind, p.spin));
  if (nmax < 1) throw jcs::ParameterError("nmax must be at least 1");
  const auto sd = jcs::h0_spectrum(p, nmax);

  Eigen::VectorXd ev;
  if (cfg.numeric) {
    require_cutoff(p, cfg.cutoff, nmax);
    auto p0 = p;
    p0.delta = 0.0;
    Eigen::SelfAdjointEigenSolver<jcs::CMatrix> es(
        jcs::build_full_hamiltonian(p0, jcs::model_dimension(p, cfg.cutoff)), Eigen::EigenvaluesOnly);
    ev = es.eigenvalues();
  }
  fmt::print("model {}  Omega = {}  x = {}  shift = {}\n", model_tag(p), num(sd.omega_dressed),
             num(sd.x), num(sd.shift));
  CsvSink csv(cfg.csv);
  csv.row(cfg.numeric ? "n,E_n,numeric_lo,numeric_hi" : "n,E_n");
  double worst = 0.0;
  for (int k = 0; k <= nmax; ++k) {
    const double e = sd.energies[k];
    if (cfg.numeric) {
      const double lo = ev(2 * k);
      const double hi = ev(2 * k + 1);
      worst = std::max({worst, std::abs(lo - e), std::abs(hi - e)});
      fmt::print("  n={:<4} E_n={:>24}  numeric {:>24} {:>24}\n", k, num(e), num(lo), num(hi));
      csv.row(fmt::format("{},{},{},{}", k, num(e), num(lo), num(hi)));
    } else {
      fmt::print("  n={:<4} E_n={:>24}  (x2)\n", k, num(e));
      csv.row(fmt::format("{},{}", k, num(e)));
    }
  }
  if (cfg.numeric) fmt::print("  max |numeric - closed form| = {}\n", num(worst));
  return kExitOk;
}

// ------------------------------------------------------------------- rabi
struct SweepAxis {
  std::string key;
  double start;
  double stop;
  int count;
};

SweepAxis parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw jcs::ParameterError("sweep must look like key=start:stop:count");
  SweepAxis axis;
  axis.key = trim(text.substr(0, eq));
  std::stringstream ss(text.substr(eq + 1));
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c)) {
    throw jcs::ParameterError("sweep must look like key=start:stop:count");
  }
  axis.start = parse_real(trim(a));
  axis.stop = parse_real(trim(b));
  axis.count = static_cast<int>(parse_real(trim(c)));
  if (axis.count < 1) throw jcs::ParameterError("sweep count must be positive");
  if (axis.key != "omega" && axis.key != "delta" && axis.key != "g" && axis.key != "spin") {
    throw jcs::ParameterError("sweep key must be omega, delta, g or spin");
  }
  return axis;
}

int cmd_rabi(const RunConfig& cfg) {
  const auto base = model_params(cfg);
  jcs::LevelPair pair = jcs::level_pair(cfg.m, cfg.n);
  jcs::validate(pair);

  std::vector<jcs::ModelParams> points{base};
  for (const auto& entry : cfg.sweep) {
    const SweepAxis axis = parse_sweep(entry);
    std::vector<jcs::ModelParams> grown;
    for (const auto& p : points) {
      for (int k = 0; k < axis.count; ++k) {
        const double v = axis.count == 1 ? axis.start
                                         : axis.start + (axis.stop - axis.start) * k / (axis.count - 1);
        auto q = p;
        if (axis.key == "omega") q.omega = v;
        if (axis.key == "delta") q.delta = v;
        if (axis.key == "g") q.g = v;
        if (axis.key == "spin") q.spin = v;
        jcs::validate(q);
        grown.push_back(q);
      }
    }
    points = std::move(grown);
  }

  const auto results = jcs::rabi_sweep(points, pair);
  CsvSink csv(cfg.csv);
  csv.row("model,omega,delta,g,spin,m,n,R,Rp,detuning");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const auto& r = results[i];
    fmt::print("model {} omega={} delta={} g={} spin={}  (m,n)=({},{}) {}\n", model_tag(p), p.omega,
               p.delta, p.g, p.spin, cfg.m, cfg.n,
               pair.band == jcs::Band::Interband ? "interband" : "intraband");
    fmt::print("  R  = {}\n  R' = {}\n", num(r.rabi), num(r.rabi_prime));
    for (int s : {1, -1}) {
      for (int sp : {1, -1}) {
        fmt::print("  detuning(sigma={:+d}, sigma'={:+d}) = {}\n", s, sp,
                   num(jcs::resonance_detuning(p, pair, s, sp)));
      }
    }
    csv.row(fmt::format("{},{},{},{},{},{},{},{},{},{}", model_tag(p), num(p.omega), num(p.delta),
                        num(p.g), num(p.spin), cfg.m, cfg.n, num(r.rabi), num(r.rabi_prime),
                        num(r.detuning)));
  }
  return kExitOk;
}

// ----------------------------------------------------------------- evolve
int cmd_evolve(const RunConfig& cfg) {
  const auto p = model_params(cfg);
  const jcs::LevelPair pair = jcs::level_pair(cfg.m, cfg.n);
  jcs::validate(pair);
  jcs::check_lambda(cfg.sigma, "sigma");
  const auto r = jcs::rabi_frequencies(p, pair);
  const double freq = pair.band == jcs::Band::Interband ? r.rabi : r.rabi_prime;

  const auto amps = parse_complex_list(cfg.init, 4);
  jcs::Amplitudes4 init{amps[0], amps[1], amps[2], amps[3]};
  if (std::abs(jcs::norm_squared(init) - 1.0) > 1e-12) {
    throw jcs::ParameterError("initial amplitudes must have unit norm");
  }
  double t_end = cfg.t_end;
  if (t_end <= 0.0) {
    if (freq == 0.0) throw jcs::ParameterError("Rabi frequency is zero; give --t-end explicitly");
    t_end = 2.0 * M_PI / std::abs(freq);
  }

  jcs::TimeSeries series;
  if (cfg.method == "rwa") {
    if (cfg.samples < 2) throw jcs::ParameterError("samples must be at least 2");
    std::vector<double> times(cfg.samples);
    for (int k = 0; k < cfg.samples; ++k) times[k] = t_end * k / (cfg.samples - 1);
    series = jcs::rwa_series(p, pair, cfg.sigma, init, times);
  } else if (cfg.method == "full") {
    const double dt = cfg.dt > 0.0 ? cfg.dt : jcs::max_full_step(p, r);
    const long steps = static_cast<long>(std::ceil(t_end / dt));
    const int every = cfg.every > 0 ? cfg.every
                                    : static_cast<int>(std::max(1L, steps / std::max(1, cfg.samples - 1)));
    series = jcs::full_evolve(p, pair, init, t_end, dt, every);
  } else {
    throw jcs::ParameterError("method must be rwa or full, got '" + cfg.method + "'");
  }

  std::FILE* out = stdout;
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> file(nullptr, &std::fclose);
  if (!cfg.csv.empty()) {
    file.reset(std::fopen(cfg.csv.c_str(), "w"));
    if (!file) throw jcs::ParameterError("cannot write CSV file '" + cfg.csv + "'");
    out = file.get();
  }
  fmt::print(out, "t,re_am_p,im_am_p,re_am_m,im_am_m,re_an_p,im_an_p,re_an_m,im_an_m,norm\n");
  double drift = 0.0;
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    const auto& a = series.amplitudes[k];
    const double nrm = jcs::norm_squared(a);
    drift = std::max(drift, std::abs(nrm - 1.0));
    fmt::print(out, "{},{},{},{},{},{},{},{},{},{}\n", num(series.times[k]), num(a[0].real()),
               num(a[0].imag()), num(a[1].real()), num(a[1].imag()), num(a[2].real()),
               num(a[2].imag()), num(a[3].real()), num(a[3].imag()), num(nrm));
  }
  if (file) {
    fmt::print("{} samples written to {} (method {}, t_end {}, max norm drift {})\n",
               series.times.size(), cfg.csv, cfg.method, num(t_end), num(drift));
  }
  if (drift > kEvolveNormDrift) {
    throw jcs::ConvergenceError(fmt::format("norm drifted by {} (limit {})", drift, kEvolveNormDrift));
  }
  return kExitOk;
}

// ------------------------------------------------------------------- gate
int cmd_gate(const RunConfig& cfg) {
  jcs::GateMatrix gate;
  if (!cfg.u.empty()) {
    const auto e = parse_complex_list(cfg.u, 4);
    Eigen::Matrix2cd u;
    u << e[0], e[1], e[2], e[3];
    gate = jcs::c_unitary(u);
  } else if (!cfg.label.empty()) {
    gate = jcs::band_gate(jcs::parse_gate_label(cfg.label), cfg.rabi, cfg.t);
  } else {
    const auto p = model_params(cfg);
    const jcs::LevelPair pair = jcs::level_pair(cfg.m, cfg.n);
    jcs::validate(pair);
    jcs::check_lambda(cfg.sigma, "sigma");
    double t = cfg.t;
    if (t <= 0.0) {
      const auto r = jcs::rabi_frequencies(p, pair);
      const double freq = pair.band == jcs::Band::Interband ? r.rabi : r.rabi_prime;
      if (freq == 0.0) throw jcs::ParameterError("Rabi frequency is zero; give --t explicitly");
      t = M_PI / std::abs(freq);
    }
    gate = jcs::gate_from_dynamics(p, pair, cfg.sigma, t);
    fmt::print("t = {}\n", num(t));
  }
  fmt::print("{} gate, basis (|00>, |01>, |10>, |11>) = (a_m+, a_m-, a_n+, a_n-)\n",
             jcs::to_string(gate.label));
  CsvSink csv(cfg.csv);
  csv.row("row,re_0,im_0,re_1,im_1,re_2,im_2,re_3,im_3");
  for (int i = 0; i < 4; ++i) {
    std::string line = std::to_string(i);
    fmt::print(" ");
    for (int j = 0; j < 4; ++j) {
      const cplx v = gate.entries(i, j);
      fmt::print("  {:>10.6f}{:+10.6f}i", v.real(), v.imag());
      line += "," + num(v.real()) + "," + num(v.imag());
    }
    fmt::print("\n");
    csv.row(line);
  }
  fmt::print("unitarity defect {}\n", num(jcs::unitarity_defect(gate.entries)));
  return kExitOk;
}

// --------------------------------------------------------------- validate
struct SuiteResult {
  std::string name;
  bool pass = false;
  bool converged = true;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string note;
};

int cmd_validate(const RunConfig& cfg) {
  const auto p = model_params(cfg);
  const int dim = jcs::model_dimension(p, cfg.cutoff);
  const bool finite = p.kind == AlgebraKind::SU2J;
  if (!finite && dim < 8) throw jcs::ParameterError("validate needs a cutoff of at least 8");
  const auto rep = jcs::build_rep(p.kind, p.spin, dim);
  const int top = finite ? dim - 1 : std::min(8, dim - 1);

  std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites;
  suites.emplace_back("commutators", [&] {
    const double r = jcs::commutator_residual(rep, finite ? dim : dim - 1);
    return SuiteResult{"commutators", r <= 1e-10, true, r, 1e-10, ""};
  });
  suites.emplace_back("oracle", [&] {
    const auto zs = [] {
      std::mt19937 gen(2024u);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      std::vector<cplx> out;
      for (int i = 0; i < 16; ++i) out.push_back(std::polar(std::sqrt(u(gen)), 2.0 * M_PI * u(gen)));
      return out;
    }();
    const auto res = jcs::oracle_sweep(rep, zs, top, cfg.tol);
    return SuiteResult{"oracle", res.max_error <= 1e-8, true, res.max_error, 1e-8,
                       fmt::format("n,m <= {}, 16 points |z| <= 1", top)};
  });
  suites.emplace_back("key-formula", [&] {
    double r = 0.0;
    for (int lambda : {1, -1}) r = std::max(r, jcs::verify_key_formula(p, lambda, dim));
    const double tol = finite ? 1e-12 : 1e-6;
    return SuiteResult{"key-formula", r <= tol, true, r, tol,
                       fmt::format("leading {} block", finite ? dim : jcs::key_formula_block(dim))};
  });
  suites.emplace_back("parity", [&] {
    double r = 0.0;
    const int reach = finite ? std::min(6, dim - 1) : 6;
    for (int d = 1; d <= reach; ++d) {
      const auto rp = jcs::rabi_frequencies(p, jcs::level_pair(0, d));
      r = std::max(r, std::abs(d % 2 == 0 ? rp.rabi : rp.rabi_prime));
    }
    return SuiteResult{"parity", r <= 1e-12, true, r, 1e-12, ""};
  });
  suites.emplace_back("gates", [&] {
    double r = 0.0;
    for (auto label : {jcs::GateLabel::InterbandPlus, jcs::GateLabel::InterbandMinus,
                       jcs::GateLabel::IntrabandPlus, jcs::GateLabel::IntrabandMinus}) {
      for (int k = 0; k < 100; ++k) {
        const double ph = 0.13 * k;
        r = std::max(r, jcs::unitarity_defect(jcs::band_gate(label, 1.0, ph).entries));
        const auto prod = jcs::band_gate(label, 1.0, ph).entries * jcs::band_gate(label, 1.0, 0.7).entries;
        r = std::max(r, jcs::max_abs(prod - jcs::band_gate(label, 1.0, ph + 0.7).entries));
      }
    }
    return SuiteResult{"gates", r <= 1e-12, true, r, 1e-12, ""};
  });
  suites.emplace_back("spectrum", [&] {
    auto p0 = p;
    p0.delta = 0.0;
    const int levels = finite ? dim : (p.kind == AlgebraKind::HeisenbergN ? dim / 4 : dim / 8);
    Eigen::SelfAdjointEigenSolver<jcs::CMatrix> es(jcs::build_full_hamiltonian(p0, dim),
                                                   Eigen::EigenvaluesOnly);
    const auto sd = jcs::h0_spectrum(p0, std::max(1, levels - 1));
    double r = 0.0;
    for (int k = 0; k < levels; ++k) {
      r = std::max({r, std::abs(es.eigenvalues()(2 * k) - sd.energies[k]),
                    std::abs(es.eigenvalues()(2 * k + 1) - sd.energies[k])});
    }
    return SuiteResult{"spectrum", r <= 1e-6, true, r, 1e-6, fmt::format("lowest {} levels", levels)};
  });

  std::vector<std::string> chosen = cfg.suites;
  if (chosen.empty() || (chosen.size() == 1 && chosen[0] == "all")) {
    chosen.clear();
    for (const auto& entry : suites) chosen.push_back(entry.first);
  }
  for (const auto& name : chosen) {
    if (std::none_of(suites.begin(), suites.end(), [&](const auto& e) { return e.first == name; })) {
      throw jcs::ParameterError("unknown suite '" + name + "'");
    }
  }

  CsvSink csv(cfg.csv);
  csv.row("suite,status,residual,tolerance");
  bool all_pass = true;
  bool all_converged = true;
  for (const auto& [name, suite] : suites) {
    if (std::find(chosen.begin(), chosen.end(), name) == chosen.end()) continue;
    SuiteResult res;
    try {
      res = suite();
    } catch (const jcs::ConvergenceError& e) {
      res.name = name;
      res.converged = false;
      res.note = e.what();
    }
    const char* status = !res.converged ? "NOCONV" : res.pass ? "PASS" : "FAIL";
    const std::string tol = res.converged ? fmt::format("{:.0e}", res.tolerance) : "-";
    all_pass = all_pass && res.pass;
    all_converged = all_converged && res.converged;
    fmt::print("{:<7} {:<12} residual {:<24} tol {:<8} {}\n", status, res.name, num(res.residual),
               tol, res.note);
    csv.row(fmt::format("{},{},{},{}", res.name, status, num(res.residual), num(res.tolerance)));
  }
  if (!all_converged) return kExitConvergence;
  return all_pass ? kExitOk : kExitValidation;
}

void add_model_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--config", cfg.config, "Flat key = value file; flags override it");
  sub.add_option("--model", cfg.model, "Algebra: N, K or J")->capture_default_str();
  sub.add_option("--omega", cfg.omega, "Mode frequency")->capture_default_str();
  sub.add_option("--delta", cfg.delta, "Level separation")->capture_default_str();
  sub.add_option("--g", cfg.g, "Coupling")->capture_default_str();
  sub.add_option("--spin", cfg.spin, "K or J (ignored for N)")->capture_default_str();
  sub.add_option("--cutoff", cfg.cutoff, "Truncation dimension for N and K")->capture_default_str();
  sub.add_option("--csv", cfg.csv, "Write CSV to this path");
}

void add_pair_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--m", cfg.m, "Lower level")->capture_default_str();
  sub.add_option("--n", cfg.n, "Upper level")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong-coupling ladder models: matrix elements, spectra and Rabi dynamics"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::map<std::string, std::function<int(const RunConfig&)>> commands;

  auto* matelem = app.add_subcommand("matelem", "Closed-form vs oracle element <n|U(z)|m>");
  add_model_options(*matelem, cfg);
  matelem->add_option("--n", cfg.n, "Row index")->capture_default_str();
  matelem->add_option("--m", cfg.m, "Column index")->capture_default_str();
  matelem->add_option("--z", cfg.z, "Complex z, e.g. 0.3+0.4i")->capture_default_str();
  matelem->add_option("--tol", cfg.tol, "Oracle cutoff re-check tolerance")->capture_default_str();
  commands["matelem"] = cmd_matelem;

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form H0 spectrum");
  add_model_options(*spectrum, cfg);
  spectrum->add_option("--nmax", cfg.nmax, "Highest level")->capture_default_str();
  spectrum->add_flag("--numeric", cfg.numeric, "Compare with numerical diagonalization");
  commands["spectrum"] = cmd_spectrum;

  auto* rabi = app.add_subcommand("rabi", "Rabi frequencies and detunings");
  add_model_options(*rabi, cfg);
  add_pair_options(*rabi, cfg);
  rabi->add_option("--sweep", cfg.sweep, "key=start:stop:count (omega, delta, g, spin)");
  commands["rabi"] = cmd_rabi;

  auto* evolve = app.add_subcommand("evolve", "Time evolution of a level pair (CSV)");
  add_model_options(*evolve, cfg);
  add_pair_options(*evolve, cfg);
  evolve->add_option("--method", cfg.method, "rwa or full")->capture_default_str();
  evolve->add_option("--sigma", cfg.sigma, "Cat label +1 or -1")->capture_default_str();
  evolve->add_option("--t-end", cfg.t_end, "End time (default one Rabi period)");
  evolve->add_option("--dt", cfg.dt, "Full-equation step (default the largest allowed)");
  evolve->add_option("--samples", cfg.samples, "Number of output rows (approximate for full)")
      ->capture_default_str();
  evolve->add_option("--every", cfg.every, "Full equation: record every k-th step");
  evolve->add_option("--init", cfg.init, "a_m+,a_m-,a_n+,a_n-")->capture_default_str();
  commands["evolve"] = cmd_evolve;

  auto* gate = app.add_subcommand("gate", "4x4 gate for a level pair or an explicit family");
  add_model_options(*gate, cfg);
  add_pair_options(*gate, cfg);
  gate->add_option("--sigma", cfg.sigma, "Cat label +1 or -1")->capture_default_str();
  gate->add_option("--t", cfg.t, "Drive duration (default a full flop)");
  gate->add_option("--label", cfg.label, "Explicit family: inter+, inter-, intra+, intra-");
  gate->add_option("--rabi", cfg.rabi, "Rabi frequency for --label");
  gate->add_option("--u", cfg.u, "Controlled block u11,u12,u21,u22");
  commands["gate"] = cmd_gate;

  auto* validate = app.add_subcommand("validate", "Run the invariant suites");
  add_model_options(*validate, cfg);
  validate->add_option("--tol", cfg.tol, "Oracle cutoff re-check tolerance")->capture_default_str();
  validate
      ->add_option("--suites", cfg.suites,
                   "commutators, oracle, key-formula, parity, gates, spectrum (default all)")
      ->delimiter(',');
  commands["validate"] = cmd_validate;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParameter;
  }

  try {
    for (auto* sub : app.get_subcommands()) {
      apply_config(*sub, cfg);
      return commands.at(sub->get_name())(cfg);
    }
  } catch (const jcs::ParameterError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitParameter;
  } catch (const CLI::Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitParameter;
  } catch (const jcs::ConvergenceError& e) {
    fmt::print(stderr, "convergence failure: {}\n", e.what());
    return kExitConvergence;
  }
  return kExitParameter;
}
