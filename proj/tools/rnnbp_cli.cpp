// Copyright 2026 The rnnbp Authors
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

// Command-line front end. Talks to the solver only through the C API.

#include <rnnbp/rnnbp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every flag is collected as text so command-line values and config-file
// values go through the same parsers.
const std::vector<std::string> kKeys = {"case", "k",    "method", "N",          "M",       "widths",
                                        "init", "rm",   "seed",   "seeds",      "rcond",   "ntest",
                                        "out",  "heatmap", "heatmap-res", "no-timing"};

class Options {
 public:
  void bind(CLI::App& app) {
    for (const auto& key : kKeys) {
      if (key == "no-timing") {
        app.add_flag("--no-timing", no_timing_flag_, "Leave time_ms empty so output is reproducible");
        continue;
      }
      opts_[key] = app.add_option("--" + key, cli_[key], help(key));
    }
    app.add_option("--config", config_path_, "JSON config file mirroring the flags");
  }

  void load_config() {
    if (config_path_.empty()) return;
    std::ifstream in(config_path_);
    if (!in) throw UsageError("cannot open config file " + config_path_);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw UsageError("config file " + config_path_ + ": " + e.what());
    }
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string key = it.key();
      if (key.size() > 2 && key.rfind("--", 0) == 0) key = key.substr(2);
      for (auto& c : key)
        if (c == '_') c = '-';
      if (key == "n") key = "N";
      if (key == "m") key = "M";
      if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
        throw UsageError("config file: unknown key '" + it.key() + "'");
      file_[key] = to_text(it.value());
    }
  }

  bool has(const std::string& key) const {
    if (key == "no-timing" && no_timing_flag_) return true;
    auto o = opts_.find(key);
    if (o != opts_.end() && o->second->count() > 0) return true;
    return file_.count(key) > 0;
  }

  std::string get(const std::string& key, const std::string& fallback = "") const {
    auto o = opts_.find(key);
    if (o != opts_.end() && o->second->count() > 0) return cli_.at(key);
    auto f = file_.find(key);
    if (f != file_.end()) return f->second;
    return fallback;
  }

  bool no_timing() const {
    if (no_timing_flag_) return true;
    auto f = file_.find("no-timing");
    return f != file_.end() && (f->second == "true" || f->second == "1");
  }

 private:
  static std::string help(const std::string& key) {
    static const std::map<std::string, std::string> h = {
        {"case", "Example id (see `list`)"},
        {"k", "Exponent for the polynomial-trigonometric cases"},
        {"method", "rnn | scaling | bp (comma list for sweep)"},
        {"N", "Collocation resolution (comma list for sweep)"},
        {"M", "Last hidden width, overrides --widths (comma list for sweep)"},
        {"widths", "Architecture, e.g. 2,100,300,1"},
        {"init", "fanin | uniform"},
        {"rm", "Range of the uniform initialisation (comma list for sweep)"},
        {"seed", "Network seed"},
        {"seeds", "Seed list for sweep, e.g. 0,1,2,3,4"},
        {"rcond", "Relative singular value cutoff"},
        {"ntest", "Number of test points"},
        {"out", "Output path (CSV for solve/sweep, prefix for dump)"},
        {"heatmap", "Write an error heatmap (PGM + CSV) to this path"},
        {"heatmap-res", "Heatmap resolution"},
    };
    return h.at(key);
  }

  static std::string to_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& e : v) {
        if (!s.empty()) s += ",";
        s += to_text(e);
      }
      return s;
    }
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    if (v.is_number_float()) {
      std::ostringstream os;
      os.precision(17);
      os << v.get<double>();
      return os.str();
    }
    throw UsageError("config file: unsupported value " + v.dump());
  }

  std::map<std::string, std::string> cli_;
  std::map<std::string, CLI::Option*> opts_;
  std::map<std::string, std::string> file_;
  std::string config_path_;
  bool no_timing_flag_ = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ';' || c == ' ' || c == '[' || c == ']') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

long long to_int(const std::string& key, const std::string& s) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + key + ": expected an integer, got '" + s + "'");
}

std::uint64_t to_u64(const std::string& key, const std::string& s) {
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos == s.size() && s[0] != '-') return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + key + ": expected a non-negative integer, got '" + s + "'");
}

double to_double(const std::string& key, const std::string& s) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + key + ": expected a number, got '" + s + "'");
}

rnnbp_method to_method(const std::string& s) {
  if (s == "rnn") return RNNBP_METHOD_RNN;
  if (s == "scaling" || s == "rnn-scaling") return RNNBP_METHOD_SCALING;
  if (s == "bp" || s == "rnn-bp") return RNNBP_METHOD_BP;
  throw UsageError("--method: expected rnn, scaling or bp, got '" + s + "'");
}

// Settings for a single run. List-valued flags contribute their first entry.
rnnbp_settings single_settings(const Options& o, std::string& case_storage) {
  rnnbp_settings s;
  rnnbp_settings_init(&s);
  case_storage = o.get("case", s.case_id);
  s.case_id = case_storage.c_str();
  if (o.has("k")) s.k = static_cast<int>(to_int("k", o.get("k")));
  if (o.has("method")) s.method = to_method(split_list(o.get("method")).at(0));
  if (o.has("N")) s.N = static_cast<int>(to_int("N", split_list(o.get("N")).at(0)));
  if (o.has("widths")) {
    auto parts = split_list(o.get("widths"));
    if (parts.size() > RNNBP_MAX_LAYERS) throw UsageError("--widths: too many layers");
    s.n_architecture = parts.size();
    for (size_t i = 0; i < parts.size(); ++i) s.architecture[i] = static_cast<int>(to_int("widths", parts[i]));
  }
  if (o.has("M")) {
    if (s.n_architecture < 3) throw UsageError("--M needs at least one hidden layer in --widths");
    s.architecture[s.n_architecture - 2] = static_cast<int>(to_int("M", split_list(o.get("M")).at(0)));
  }
  if (o.has("init")) {
    const std::string v = o.get("init");
    if (v == "fanin" || v == "default")
      s.init = RNNBP_INIT_FANIN;
    else if (v == "uniform")
      s.init = RNNBP_INIT_UNIFORM;
    else
      throw UsageError("--init: expected fanin or uniform, got '" + v + "'");
  }
  if (o.has("rm")) s.rm = to_double("rm", split_list(o.get("rm")).at(0));
  if (o.has("seed")) s.seed = to_u64("seed", o.get("seed"));
  if (o.has("rcond")) s.rcond = to_double("rcond", o.get("rcond"));
  if (o.has("ntest")) s.n_test = static_cast<int>(to_int("ntest", o.get("ntest")));
  return s;
}

void check(rnnbp_status st) {
  if (st != RNNBP_OK) throw std::runtime_error(std::string(rnnbp_status_string(st)) + ": " + rnnbp_last_error());
}

void emit(const Options& o, const std::string& text) {
  if (!o.has("out") || o.get("out") == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.get("out"), std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + o.get("out") + " for writing");
  f << text;
}

int cmd_list() {
  const size_t n = rnnbp_case_count();
  for (size_t i = 0; i < n; ++i) {
    const char* id = nullptr;
    const char* desc = nullptr;
    rnnbp_pde pde;
    int k = -1;
    check(rnnbp_case_info(i, &id, &desc, &pde, &k));
    std::cout << id << '\t' << (pde == RNNBP_PDE_POISSON ? "poisson" : "biharmonic") << '\t' << desc;
    if (k >= 0) std::cout << " (default k=" << k << ")";
    std::cout << '\n';
  }
  return 0;
}

int cmd_solve(const Options& o) {
  std::string case_id;
  const rnnbp_settings s = single_settings(o, case_id);
  rnnbp_solution* sol = nullptr;
  check(rnnbp_solve(&s, &sol));
  struct Guard {
    rnnbp_solution* p;
    ~Guard() { rnnbp_solution_free(p); }
  } guard{sol};

  const char* csv = nullptr;
  check(rnnbp_solution_csv(sol, &csv));
  std::string text = csv;
  if (o.no_timing()) {
    // time_ms is the last column
    auto nl = text.find('\n');
    auto last = text.rfind(',');
    if (nl != std::string::npos && last != std::string::npos && last > nl)
      text = text.substr(0, last + 1) + "\n";
  }
  emit(o, text);

  if (o.has("heatmap") || o.has("heatmap-res")) {
    const int res = o.has("heatmap-res") ? static_cast<int>(to_int("heatmap-res", o.get("heatmap-res"))) : 200;
    const std::string path = o.get("heatmap", "heatmap.pgm");
    double max_err = 0.0;
    check(rnnbp_solution_heatmap(sol, res, path.c_str(), &max_err));
    std::cerr << "heatmap: " << path << " (max abs error " << max_err << ")\n";
  }
  return 0;
}

int cmd_sweep(const Options& o) {
  std::string case_id;
  rnnbp_sweep_settings sw{};
  sw.base = single_settings(o, case_id);

  std::vector<rnnbp_method> methods;
  for (const auto& m : split_list(o.get("method", "rnn,scaling,bp"))) methods.push_back(to_method(m));
  std::vector<int> Ns;
  for (const auto& n : split_list(o.get("N", "16"))) Ns.push_back(static_cast<int>(to_int("N", n)));
  std::vector<int> Ms;
  for (const auto& m : split_list(o.get("M"))) Ms.push_back(static_cast<int>(to_int("M", m)));
  std::vector<double> rms;
  for (const auto& r : split_list(o.get("rm"))) rms.push_back(to_double("rm", r));
  std::vector<std::uint64_t> seeds;
  const std::string seed_text = o.has("seeds") ? o.get("seeds") : o.get("seed", "0,1,2,3,4");
  for (const auto& s : split_list(seed_text)) seeds.push_back(to_u64("seeds", s));

  sw.methods = methods.data();
  sw.n_methods = methods.size();
  sw.Ns = Ns.data();
  sw.n_Ns = Ns.size();
  sw.Ms = Ms.data();
  sw.n_Ms = Ms.size();
  sw.rms = rms.data();
  sw.n_rms = rms.size();
  sw.seeds = seeds.data();
  sw.n_seeds = seeds.size();

  rnnbp_table* table = nullptr;
  check(rnnbp_sweep(&sw, &table));
  struct Guard {
    rnnbp_table* p;
    ~Guard() { rnnbp_table_free(p); }
  } guard{table};
  emit(o, rnnbp_table_csv(table, o.no_timing() ? 0 : 1));
  return 0;
}

int cmd_dump(const Options& o) {
  std::string case_id;
  const rnnbp_settings s = single_settings(o, case_id);
  const std::string prefix = o.get("out", "rnnbp_dump");
  check(rnnbp_dump(&s, prefix.c_str()));
  std::cerr << "wrote " << prefix << ".{net.json,points.csv,system.csv,solution.csv}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized neural network collocation solvers for Poisson and biharmonic problems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rnnbp_version()));

  Options opts;
  opts.bind(app);
  auto* solve = app.add_subcommand("solve", "Solve one case and print its CSV record");
  auto* sweep = app.add_subcommand("sweep", "Run a grid of settings and print a CSV table");
  auto* list = app.add_subcommand("list", "List the built-in example cases");
  auto* dump = app.add_subcommand("dump", "Write the network, points, system and solution of one run");
  for (auto* sub : {solve, sweep, list, dump}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    opts.load_config();
    if (*list) return cmd_list();
    if (*solve) return cmd_solve(opts);
    if (*sweep) return cmd_sweep(opts);
    if (*dump) return cmd_dump(opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
