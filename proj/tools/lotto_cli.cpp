// Copyright 2026 The Lotto Precommit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the C interface.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lotto/lotto.h"

namespace {

constexpr int kExitError = 2;
constexpr int kExitVerifyFailed = 1;

struct Failure {
  std::string code;
  std::string message;
};

void check(lotto_status s) {
  if (s != LOTTO_OK) throw Failure{lotto_status_name(s), lotto_last_error()};
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{"usage", std::string("malformed number '") + item +
                                 "' in --" + flag};
    }
  }
  if (out.empty()) throw Failure{"usage", std::string("--") + flag + " is empty"};
  return out;
}

struct Commit {
  std::size_t battlefield;
  double amount;
};

std::vector<Commit> parse_commits(const std::string& text) {
  std::vector<Commit> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      std::size_t used = 0;
      const unsigned long b = std::stoul(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const std::string amount = item.substr(colon + 1);
      const double p = std::stod(amount, &used);
      if (used != amount.size()) throw std::invalid_argument(item);
      out.push_back({b, p});
    } catch (const std::exception&) {
      throw Failure{"usage", "malformed commitment '" + item +
                                 "', expected battlefield:amount"};
    }
  }
  return out;
}

// RAII holders for C handles.
template <class T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Destroy(ptr); }
};

using GLGame = Handle<lotto_gl_game, lotto_gl_destroy>;
using GGLGame = Handle<lotto_ggl_game, lotto_ggl_destroy>;
using Equilibria = Handle<lotto_equilibria, lotto_equilibria_destroy>;
using TableHandle = Handle<lotto_table, lotto_table_destroy>;

void emit(const TableHandle& t, const std::string& out) {
  check(lotto_table_write_csv(t.ptr, out.empty() ? nullptr : out.c_str()));
}

// Appends config-file entries whose flags are not already on the command
// line, so explicit flags win.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      kept.push_back(args[i]);
    }
  }
  if (path.empty()) return kept;
  std::ifstream f(path);
  if (!f) throw Failure{"io", "cannot read config file " + path};
  std::set<std::string> present;
  for (const std::string& a : kept) {
    if (a.rfind("--", 0) == 0) present.insert(a.substr(2, a.find('=') - 2));
  }
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Failure{"usage", path + ":" + std::to_string(lineno) +
                                 ": expected key=value"};
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (present.count(key)) continue;
    kept.push_back("--" + key);
    kept.push_back(value);
  }
  return kept;
}

void add_axis(CLI::App* cmd, const std::string& name, lotto_axis& axis) {
  cmd->add_option("--" + name + "-min", axis.lower, "lower end of " + name)
      ->capture_default_str();
  cmd->add_option("--" + name + "-max", axis.upper, "upper end of " + name)
      ->capture_default_str();
  cmd->add_option("--" + name + "-steps", axis.steps,
                  "points along " + name + " (1 pins it at the lower end)")
      ->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"General Lotto pre-commitment engine"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every command");
  app.add_option("--config", "flat key=value file; command-line flags win");

  double xa = 0, xb = 0, alpha = 0, epsilon = 0, p = -1;
  std::string values, commits, out;
  int battlefield = -1;

  auto* gl_payoff = app.add_subcommand("gl-payoff", "nominal GL payoffs");
  gl_payoff->add_option("--xa", xa, "budget of A")->required();
  gl_payoff->add_option("--xb", xb, "budget of B")->required();
  gl_payoff->add_option("--v", values, "comma-separated valuations")->required();

  auto* gl_pre = app.add_subcommand(
      "gl-precommit", "optimal single commitment, or A's response to --commit");
  gl_pre->add_option("--xa", xa, "budget of A")->required();
  gl_pre->add_option("--xb", xb, "budget of B")->required();
  gl_pre->add_option("--v", values, "comma-separated valuations")->required();
  gl_pre->add_option("--commit", commits,
                     "battlefield:amount list evaluated as given");
  gl_pre->add_option("--battlefield", battlefield,
                     "0-based battlefield to optimise (default: all)");
  gl_pre->add_option("--epsilon", epsilon, "offset above X_A for suprema");

  lotto_gl_region_config gl_region_cfg;
  lotto_gl_region_config_default(&gl_region_cfg);
  auto* gl_region = app.add_subcommand("gl-region", "GL incentive sweep");
  add_axis(gl_region, "xa", gl_region_cfg.budget_a);
  add_axis(gl_region, "xb", gl_region_cfg.budget_b);
  gl_region->add_option("--vbar", gl_region_cfg.limit_value, "limit value")
      ->capture_default_str();
  gl_region->add_option("--phi", gl_region_cfg.phi, "total value")
      ->capture_default_str();
  gl_region->add_option("--jobs", gl_region_cfg.jobs, "worker threads")
      ->capture_default_str();
  gl_region->add_option("--out", out, "CSV path (default: stdout)");

  auto* ggl_solve = app.add_subcommand("ggl-solve", "GGL equilibria");
  ggl_solve->add_option("--alpha", alpha, "valuation asymmetry")->required();
  ggl_solve->add_option("--xa", xa, "budget of A")->required();
  ggl_solve->add_option("--xb", xb, "budget of B")->required();
  ggl_solve->add_option("--out", out, "CSV path (default: stdout)");

  auto* ggl_pre = app.add_subcommand(
      "ggl-precommit", "optimal GGL commitment, or A's response to --p");
  ggl_pre->add_option("--alpha", alpha, "valuation asymmetry")->required();
  ggl_pre->add_option("--xa", xa, "budget of A")->required();
  ggl_pre->add_option("--xb", xb, "budget of B")->required();
  ggl_pre->add_option("--battlefield", battlefield, "1 or 2 (with --p)");
  ggl_pre->add_option("--p", p, "commitment to evaluate");
  ggl_pre->add_option("--epsilon", epsilon, "offset above X_A for suprema");

  lotto_ggl_region_config ggl_region_cfg;
  lotto_ggl_region_config_default(&ggl_region_cfg);
  auto* ggl_region = app.add_subcommand("ggl-region", "GGL benefit sweep");
  add_axis(ggl_region, "alpha", ggl_region_cfg.alpha);
  add_axis(ggl_region, "xa", ggl_region_cfg.budget_a);
  add_axis(ggl_region, "xb", ggl_region_cfg.budget_b);
  ggl_region->add_option("--jobs", ggl_region_cfg.jobs, "worker threads")
      ->capture_default_str();
  ggl_region->add_option("--out", out, "CSV path (default: stdout)");

  lotto_fig5_config fig5;
  lotto_fig5_config_default(&fig5);
  std::string limits;
  auto* mc = app.add_subcommand("mc-fig5", "merged vs split commitments");
  mc->add_option("--seed", fig5.seed, "random seed")->capture_default_str();
  mc->add_option("--samples", fig5.samples, "samples per limit value")
      ->capture_default_str();
  mc->add_option("--n", fig5.n, "battlefields")->capture_default_str();
  mc->add_option("--xa", fig5.budget_a, "budget of A")->capture_default_str();
  mc->add_option("--xb", fig5.budget_b, "budget of B")->capture_default_str();
  mc->add_option("--phi", fig5.phi, "total value")->capture_default_str();
  mc->add_option("--vbar", limits, "comma-separated limit values");
  mc->add_option("--jobs", fig5.jobs, "worker threads")->capture_default_str();
  mc->add_option("--out", out, "CSV path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "oracle cross-checks");
  verify->add_option("--out", out, "CSV path (default: stdout)");

  std::vector<std::string> args(argv + 1, argv + argc);
  args = merge_config(std::move(args));
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw Failure{"usage", e.what()};
  }

  if (gl_payoff->parsed()) {
    const std::vector<double> v = parse_list(values, "v");
    GLGame g;
    check(lotto_gl_create(xa, xb, v.data(), v.size(), &g.ptr));
    double pa = 0, pb = 0;
    check(lotto_gl_nominal(g.ptr, &pa, &pb));
    std::printf("piA=%s piB=%s\n", num(pa).c_str(), num(pb).c_str());
  } else if (gl_pre->parsed()) {
    const std::vector<double> v = parse_list(values, "v");
    GLGame g;
    check(lotto_gl_create(xa, xb, v.data(), v.size(), &g.ptr));
    if (!commits.empty()) {
      const std::vector<Commit> cs = parse_commits(commits);
      std::vector<std::size_t> bs;
      std::vector<double> ps;
      for (const Commit& c : cs) {
        bs.push_back(c.battlefield);
        ps.push_back(c.amount);
      }
      uint32_t mask = 0;
      double ua = 0, ub = 0;
      check(lotto_gl_respond(g.ptr, bs.data(), ps.data(), cs.size(), &mask,
                             &ua, &ub));
      std::string matched;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (mask >> i & 1) {
          if (!matched.empty()) matched += ';';
          matched += std::to_string(cs[i].battlefield);
        }
      }
      std::printf("matched=%s uA=%s uB=%s\n",
                  matched.empty() ? "none" : matched.c_str(), num(ua).c_str(),
                  num(ub).c_str());
    } else {
      double total = 0;
      for (double x : v) total += x;
      lotto_incentive inc;
      double vmax = 0;
      for (double x : v) vmax = std::max(vmax, x);
      check(lotto_gl_classify_incentive(xa, xb, total, vmax, &inc));
      std::printf("regime=%d incentive=%d threshold=%s\n", inc.regime,
                  inc.has_incentive,
                  inc.has_threshold ? num(inc.threshold).c_str() : "none");
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (battlefield >= 0 && static_cast<std::size_t>(battlefield) != b) {
          continue;
        }
        if (battlefield < 0 && !(v[b] > 0)) continue;
        lotto_gl_single_result r;
        check(lotto_gl_optimal_single(g.ptr, b, epsilon, &r));
        std::printf("battlefield=%zu p=%s uB=%s attained=%d nominal_uB=%s\n",
                    b, num(r.p).c_str(), num(r.payoff_b).c_str(), r.attained,
                    num(r.nominal_payoff_b).c_str());
      }
    }
  } else if (gl_region->parsed()) {
    TableHandle t;
    check(lotto_gl_region(&gl_region_cfg, &t.ptr));
    emit(t, out);
  } else if (ggl_solve->parsed()) {
    GGLGame g;
    check(lotto_ggl_create(xa, xb, alpha, &g.ptr));
    TableHandle t;
    check(lotto_ggl_solve_table(g.ptr, &t.ptr));
    emit(t, out);
  } else if (ggl_pre->parsed()) {
    GGLGame g;
    check(lotto_ggl_create(xa, xb, alpha, &g.ptr));
    if (ggl_pre->count("--p") > 0) {
      const int b = battlefield < 0 ? 1 : battlefield;
      lotto_response resp;
      double ua = 0, ub = 0;
      check(lotto_ggl_respond(g.ptr, b, p, &resp, &ua, &ub));
      std::printf("battlefield=%d p=%s response=%s uA=%s uB=%s\n", b,
                  num(p).c_str(),
                  resp == LOTTO_MATCH ? "match" : "withdraw", num(ua).c_str(),
                  num(ub).c_str());
    } else {
      lotto_ggl_optimal o;
      check(lotto_ggl_optimal_precommit(g.ptr, epsilon, &o));
      std::printf("battlefield=%d p=%s uB=%s sup_uB=%s attained=%d\n",
                  o.battlefield, num(o.p).c_str(), num(o.payoff_b).c_str(),
                  num(o.supremum_b).c_str(), o.attained);
      lotto_benefit bf;
      check(lotto_ggl_benefit(g.ptr, &bf));
      std::string verdict;
      if (bf.n_equilibria == 3) {
        verdict = bf.beats_second_best ? "second_best_beaten"
                                       : "second_best_not_beaten";
      } else if (!bf.empirical) {
        verdict = "unique_beaten";
      } else {
        verdict = bf.beats_unique == 1 ? "unique_beaten_empirical"
                                       : "unique_not_beaten_empirical";
      }
      std::printf("n_equilibria=%d verdict=%s benchmark_uB=%s", bf.n_equilibria,
                  verdict.c_str(), num(bf.benchmark_b).c_str());
      if (bf.has_witness) {
        std::printf(" witness_b=%d witness_p=%s witness_uB=%s",
                    bf.witness_battlefield, num(bf.witness_p).c_str(),
                    num(bf.guaranteed_b).c_str());
      }
      std::printf("\n");
    }
  } else if (ggl_region->parsed()) {
    TableHandle t;
    check(lotto_ggl_region(&ggl_region_cfg, &t.ptr));
    emit(t, out);
  } else if (mc->parsed()) {
    std::vector<double> lv;
    if (!limits.empty()) lv = parse_list(limits, "vbar");
    fig5.limit_values = lv.empty() ? nullptr : lv.data();
    fig5.n_limit_values = lv.size();
    TableHandle t;
    check(lotto_mc_fig5(&fig5, &t.ptr));
    emit(t, out);
  } else if (verify->parsed()) {
    TableHandle t;
    int all_pass = 0;
    check(lotto_verify(&t.ptr, &all_pass));
    emit(t, out);
    if (!all_pass) return kExitVerifyFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::string msg = f.message;
    for (char& c : msg) {
      if (c == '\n') c = ' ';
    }
    std::fprintf(stderr, "error: code=%s message=%s\n", f.code.c_str(),
                 msg.c_str());
    return kExitError;
  }
}
