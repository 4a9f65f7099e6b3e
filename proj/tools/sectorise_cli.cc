// Copyright 2026 The Sectorise Authors
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

// Command line front end. Talks to the engine only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sectorise/sectorise.h"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kBadInput = 2;
constexpr int kInfeasible = 3;
constexpr int kInternal = 4;

int Report(sect_status s) {
  std::cerr << "error: " << sect_last_error() << "\n";
  switch (s) {
    case SECT_ERR_INVALID_ARGUMENT:
    case SECT_ERR_IO:
    case SECT_ERR_SCHEMA:
      return kBadInput;
    case SECT_ERR_INFEASIBLE:
      return kInfeasible;
    default:
      return kInternal;
  }
}

// Owns a string handed out by the library.
struct Text {
  char* p = nullptr;
  ~Text() { sect_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct InstanceHandle {
  sect_instance* p = nullptr;
  ~InstanceHandle() { sect_instance_free(p); }
};

bool ReadText(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool WriteText(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::vector<int32_t> ParseInts(const std::string& text) {
  std::vector<int32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sectorisation by constraint-based local search"};
  app.set_version_flag("--version", std::string(sect_version()));
  app.require_subcommand(1);

  // generate
  sect_generate_options gen;
  sect_generate_defaults(&gen);
  std::string gen_out = "-";
  bool no_constraints = false;
  auto* generate = app.add_subcommand("generate", "Write a synthetic instance");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--width", gen.width, "Grid width");
  generate->add_option("--height", gen.height, "Grid height");
  generate->add_option("--depth", gen.depth, "Grid depth");
  generate->add_option("--dim", gen.dim, "2 or 3")->check(CLI::IsMember({2, 3}));
  generate->add_option("--colours", gen.colours, "Number of sectors");
  generate->add_option("--flights", gen.flights, "Number of flights");
  generate->add_option("--dwell-min", gen.dwell_min, "Shortest leg in seconds");
  generate->add_option("--dwell-max", gen.dwell_max, "Longest leg in seconds");
  generate->add_option("--workload-min", gen.workload_min);
  generate->add_option("--workload-max", gen.workload_max);
  generate->add_option("--balance-percent", gen.balance_percent,
                       "Balanced bound as a percentage of the total workload");
  generate->add_option("--stretch-t", gen.stretch_t, "Minimum dwell per sector");
  generate->add_flag("--no-constraints", no_constraints,
                     "Leave the constraint list empty");
  generate->add_option("-o,--out", gen_out, "Output file, - for stdout");

  // solve
  std::string solve_in;
  std::string solve_out;
  std::string trace_out;
  std::string mode;
  std::string weights;
  std::string hard;
  uint64_t seed = 0;
  int64_t iters = -1;
  int32_t parallel = 1;
  int64_t trace_every = -1;
  auto* solve = app.add_subcommand("solve", "Search for a satisfying colouring");
  solve->add_option("instance", solve_in, "Instance file")->required();
  auto* seed_opt = solve->add_option("--seed", seed, "Random seed");
  solve->add_option("--iters", iters, "Iteration budget");
  solve->add_option("--mode", mode, "Connected mode")
      ->check(CLI::IsMember({"exact", "paper-fast"}));
  solve->add_option("--weights", weights, "Weights as id=k,...");
  solve->add_option("--hard", hard, "Hard constraints, e.g. connected,stretchsum");
  solve->add_option("--parallel", parallel, "Independent runs on seed, seed+1, ...")
      ->check(CLI::PositiveNumber);
  solve->add_option("--trace", trace_out, "Trace CSV output");
  solve->add_option("--trace-every", trace_every, "Trace sampling period");
  solve->add_option("-o,--out", solve_out, "Solution output");

  // check
  std::string check_in;
  std::string check_sol;
  auto* check = app.add_subcommand("check", "Evaluate a solution from scratch");
  check->add_option("instance", check_in, "Instance file")->required();
  check->add_option("solution", check_sol, "Solution file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive and systematic tools");
  oracle->require_subcommand(1);
  std::string oracle_in;
  int32_t limit = 10;
  auto* oracle_solve = oracle->add_subcommand("solve", "Enumerate all solutions");
  oracle_solve->add_option("instance", oracle_in, "Instance file")->required();
  oracle_solve->add_option("--limit", limit, "Vertex limit");
  std::string seq;
  auto* oracle_stretches =
      oracle->add_subcommand("stretches", "Stretches of a colour sequence");
  oracle_stretches->add_option("colours", seq, "Comma separated colours")
      ->required();
  std::string request;
  auto* oracle_prop = oracle->add_subcommand(
      "propagate", "Run the 1D contiguity propagator on a JSON request");
  oracle_prop->add_option("request", request, "Request file")->required();

  // probe-bench
  std::string grids = "10x10,40x25,100x100";
  int32_t probes = 0;
  uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("probe-bench", "Probe cost against grid size");
  bench->add_option("--grids", grids, "Grid sizes as WxH,...");
  bench->add_option("--probes", probes, "Probes per constraint and grid");
  bench->add_option("--seed", bench_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests come through here with code 0.
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  if (*generate) {
    gen.default_constraints = no_constraints ? 0 : 1;
    InstanceHandle inst;
    if (sect_status s = sect_instance_generate(&gen, &inst.p); s != SECT_OK) {
      return Report(s);
    }
    Text text;
    if (sect_status s = sect_instance_serialize(inst.p, &text.p); s != SECT_OK) {
      return Report(s);
    }
    if (!WriteText(gen_out, text.str())) {
      std::cerr << "error: cannot write " << gen_out << "\n";
      return kBadInput;
    }
    return kOk;
  }

  if (*solve) {
    InstanceHandle inst;
    if (sect_status s = sect_instance_load(solve_in.c_str(), &inst.p);
        s != SECT_OK) {
      return Report(s);
    }
    sect_solve_options opt;
    sect_solve_defaults(&opt);
    opt.max_iterations = iters;
    if (seed_opt->count() > 0) {
      opt.seed = seed;
      opt.use_seed = 1;
    }
    opt.parallel = parallel;
    if (mode == "exact") opt.mode = 0;
    if (mode == "paper-fast") opt.mode = 1;
    opt.weights = weights.empty() ? nullptr : weights.c_str();
    opt.hard = hard.empty() ? nullptr : hard.c_str();
    opt.trace_every = trace_every;
    sect_result* result = nullptr;
    if (sect_status s = sect_solve(inst.p, &opt, &result); s != SECT_OK) {
      return Report(s);
    }
    const double total = sect_result_total(result);
    std::printf("seed %llu iterations %lld total %.9g\n",
                static_cast<unsigned long long>(sect_result_seed(result)),
                static_cast<long long>(sect_result_iterations(result)), total);
    Text sol;
    Text trace;
    sect_status s = sect_result_solution(result, &sol.p);
    if (s == SECT_OK) s = sect_result_trace_csv(result, &trace.p);
    sect_result_free(result);
    if (s != SECT_OK) return Report(s);
    if (!solve_out.empty() && !WriteText(solve_out, sol.str())) {
      std::cerr << "error: cannot write " << solve_out << "\n";
      return kBadInput;
    }
    if (!trace_out.empty() && !WriteText(trace_out, trace.str())) {
      std::cerr << "error: cannot write " << trace_out << "\n";
      return kBadInput;
    }
    return total <= 1e-9 ? kOk : kViolated;
  }

  if (*check) {
    InstanceHandle inst;
    if (sect_status s = sect_instance_load(check_in.c_str(), &inst.p);
        s != SECT_OK) {
      return Report(s);
    }
    std::string sol;
    if (!ReadText(check_sol, sol)) {
      std::cerr << "error: cannot read " << check_sol << "\n";
      return kBadInput;
    }
    Text report;
    int32_t ok = 0;
    if (sect_status s = sect_check(inst.p, sol.c_str(), &report.p, &ok);
        s != SECT_OK) {
      return Report(s);
    }
    std::cout << report.str();
    return ok ? kOk : kViolated;
  }

  if (*oracle_solve) {
    InstanceHandle inst;
    if (sect_status s = sect_instance_load(oracle_in.c_str(), &inst.p);
        s != SECT_OK) {
      return Report(s);
    }
    Text out;
    if (sect_status s = sect_oracle_solve(inst.p, limit, &out.p); s != SECT_OK) {
      return Report(s);
    }
    std::cout << out.str();
    return kOk;
  }

  if (*oracle_stretches) {
    std::vector<int32_t> colours;
    try {
      colours = ParseInts(seq);
    } catch (const std::exception&) {
      std::cerr << "error: colours must be comma separated integers\n";
      return kBadInput;
    }
    Text out;
    if (sect_status s =
            sect_oracle_stretches(colours.data(), colours.size(), &out.p);
        s != SECT_OK) {
      return Report(s);
    }
    std::cout << out.str();
    return kOk;
  }

  if (*oracle_prop) {
    std::string text;
    if (!ReadText(request, text)) {
      std::cerr << "error: cannot read " << request << "\n";
      return kBadInput;
    }
    Text out;
    if (sect_status s = sect_oracle_propagate(text.c_str(), &out.p);
        s != SECT_OK) {
      return Report(s);
    }
    std::cout << out.str();
    return kOk;
  }

  if (*bench) {
    std::vector<int32_t> dims;
    std::stringstream ss(grids);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const size_t x = item.find('x');
      if (x == std::string::npos) {
        std::cerr << "error: grid '" << item << "' is not WxH\n";
        return kBadInput;
      }
      try {
        dims.push_back(std::stoi(item.substr(0, x)));
        dims.push_back(std::stoi(item.substr(x + 1)));
      } catch (const std::exception&) {
        std::cerr << "error: grid '" << item << "' is not WxH\n";
        return kBadInput;
      }
    }
    Text out;
    if (sect_status s = sect_probe_bench(dims.data(), dims.size() / 2, probes,
                                         bench_seed, &out.p);
        s != SECT_OK) {
      return Report(s);
    }
    std::cout << out.str();
    return kOk;
  }
  return kOk;
}
