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

#include "sectorise/sectorise.h"

#include <cstdlib>
#include <cstring>
#include <ios>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sectorise/bench.h"
#include "sectorise/colour_state.h"
#include "sectorise/engine.h"
#include "sectorise/instance_io.h"
#include "sectorise/systematic.h"

struct sect_instance {
  sectorise::Instance inst;
};

struct sect_result {
  sectorise::SearchResult best;
  int num_colours = 0;
  std::vector<std::string> counter_ids;
  std::string trace_csv;
};

namespace {

using json = nlohmann::json;
using sectorise::InputError;

thread_local std::string last_error;

// Maps exceptions escaping `fn` to status codes.
template <typename Fn>
sect_status Guard(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return SECT_OK;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return SECT_ERR_INVALID_ARGUMENT;
  } catch (const sectorise::InitError& e) {
    last_error = e.what();
    return SECT_ERR_INFEASIBLE;
  } catch (const InputError& e) {
    last_error = e.what();
    return SECT_ERR_SCHEMA;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return SECT_ERR_SCHEMA;
  } catch (const std::ios_base::failure& e) {
    last_error = e.what();
    return SECT_ERR_IO;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SECT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SECT_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> SplitList(const char* text) {
  std::vector<std::string> out;
  if (text == nullptr) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::map<std::string, int64_t> ParseWeights(const char* text) {
  std::map<std::string, int64_t> out;
  for (const std::string& item : SplitList(text)) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("weights: expected id=k, got '" + item + "'");
    }
    char* end = nullptr;
    const std::string value = item.substr(eq + 1);
    const long long k = std::strtoll(value.c_str(), &end, 10);
    if (value.empty() || *end != '\0' || k <= 0) {
      throw std::invalid_argument("weights: '" + value +
                                  "' is not a positive integer");
    }
    out[item.substr(0, eq)] = k;
  }
  return out;
}

}  // namespace

extern "C" {

const char* sect_version(void) { return "1.0.0"; }

const char* sect_last_error(void) { return last_error.c_str(); }

void sect_string_free(char* s) { std::free(s); }

void sect_generate_defaults(sect_generate_options* opt) {
  if (opt == nullptr) return;
  const sectorise::GenerateOptions d;
  opt->seed = d.seed;
  opt->width = d.w;
  opt->height = d.h;
  opt->depth = d.d;
  opt->dim = d.dim;
  opt->colours = d.num_colours;
  opt->flights = d.num_flights;
  opt->dwell_min = d.dwell_min;
  opt->dwell_max = d.dwell_max;
  opt->workload_min = d.workload_min;
  opt->workload_max = d.workload_max;
  opt->default_constraints = d.default_constraints ? 1 : 0;
  opt->balance_percent = d.balance_percent;
  opt->stretch_t = d.stretch_t;
}

sect_status sect_instance_generate(const sect_generate_options* opt,
                                   sect_instance** out) {
  return Guard([&] {
    Require(opt != nullptr && out != nullptr, "null argument");
    sectorise::GenerateOptions g;
    g.seed = opt->seed;
    g.w = opt->width;
    g.h = opt->height;
    g.d = opt->depth;
    g.dim = opt->dim;
    g.num_colours = opt->colours;
    g.num_flights = opt->flights;
    g.dwell_min = opt->dwell_min;
    g.dwell_max = opt->dwell_max;
    g.workload_min = opt->workload_min;
    g.workload_max = opt->workload_max;
    g.default_constraints = opt->default_constraints != 0;
    g.balance_percent = opt->balance_percent;
    g.stretch_t = opt->stretch_t;
    *out = new sect_instance{sectorise::Generate(g)};
  });
}

sect_status sect_instance_load(const char* path, sect_instance** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new sect_instance{sectorise::LoadInstance(path)};
  });
}

sect_status sect_instance_parse(const char* text, sect_instance** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new sect_instance{sectorise::ParseInstance(text)};
  });
}

sect_status sect_instance_save(const sect_instance* inst, const char* path) {
  return Guard([&] {
    Require(inst != nullptr && path != nullptr, "null argument");
    sectorise::SaveInstance(inst->inst, path);
  });
}

sect_status sect_instance_serialize(const sect_instance* inst, char** out) {
  return Guard([&] {
    Require(inst != nullptr && out != nullptr, "null argument");
    *out = Dup(sectorise::SerializeInstance(inst->inst));
  });
}

void sect_instance_free(sect_instance* inst) { delete inst; }

int32_t sect_instance_num_vertices(const sect_instance* inst) {
  return inst == nullptr ? 0 : inst->inst.geometry->num_vertices();
}

int32_t sect_instance_num_colours(const sect_instance* inst) {
  return inst == nullptr ? 0 : inst->inst.num_colours;
}

int64_t sect_instance_total_workload(const sect_instance* inst) {
  return inst == nullptr ? 0 : inst->inst.TotalWorkload();
}

void sect_solve_defaults(sect_solve_options* opt) {
  if (opt == nullptr) return;
  opt->max_iterations = -1;
  opt->seed = 0;
  opt->use_seed = 0;
  opt->parallel = 1;
  opt->mode = -1;
  opt->weights = nullptr;
  opt->hard = nullptr;
  opt->trace_every = -1;
}

sect_status sect_solve(const sect_instance* inst, const sect_solve_options* opt,
                       sect_result** out) {
  return Guard([&] {
    Require(inst != nullptr && out != nullptr, "null argument");
    sect_solve_options o;
    sect_solve_defaults(&o);
    if (opt != nullptr) o = *opt;
    Require(o.parallel >= 1, "parallel must be at least 1");
    Require(o.mode >= -1 && o.mode <= 1, "mode must be -1, 0 or 1");
    sectorise::SearchConfig cfg = inst->inst.search;
    if (o.max_iterations >= 0) cfg.max_iterations = o.max_iterations;
    if (o.use_seed) cfg.seed = o.seed;
    if (o.trace_every >= 0) cfg.trace_every = o.trace_every;
    if (o.hard != nullptr) cfg.hard = SplitList(o.hard);
    sectorise::BuildOptions build;
    build.weights = ParseWeights(o.weights);
    if (o.mode == 0) build.connected_mode = sectorise::ConnectedMode::kExact;
    if (o.mode == 1) build.connected_mode = sectorise::ConnectedMode::kPaperFast;
    for (const auto& [id, w] : build.weights) {
      bool known = false;
      for (const auto& c : inst->inst.constraints) known = known || c.id == id;
      if (!known) throw std::invalid_argument("weights: unknown constraint " + id);
    }
    const sectorise::Instance& instance = inst->inst;
    auto factory = [&] { return sectorise::BuildModel(instance, build); };
    const std::vector<sectorise::SearchResult> results =
        sectorise::ParallelSearch(factory, cfg, o.parallel);
    auto r = std::make_unique<sect_result>();
    r->best = sectorise::BestOf(results);
    r->num_colours = instance.num_colours;
    const std::unique_ptr<sectorise::Model> names = factory();
    for (int i = 0; i < names->num_counters(); ++i) {
      r->counter_ids.push_back(names->counter(i).id);
    }
    r->trace_csv = sectorise::TraceCsv(*names, r->best.trace);
    *out = r.release();
  });
}

void sect_result_free(sect_result* r) { delete r; }

double sect_result_total(const sect_result* r) {
  return r == nullptr ? -1.0 : r->best.best_total;
}

uint64_t sect_result_seed(const sect_result* r) {
  return r == nullptr ? 0 : r->best.seed;
}

int64_t sect_result_iterations(const sect_result* r) {
  return r == nullptr ? 0 : r->best.iterations;
}

sect_status sect_result_colours(const sect_result* r, int32_t* out, size_t len) {
  return Guard([&] {
    Require(r != nullptr && out != nullptr, "null argument");
    Require(len >= r->best.best.size(), "buffer too small");
    std::copy(r->best.best.begin(), r->best.best.end(), out);
  });
}

sect_status sect_result_solution(const sect_result* r, char** out) {
  return Guard([&] {
    Require(r != nullptr && out != nullptr, "null argument");
    sectorise::Solution sol;
    sol.colours = r->best.best;
    for (size_t i = 0; i < r->counter_ids.size(); ++i) {
      sol.counters[r->counter_ids[i]] = r->best.best_counters[i];
    }
    sol.num_colours = r->num_colours;
    *out = Dup(sectorise::SerializeSolution(sol));
  });
}

sect_status sect_result_trace_csv(const sect_result* r, char** out) {
  return Guard([&] {
    Require(r != nullptr && out != nullptr, "null argument");
    *out = Dup(r->trace_csv);
  });
}

sect_status sect_check(const sect_instance* inst, const char* solution_text,
                       char** report, int32_t* satisfied) {
  return Guard([&] {
    Require(inst != nullptr && solution_text != nullptr && report != nullptr,
            "null argument");
    const sectorise::CheckReport rep = sectorise::CheckSolution(
        inst->inst, sectorise::ParseSolution(solution_text));
    json entries = json::array();
    for (const sectorise::CheckEntry& e : rep.entries) {
      entries.push_back({{"id", e.id},
                         {"kind", e.kind},
                         {"violation", e.violation},
                         {"holds", e.holds}});
    }
    const json j = {{"constraints", entries},
                    {"total", rep.total},
                    {"satisfied", rep.satisfied()}};
    *report = Dup(j.dump(2) + "\n");
    if (satisfied != nullptr) *satisfied = rep.satisfied() ? 1 : 0;
  });
}

sect_status sect_oracle_solve(const sect_instance* inst, int32_t limit,
                              char** out) {
  return Guard([&] {
    Require(inst != nullptr && out != nullptr, "null argument");
    std::unique_ptr<sectorise::Model> model = sectorise::BuildModel(inst->inst);
    std::vector<sectorise::Constraint*> all;
    for (int i = 0; i < model->num_constraints(); ++i) {
      all.push_back(&model->constraint(i));
    }
    const auto sols = sectorise::BruteForceSolve(model->state(), all, limit);
    const json j = {{"count", sols.size()}, {"solutions", sols}};
    *out = Dup(j.dump(2) + "\n");
  });
}

sect_status sect_oracle_stretches(const int32_t* colours, size_t len,
                                  char** out) {
  return Guard([&] {
    Require(out != nullptr && (colours != nullptr || len == 0), "null argument");
    json j = json::array();
    for (const sectorise::Stretch& s :
         sectorise::Stretches(std::span<const int32_t>(colours, len))) {
      j.push_back({s.first, s.last});
    }
    *out = Dup(j.dump() + "\n");
  });
}

sect_status sect_oracle_propagate(const char* request, char** out) {
  return Guard([&] {
    Require(request != nullptr && out != nullptr, "null argument");
    json req;
    try {
      req = json::parse(request);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("request: ") + e.what());
    }
    if (!req.is_object() || !req.contains("colours") || !req.contains("domains") ||
        !req.contains("trigger")) {
      throw InputError("request: needs colours, domains and trigger");
    }
    const int n = req["colours"].get<int>();
    const auto sets = req["domains"].get<std::vector<std::vector<int>>>();
    const int trigger = req["trigger"].get<int>();
    const sectorise::RelOp op =
        sectorise::ParseRelOp(req.value("relop", std::string("<=")));
    const bool rules_only = req.value("rules_only", false);
    sectorise::DomainStore store = sectorise::DomainStore::FromSets(n, sets);
    if (req.contains("counter")) {
      store.SetCounter(req["counter"].get<std::vector<int64_t>>());
    }
    std::vector<sectorise::Vertex> order(sets.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    const sectorise::OrderedPath path(order);
    const sectorise::DomainStore before = store;
    const sectorise::PropagationResult res =
        rules_only ? sectorise::PropagateConnected1dRules(store, path, trigger)
                   : sectorise::PropagateConnected1d(store, path, trigger, op);
    const sectorise::DomainStore oracle = sectorise::BruteForceFilter(
        [&](std::span<const int32_t> c, int64_t k) {
          for (const sectorise::Stretch& s : sectorise::Stretches(c)) {
            for (const sectorise::Stretch& t : sectorise::Stretches(c)) {
              if (s.first < t.first && c[s.first] == c[t.first]) return false;
            }
          }
          std::vector<int32_t> used(c.begin(), c.end());
          std::sort(used.begin(), used.end());
          used.erase(std::unique(used.begin(), used.end()), used.end());
          return sectorise::Holds(static_cast<int64_t>(used.size()), op, k);
        },
        before);
    auto dump = [](const sectorise::DomainStore& s) {
      json d = json::array();
      for (int i = 0; i < s.size(); ++i) d.push_back(s.Values(i));
      return json{{"failed", s.failed()}, {"domains", d}, {"counter", s.counter()}};
    };
    const json j = {{"propagated", dump(store)},
                    {"brute_force", dump(oracle)},
                    {"agree", store == oracle},
                    {"pruned", res.pruned.size()}};
    *out = Dup(j.dump(2) + "\n");
  });
}

sect_status sect_probe_bench(const int32_t* grids, size_t num_grids,
                             int32_t probes, uint64_t seed, char** out) {
  return Guard([&] {
    Require(out != nullptr && (grids != nullptr || num_grids == 0),
            "null argument");
    sectorise::ProbeBenchOptions opt;
    if (num_grids > 0) {
      opt.grids.clear();
      for (size_t i = 0; i < num_grids; ++i) {
        opt.grids.push_back({grids[2 * i], grids[2 * i + 1]});
      }
    }
    if (probes > 0) opt.probes = probes;
    opt.seed = seed;
    json rows = json::array();
    for (const sectorise::ProbeBenchRow& r : sectorise::ProbeBench(opt)) {
      rows.push_back({{"vertices", r.vertices},
                      {"constraint", r.constraint},
                      {"mean_ns", r.mean_ns},
                      {"mean_degree", r.mean_degree}});
    }
    *out = Dup(rows.dump(2) + "\n");
  });
}

}  // extern "C"
