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

#include "sectorise/instance_io.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sectorise/non_border.h"
#include "sectorise/stretch_sum.h"

namespace sectorise {
namespace {

constexpr int kMaxColoursInFile = 31;

using json = nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

void CheckKeys(const json& o, const std::set<std::string>& allowed,
               const std::string& path) {
  if (!o.is_object()) Fail(path, "expected an object");
  for (const auto& [key, unused] : o.items()) {
    if (!allowed.count(key)) Fail(path + "." + key, "unknown field");
  }
}

const json& Field(const json& o, const std::string& key,
                  const std::string& path) {
  const auto it = o.find(key);
  if (it == o.end()) Fail(path + "." + key, "missing");
  return *it;
}

int64_t AsInt(const json& v, const std::string& path) {
  if (!v.is_number_integer()) Fail(path, "expected an integer");
  return v.get<int64_t>();
}

bool AsBool(const json& v, const std::string& path) {
  if (!v.is_boolean()) Fail(path, "expected true or false");
  return v.get<bool>();
}

std::string AsString(const json& v, const std::string& path) {
  if (!v.is_string()) Fail(path, "expected a string");
  return v.get<std::string>();
}

std::vector<int64_t> AsIntArray(const json& v, const std::string& path) {
  if (!v.is_array()) Fail(path, "expected an array");
  std::vector<int64_t> out;
  for (size_t i = 0; i < v.size(); ++i) {
    out.push_back(AsInt(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

int64_t IntOr(const json& o, const std::string& key, int64_t fallback,
              const std::string& path) {
  const auto it = o.find(key);
  return it == o.end() ? fallback : AsInt(*it, path + "." + key);
}

bool BoolOr(const json& o, const std::string& key, bool fallback,
            const std::string& path) {
  const auto it = o.find(key);
  return it == o.end() ? fallback : AsBool(*it, path + "." + key);
}

std::string StringOr(const json& o, const std::string& key,
                     const std::string& fallback, const std::string& path) {
  const auto it = o.find(key);
  return it == o.end() ? fallback : AsString(*it, path + "." + key);
}

RelOp RelOpField(const json& o, const std::string& path) {
  const std::string text = AsString(Field(o, "relop", path), path + ".relop");
  try {
    return ParseRelOp(text);
  } catch (const InputError& e) {
    Fail(path + ".relop", e.what());
  }
}

// Enumerations as text.
const char* ModeName(ConnectedMode m) {
  return m == ConnectedMode::kExact ? "exact" : "paper-fast";
}
ConnectedMode ParseConnectedMode(const std::string& s, const std::string& path) {
  if (s == "exact") return ConnectedMode::kExact;
  if (s == "paper-fast") return ConnectedMode::kPaperFast;
  Fail(path, "expected exact or paper-fast, got '" + s + "'");
}
const char* CompactModeName(CompactMode m) {
  return m == CompactMode::kSphericity ? "sphericity" : "border_total";
}
CompactMode ParseCompactMode(const std::string& s, const std::string& path) {
  if (s == "sphericity" || s == "A") return CompactMode::kSphericity;
  if (s == "border_total" || s == "B") return CompactMode::kBorderTotal;
  Fail(path, "expected sphericity or border_total, got '" + s + "'");
}
const char* WeightName(WeightFn w) {
  return w == WeightFn::kIdentity ? "identity" : "square";
}
WeightFn ParseWeight(const std::string& s, const std::string& path) {
  if (s == "identity") return WeightFn::kIdentity;
  if (s == "square") return WeightFn::kSquare;
  Fail(path, "expected identity or square, got '" + s + "'");
}
const char* NeighbourhoodName(NeighbourhoodKind k) {
  return k == NeighbourhoodKind::kBorder ? "border" : "full";
}
NeighbourhoodKind ParseNeighbourhood(const std::string& s,
                                     const std::string& path) {
  if (s == "border") return NeighbourhoodKind::kBorder;
  if (s == "full") return NeighbourhoodKind::kFull;
  Fail(path, "expected border or full, got '" + s + "'");
}
const char* InitName(InitKind k) {
  switch (k) {
    case InitKind::kKeep:
      return "keep";
    case InitKind::kRandom:
      return "random";
    case InitKind::kRegionGrowing:
      return "region_growing";
  }
  return "";
}
InitKind ParseInit(const std::string& s, const std::string& path) {
  if (s == "keep") return InitKind::kKeep;
  if (s == "random") return InitKind::kRandom;
  if (s == "region_growing") return InitKind::kRegionGrowing;
  Fail(path, "expected keep, random or region_growing, got '" + s + "'");
}

const std::set<std::string> kKinds = {"connected", "compact", "stretch_sum",
                                      "balanced", "balanced_size", "bounded",
                                      "non_border"};

std::shared_ptr<const Geometry> ParseGeometry(const json& o,
                                              const std::string& path) {
  if (o.contains("grid")) {
    CheckKeys(o, {"grid"}, path);
    const std::string p = path + ".grid";
    const json& gj = o["grid"];
    CheckKeys(gj, {"w", "h", "d", "dim", "cell_area", "cell_volume"}, p);
    const int64_t dim = IntOr(gj, "dim", 3, p);
    try {
      return std::make_shared<const Geometry>(Geometry::Grid(
          static_cast<int>(AsInt(Field(gj, "w", p), p + ".w")),
          static_cast<int>(AsInt(Field(gj, "h", p), p + ".h")),
          static_cast<int>(IntOr(gj, "d", 1, p)), IntOr(gj, "cell_area", 1, p),
          IntOr(gj, "cell_volume", 1, p), static_cast<int>(dim)));
    } catch (const InputError& e) {
      Fail(p, e.what());
    }
  }
  CheckKeys(o, {"dim", "volumes", "facets"}, path);
  const int64_t dim = AsInt(Field(o, "dim", path), path + ".dim");
  std::vector<int64_t> volumes =
      AsIntArray(Field(o, "volumes", path), path + ".volumes");
  const json& fj = Field(o, "facets", path);
  if (!fj.is_array()) Fail(path + ".facets", "expected an array");
  std::vector<FacetSpec> facets;
  for (size_t i = 0; i < fj.size(); ++i) {
    const std::string p = path + ".facets[" + std::to_string(i) + "]";
    const std::vector<int64_t> f = AsIntArray(fj[i], p);
    if (f.size() != 2 && f.size() != 3) {
      Fail(p, "expected [area, first] or [area, first, second]");
    }
    facets.push_back({f[0], static_cast<Vertex>(f[1]),
                      f.size() == 3 ? static_cast<Vertex>(f[2]) : kBottom});
  }
  try {
    return std::make_shared<const Geometry>(static_cast<int>(dim),
                                            std::move(volumes),
                                            std::move(facets));
  } catch (const InputError& e) {
    Fail(path, e.what());
  }
}

json GeometryJson(const Geometry& g) {
  if (const auto& spec = g.grid_spec()) {
    return {{"grid",
             {{"w", spec->w},
              {"h", spec->h},
              {"d", spec->d},
              {"dim", g.dim()},
              {"cell_area", spec->cell_area},
              {"cell_volume", spec->cell_volume}}}};
  }
  json volumes = json::array();
  for (Vertex v = 0; v < g.num_vertices(); ++v) volumes.push_back(g.volume(v));
  json facets = json::array();
  for (Facet f = 0; f < g.num_facets(); ++f) {
    const FacetSpec& s = g.facet(f);
    if (s.second == kBottom) {
      facets.push_back({s.area, s.first});
    } else {
      facets.push_back({s.area, s.first, s.second});
    }
  }
  return {{"dim", g.dim()}, {"volumes", volumes}, {"facets", facets}};
}

ConstraintConfig ParseConstraint(const json& o, const std::string& path) {
  ConstraintConfig c;
  c.kind = AsString(Field(o, "kind", path), path + ".kind");
  if (!kKinds.count(c.kind)) Fail(path + ".kind", "unknown kind '" + c.kind + "'");
  c.id = AsString(Field(o, "id", path), path + ".id");
  c.weight = IntOr(o, "weight", 1, path);
  if (c.weight <= 0) Fail(path + ".weight", "must be positive");
  const std::set<std::string> common = {"id", "kind", "weight"};
  auto allow = [&](std::set<std::string> extra) {
    extra.insert(common.begin(), common.end());
    CheckKeys(o, extra, path);
  };
  auto path_or_flight = [&](bool with_values) {
    if (o.contains("flight")) {
      c.flight = AsString(o["flight"], path + ".flight");
      if (o.contains("path")) Fail(path + ".path", "give either flight or path");
    } else {
      for (const int64_t v : AsIntArray(Field(o, "path", path), path + ".path")) {
        c.path.push_back(static_cast<Vertex>(v));
      }
      if (with_values) {
        c.values = AsIntArray(Field(o, "values", path), path + ".values");
        if (c.values.size() != c.path.size()) {
          Fail(path + ".values", "needs one value per path vertex");
        }
      }
    }
  };
  if (c.kind == "connected") {
    allow({"relop", "n", "mode", "searchable", "n_min", "n_max"});
    c.op = RelOpField(o, path);
    c.t = AsInt(Field(o, "n", path), path + ".n");
    c.connected_mode =
        ParseConnectedMode(StringOr(o, "mode", "exact", path), path + ".mode");
    c.searchable = BoolOr(o, "searchable", false, path);
    c.n_min = IntOr(o, "n_min", c.t, path);
    c.n_max = IntOr(o, "n_max", c.t, path);
    if (c.n_min > c.t || c.t > c.n_max) {
      Fail(path + ".n", "must lie within [n_min, n_max]");
    }
  } else if (c.kind == "compact") {
    allow({"mode", "t", "weight_fn", "exact_probe"});
    c.compact_mode = ParseCompactMode(
        StringOr(o, "mode", "border_total", path), path + ".mode");
    c.t = AsInt(Field(o, "t", path), path + ".t");
    c.weight_fn =
        ParseWeight(StringOr(o, "weight_fn", "identity", path), path + ".weight_fn");
    c.exact_probe = BoolOr(o, "exact_probe", false, path);
  } else if (c.kind == "stretch_sum") {
    allow({"relop", "t", "flight", "path", "values"});
    c.op = RelOpField(o, path);
    c.t = IntOr(o, "t", 120, path);
    path_or_flight(true);
  } else if (c.kind == "balanced" || c.kind == "balanced_size") {
    allow({"delta_scaled", "mu"});
    c.delta_scaled = AsInt(Field(o, "delta_scaled", path), path + ".delta_scaled");
    if (c.delta_scaled < 0) Fail(path + ".delta_scaled", "must be non-negative");
    if (o.contains("mu")) {
      const std::vector<int64_t> mu = AsIntArray(o["mu"], path + ".mu");
      if (mu.size() != 2 || mu[1] <= 0) {
        Fail(path + ".mu", "expected [numerator, positive denominator]");
      }
      c.mu = Rational{mu[0], mu[1]};
    }
  } else if (c.kind == "bounded") {
    allow({"relop", "t"});
    c.op = RelOpField(o, path);
    c.t = AsInt(Field(o, "t", path), path + ".t");
  } else if (c.kind == "non_border") {
    allow({"flight", "path"});
    path_or_flight(false);
  }
  return c;
}

json ConstraintJson(const ConstraintConfig& c) {
  json o = {{"id", c.id}, {"kind", c.kind}, {"weight", c.weight}};
  auto put_path = [&](bool with_values) {
    if (!c.flight.empty()) {
      o["flight"] = c.flight;
    } else {
      o["path"] = c.path;
      if (with_values) o["values"] = c.values;
    }
  };
  if (c.kind == "connected") {
    o["relop"] = RelOpName(c.op);
    o["n"] = c.t;
    o["mode"] = ModeName(c.connected_mode);
    o["searchable"] = c.searchable;
    o["n_min"] = c.n_min;
    o["n_max"] = c.n_max;
  } else if (c.kind == "compact") {
    o["mode"] = CompactModeName(c.compact_mode);
    o["t"] = c.t;
    o["weight_fn"] = WeightName(c.weight_fn);
    o["exact_probe"] = c.exact_probe;
  } else if (c.kind == "stretch_sum") {
    o["relop"] = RelOpName(c.op);
    o["t"] = c.t;
    put_path(true);
  } else if (c.kind == "balanced" || c.kind == "balanced_size") {
    o["delta_scaled"] = c.delta_scaled;
    if (c.mu) o["mu"] = {c.mu->num, c.mu->den};
  } else if (c.kind == "bounded") {
    o["relop"] = RelOpName(c.op);
    o["t"] = c.t;
  } else if (c.kind == "non_border") {
    put_path(false);
  }
  return o;
}

SearchConfig ParseSearch(const json& o, const std::string& path) {
  CheckKeys(o, {"max_iterations", "seed", "tabu_tenure", "restart_after",
                "neighbourhood", "swap_moves", "init", "hard", "trace_every"},
            path);
  SearchConfig s;
  s.max_iterations = IntOr(o, "max_iterations", s.max_iterations, path);
  if (o.contains("seed")) {
    if (!o["seed"].is_number_unsigned()) Fail(path + ".seed", "expected a non-negative integer");
    s.seed = o["seed"].get<uint64_t>();
  }
  s.tabu_tenure = static_cast<int>(IntOr(o, "tabu_tenure", s.tabu_tenure, path));
  s.restart_after = IntOr(o, "restart_after", s.restart_after, path);
  s.neighbourhood = ParseNeighbourhood(
      StringOr(o, "neighbourhood", "border", path), path + ".neighbourhood");
  s.swap_moves = BoolOr(o, "swap_moves", false, path);
  s.init = ParseInit(StringOr(o, "init", "region_growing", path), path + ".init");
  if (o.contains("hard")) {
    const json& h = o["hard"];
    if (!h.is_array()) Fail(path + ".hard", "expected an array");
    for (size_t i = 0; i < h.size(); ++i) {
      s.hard.push_back(AsString(h[i], path + ".hard[" + std::to_string(i) + "]"));
    }
  }
  s.trace_every = IntOr(o, "trace_every", s.trace_every, path);
  if (s.max_iterations < 0 || s.tabu_tenure < 0 || s.restart_after < 0 ||
      s.trace_every < 0) {
    Fail(path, "counts must be non-negative");
  }
  return s;
}

json SearchJson(const SearchConfig& s) {
  return {{"max_iterations", s.max_iterations},
          {"seed", s.seed},
          {"tabu_tenure", s.tabu_tenure},
          {"restart_after", s.restart_after},
          {"neighbourhood", NeighbourhoodName(s.neighbourhood)},
          {"swap_moves", s.swap_moves},
          {"init", InitName(s.init)},
          {"hard", s.hard},
          {"trace_every", s.trace_every}};
}

void ValidateInstance(const Instance& inst) {
  const Geometry& g = *inst.geometry;
  if (inst.num_colours < 1 || inst.num_colours > kMaxColoursInFile) {
    Fail("colours", "must be in 1.." + std::to_string(kMaxColoursInFile));
  }
  if (static_cast<int>(inst.workloads.size()) != g.num_vertices()) {
    Fail("workloads", "expected " + std::to_string(g.num_vertices()) +
                          " entries, got " +
                          std::to_string(inst.workloads.size()));
  }
  std::set<std::string> flight_ids;
  for (size_t i = 0; i < inst.flights.size(); ++i) {
    const FlightPlan& f = inst.flights[i];
    const std::string p = "flights[" + std::to_string(i) + "]";
    if (!flight_ids.insert(f.id).second) Fail(p + ".id", "duplicate flight id");
    if (const auto err = Validate(f, g)) {
      Fail(p + ".legs[" + std::to_string(err->leg) + "]", err->message);
    }
  }
  std::set<std::string> ids;
  for (size_t i = 0; i < inst.constraints.size(); ++i) {
    const ConstraintConfig& c = inst.constraints[i];
    const std::string p = "constraints[" + std::to_string(i) + "]";
    if (!ids.insert(c.id).second) Fail(p + ".id", "duplicate constraint id");
    if (!c.flight.empty() && !flight_ids.count(c.flight)) {
      Fail(p + ".flight", "unknown flight '" + c.flight + "'");
    }
    for (const Vertex v : c.path) {
      if (v < 0 || v >= g.num_vertices()) Fail(p + ".path", "unknown vertex");
    }
  }
}

}  // namespace

int64_t Instance::TotalWorkload() const {
  int64_t total = 0;
  for (const int64_t w : workloads) total += w;
  return total;
}

const FlightPlan& Instance::Flight(const std::string& id) const {
  for (const FlightPlan& f : flights) {
    if (f.id == id) return f;
  }
  throw InputError("unknown flight '" + id + "'");
}

Instance ParseInstance(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance: ") + e.what());
  }
  CheckKeys(root, {"geometry", "colours", "workloads", "flights",
                   "constraints", "search"},
            "instance");
  Instance inst;
  inst.geometry = ParseGeometry(Field(root, "geometry", "instance"), "geometry");
  inst.num_colours =
      static_cast<int>(AsInt(Field(root, "colours", "instance"), "colours"));
  inst.workloads = AsIntArray(Field(root, "workloads", "instance"), "workloads");
  if (root.contains("flights")) {
    const json& fj = root["flights"];
    if (!fj.is_array()) Fail("flights", "expected an array");
    for (size_t i = 0; i < fj.size(); ++i) {
      const std::string p = "flights[" + std::to_string(i) + "]";
      CheckKeys(fj[i], {"id", "legs"}, p);
      FlightPlan f;
      f.id = AsString(Field(fj[i], "id", p), p + ".id");
      const json& legs = Field(fj[i], "legs", p);
      if (!legs.is_array()) Fail(p + ".legs", "expected an array");
      for (size_t k = 0; k < legs.size(); ++k) {
        const std::string lp = p + ".legs[" + std::to_string(k) + "]";
        const std::vector<int64_t> leg = AsIntArray(legs[k], lp);
        if (leg.size() != 3) Fail(lp, "expected [region, entry, exit]");
        f.legs.push_back({static_cast<Vertex>(leg[0]), leg[1], leg[2]});
      }
      inst.flights.push_back(std::move(f));
    }
  }
  if (root.contains("constraints")) {
    const json& cj = root["constraints"];
    if (!cj.is_array()) Fail("constraints", "expected an array");
    for (size_t i = 0; i < cj.size(); ++i) {
      inst.constraints.push_back(
          ParseConstraint(cj[i], "constraints[" + std::to_string(i) + "]"));
    }
  }
  if (root.contains("search")) inst.search = ParseSearch(root["search"], "search");
  ValidateInstance(inst);
  return inst;
}

std::string SerializeInstance(const Instance& inst) {
  json flights = json::array();
  for (const FlightPlan& f : inst.flights) {
    json legs = json::array();
    for (const Leg& l : f.legs) legs.push_back({l.region, l.entry, l.exit});
    flights.push_back({{"id", f.id}, {"legs", legs}});
  }
  json constraints = json::array();
  for (const ConstraintConfig& c : inst.constraints) {
    constraints.push_back(ConstraintJson(c));
  }
  const json root = {{"geometry", GeometryJson(*inst.geometry)},
                     {"colours", inst.num_colours},
                     {"workloads", inst.workloads},
                     {"flights", flights},
                     {"constraints", constraints},
                     {"search", SearchJson(inst.search)}};
  return root.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << text;
  if (!out) throw std::ios_base::failure("failed writing " + path);
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

void SaveInstance(const Instance& inst, const std::string& path) {
  WriteFile(path, SerializeInstance(inst));
}

Solution ParseSolution(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("solution: ") + e.what());
  }
  CheckKeys(root, {"n", "colours", "counters"}, "solution");
  Solution sol;
  sol.num_colours = static_cast<int>(AsInt(Field(root, "n", "solution"), "n"));
  if (sol.num_colours < 1 || sol.num_colours > kMaxColoursInFile) {
    Fail("n", "expected 1.." + std::to_string(kMaxColoursInFile));
  }
  const auto colours = AsIntArray(Field(root, "colours", "solution"), "colours");
  for (size_t i = 0; i < colours.size(); ++i) {
    if (colours[i] < 1 || colours[i] > sol.num_colours) {
      Fail("colours[" + std::to_string(i) + "]",
           "expected 1.." + std::to_string(sol.num_colours));
    }
    sol.colours.push_back(static_cast<Colour>(colours[i]));
  }
  if (root.contains("counters")) {
    const json& cj = root["counters"];
    if (!cj.is_object()) Fail("counters", "expected an object");
    for (const auto& [key, value] : cj.items()) {
      sol.counters[key] = AsInt(value, "counters." + key);
    }
  }
  return sol;
}

std::string SerializeSolution(const Solution& sol) {
  const json root = {{"n", sol.num_colours},
                     {"colours", sol.colours},
                     {"counters", json(sol.counters)}};
  return root.dump(2) + "\n";
}

Solution LoadSolution(const std::string& path) {
  return ParseSolution(ReadFile(path));
}

void SaveSolution(const Solution& sol, const std::string& path) {
  WriteFile(path, SerializeSolution(sol));
}

int64_t ScaledDelta(int64_t total, int n, int64_t percent) {
  return static_cast<int64_t>(n) * (total * percent / 100);
}

Instance Generate(const GenerateOptions& opt) {
  if (opt.dwell_min < 1 || opt.dwell_min > opt.dwell_max) {
    throw InputError("dwell range must satisfy 1 <= min <= max");
  }
  if (opt.workload_min > opt.workload_max) {
    throw InputError("workload range is empty");
  }
  std::mt19937_64 rng(opt.seed);
  Instance inst;
  inst.geometry = std::make_shared<const Geometry>(
      Geometry::Grid(opt.w, opt.h, opt.d, 1, 1, opt.dim));
  const Geometry& g = *inst.geometry;
  inst.num_colours = opt.num_colours;
  std::uniform_int_distribution<int64_t> workload(opt.workload_min,
                                                  opt.workload_max);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    inst.workloads.push_back(workload(rng));
  }
  const int size[3] = {opt.w, opt.h, opt.d};
  const int axes = opt.dim == 2 ? 2 : 3;
  std::uniform_int_distribution<int64_t> dwell(opt.dwell_min, opt.dwell_max);
  auto make_flight = [&](const std::string& id) {
    FlightPlan f{id, {}};
    int at[3] = {0, 0, 0};
    const int face = std::uniform_int_distribution<int>(0, axes - 1)(rng);
    for (int a = 0; a < axes; ++a) {
      at[a] = a == face ? 0
                        : std::uniform_int_distribution<int>(0, size[a] - 1)(rng);
    }
    int64_t clock = 0;
    for (;;) {
      const int64_t stay = dwell(rng);
      f.legs.push_back(
          {at[0] + opt.w * (at[1] + opt.h * at[2]), clock, clock + stay});
      clock += stay;
      const int a = std::uniform_int_distribution<int>(0, axes - 1)(rng);
      if (++at[a] == size[a]) break;
    }
    return f;
  };
  for (int k = 0; k < opt.num_flights; ++k) {
    const std::string id = "f" + std::to_string(k);
    FlightPlan f = make_flight(id);
    // A path too short to hold one adequate stretch can never be satisfied.
    for (int tries = 0; opt.default_constraints && tries < 1000; ++tries) {
      int64_t total = 0;
      for (const int64_t x : DwellValues(f)) total += x;
      if (total >= opt.stretch_t) break;
      f = make_flight(id);
    }
    inst.flights.push_back(std::move(f));
  }
  if (opt.default_constraints) {
    ConstraintConfig conn;
    conn.id = "connected";
    conn.kind = "connected";
    conn.op = RelOp::kEq;
    conn.t = conn.n_min = conn.n_max = opt.num_colours;
    inst.constraints.push_back(conn);
    ConstraintConfig bal;
    bal.id = "balanced";
    bal.kind = "balanced";
    bal.delta_scaled =
        ScaledDelta(inst.TotalWorkload(), opt.num_colours, opt.balance_percent);
    inst.constraints.push_back(bal);
    for (const FlightPlan& f : inst.flights) {
      ConstraintConfig ss;
      ss.id = "stretch_" + f.id;
      ss.kind = "stretch_sum";
      ss.op = RelOp::kGe;
      ss.t = opt.stretch_t;
      ss.flight = f.id;
      inst.constraints.push_back(ss);
    }
  }
  inst.search.seed = opt.seed;
  ValidateInstance(inst);
  return inst;
}

std::unique_ptr<Model> BuildModel(const Instance& inst, const BuildOptions& opt) {
  for (const auto& [id, w] : opt.weights) {
    const bool known = std::any_of(
        inst.constraints.begin(), inst.constraints.end(),
        [&](const ConstraintConfig& c) { return c.id == id; });
    if (!known) throw InputError("weights: no constraint with id '" + id + "'");
    if (w < 1) throw InputError("weights." + id + ": expected a positive weight");
  }
  auto model = std::make_unique<Model>(ColourState(inst.geometry, inst.num_colours));
  ColourState& s = model->state();
  for (const ConstraintConfig& c : inst.constraints) {
    int64_t weight = c.weight;
    if (const auto it = opt.weights.find(c.id); it != opt.weights.end()) {
      weight = it->second;
    }
    auto path_of = [&]() {
      if (!c.flight.empty()) return VisitedPath(inst.Flight(c.flight));
      return OrderedPath(c.path, inst.geometry.get());
    };
    auto values_of = [&]() {
      if (!c.flight.empty()) return DwellValues(inst.Flight(c.flight));
      return c.values;
    };
    if (c.kind == "connected") {
      auto& cc = model->Emplace<ConnectedConstraint>(
          c.id, weight, c.op, c.t, opt.connected_mode.value_or(c.connected_mode));
      model->AddCounter(c.id, cc, c.n_min, c.n_max, c.searchable);
    } else if (c.kind == "compact") {
      model->Emplace<CompactConstraint>(c.id, weight, c.compact_mode, c.t,
                                        c.weight_fn, c.exact_probe);
    } else if (c.kind == "stretch_sum") {
      model->Emplace<StretchSumConstraint>(c.id, weight, path_of(), values_of(),
                                           c.op, c.t);
    } else if (c.kind == "balanced") {
      model->Emplace<BalancedConstraint>(c.id, weight, inst.workloads,
                                         c.delta_scaled, c.mu);
    } else if (c.kind == "balanced_size") {
      model->AddConstraint(c.id,
                           std::make_unique<BalancedConstraint>(
                               BalancedConstraint::OverVolumes(s, c.delta_scaled)),
                           weight);
    } else if (c.kind == "bounded") {
      model->Emplace<BoundedConstraint>(c.id, weight, inst.workloads, c.op, c.t);
    } else if (c.kind == "non_border") {
      model->Emplace<NonBorderConstraint>(c.id, weight, path_of());
    } else {
      throw InputError("unknown constraint kind '" + c.kind + "'");
    }
  }
  return model;
}

bool CheckReport::satisfied() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) {
    return e.holds && e.violation == 0.0;
  });
}

CheckReport CheckSolution(const Instance& inst, const Solution& sol) {
  const int nv = inst.geometry->num_vertices();
  if (sol.num_colours != inst.num_colours) {
    Fail("solution.n", "expected " + std::to_string(inst.num_colours) +
                           " colours, got " + std::to_string(sol.num_colours));
  }
  if (static_cast<int>(sol.colours.size()) != nv) {
    Fail("solution.colours", "expected " + std::to_string(nv) + " entries");
  }
  for (const Colour c : sol.colours) {
    if (c < 1 || c > sol.num_colours) Fail("solution.colours", "colour out of range");
  }
  std::unique_ptr<Model> model = BuildModel(inst);
  model->SetColours(sol.colours);
  for (const auto& [id, value] : sol.counters) {
    int index = -1;
    for (int i = 0; i < model->num_counters(); ++i) {
      if (model->counter(i).id == id) index = i;
    }
    if (index < 0) Fail("solution.counters." + id, "unknown counter");
    const CounterVar& cv = model->counter(index);
    if (value < cv.lo || value > cv.hi) {
      Fail("solution.counters." + id, "outside the counter domain");
    }
    model->SetCounter(index, value);
  }
  CheckReport report;
  for (int i = 0; i < model->num_constraints(); ++i) {
    const Constraint& c = model->constraint(i);
    const double v = c.ScratchViolation();
    report.entries.push_back(
        {model->constraint_id(i), inst.constraints[i].kind, v, c.Check()});
    report.total += static_cast<double>(model->weight(i)) * v;
  }
  return report;
}

}  // namespace sectorise
