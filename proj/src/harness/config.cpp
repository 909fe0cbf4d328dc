#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tcdyn/errors.hpp"
#include "tcdyn/harness.hpp"

namespace tcdyn::harness {

using nlohmann::json;

namespace {

constexpr std::pair<Scenario, const char*> kScenarios[] = {
    {Scenario::Spectrum, "Spectrum"},         {Scenario::EvolveNumber, "EvolveNumber"},
    {Scenario::EvolveCoherent, "EvolveCoherent"}, {Scenario::Revivals, "Revivals"},
    {Scenario::Concurrence, "Concurrence"},   {Scenario::KQubit, "KQubit"},
    {Scenario::Validity, "Validity"},         {Scenario::Compare, "Compare"},
};

constexpr std::pair<Engine, const char*> kEngines[] = {
    {Engine::Exact, "Exact"}, {Engine::Adiabatic, "Adiabatic"}, {Engine::Analytic, "Analytic"}, {Engine::RWA, "RWA"}};

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items())
    if (!ok.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <class T>
T get(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

template <class T>
T get_or(const json& obj, const char* key, T fallback, const std::string& where) {
  return obj.contains(key) ? get<T>(obj, key, where) : fallback;
}

Range parse_range(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw ConfigError(where + " must be [lo, hi, count]");
  Range r;
  try {
    r.lo = j[0].get<double>();
    r.hi = j[1].get<double>();
    r.count = j[2].get<std::size_t>();
  } catch (const json::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
  if (r.count < 1 || (r.count > 1 && !(r.hi > r.lo))) throw ConfigError(where + " needs count >= 1 and hi > lo");
  return r;
}

std::vector<Engine> default_engines(Scenario s) {
  switch (s) {
    case Scenario::Spectrum: return {Engine::Exact, Engine::Adiabatic, Engine::Analytic};
    case Scenario::EvolveNumber: return {Engine::Exact, Engine::Adiabatic};
    case Scenario::EvolveCoherent:
    case Scenario::Compare: return {Engine::Exact, Engine::Analytic, Engine::RWA};
    case Scenario::Concurrence: return {Engine::Exact, Engine::Analytic};
    case Scenario::KQubit: return {Engine::Exact, Engine::Adiabatic};
    case Scenario::Revivals: return {Engine::Adiabatic, Engine::Analytic};
    case Scenario::Validity: return {Engine::Analytic};
  }
  return {Engine::Exact};
}

}  // namespace

const char* to_string(Scenario s) {
  for (const auto& [k, v] : kScenarios)
    if (k == s) return v;
  return "?";
}

const char* to_string(Engine e) {
  for (const auto& [k, v] : kEngines)
    if (k == e) return v;
  return "?";
}

Scenario parse_scenario(const std::string& s) {
  for (const auto& [k, v] : kScenarios)
    if (s == v) return k;
  throw ConfigError("unknown scenario '" + s + "'");
}

Engine parse_engine(const std::string& s) {
  for (const auto& [k, v] : kEngines)
    if (s == v) return k;
  throw ConfigError("unknown engine '" + s + "'");
}

std::vector<Engine> parse_engines(const std::string& list) {
  std::vector<Engine> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const Engine e = parse_engine(item);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  if (out.empty()) throw ConfigError("engine list is empty");
  return out;
}

std::vector<double> Range::values() const {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return v;
}

ScenarioConfig ScenarioConfig::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(doc,
                 {"scenario", "params", "alpha", "n", "m", "grid", "engines", "n_max", "k_max", "betas",
                  "validity_grid", "output"},
                 "config");

  ScenarioConfig cfg;
  if (!doc.contains("scenario")) throw ConfigError("config.scenario is required");
  cfg.scenario = parse_scenario(get<std::string>(doc, "scenario", "config"));

  if (!doc.contains("params")) throw ConfigError("config.params is required");
  const json& p = doc["params"];
  reject_unknown(p, {"omega", "omega0", "beta", "n_qubits", "bias"}, "params");
  try {
    cfg.params = ModelParams(get<double>(p, "omega0", "params"), get<double>(p, "beta", "params"),
                             get_or<int>(p, "n_qubits", 2, "params"), get_or<double>(p, "omega", 1.0, "params"),
                             get_or<double>(p, "bias", 0.0, "params"));
  } catch (const tcdyn::InvalidArgument& e) {
    throw ConfigError(std::string("params: ") + e.what());
  }

  cfg.alpha = get_or<double>(doc, "alpha", 0.0, "config");
  if (!(cfg.alpha >= 0.0)) throw ConfigError("config.alpha must be >= 0");
  cfg.n = get_or<int>(doc, "n", 0, "config");
  if (cfg.n < 0) throw ConfigError("config.n must be >= 0");
  const double m = get_or<double>(doc, "m", -1.0, "config");
  cfg.two_m = static_cast<int>(std::lround(2.0 * m));
  if (std::abs(2.0 * m - cfg.two_m) > 1e-12) throw ConfigError("config.m must be integer or half-integer");

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    reject_unknown(g, {"start", "stop", "samples", "scale"}, "grid");
    cfg.grid.start = get_or<double>(g, "start", 0.0, "grid");
    cfg.grid.stop = get<double>(g, "stop", "grid");
    cfg.grid.samples = get<std::size_t>(g, "samples", "grid");
    const std::string scale = get_or<std::string>(g, "scale", "raw", "grid");
    if (scale == "raw") cfg.grid.scale = TimeScale::Raw;
    else if (scale == "tau") cfg.grid.scale = TimeScale::Tau;
    else throw ConfigError("grid.scale must be 'raw' or 'tau'");
    if (cfg.grid.samples < 2) throw ConfigError("grid.samples must be >= 2");
    if (!(cfg.grid.stop > cfg.grid.start)) throw ConfigError("grid.stop must exceed grid.start");
  }

  if (doc.contains("engines")) {
    const json& e = doc["engines"];
    if (!e.is_array() || e.empty()) throw ConfigError("config.engines must be a non-empty array");
    for (const auto& item : e) {
      if (!item.is_string()) throw ConfigError("config.engines entries must be strings");
      const Engine eng = parse_engine(item.get<std::string>());
      if (std::find(cfg.engines.begin(), cfg.engines.end(), eng) == cfg.engines.end()) cfg.engines.push_back(eng);
    }
  } else {
    cfg.engines = default_engines(cfg.scenario);
  }

  if (doc.contains("n_max")) {
    cfg.n_max = get<int>(doc, "n_max", "config");
    if (*cfg.n_max < 1) throw ConfigError("config.n_max must be >= 1");
  }
  cfg.k_max = get_or<int>(doc, "k_max", -1, "config");
  if (doc.contains("betas")) cfg.betas = get<std::vector<double>>(doc, "betas", "config");

  if (doc.contains("validity_grid")) {
    const json& v = doc["validity_grid"];
    reject_unknown(v, {"beta", "omega0", "alpha"}, "validity_grid");
    ValidityGridSpec spec;
    if (v.contains("beta")) spec.beta = parse_range(v["beta"], "validity_grid.beta");
    if (v.contains("omega0")) spec.omega0 = parse_range(v["omega0"], "validity_grid.omega0");
    if (v.contains("alpha")) spec.alpha = parse_range(v["alpha"], "validity_grid.alpha");
    cfg.validity_grid = spec;
  }

  if (doc.contains("output")) {
    const json& o = doc["output"];
    reject_unknown(o, {"stem", "format"}, "output");
    cfg.stem = get_or<std::string>(o, "stem", cfg.stem, "output");
    const std::string fmt = get_or<std::string>(o, "format", "csv", "output");
    if (fmt == "csv") cfg.format = Format::Csv;
    else if (fmt == "json") cfg.format = Format::Json;
    else throw ConfigError("output.format must be 'csv' or 'json'");
    if (cfg.stem.empty() || cfg.stem.find('/') != std::string::npos)
      throw ConfigError("output.stem must be a plain file name");
  }

  const bool needs_grid = cfg.scenario == Scenario::EvolveNumber || cfg.scenario == Scenario::EvolveCoherent ||
                          cfg.scenario == Scenario::Concurrence || cfg.scenario == Scenario::KQubit ||
                          cfg.scenario == Scenario::Compare || cfg.scenario == Scenario::Revivals;
  if (needs_grid && !doc.contains("grid")) throw ConfigError(std::string(to_string(cfg.scenario)) + " needs a grid");
  const bool needs_alpha = cfg.scenario == Scenario::EvolveCoherent || cfg.scenario == Scenario::Revivals ||
                           cfg.scenario == Scenario::Concurrence || cfg.scenario == Scenario::KQubit ||
                           cfg.scenario == Scenario::Compare;
  if (needs_alpha && !doc.contains("alpha")) throw ConfigError(std::string(to_string(cfg.scenario)) + " needs alpha");
  if (cfg.scenario == Scenario::Compare && cfg.engines.size() < 2) throw ConfigError("Compare needs >= 2 engines");
  return cfg;
}

ScenarioConfig ScenarioConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace tcdyn::harness
