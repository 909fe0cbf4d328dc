#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcdyn/model.hpp"

namespace tcdyn::harness {

enum class Scenario { Spectrum, EvolveNumber, EvolveCoherent, Revivals, Concurrence, KQubit, Validity, Compare };
enum class Engine { Exact, Adiabatic, Analytic, RWA };
enum class TimeScale { Raw, Tau };
enum class Format { Csv, Json };

const char* to_string(Scenario s);
const char* to_string(Engine e);
Scenario parse_scenario(const std::string& s);
Engine parse_engine(const std::string& s);
/// Comma-separated engine list, e.g. "Exact,RWA". Throws ConfigError.
std::vector<Engine> parse_engines(const std::string& list);

/// Malformed or inconsistent configuration; the CLI exits with status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double start = 0.0;
  double stop = 100.0;
  std::size_t samples = 1001;
  TimeScale scale = TimeScale::Raw;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 1;
  std::vector<double> values() const;
};

struct ValidityGridSpec {
  Range beta{0.01, 0.3, 20};
  Range omega0{0.05, 1.2, 20};
  Range alpha{1.0, 10.0, 5};
};

struct ScenarioConfig {
  Scenario scenario = Scenario::EvolveCoherent;
  ModelParams params{0.15, 0.16, 2};
  double alpha = 0.0;
  int n = 0;                 // manifold / number state
  int two_m = -2;            // initial spin label for EvolveNumber, doubled
  GridSpec grid;
  std::vector<Engine> engines;
  std::optional<int> n_max;  // Fock truncation override
  int k_max = -1;            // revival terms, -1 = automatic
  std::vector<double> betas;  // Revivals sweep
  std::optional<ValidityGridSpec> validity_grid;
  std::string stem = "out";
  Format format = Format::Csv;

  /// Parses a JSON document; unknown keys and missing required fields throw ConfigError.
  static ScenarioConfig from_json(const std::string& text);
  static ScenarioConfig from_file(const std::filesystem::path& path);
};

enum class Region { Region1, Region2, Region3, None };
const char* to_string(Region r);

struct Predicate {
  double value = 0.0;
  double threshold = 0.0;
  bool ok = false;
  bool soft = false;  // reported as a warning unless strict
};

/// Validity predicates with their measured values.
///   Region1 (analytic collapse/revival): omega0 <= 0.25 omega, |alpha| >= 2, |beta| <= 0.2,
///           plus Omega_nbar/beta^2 >= 10 and |alpha beta| <= 0.3 when strict.
///   Region2 (adiabatic spectrum): omega0 <= 0.25 omega, |beta| <= 0.25.
///   Region3 (RWA): d = |omega0/omega - 1| <= 0.25 and |beta| <= 0.2 (1 - d/0.25).
/// `region` is the first of Region1, Region2, Region3 that holds.
struct ValidityReport {
  Predicate omega0_ratio;
  Predicate rabi_over_beta2;
  Predicate alpha_large;
  Predicate beta_bound;
  Predicate alphabeta_small;
  bool region1 = false;
  bool region2 = false;
  bool region3 = false;
  Region region = Region::None;
  std::vector<std::string> warnings;
};

ValidityReport classify_validity(const ModelParams& params, double alpha_abs, bool strict = false);

/// A named table of equal-length columns; text columns hold labels.
struct Table {
  std::string scenario;
  std::string name;  // engine or "combined"
  std::vector<std::string> columns;
  std::vector<std::vector<double>> numeric;  // parallel to columns; empty for text columns
  std::vector<std::vector<std::string>> text;

  void add(std::string column, std::vector<double> values);
  void add_text(std::string column, std::vector<std::string> values);
  std::size_t rows() const;
  const std::vector<double>& column(const std::string& name) const;
};

/// Shortest round-trip decimal form.
std::string format_number(double v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

struct Deviation {
  std::string a;
  std::string b;
  double max = 0.0;
  double rms = 0.0;
  std::vector<double> revival_window_max;  // k = 1.. within the horizon
  std::vector<double> revival_envelope_max;
};

/// Pairwise deviations of the column `value` over the shared grid of the
/// per-engine tables. Revival windows are t_k +- the plug-in width, envelopes
/// are running maxima over `carrier_window`.
std::vector<Deviation> compare_engines(const std::vector<Table>& tables, const std::string& value,
                                       const ModelParams& params, double alpha_abs, double carrier_window);

struct RunResult {
  std::vector<Table> tables;  // per engine, then combined / summary tables
  std::optional<ValidityReport> validity;
  std::vector<std::filesystem::path> written;
};

/// Evaluates the scenario without touching the filesystem.
RunResult evaluate(const ScenarioConfig& cfg);

struct RunOptions {
  std::filesystem::path out_dir = ".";
  bool strict = false;
  std::optional<std::vector<Engine>> engines;
  std::optional<Format> format;
};

/// Exit status of a run: 0 ok, 2 configuration error, 3 strict validity
/// violation, 4 numerical failure.
int run(const std::filesystem::path& config_path, const RunOptions& opts, std::string& message);

}  // namespace tcdyn::harness
