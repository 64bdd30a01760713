#pragma once

// Run configuration for the thinseq command line tool, read from YAML.
//
//   sequence: {kind: radial-factorial, q: 0.5, count: 15, points: [{gap: .., arg: ..}]}
//   inner:    [{kind: atomic-singular, mass: 1, arg: 0}, {kind: blaschke, zeros: [..]},
//              {kind: truncated-blaschke, sequence: {...}, cutoff: 10}]
//   window:   {n_min: 1, n_max: 10, cutoff: 0}      # cutoff 0 = last stored point
//   tolerances: {eigen: 1e-10, solve: 1e-12, tail: 1e-6}
//   grid:     {max_level: 40, angles: 256, refine: true}
//   seed: 0
//   jobs: 1
//   output:   {path: "", format: csv}
//   verify:   {suites: [T1, ...], corpus: [...], params: {...}}
//   interpolate: {first: 1, last: 2, targets: file.csv, method: min-norm, epsilon: 0.25,
//                 samples: [{gap: .., arg: ..}]}

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thinseq/carleson.hpp"
#include "thinseq/disk_geometry.hpp"
#include "thinseq/inner_functions.hpp"

namespace thinseq::app {

/// Bad configuration: names the offending field and, when known, its line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& problem, int line = -1);
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

struct SequenceConfig {
  GeneratorSpec spec;
  std::size_t count = 15;

  BlaschkeSequence build() const;
  friend bool operator==(const SequenceConfig&, const SequenceConfig&) = default;
};

enum class FactorKind { Blaschke, AtomicSingular, TruncatedBlaschke };

struct FactorConfig {
  FactorKind kind = FactorKind::AtomicSingular;
  double mass = 1.0;
  double arg = 0.0;
  std::vector<GapPoint> zeros;  // blaschke
  SequenceConfig sequence;      // truncated-blaschke
  std::size_t cutoff = 0;

  friend bool operator==(const FactorConfig&, const FactorConfig&) = default;
};

/// Empty list = no inner function (Hardy columns only).
std::optional<InnerFunction> build_inner(const std::vector<FactorConfig>& factors);

struct WindowPolicy {
  std::size_t n_min = 1;
  std::size_t n_max = 10;
  std::size_t cutoff = 0;
  friend bool operator==(const WindowPolicy&, const WindowPolicy&) = default;
};

struct Tolerances {
  double eigen = 1e-10;
  double solve = 1e-12;
  double tail = 1e-6;
  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

struct OutputConfig {
  std::string path;
  std::string format = "csv";
  friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

struct CorpusEntry {
  std::string name;
  SequenceConfig sequence;
  bool expect_thin = true;
  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

/// Suite thresholds; defaults are the acceptance values.
struct SuiteParams {
  std::size_t delta_index = 12;
  double delta_threshold = 0.999;
  std::size_t monotone_from = 1;
  double nonthin_delta_max = 0.9;
  std::size_t carleson_n = 10;
  double carleson_tol = 0.05;
  double nonthin_carleson_gap = 0.1;
  std::size_t nonthin_n_max = 20;
  double eis_threshold = 1.05;
  double duality_tol = 1e-10;
  double kappa_max = 1e-3;
  double ratio_tol = 0.05;
  std::vector<FactorConfig> theta{FactorConfig{}};
  double solver_residual = 0.25;
  std::size_t trials = 100;
  SequenceConfig solver_sequence{GeneratorSpec{GeneratorKind::RadialSuperexp, 0.5, {}}, 15};
  std::size_t solver_first = 3;
  std::size_t t6_triples = 1000;
  std::size_t beurling_first = 8;
  std::size_t beurling_size = 8;
  double beurling_slack = 0.01;
  std::size_t t8_matrices = 100;

  friend bool operator==(const SuiteParams&, const SuiteParams&) = default;
};

/// Default corpus: radial-factorial (15 points, thin) and radial-geometric(0.5)
/// (30 points, non-thin).
std::vector<CorpusEntry> default_corpus();

struct VerifyConfig {
  std::vector<std::string> suites{"T1", "T2", "T3", "T4", "T5", "T6", "T7"};
  std::vector<CorpusEntry> corpus = default_corpus();
  SuiteParams params;
  friend bool operator==(const VerifyConfig&, const VerifyConfig&) = default;
};

struct InterpolateConfig {
  std::size_t first = 1;
  std::size_t last = 0;          // 0 = window.cutoff rule
  std::string targets;           // path of (index, re, im) rows
  std::string method = "min-norm";  // min-norm | iterative | both
  double epsilon = 1.0 / 3.0;
  std::vector<GapPoint> samples;
  friend bool operator==(const InterpolateConfig&, const InterpolateConfig&) = default;
};

struct RunConfig {
  SequenceConfig sequence;
  std::vector<FactorConfig> inner;
  WindowPolicy window;
  Tolerances tolerances;
  GridSpec grid;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  OutputConfig output;
  VerifyConfig verify;
  InterpolateConfig interpolate;
  std::string base_dir;  // directory of the config file, for relative paths; not serialized

  /// Resolved cutoff M for a sequence with `stored` points.
  std::size_t cutoff_for(std::size_t stored) const;

  friend bool operator==(const RunConfig& a, const RunConfig& b);
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string to_yaml(const RunConfig& cfg);

}  // namespace thinseq::app
