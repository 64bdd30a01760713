#include "thinseq/app/config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "thinseq/earl.hpp"
#include "thinseq/errors.hpp"

namespace thinseq::app {

namespace {

std::string describe_problem(const std::string& field, const std::string& problem, int line) {
  std::ostringstream msg;
  if (line > 0) msg << "line " << line << ": ";
  msg << "field '" << field << "': " << problem;
  return msg.str();
}

int line_of(const YAML::Node& node) {
  const auto mark = node.Mark();
  return mark.line >= 0 ? mark.line + 1 : -1;
}

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void require_map(const YAML::Node& node, const std::string& field) {
  if (!node.IsMap()) throw ConfigError(field, "expected a mapping", line_of(node));
}

void check_keys(const YAML::Node& node, const std::string& field,
                std::initializer_list<const char*> allowed) {
  require_map(node, field);
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw ConfigError(join(field, key), "unknown key", line_of(kv.first));
  }
}

template <class T>
T read(const YAML::Node& parent, const char* key, const std::string& prefix, T fallback) {
  const auto node = parent[key];
  if (!node) return fallback;
  try {
    return node.as<T>();
  } catch (const YAML::BadConversion&) {
    throw ConfigError(join(prefix, key), "has the wrong type", line_of(node));
  }
}

double read_positive(const YAML::Node& parent, const char* key, const std::string& prefix,
                     double fallback) {
  const double v = read<double>(parent, key, prefix, fallback);
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << "must be a positive number, got " << v;
    throw ConfigError(join(prefix, key), msg.str(), parent[key] ? line_of(parent[key]) : -1);
  }
  return v;
}

GapPoint parse_point(const YAML::Node& node, const std::string& field) {
  require_map(node, field);
  try {
    if (node["gap"]) {
      check_keys(node, field, {"gap", "arg"});
      return GapPoint::polar(read<double>(node, "gap", field, 1.0), read<double>(node, "arg", field, 0.0));
    }
    check_keys(node, field, {"re", "im"});
    return GapPoint::from_complex({read<double>(node, "re", field, 0.0), read<double>(node, "im", field, 0.0)});
  } catch (const DomainError& e) {
    throw ConfigError(field, e.what(), line_of(node));
  }
}

std::vector<GapPoint> parse_points(const YAML::Node& node, const std::string& field) {
  if (!node) return {};
  if (!node.IsSequence()) throw ConfigError(field, "expected a list of points", line_of(node));
  std::vector<GapPoint> out;
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back(parse_point(node[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

SequenceConfig parse_sequence(const YAML::Node& node, const std::string& field) {
  SequenceConfig s;
  if (!node) return s;
  check_keys(node, field, {"kind", "q", "count", "points"});
  const auto kind = read<std::string>(node, "kind", field, to_string(s.spec.kind));
  try {
    s.spec.kind = generator_kind_from_string(kind);
  } catch (const DomainError& e) {
    throw ConfigError(join(field, "kind"), e.what(), line_of(node["kind"]));
  }
  s.spec.q = read<double>(node, "q", field, s.spec.q);
  const bool uses_q = s.spec.kind == GeneratorKind::RadialGeometric ||
                      s.spec.kind == GeneratorKind::RadialSuperexp;
  if (uses_q && !(s.spec.q > 0.0 && s.spec.q < 1.0)) {
    std::ostringstream msg;
    msg << "must lie in (0, 1), got " << s.spec.q;
    throw ConfigError(join(field, "q"), msg.str(), node["q"] ? line_of(node["q"]) : line_of(node));
  }
  const auto count = read<long long>(node, "count", field, static_cast<long long>(s.count));
  if (count < 1) throw ConfigError(join(field, "count"), "must be at least 1", line_of(node["count"]));
  s.count = static_cast<std::size_t>(count);
  s.spec.points = parse_points(node["points"], join(field, "points"));
  if (s.spec.kind == GeneratorKind::Explicit && s.spec.points.empty())
    throw ConfigError(join(field, "points"), "an explicit sequence needs at least one point", line_of(node));
  return s;
}

FactorKind factor_kind(const std::string& name, const std::string& field, int line) {
  if (name == "blaschke") return FactorKind::Blaschke;
  if (name == "atomic-singular") return FactorKind::AtomicSingular;
  if (name == "truncated-blaschke") return FactorKind::TruncatedBlaschke;
  throw ConfigError(field, "unknown inner factor '" + name + "'", line);
}

std::string factor_name(FactorKind k) {
  switch (k) {
    case FactorKind::Blaschke: return "blaschke";
    case FactorKind::AtomicSingular: return "atomic-singular";
    case FactorKind::TruncatedBlaschke: return "truncated-blaschke";
  }
  return "?";
}

std::vector<FactorConfig> parse_factors(const YAML::Node& node, const std::string& field) {
  std::vector<FactorConfig> out;
  if (!node) return out;
  if (!node.IsSequence()) throw ConfigError(field, "expected a list of factors", line_of(node));
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto item = node[i];
    const auto f = field + "[" + std::to_string(i) + "]";
    check_keys(item, f, {"kind", "mass", "arg", "zeros", "sequence", "cutoff"});
    FactorConfig fc;
    fc.kind = factor_kind(read<std::string>(item, "kind", f, "atomic-singular"), join(f, "kind"), line_of(item));
    fc.mass = read<double>(item, "mass", f, fc.mass);
    if (fc.kind == FactorKind::AtomicSingular && !(fc.mass > 0.0))
      throw ConfigError(join(f, "mass"), "must be positive", line_of(item));
    fc.arg = read<double>(item, "arg", f, fc.arg);
    fc.zeros = parse_points(item["zeros"], join(f, "zeros"));
    fc.sequence = parse_sequence(item["sequence"], join(f, "sequence"));
    fc.cutoff = read<std::size_t>(item, "cutoff", f, fc.cutoff);
    if (fc.kind == FactorKind::TruncatedBlaschke && fc.cutoff > fc.sequence.count)
      throw ConfigError(join(f, "cutoff"), "exceeds the factor's sequence length", line_of(item));
    out.push_back(std::move(fc));
  }
  return out;
}

SuiteParams parse_params(const YAML::Node& node, const std::string& field) {
  SuiteParams p;
  if (!node) return p;
  check_keys(node, field,
             {"delta_index", "delta_threshold", "monotone_from", "nonthin_delta_max", "carleson_n",
              "carleson_tol", "nonthin_carleson_gap", "nonthin_n_max", "eis_threshold",
              "duality_tol", "kappa_max", "ratio_tol", "theta", "solver_residual", "trials",
              "solver_sequence", "solver_first", "t6_triples", "beurling_first", "beurling_size",
              "beurling_slack", "t8_matrices"});
  p.delta_index = read<std::size_t>(node, "delta_index", field, p.delta_index);
  p.delta_threshold = read_positive(node, "delta_threshold", field, p.delta_threshold);
  p.monotone_from = read<std::size_t>(node, "monotone_from", field, p.monotone_from);
  p.nonthin_delta_max = read_positive(node, "nonthin_delta_max", field, p.nonthin_delta_max);
  p.carleson_n = read<std::size_t>(node, "carleson_n", field, p.carleson_n);
  p.carleson_tol = read_positive(node, "carleson_tol", field, p.carleson_tol);
  p.nonthin_carleson_gap = read_positive(node, "nonthin_carleson_gap", field, p.nonthin_carleson_gap);
  p.nonthin_n_max = read<std::size_t>(node, "nonthin_n_max", field, p.nonthin_n_max);
  p.eis_threshold = read_positive(node, "eis_threshold", field, p.eis_threshold);
  p.duality_tol = read_positive(node, "duality_tol", field, p.duality_tol);
  p.kappa_max = read_positive(node, "kappa_max", field, p.kappa_max);
  p.ratio_tol = read_positive(node, "ratio_tol", field, p.ratio_tol);
  if (node["theta"]) p.theta = parse_factors(node["theta"], join(field, "theta"));
  if (p.theta.empty()) throw ConfigError(join(field, "theta"), "needs at least one factor", line_of(node));
  p.solver_residual = read_positive(node, "solver_residual", field, p.solver_residual);
  if (p.solver_residual >= 0.5)
    throw ConfigError(join(field, "solver_residual"), "must be below 0.5", line_of(node["solver_residual"]));
  p.trials = read<std::size_t>(node, "trials", field, p.trials);
  if (node["solver_sequence"]) p.solver_sequence = parse_sequence(node["solver_sequence"], join(field, "solver_sequence"));
  p.solver_first = read<std::size_t>(node, "solver_first", field, p.solver_first);
  p.t6_triples = read<std::size_t>(node, "t6_triples", field, p.t6_triples);
  p.beurling_first = read<std::size_t>(node, "beurling_first", field, p.beurling_first);
  p.beurling_size = read<std::size_t>(node, "beurling_size", field, p.beurling_size);
  if (p.beurling_size < 1 || p.beurling_size > kMaxBeurlingWindow)
    throw ConfigError(join(field, "beurling_size"), "must lie in [1, 16]", line_of(node));
  p.beurling_slack = read<double>(node, "beurling_slack", field, p.beurling_slack);
  p.t8_matrices = read<std::size_t>(node, "t8_matrices", field, p.t8_matrices);
  return p;
}

const std::set<std::string> kSuites{"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9"};

VerifyConfig parse_verify(const YAML::Node& node) {
  VerifyConfig v;
  if (!node) return v;
  check_keys(node, "verify", {"suites", "corpus", "params"});
  if (const auto s = node["suites"]) {
    if (!s.IsSequence()) throw ConfigError("verify.suites", "expected a list", line_of(s));
    v.suites.clear();
    for (const auto& item : s) {
      const auto id = item.as<std::string>();
      if (!kSuites.count(id)) throw ConfigError("verify.suites", "unknown suite '" + id + "'", line_of(item));
      v.suites.push_back(id);
    }
  }
  if (const auto c = node["corpus"]) {
    if (!c.IsSequence()) throw ConfigError("verify.corpus", "expected a list", line_of(c));
    v.corpus.clear();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto f = "verify.corpus[" + std::to_string(i) + "]";
      check_keys(c[i], f, {"name", "sequence", "expect"});
      CorpusEntry e;
      e.name = read<std::string>(c[i], "name", f, "entry" + std::to_string(i + 1));
      e.sequence = parse_sequence(c[i]["sequence"], join(f, "sequence"));
      const auto expect = read<std::string>(c[i], "expect", f, "thin");
      if (expect != "thin" && expect != "non-thin")
        throw ConfigError(join(f, "expect"), "must be 'thin' or 'non-thin'", line_of(c[i]));
      e.expect_thin = expect == "thin";
      v.corpus.push_back(std::move(e));
    }
  }
  v.params = parse_params(node["params"], "verify.params");
  return v;
}

InterpolateConfig parse_interpolate(const YAML::Node& node) {
  InterpolateConfig ic;
  if (!node) return ic;
  const std::string f = "interpolate";
  check_keys(node, f, {"first", "last", "targets", "method", "epsilon", "samples"});
  ic.first = read<std::size_t>(node, "first", f, ic.first);
  if (ic.first < 1) throw ConfigError("interpolate.first", "must be at least 1", line_of(node));
  ic.last = read<std::size_t>(node, "last", f, ic.last);
  ic.targets = read<std::string>(node, "targets", f, ic.targets);
  ic.method = read<std::string>(node, "method", f, ic.method);
  if (ic.method != "min-norm" && ic.method != "iterative" && ic.method != "both")
    throw ConfigError("interpolate.method", "must be min-norm, iterative or both", line_of(node["method"]));
  ic.epsilon = read<double>(node, "epsilon", f, ic.epsilon);
  if (!(ic.epsilon > 0.0 && ic.epsilon < 1.0))
    throw ConfigError("interpolate.epsilon", "must lie in (0, 1)", line_of(node["epsilon"]));
  ic.samples = parse_points(node["samples"], "interpolate.samples");
  return ic;
}

void emit_point(YAML::Emitter& out, const GapPoint& p) {
  out << YAML::Flow << YAML::BeginMap << YAML::Key << "gap" << YAML::Value << p.gap() << YAML::Key
      << "arg" << YAML::Value << p.arg() << YAML::EndMap;
}

void emit_sequence(YAML::Emitter& out, const SequenceConfig& s) {
  out << YAML::BeginMap;
  out << YAML::Key << "kind" << YAML::Value << to_string(s.spec.kind);
  out << YAML::Key << "q" << YAML::Value << s.spec.q;
  out << YAML::Key << "count" << YAML::Value << s.count;
  if (!s.spec.points.empty()) {
    out << YAML::Key << "points" << YAML::Value << YAML::BeginSeq;
    for (const auto& p : s.spec.points) emit_point(out, p);
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;
}

void emit_factors(YAML::Emitter& out, const std::vector<FactorConfig>& factors) {
  out << YAML::BeginSeq;
  for (const auto& f : factors) {
    out << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << factor_name(f.kind);
    out << YAML::Key << "mass" << YAML::Value << f.mass;
    out << YAML::Key << "arg" << YAML::Value << f.arg;
    if (!f.zeros.empty()) {
      out << YAML::Key << "zeros" << YAML::Value << YAML::BeginSeq;
      for (const auto& z : f.zeros) emit_point(out, z);
      out << YAML::EndSeq;
    }
    if (f.kind == FactorKind::TruncatedBlaschke) {
      out << YAML::Key << "sequence" << YAML::Value;
      emit_sequence(out, f.sequence);
      out << YAML::Key << "cutoff" << YAML::Value << f.cutoff;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
}

}  // namespace

ConfigError::ConfigError(const std::string& field, const std::string& problem, int line)
    : std::runtime_error(describe_problem(field, problem, line)), field_(field), line_(line) {}

BlaschkeSequence SequenceConfig::build() const { return generate_sequence(spec, count); }

std::optional<InnerFunction> build_inner(const std::vector<FactorConfig>& factors) {
  if (factors.empty()) return std::nullopt;
  std::vector<InnerFactor> parts;
  for (const auto& f : factors) {
    switch (f.kind) {
      case FactorKind::Blaschke: parts.emplace_back(FiniteBlaschke{f.zeros}); break;
      case FactorKind::AtomicSingular: parts.emplace_back(AtomicSingular{f.mass, f.arg}); break;
      case FactorKind::TruncatedBlaschke:
        parts.emplace_back(TruncatedBlaschke::make(f.sequence.build(), f.cutoff));
        break;
    }
  }
  return InnerFunction(std::move(parts));
}

std::vector<CorpusEntry> default_corpus() {
  return {
      {"radial-factorial", {GeneratorSpec{GeneratorKind::RadialFactorial, 0.5, {}}, 15}, true},
      {"radial-geometric", {GeneratorSpec{GeneratorKind::RadialGeometric, 0.5, {}}, 30}, false},
  };
}

std::size_t RunConfig::cutoff_for(std::size_t stored) const {
  return window.cutoff == 0 ? stored : std::min(window.cutoff, stored);
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.sequence == b.sequence && a.inner == b.inner && a.window == b.window &&
         a.tolerances == b.tolerances && a.grid == b.grid && a.seed == b.seed && a.jobs == b.jobs &&
         a.output == b.output && a.verify == b.verify && a.interpolate == b.interpolate;
}

RunConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError("<document>", e.msg, e.mark.line + 1);
  }
  RunConfig cfg;
  if (root.IsNull()) return cfg;
  check_keys(root, "",
             {"sequence", "inner", "window", "tolerances", "grid", "seed", "jobs", "output", "verify",
              "interpolate"});

  cfg.sequence = parse_sequence(root["sequence"], "sequence");
  cfg.inner = parse_factors(root["inner"], "inner");

  if (const auto w = root["window"]) {
    check_keys(w, "window", {"n_min", "n_max", "cutoff"});
    cfg.window.n_min = read<std::size_t>(w, "n_min", "window", cfg.window.n_min);
    cfg.window.n_max = read<std::size_t>(w, "n_max", "window", cfg.window.n_max);
    cfg.window.cutoff = read<std::size_t>(w, "cutoff", "window", cfg.window.cutoff);
    if (cfg.window.n_min < 1) throw ConfigError("window.n_min", "must be at least 1", line_of(w));
    if (cfg.window.n_max < cfg.window.n_min)
      throw ConfigError("window.n_max", "must be >= window.n_min", line_of(w));
    if (cfg.window.cutoff != 0 && cfg.window.cutoff < cfg.window.n_max)
      throw ConfigError("window.cutoff", "must be 0 or >= window.n_max", line_of(w));
  }
  if (const auto t = root["tolerances"]) {
    check_keys(t, "tolerances", {"eigen", "solve", "tail"});
    cfg.tolerances.eigen = read_positive(t, "eigen", "tolerances", cfg.tolerances.eigen);
    cfg.tolerances.solve = read_positive(t, "solve", "tolerances", cfg.tolerances.solve);
    cfg.tolerances.tail = read_positive(t, "tail", "tolerances", cfg.tolerances.tail);
  }
  if (const auto g = root["grid"]) {
    check_keys(g, "grid", {"max_level", "angles", "refine"});
    cfg.grid.max_level = read<int>(g, "max_level", "grid", cfg.grid.max_level);
    cfg.grid.angles = read<int>(g, "angles", "grid", cfg.grid.angles);
    cfg.grid.refine = read<bool>(g, "refine", "grid", cfg.grid.refine);
    if (cfg.grid.max_level < 0 || cfg.grid.max_level > 1000)
      throw ConfigError("grid.max_level", "must lie in [0, 1000]", line_of(g));
    if (cfg.grid.angles < 1) throw ConfigError("grid.angles", "must be at least 1", line_of(g));
  }
  cfg.seed = read<std::uint64_t>(root, "seed", "", cfg.seed);
  cfg.jobs = read<std::size_t>(root, "jobs", "", cfg.jobs);
  if (const auto o = root["output"]) {
    check_keys(o, "output", {"path", "format"});
    cfg.output.path = read<std::string>(o, "path", "output", cfg.output.path);
    cfg.output.format = read<std::string>(o, "format", "output", cfg.output.format);
    if (cfg.output.format != "csv" && cfg.output.format != "json")
      throw ConfigError("output.format", "must be csv or json", line_of(o));
  }
  cfg.verify = parse_verify(root["verify"]);
  cfg.interpolate = parse_interpolate(root["interpolate"]);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto cfg = parse_config(buf.str());
  cfg.base_dir = std::filesystem::path(path).parent_path().string();
  return cfg;
}

std::string to_yaml(const RunConfig& cfg) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "sequence" << YAML::Value;
  emit_sequence(out, cfg.sequence);
  out << YAML::Key << "inner" << YAML::Value;
  emit_factors(out, cfg.inner);
  out << YAML::Key << "window" << YAML::Value << YAML::BeginMap << YAML::Key << "n_min" << YAML::Value
      << cfg.window.n_min << YAML::Key << "n_max" << YAML::Value << cfg.window.n_max << YAML::Key
      << "cutoff" << YAML::Value << cfg.window.cutoff << YAML::EndMap;
  out << YAML::Key << "tolerances" << YAML::Value << YAML::BeginMap << YAML::Key << "eigen"
      << YAML::Value << cfg.tolerances.eigen << YAML::Key << "solve" << YAML::Value
      << cfg.tolerances.solve << YAML::Key << "tail" << YAML::Value << cfg.tolerances.tail
      << YAML::EndMap;
  out << YAML::Key << "grid" << YAML::Value << YAML::BeginMap << YAML::Key << "max_level"
      << YAML::Value << cfg.grid.max_level << YAML::Key << "angles" << YAML::Value << cfg.grid.angles
      << YAML::Key << "refine" << YAML::Value << cfg.grid.refine << YAML::EndMap;
  out << YAML::Key << "seed" << YAML::Value << cfg.seed;
  out << YAML::Key << "jobs" << YAML::Value << cfg.jobs;
  out << YAML::Key << "output" << YAML::Value << YAML::BeginMap << YAML::Key << "path" << YAML::Value
      << cfg.output.path << YAML::Key << "format" << YAML::Value << cfg.output.format << YAML::EndMap;

  const auto& v = cfg.verify;
  out << YAML::Key << "verify" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "suites" << YAML::Value << YAML::Flow << v.suites;
  out << YAML::Key << "corpus" << YAML::Value << YAML::BeginSeq;
  for (const auto& e : v.corpus) {
    out << YAML::BeginMap << YAML::Key << "name" << YAML::Value << e.name;
    out << YAML::Key << "sequence" << YAML::Value;
    emit_sequence(out, e.sequence);
    out << YAML::Key << "expect" << YAML::Value << (e.expect_thin ? "thin" : "non-thin") << YAML::EndMap;
  }
  out << YAML::EndSeq;
  const auto& p = v.params;
  out << YAML::Key << "params" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "delta_index" << YAML::Value << p.delta_index;
  out << YAML::Key << "delta_threshold" << YAML::Value << p.delta_threshold;
  out << YAML::Key << "monotone_from" << YAML::Value << p.monotone_from;
  out << YAML::Key << "nonthin_delta_max" << YAML::Value << p.nonthin_delta_max;
  out << YAML::Key << "carleson_n" << YAML::Value << p.carleson_n;
  out << YAML::Key << "carleson_tol" << YAML::Value << p.carleson_tol;
  out << YAML::Key << "nonthin_carleson_gap" << YAML::Value << p.nonthin_carleson_gap;
  out << YAML::Key << "nonthin_n_max" << YAML::Value << p.nonthin_n_max;
  out << YAML::Key << "eis_threshold" << YAML::Value << p.eis_threshold;
  out << YAML::Key << "duality_tol" << YAML::Value << p.duality_tol;
  out << YAML::Key << "kappa_max" << YAML::Value << p.kappa_max;
  out << YAML::Key << "ratio_tol" << YAML::Value << p.ratio_tol;
  out << YAML::Key << "theta" << YAML::Value;
  emit_factors(out, p.theta);
  out << YAML::Key << "solver_residual" << YAML::Value << p.solver_residual;
  out << YAML::Key << "trials" << YAML::Value << p.trials;
  out << YAML::Key << "solver_sequence" << YAML::Value;
  emit_sequence(out, p.solver_sequence);
  out << YAML::Key << "solver_first" << YAML::Value << p.solver_first;
  out << YAML::Key << "t6_triples" << YAML::Value << p.t6_triples;
  out << YAML::Key << "beurling_first" << YAML::Value << p.beurling_first;
  out << YAML::Key << "beurling_size" << YAML::Value << p.beurling_size;
  out << YAML::Key << "beurling_slack" << YAML::Value << p.beurling_slack;
  out << YAML::Key << "t8_matrices" << YAML::Value << p.t8_matrices;
  out << YAML::EndMap << YAML::EndMap;

  const auto& ic = cfg.interpolate;
  out << YAML::Key << "interpolate" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "first" << YAML::Value << ic.first;
  out << YAML::Key << "last" << YAML::Value << ic.last;
  out << YAML::Key << "targets" << YAML::Value << ic.targets;
  out << YAML::Key << "method" << YAML::Value << ic.method;
  out << YAML::Key << "epsilon" << YAML::Value << ic.epsilon;
  out << YAML::Key << "samples" << YAML::Value << YAML::BeginSeq;
  for (const auto& s : ic.samples) emit_point(out, s);
  out << YAML::EndSeq << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace thinseq::app
