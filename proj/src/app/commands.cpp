#include "thinseq/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "thinseq/app/suites.hpp"
#include "thinseq/carleson.hpp"
#include "thinseq/errors.hpp"
#include "thinseq/interpolation.hpp"
#include "thinseq/kernels.hpp"
#include "thinseq/parallel.hpp"
#include "thinseq/spectral.hpp"

namespace thinseq::app {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

EigenOptions eigen_opts(const RunConfig& cfg) {
  EigenOptions o;
  o.tol = cfg.tolerances.eigen;
  o.seed = cfg.seed;
  return o;
}

MinNormOptions solve_opts(const RunConfig& cfg) {
  MinNormOptions o;
  o.tol = cfg.tolerances.solve;
  o.eigen = eigen_opts(cfg);
  return o;
}

void note(std::string& status, const std::string& what, const std::exception& e) {
  const std::string msg = what + ": " + e.what();
  status = status == "ok" ? msg : status + "; " + msg;
}

// Runs fn and stores its result in cell; failures go to the row status.
template <class Fn>
void fill(Cell& cell, std::string& status, const char* what, Fn&& fn) {
  try {
    cell = fn();
  } catch (const std::exception& e) {
    cell.reset();
    note(status, what, e);
  }
}

double max_weight(const DiscreteMeasure& m) {
  return m.normalized.empty() ? 0.0 : *std::max_element(m.normalized.begin(), m.normalized.end());
}

// The window EIS constant and an upper error from the truncation certificate.
Measured eis_cell(const KernelFamily& family, const BlaschkeSequence& seq, std::size_t n, std::size_t m,
                  const RunConfig& cfg) {
  const auto rb = riesz_bounds(family, seq, n, m, eigen_opts(cfg));
  const double eis = eis_constant(family, seq, n, m, solve_opts(cfg));
  const double floor = rb.c - rb.certificate - rb.eig.residual_min;
  const double err = floor > 0.0 ? std::max(0.0, 1.0 / std::sqrt(floor) - eis) : kInf;
  return {eis, err};
}

SweepRow analyze_row(const RunConfig& cfg, const BlaschkeSequence& seq, const std::optional<InnerFunction>& theta,
                     std::size_t n, std::size_t m) {
  SweepRow row;
  row.n = n;
  if (n > m) {
    row.status = "window start beyond cutoff " + std::to_string(m);
    return row;
  }
  GridSpec grid = cfg.grid;
  grid.jobs = 1;
  const auto hardy = KernelFamily::hardy();
  auto& st = row.status;

  fill(row.delta_min, st, "delta_min", [&] {
    const auto d = delta_profile(seq, m, cfg.tolerances.tail);
    auto best = d.begin() + static_cast<std::ptrdiff_t>(n - 1);
    for (auto it = best; it != d.end(); ++it)
      if (it->value < best->value) best = it;
    return Measured{best->value, best->certified_error()};
  });

  std::optional<RieszBounds> rb;
  try {
    rb = riesz_bounds(hardy, seq, n, m, eigen_opts(cfg));
  } catch (const std::exception& e) {
    note(st, "riesz", e);
  }
  if (rb) {
    row.c_lower = Measured{rb->c, rb->certificate + rb->eig.residual_min};
    row.c_upper = Measured{rb->C, rb->certificate + rb->eig.residual_max};
  }

  fill(row.carleson_mu, st, "C_mu", [&] {
    const auto b = carleson_constant(DiscreteMeasure::mu(seq, n, m), hardy, eigen_opts(cfg));
    return Measured{b.value, b.error_bar};
  });
  fill(row.r2_nu, st, "R2_nu", [&] {
    const auto nu = DiscreteMeasure::nu(seq, n, m);
    const double cert = build_gram(hardy, seq, n, m).truncation_certificate;
    const double v = reproducing_constant(nu, hardy, grid).value;
    return Measured{v, v * nu.weight_uncertainty + cert * max_weight(nu)};
  });
  fill(row.eis_hardy, st, "eis_H2", [&] { return eis_cell(hardy, seq, n, m, cfg); });

  if (theta) {
    const auto model = KernelFamily::model(*theta);
    fill(row.kappa, st, "kappa_N", [&] {
      double spread = 0.0;
      for (std::size_t k = n; k <= seq.size(); ++k) {
        const auto v = eval_inner(*theta, seq.at(k));
        spread = std::max(spread, v.modulus_high - v.modulus_low);
      }
      return Measured{tail_kappa(*theta, seq, n), spread};
    });
    fill(row.carleson_theta, st, "C_theta", [&] {
      const auto b = carleson_constant(DiscreteMeasure::sigma(seq, n, m, *theta), model, eigen_opts(cfg));
      return Measured{b.value, b.error_bar};
    });
    fill(row.r2_theta, st, "R2_theta", [&] {
      const double cert = build_gram(model, seq, n, m).truncation_certificate;
      const auto sigma = DiscreteMeasure::sigma(seq, n, m, *theta);
      return Measured{reproducing_constant(sigma, model, grid).value, cert * max_weight(sigma)};
    });
    fill(row.eis_model, st, "eis_K", [&] { return eis_cell(model, seq, n, m, cfg); });
  }
  return row;
}

// Writes to the configured path, or to `out` when none is set.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output.path, std::ios::binary);
  if (!f) throw ConfigError("output.path", "cannot write '" + cfg.output.path + "'");
  f << text;
}

std::string resolve_path(const RunConfig& cfg, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative() && !cfg.base_dir.empty()) path = std::filesystem::path(cfg.base_dir) / path;
  return path.string();
}

std::string read_file(const std::string& path, const std::string& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(field, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json coeffs_json(const Vector& c, std::size_t first) {
  auto arr = nlohmann::json::array();
  for (Eigen::Index j = 0; j < c.size(); ++j)
    arr.push_back({{"index", first + static_cast<std::size_t>(j)}, {"re", number_to_json(c(j).real())},
                   {"im", number_to_json(c(j).imag())}});
  return arr;
}

nlohmann::json samples_json(const KernelCombination& f, const std::vector<GapPoint>& samples) {
  auto arr = nlohmann::json::array();
  for (const auto& z : samples) {
    const cplx v = f.evaluate(z);
    arr.push_back({{"gap", number_to_json(z.gap())}, {"arg", number_to_json(z.arg())},
                   {"re", number_to_json(v.real())}, {"im", number_to_json(v.imag())}});
  }
  return arr;
}

// Flattens the interpolation report into section,key,re,im rows.
std::string interpolation_csv(const nlohmann::json& j) {
  std::ostringstream out;
  out << "section,key,re,im\n";
  auto num = [](const nlohmann::json& v) { return format_double(number_from_json(v)); };
  for (const char* section : {"min-norm", "iterative"}) {
    if (!j.contains(section)) continue;
    const auto& s = j[section];
    for (const char* key : {"norm", "residual", "lambda_min", "lambda_max", "steps"})
      if (s.contains(key)) out << section << "," << key << "," << num(s[key]) << ",0\n";
    for (const auto& c : s["coeffs"])
      out << section << ",coeff_" << c["index"].get<std::size_t>() << "," << num(c["re"]) << "," << num(c["im"])
          << "\n";
    std::size_t i = 0;
    for (const auto& v : s["samples"]) out << section << ",sample_" << ++i << "," << num(v["re"]) << "," << num(v["im"]) << "\n";
  }
  return out.str();
}

}  // namespace

RunConfig resolve_config(const CliOptions& opts) {
  RunConfig cfg = opts.config.empty() ? RunConfig{} : load_config(opts.config);
  if (opts.out) cfg.output.path = *opts.out;
  if (opts.format) {
    if (*opts.format != "csv" && *opts.format != "json")
      throw ConfigError("--format", "must be csv or json, got '" + *opts.format + "'");
    cfg.output.format = *opts.format;
  }
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.jobs) cfg.jobs = *opts.jobs;
  return cfg;
}

SweepReport analyze(const RunConfig& cfg) {
  const auto seq = cfg.sequence.build();
  const auto theta = build_inner(cfg.inner);
  const std::size_t m = cfg.cutoff_for(seq.size());

  SweepReport rep;
  rep.sequence = cfg.sequence.spec.describe();
  rep.theta = theta ? theta->describe() : "";
  rep.cutoff = m;
  const std::size_t lo = cfg.window.n_min, hi = cfg.window.n_max;
  rep.rows.resize(hi >= lo ? hi - lo + 1 : 0);
  parallel_for(rep.rows.size(), cfg.jobs,
               [&](std::size_t i) { rep.rows[i] = analyze_row(cfg, seq, theta, lo + i, m); });
  return rep;
}

std::vector<TargetRow> parse_targets(const std::string& text) {
  std::vector<TargetRow> rows;
  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::vector<std::string> parts;
    for (std::string f; fields >> f;) parts.push_back(f);
    if (parts.empty()) continue;

    const auto bad = [&](const std::string& why) {
      return ConfigError("targets", "row " + std::to_string(lineno) + ": " + why, static_cast<int>(lineno));
    };
    if (parts.size() != 3) throw bad("expected 3 fields (index, re, im), got " + std::to_string(parts.size()));
    TargetRow r;
    try {
      std::size_t used = 0;
      const long long idx = std::stoll(parts[0], &used);
      if (used != parts[0].size() || idx < 1) throw bad("index must be a positive integer");
      r.index = static_cast<std::size_t>(idx);
      double re = std::stod(parts[1], &used);
      if (used != parts[1].size()) throw bad("re is not a number");
      double im = std::stod(parts[2], &used);
      if (used != parts[2].size()) throw bad("im is not a number");
      if (!std::isfinite(re) || !std::isfinite(im)) throw bad("target must be finite");
      r.value = {re, im};
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw bad("fields must be an integer index and two numbers");
    }
    rows.push_back(r);
  }
  return rows;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rep = analyze(cfg);
  emit(cfg, cfg.output.format == "json" ? to_json(rep).dump(2) + "\n" : to_csv(rep), out);
  if (rep.has_errors()) {
    for (const auto& r : rep.rows)
      if (r.status != "ok") err << "row N=" << r.n << ": " << r.status << "\n";
    return kNumericalFailure;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto results = run_suites(cfg);
  out << format_suites(results);
  if (!cfg.output.path.empty()) {
    std::string text;
    if (cfg.output.format == "json") {
      text = suites_to_json(results).dump(2) + "\n";
    } else {
      std::ostringstream csv;
      csv << "suite,subject,check,value,relation,threshold,pass\n";
      auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
      };
      for (const auto& r : results)
        for (const auto& c : r.checks)
          csv << r.id << "," << quote(c.subject) << "," << quote(c.name) << "," << format_double(c.value) << ","
              << c.relation << "," << format_double(c.threshold) << "," << (c.pass ? "true" : "false") << "\n";
      text = csv.str();
    }
    emit(cfg, text, out);
  }
  const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.pass(); });
  return ok ? kOk : kSuiteFailure;
}

int cmd_interpolate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& ic = cfg.interpolate;
  if (ic.targets.empty()) throw ConfigError("interpolate.targets", "a targets file is required");
  const auto rows = parse_targets(read_file(resolve_path(cfg, ic.targets), "interpolate.targets"));

  const auto seq = cfg.sequence.build();
  const auto theta = build_inner(cfg.inner);
  InterpolationProblem p;
  p.family = theta ? KernelFamily::model(*theta) : KernelFamily::hardy();
  p.seq = seq;
  p.first = ic.first;
  p.last = ic.last == 0 ? cfg.cutoff_for(seq.size()) : ic.last;
  if (p.last > seq.size() || p.first > p.last)
    throw ConfigError("interpolate", "window [" + std::to_string(p.first) + ", " + std::to_string(p.last) +
                                         "] outside the stored sequence of " + std::to_string(seq.size()) +
                                         " points");
  p.targets.assign(p.size(), cplx{0.0, 0.0});
  for (const auto& r : rows) {
    if (r.index < p.first || r.index > p.last)
      throw ConfigError("targets", "index " + std::to_string(r.index) + " outside the window [" +
                                       std::to_string(p.first) + ", " + std::to_string(p.last) + "]");
    p.targets[r.index - p.first] = r.value;
  }

  nlohmann::json rep;
  rep["family"] = p.family.describe();
  rep["sequence"] = cfg.sequence.spec.describe();
  rep["window"] = {p.first, p.last};
  rep["target_norm"] = number_to_json(p.target_vector().norm());
  try {
    if (ic.method == "min-norm" || ic.method == "both") {
      const auto sol = min_norm_interpolant(p, solve_opts(cfg));
      rep["min-norm"] = {{"norm", number_to_json(sol.norm)},
                         {"residual", number_to_json(sol.residual)},
                         {"lambda_min", number_to_json(sol.lambda_min)},
                         {"lambda_max", number_to_json(sol.lambda_max)},
                         {"coeffs", coeffs_json(sol.coeffs, p.first)},
                         {"samples", samples_json(sol.combination(p), ic.samples)}};
    }
    if (ic.method == "iterative" || ic.method == "both") {
      // Each step treats the window Gram as the identity (g = a^(k)); the
      // residual contract then holds exactly when ||G - I|| <= eps / (1 + eps).
      const auto sol = iterative_solve(p, [](const Vector& b) { return b; }, ic.epsilon);
      KernelCombination f{p.family, p.window_points(), {}};
      for (Eigen::Index j = 0; j < sol.coeffs.size(); ++j) f.coeffs.push_back(sol.coeffs(j));
      rep["iterative"] = {{"norm", number_to_json(sol.trace.final_norm)},
                          {"residual", number_to_json(sol.trace.final_residual)},
                          {"steps", sol.trace.steps.size()},
                          {"coeffs", coeffs_json(sol.coeffs, p.first)},
                          {"samples", samples_json(f, ic.samples)}};
    }
  } catch (const NonInterpolatingError& e) {
    err << "interpolation failed: " << e.what() << " (lambda_min = " << format_double(e.lambda_min()) << ")\n";
    return kNumericalFailure;
  }
  emit(cfg, cfg.output.format == "json" ? rep.dump(2) + "\n" : interpolation_csv(rep), out);
  return kOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto seq = cfg.sequence.build();
  const auto d = delta_profile(seq, seq.size(), cfg.tolerances.tail);
  std::string text;
  if (cfg.output.format == "json") {
    auto arr = nlohmann::json::array();
    for (std::size_t n = 1; n <= seq.size(); ++n) {
      const auto& z = seq.at(n);
      const cplx v = z.value();
      arr.push_back({{"n", n},
                     {"gap", number_to_json(z.gap())},
                     {"arg", number_to_json(z.arg())},
                     {"re", number_to_json(v.real())},
                     {"im", number_to_json(v.imag())},
                     {"delta", number_to_json(d[n - 1].value)},
                     {"delta_err", number_to_json(d[n - 1].certified_error())}});
    }
    text = nlohmann::json{{"sequence", cfg.sequence.spec.describe()}, {"points", arr}}.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "n,gap,arg,re,im,delta,delta_err\n";
    for (std::size_t n = 1; n <= seq.size(); ++n) {
      const auto& z = seq.at(n);
      const cplx v = z.value();
      csv << n << "," << format_double(z.gap()) << "," << format_double(z.arg()) << "," << format_double(v.real())
          << "," << format_double(v.imag()) << "," << format_double(d[n - 1].value) << ","
          << format_double(d[n - 1].certified_error()) << "\n";
    }
    text = csv.str();
  }
  emit(cfg, text, out);
  return kOk;
}

int run_command(const std::string& verb, const CliOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = resolve_config(opts);
    if (verb == "analyze") return cmd_analyze(cfg, out, err);
    if (verb == "verify") return cmd_verify(cfg, out, err);
    if (verb == "interpolate") return cmd_interpolate(cfg, out, err);
    if (verb == "generate") return cmd_generate(cfg, out, err);
    err << "unknown command '" << verb << "'\n";
    return kConfigError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const NonInterpolatingError& e) {
    err << "numerical failure: " << e.what() << " (lambda_min = " << format_double(e.lambda_min()) << ")\n";
    return kNumericalFailure;
  } catch (const ContractViolation& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace thinseq::app
