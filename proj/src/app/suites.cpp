#include "thinseq/app/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "thinseq/app/report.hpp"
#include "thinseq/carleson.hpp"
#include "thinseq/earl.hpp"
#include "thinseq/errors.hpp"
#include "thinseq/interpolation.hpp"
#include "thinseq/kernels.hpp"
#include "thinseq/linalg.hpp"
#include "thinseq/parallel.hpp"
#include "thinseq/spectral.hpp"

namespace thinseq::app {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool compare(double v, const std::string& rel, double t) {
  if (rel == "<") return v < t;
  if (rel == "<=") return v <= t;
  if (rel == ">") return v > t;
  return v >= t;
}

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  void add(const std::string& subject, const std::string& name, double value, const std::string& rel,
           double threshold) {
    r_.checks.push_back({subject, name, value, rel, threshold, compare(value, rel, threshold)});
  }

 private:
  SuiteResult& r_;
};

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

GridSpec grid_of(const RunConfig& cfg) {
  GridSpec g = cfg.grid;
  g.jobs = cfg.jobs;
  return g;
}

InnerFunction suite_theta(const RunConfig& cfg) {
  auto theta = build_inner(cfg.verify.params.theta);
  if (!theta) throw ConfigError("verify.params.theta", "must name an inner function");
  return *theta;
}

std::string at(const char* label, std::size_t i) {
  return std::string(label) + "=" + std::to_string(i);
}

// C(mu_N) for N = 1..n_max on windows [N, M].
std::vector<Bounded> carleson_profile(const BlaschkeSequence& seq, std::size_t n_max, const RunConfig& cfg) {
  const std::size_t m = seq.size();
  n_max = std::min(n_max, m);
  std::vector<Bounded> out(n_max);
  parallel_for(n_max, cfg.jobs, [&](std::size_t i) {
    out[i] = carleson_constant(DiscreteMeasure::mu(seq, i + 1, m), KernelFamily::hardy(), eigen_opts(cfg));
  });
  return out;
}

void t1(const RunConfig& cfg, Recorder& rec) {
  const auto& p = cfg.verify.params;
  for (const auto& entry : cfg.verify.corpus) {
    const auto seq = entry.sequence.build();
    const auto d = delta_profile(seq, seq.size(), cfg.tolerances.tail);
    if (entry.expect_thin) {
      double drop = -std::numeric_limits<double>::infinity();
      std::size_t where = p.monotone_from;
      for (std::size_t j = p.monotone_from; j < d.size(); ++j) {
        const double step = d[j - 1].value - d[j].value;
        if (step > drop) {
          drop = step;
          where = j;
        }
      }
      if (p.monotone_from >= d.size()) drop = 0.0;
      rec.add(entry.name, "max_j (delta_j - delta_{j+1}) from j=" + std::to_string(p.monotone_from) +
                              " (worst " + at("j", where) + ")",
              drop, "<=", 0.0);
      const double dj = p.delta_index <= d.size() ? d[p.delta_index - 1].lower : kNaN;
      rec.add(entry.name, "delta_" + std::to_string(p.delta_index) + " certified lower end", dj, ">",
              p.delta_threshold);
    } else {
      double mx = 0.0;
      for (const auto& e : d) mx = std::max(mx, e.value);
      rec.add(entry.name, "max_j delta_j", mx, "<", p.nonthin_delta_max);
    }
  }
}

void t2(const RunConfig& cfg, Recorder& rec) {
  const auto& p = cfg.verify.params;
  for (const auto& entry : cfg.verify.corpus) {
    const auto seq = entry.sequence.build();
    if (entry.expect_thin) {
      const auto c = carleson_profile(seq, p.carleson_n, cfg);
      double rise = c.size() > 1 ? -std::numeric_limits<double>::infinity() : 0.0;
      std::size_t where = 1;
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const double step = c[i + 1].lower() - c[i].upper();
        if (step > rise) {
          rise = step;
          where = i + 1;
        }
      }
      rec.add(entry.name, "max_N (C(mu_{N+1}).lower - C(mu_N).upper) (worst " + at("N", where) + ")", rise,
              "<=", 0.0);
      const double last = c.size() == p.carleson_n ? c.back().upper() - 1.0 : kNaN;
      rec.add(entry.name, "C(mu_" + std::to_string(p.carleson_n) + ") + error - 1", last, "<", p.carleson_tol);
    } else {
      const auto c = carleson_profile(seq, p.nonthin_n_max, cfg);
      double low = c.size() == p.nonthin_n_max ? std::numeric_limits<double>::infinity() : kNaN;
      std::size_t where = 1;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].lower() - 1.0 < low) {
          low = c[i].lower() - 1.0;
          where = i + 1;
        }
      rec.add(entry.name,
              "min_{N<=" + std::to_string(p.nonthin_n_max) + "} C(mu_N) - error - 1 (worst " + at("N", where) + ")",
              low, ">", p.nonthin_carleson_gap);
    }
  }
}

void t3(const RunConfig& cfg, Recorder& rec) {
  const auto& p = cfg.verify.params;
  for (const auto& entry : cfg.verify.corpus) {
    const auto seq = entry.sequence.build();
    const std::size_t m = seq.size();
    const std::size_t n_max = std::min(p.carleson_n, m);
    std::vector<double> eis(n_max), duality(n_max);
    parallel_for(n_max, cfg.jobs, [&](std::size_t i) {
      const auto g = build_gram(KernelFamily::hardy(), seq, i + 1, m);
      const double lmin = extremal_eigs(g, eigen_opts(cfg)).lambda_min;
      eis[i] = eis_constant(KernelFamily::hardy(), seq, i + 1, m, solve_opts(cfg));
      duality[i] = std::abs(eis[i] * eis[i] * lmin - 1.0);
    });
    const auto worst = std::max_element(duality.begin(), duality.end());
    rec.add(entry.name,
            "max_N |eis_N^2 lambda_min(G_N) - 1| (worst " +
                at("N", static_cast<std::size_t>(worst - duality.begin()) + 1) + ")",
            *worst, "<=", p.duality_tol);
    if (entry.expect_thin) {
      const double v = n_max == p.carleson_n ? eis.back() : kNaN;
      rec.add(entry.name, "eis_" + std::to_string(p.carleson_n), v, "<", p.eis_threshold);
    }
  }
}

void t4(const RunConfig& cfg, Recorder& rec) {
  const auto& p = cfg.verify.params;
  const auto theta = suite_theta(cfg);
  const auto model = KernelFamily::model(theta);
  const auto grid = grid_of(cfg);
  for (const auto& entry : cfg.verify.corpus) {
    if (!entry.expect_thin) continue;
    const auto seq = entry.sequence.build();
    const std::size_t m = seq.size();
    const double kappa = p.carleson_n <= m ? tail_kappa(theta, seq, p.carleson_n) : kNaN;
    rec.add(entry.name, "kappa_" + std::to_string(p.carleson_n), kappa, "<", p.kappa_max);

    std::vector<Bounded> cmu(m), csig(m);
    std::vector<double> r2(m);
    parallel_for(m, cfg.jobs, [&](std::size_t i) {
      GridSpec serial = grid;
      serial.jobs = 1;
      cmu[i] = carleson_constant(DiscreteMeasure::mu(seq, i + 1, m), KernelFamily::hardy(), eigen_opts(cfg));
      const auto sigma = DiscreteMeasure::sigma(seq, i + 1, m, theta);
      csig[i] = carleson_constant(sigma, model, eigen_opts(cfg));
      r2[i] = reproducing_constant(sigma, model, serial).value;
    });

    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t n = p.carleson_n; n <= m; ++n) {
      const double ratio = csig[n - 1].value / cmu[n - 1].value;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (p.carleson_n > m) lo = hi = kNaN;
    const std::string range = "N=" + std::to_string(p.carleson_n) + ".." + std::to_string(m);
    rec.add(entry.name, "min C_T(sigma_N)/C(mu_N), " + range, lo, ">=", 1.0 - p.ratio_tol);
    rec.add(entry.name, "max C_T(sigma_N)/C(mu_N), " + range, hi, "<=", 1.0 + p.ratio_tol);

    double below = std::numeric_limits<double>::infinity(), above = -below;
    for (std::size_t i = 0; i < m; ++i) {
      below = std::min(below, r2[i]);
      above = std::max(above, r2[i] - csig[i].upper());
    }
    // R^2 at a measure point contains that point's unit term, so the lower
    // chain link holds up to rounding in the last place.
    rec.add(entry.name, "min_N R2_T(sigma_N), N=1.." + std::to_string(m), below, ">=", 1.0 - 1e-12);
    rec.add(entry.name, "max_N R2_T(sigma_N) - (C_T(sigma_N) + error)", above, "<=", 0.0);
  }
}

Vector random_unit(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Vector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = cplx{nd(rng), nd(rng)};
  return v / v.norm();
}

void t5(const RunConfig& cfg, Recorder& rec) {
  const auto& p = cfg.verify.params;
  const auto seq = p.solver_sequence.build();
  const std::size_t first = p.solver_first, last = seq.size();
  const double rho = p.solver_residual;
  const double eps = rho / (1.0 - rho);  // eps / (1 + eps) = rho
  const std::string subject = p.solver_sequence.spec.describe() + " [" + std::to_string(first) + ", " +
                              std::to_string(last) + "]";
  if (first < 1 || first > last) throw ConfigError("verify.params.solver_first", "outside the solver sequence");

  InterpolationProblem prob;
  prob.family = KernelFamily::hardy();
  prob.seq = seq;
  prob.first = first;
  prob.last = last;
  prob.targets.assign(prob.size(), cplx{1.0, 0.0});
  const auto exact = exact_solver(prob, solve_opts(cfg));

  std::mt19937_64 rng(cfg.seed);
  double decay = 0.0, final_res = 0.0, final_norm = -std::numeric_limits<double>::infinity();
  std::size_t failures = 0;
  for (std::size_t t = 0; t < p.trials; ++t) {
    const Vector a = random_unit(prob.size(), rng) * std::exp(std::normal_distribution<double>(0.0, 2.0)(rng));
    // The injected solver returns the exact solution of a perturbed target whose
    // distance to the true one is exactly rho times its norm.
    const ApproxSolver approx = [&](const Vector& b) {
      const double bn = b.norm();
      if (bn == 0.0) return Vector(Vector::Zero(b.size()));
      Vector u = b / bn + 0.5 * random_unit(static_cast<std::size_t>(b.size()), rng);
      u /= u.norm();
      return exact(b - rho * bn * u);
    };
    InterpolationProblem pt = prob;
    for (std::size_t j = 0; j < pt.size(); ++j) pt.targets[j] = a(static_cast<Eigen::Index>(j));
    try {
      const auto sol = iterative_solve(pt, approx, eps);
      const double an = a.norm();
      for (const auto& s : sol.trace.steps) {
        if (s.k >= 10) break;
        // residual after step k+1 against rho^(k+1) ||a||
        decay = std::max(decay, s.residual / (std::pow(rho, static_cast<double>(s.k + 1)) * an));
      }
      final_res = std::max(final_res, sol.trace.final_residual / an);
      final_norm = std::max(final_norm, sol.trace.final_norm - ((1.0 + eps) * an + 1e-8));
    } catch (const std::exception&) {
      ++failures;
    }
  }
  rec.add(subject, "trials that raised", static_cast<double>(failures), "<=", 0.0);
  rec.add(subject, "max_{k<=10} ||a^(k)|| / (rho^k ||a||)", decay, "<=", 1.0 + 1e-12);
  rec.add(subject, "max final residual / ||a||", final_res, "<=", 1e-10);
  rec.add(subject, "max ||F|| - ((1+eps)||a|| + 1e-8)", final_norm, "<=", 0.0);
}

GapPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double gap = std::pow(10.0, -6.0 * u(rng));
  return GapPoint::polar(std::min(gap, 1.0), 2.0 * std::numbers::pi * u(rng));
}

InnerFunction random_theta(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<InnerFactor> factors;
  const int kind = static_cast<int>(u(rng) * 3.0);
  if (kind != 1) {
    std::vector<GapPoint> zeros;
    const int count = 1 + static_cast<int>(u(rng) * 3.0);
    for (int i = 0; i < count; ++i) zeros.push_back(GapPoint::polar(0.02 + 0.98 * u(rng), 2.0 * std::numbers::pi * u(rng)));
    factors.emplace_back(FiniteBlaschke{zeros});
  }
  if (kind != 0) factors.emplace_back(AtomicSingular{0.1 + 2.9 * u(rng), 2.0 * std::numbers::pi * u(rng)});
  return InnerFunction(std::move(factors));
}

void t6(const RunConfig& cfg, Recorder& rec) {
  const auto& p = cfg.verify.params;
  std::mt19937_64 rng(cfg.seed ^ 0x6a09e667f3bcc908ULL);
  std::normal_distribution<double> nd;
  double worst_identity = 0.0, worst_norm = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < p.t6_triples; ++t) {
    const auto theta = random_theta(rng);
    KernelCombination f{KernelFamily::hardy(), {}, {}};
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      f.points.push_back(random_point(rng));
      f.coeffs.push_back(cplx{nd(rng), nd(rng)});
    }
    const auto z = random_point(rng);
    const auto pf = project_model(f, theta);
    const auto tf = toeplitz_conj_apply(f, theta);
    const cplx th = eval_inner(theta, z).value;
    const cplx lhs = pf.evaluate(z);
    const cplx rhs = f.evaluate(z) - th * tf.evaluate(z);
    double scale = 1.0;
    const auto zp = prepare(KernelFamily::hardy(), z);
    for (std::size_t j = 0; j < f.points.size(); ++j)
      scale += std::abs(f.coeffs[j]) * std::abs(normalized_kernel_at(prepare(KernelFamily::hardy(), f.points[j]), zp));
    worst_identity = std::max(worst_identity, std::abs(lhs - rhs) / scale);
    const double fn = f.norm();
    worst_norm = std::max(worst_norm, pf.norm() / fn - 1.0);
  }
  rec.add("random triples", "max |P f - (f - T T_conj(T) f)|(z) / scale", worst_identity, "<=", 1e-12);
  rec.add("random triples", "max ||P f|| / ||f|| - 1", worst_norm, "<=", 1e-12);
}

void t7(const RunConfig& cfg, Recorder& rec) {
  const auto& p = cfg.verify.params;
  const double e = earl_bound(1.0 / std::sqrt(2.0));
  rec.add("-", "|earl_bound(1/sqrt 2) - (3 + 2 sqrt 2)|", std::abs(e - (3.0 + 2.0 * std::sqrt(2.0))), "<=", 1e-12);
  const auto grid = grid_of(cfg);
  for (const auto& entry : cfg.verify.corpus) {
    if (!entry.expect_thin) continue;
    const auto seq = entry.sequence.build();
    const std::size_t first = p.beurling_first, last = first + p.beurling_size - 1;
    const std::string subject = entry.name + " [" + std::to_string(first) + ", " + std::to_string(last) + "]";
    if (last > seq.size()) {
      rec.add(subject, "window inside the stored sequence", kNaN, "<=", 0.0);
      continue;
    }
    const auto sys = BeurlingSystem::from_window(seq, first, last);
    double kron = 0.0;
    for (std::size_t k = 0; k < sys.size(); ++k) {
      const auto f = sys.evaluate_all(sys.zeros()[k]);
      for (std::size_t j = 0; j < f.size(); ++j)
        kron = std::max(kron, std::abs(f[j] - (j == k ? 1.0 : 0.0)));
    }
    rec.add(subject, "max |f_j(l_k) - delta_jk|", kron, "<=", 1e-12);
    const double bound = earl_bound(sys.gamma());
    const double sup = beurling_grid_sup(sys, grid).value;
    rec.add(subject, "grid sup sum |f_j| - earl_bound(gamma=" + format_double(sys.gamma()) + ")", sup - bound,
            "<=", p.beurling_slack);
  }
}

void t8(const RunConfig& cfg, Recorder& rec) {
  const auto& p = cfg.verify.params;
  std::mt19937_64 rng(cfg.seed ^ 0xbb67ae8584caa73bULL);
  std::normal_distribution<double> nd;
  double worst = 0.0;
  for (std::size_t t = 0; t < p.t8_matrices; ++t) {
    const auto n = static_cast<Eigen::Index>(1 + rng() % 6);
    const auto r = static_cast<Eigen::Index>(1 + rng() % static_cast<std::uint64_t>(n));
    Matrix b(n, r);
    for (auto& x : b.reshaped()) x = cplx{nd(rng), nd(rng)} / std::sqrt(2.0 * static_cast<double>(r));
    Matrix g = b * b.adjoint();
    g = (0.5 * (g + g.adjoint())).eval();
    auto opts = eigen_opts(cfg);
    opts.seed = rng();
    opts.jacobi_check = false;
    const auto e = extremal_eigs(g, opts);
    const auto j = jacobi_eigen(g);
    worst = std::max({worst, std::abs(e.lambda_min - j.values.front()), std::abs(e.lambda_max - j.values.back())});
  }
  rec.add("random PSD, n<=6", "max |lambda - lambda_Jacobi|", worst, "<=", 1e-8);
}

void t9(const RunConfig& cfg, Recorder& rec) {
  for (const auto& entry : cfg.verify.corpus) {
    const auto seq = entry.sequence.build();
    const std::size_t m = seq.size();
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t first = 1; first <= m; ++first)
      for (std::size_t probe = first; probe <= m; ++probe)
        worst = std::min(worst, weierstrass_gap(seq, first, m, probe).slack());
    rec.add(entry.name, "min slack over windows [N, M] and probes", worst, ">=", -1e-14);
  }
}

struct SuiteDef {
  const char* title;
  void (*run)(const RunConfig&, Recorder&);
};

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> r{
      {"T1", {"thinness profile", t1}},
      {"T2", {"Carleson embedding constants", t2}},
      {"T3", {"EIS constants and duality", t3}},
      {"T4", {"model-space embedding", t4}},
      {"T5", {"iterative interpolation", t5}},
      {"T6", {"model projection identity", t6}},
      {"T7", {"Earl bound and dual functions", t7}},
      {"T8", {"extremal eigenvalues vs Jacobi", t8}},
      {"T9", {"Weierstrass inequality", t9}},
  };
  return r;
}

}  // namespace

bool SuiteResult::pass() const {
  if (!error.empty() || checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9"};
  return ids;
}

SuiteResult run_suite(const std::string& id, const RunConfig& cfg) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw ConfigError("verify.suites", "unknown suite " + id);
  SuiteResult r;
  r.id = id;
  r.title = it->second.title;
  Recorder rec(r);
  try {
    it->second.run(cfg, rec);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<SuiteResult> run_suites(const RunConfig& cfg) {
  if (cfg.verify.suites.empty() || cfg.verify.corpus.empty())
    throw ConfigError("verify", "no suites selected");
  std::vector<SuiteResult> out;
  for (const auto& id : cfg.verify.suites) out.push_back(run_suite(id, cfg));
  return out;
}

std::string format_suites(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << r.id << " " << (r.pass() ? "PASS" : "FAIL") << "  " << r.title << "\n";
    for (const auto& c : r.checks)
      out << "    " << (c.pass ? "ok  " : "FAIL") << "  " << c.subject << ": " << c.name << " = "
          << format_double(c.value) << " (need " << c.relation << " " << format_double(c.threshold) << ")\n";
    if (!r.error.empty()) out << "    error: " << r.error << "\n";
    passed += r.pass() ? 1 : 0;
  }
  out << passed << "/" << results.size() << " suites passed\n";
  return out.str();
}

nlohmann::json suites_to_json(const std::vector<SuiteResult>& results) {
  auto arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json jr{{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"checks", nlohmann::json::array()}};
    if (!r.error.empty()) jr["error"] = r.error;
    for (const auto& c : r.checks)
      jr["checks"].push_back({{"subject", c.subject},
                              {"name", c.name},
                              {"value", number_to_json(c.value)},
                              {"relation", c.relation},
                              {"threshold", number_to_json(c.threshold)},
                              {"pass", c.pass}});
    arr.push_back(std::move(jr));
  }
  return {{"suites", arr}};
}

}  // namespace thinseq::app
