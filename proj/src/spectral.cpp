#include "thinseq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "thinseq/errors.hpp"

namespace thinseq {

namespace {

constexpr std::size_t kStallWindow = 50;

struct PowerRun {
  double value = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  Vector v;
  std::size_t iterations = 0;
  bool converged = false;
};

Vector random_start(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  Vector v(n);
  for (Eigen::Index k = 0; k < n; ++k) v(k) = {normal(rng), normal(rng)};
  return v / v.norm();
}

// Iterates `op` (G itself or a shift of it) and measures every Ritz pair on G.
PowerRun power_run(const Matrix& g, Matrix op, Vector v, const EigenOptions& opts) {
  PowerRun run;
  double best = std::numeric_limits<double>::infinity();
  std::size_t stalled = 0;
  for (std::size_t it = 0; it < opts.max_iter; ++it) {
    Vector w = op * v;
    const double len = w.norm();
    run.iterations = it + 1;
    if (len == 0.0 || !std::isfinite(len)) break;
    v = w / len;

    const Vector gv = g * v;
    const double lambda = v.dot(gv).real();
    const double res = (gv - lambda * v).norm();
    if (res < run.residual) {
      run.value = lambda;
      run.residual = res;
      run.v = v;
    }
    if (res <= opts.tol * std::max(1.0, std::abs(lambda))) {
      run.converged = true;
      break;
    }
    if (res < 0.9 * best) {
      best = res;
      stalled = 0;
    } else if (++stalled >= kStallWindow) {
      op = op * op;
      const double scale = op.norm();
      if (scale == 0.0 || !std::isfinite(scale)) break;
      op /= scale;
      stalled = 0;
      best = res;
    }
  }
  return run;
}

PowerRun best_of(const Matrix& g, const Matrix& op, bool want_max, std::mt19937_64& rng,
                 const EigenOptions& opts, std::size_t& iterations) {
  PowerRun best;
  bool have = false;
  PowerRun closest;  // smallest residual seen, for the error report
  for (std::size_t r = 0; r < std::max<std::size_t>(opts.restarts, 1); ++r) {
    auto run = power_run(g, op, random_start(rng, g.rows()), opts);
    iterations += run.iterations;
    if (run.residual < closest.residual) closest = run;
    if (!run.converged) continue;
    if (!have || (want_max ? run.value > best.value : run.value < best.value)) best = run;
    have = true;
  }
  if (!have) {
    std::ostringstream msg;
    msg << "power iteration did not reach residual " << opts.tol << " for lambda_"
        << (want_max ? "max" : "min") << " (best residual " << closest.residual << ")";
    throw EigenNonConvergence(msg.str(), closest.value, closest.residual);
  }
  return best;
}

}  // namespace

ExtremalEigen top_eig(const Matrix& g, const EigenOptions& opts) {
  if (g.rows() != g.cols() || g.rows() == 0) throw DomainError("top_eig: need a nonempty square matrix");
  if (!(opts.tol > 0.0)) throw DomainError("top_eig: tolerance must be positive");
  std::mt19937_64 rng(opts.seed);
  ExtremalEigen out;
  const auto run = best_of(g, g, true, rng, opts, out.iterations);
  out.lambda_max = run.value;
  out.residual_max = run.residual;
  out.vec_max = run.v;
  return out;
}

ExtremalEigen extremal_eigs(const Matrix& g, const EigenOptions& opts) {
  if (g.rows() != g.cols() || g.rows() == 0)
    throw DomainError("extremal_eigs: need a nonempty square matrix");
  if (!(opts.tol > 0.0)) throw DomainError("extremal_eigs: tolerance must be positive");

  std::mt19937_64 rng(opts.seed);
  ExtremalEigen out;
  const auto top = best_of(g, g, true, rng, opts, out.iterations);
  out.lambda_max = top.value;
  out.residual_max = top.residual;
  out.vec_max = top.v;

  const double shift = top.value + 1.0;
  const Matrix shifted = shift * Matrix::Identity(g.rows(), g.cols()) - g;
  const auto bottom = best_of(g, shifted, false, rng, opts, out.iterations);
  out.lambda_min = bottom.value;
  out.residual_min = bottom.residual;
  out.vec_min = bottom.v;

  if (opts.jacobi_check && g.rows() <= 8) {
    const auto jac = jacobi_eigen(g);
    const double jmin = jac.values.front();
    const double jmax = jac.values.back();
    const auto agree = [](double a, double b) {
      return std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(b));
    };
    if (!agree(out.lambda_min, jmin) || !agree(out.lambda_max, jmax)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "power iteration (" << out.lambda_min << ", " << out.lambda_max
          << ") disagrees with Jacobi (" << jmin << ", " << jmax << ")";
      throw EigenNonConvergence(msg.str(), out.lambda_max, out.residual_max);
    }
    out.jacobi_checked = true;
  }
  return out;
}

ExtremalEigen extremal_eigs(const GramWindow& g, const EigenOptions& opts) {
  return extremal_eigs(g.entries, opts);
}

RieszBounds riesz_bounds(const KernelFamily& family, const BlaschkeSequence& seq, std::size_t first,
                         std::size_t last, const EigenOptions& opts) {
  const auto gram = build_gram(family, seq, first, last);
  RieszBounds out;
  out.eig = extremal_eigs(gram, opts);
  out.c = out.eig.lambda_min;
  out.C = out.eig.lambda_max;
  out.certificate = gram.truncation_certificate;
  return out;
}

std::vector<AobRow> aob_profile(const KernelFamily& family, const BlaschkeSequence& seq,
                                std::size_t first, std::size_t last, const EigenOptions& opts) {
  std::vector<AobRow> rows;
  for (std::size_t n = first; n <= last; ++n)
    rows.push_back({n, riesz_bounds(family, seq, n, last, opts)});
  return rows;
}

}  // namespace thinseq
