#include "thinseq/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thinseq/errors.hpp"

namespace thinseq {

namespace {

double gram_norm(const Matrix& g, const Vector& c) {
  return std::sqrt(std::max(0.0, c.dot(g * c).real()));
}

[[noreturn]] void singular(const InterpolationProblem& p, double lambda_min, const char* why) {
  std::ostringstream msg;
  msg << "Gram window [" << p.first << ", " << p.last << "] " << why
      << " (lambda_min = " << lambda_min << ")";
  throw NonInterpolatingError(msg.str(), lambda_min);
}

}  // namespace

InterpolationProblem InterpolationProblem::from_values(KernelFamily family, BlaschkeSequence seq,
                                                       std::size_t first, std::size_t last,
                                                       const std::vector<cplx>& values) {
  InterpolationProblem p{std::move(family), std::move(seq), first, last, values};
  p.validate();
  const auto pts = prepare(p.family, p.window_points());
  for (std::size_t j = 0; j < pts.size(); ++j) p.targets[j] /= std::sqrt(pts[j].norm_sq());
  return p;
}

void InterpolationProblem::validate() const {
  if (first < 1 || last > seq.size() || first > last) {
    std::ostringstream msg;
    msg << "interpolation window [" << first << ", " << last << "] outside stored range [1, "
        << seq.size() << "]";
    throw DomainError(msg.str());
  }
  if (targets.size() != size()) {
    std::ostringstream msg;
    msg << "expected " << size() << " targets for window [" << first << ", " << last << "], got "
        << targets.size();
    throw DomainError(msg.str());
  }
  for (const auto& t : targets)
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
      throw DomainError("interpolation targets must be finite");
}

Vector InterpolationProblem::target_vector() const {
  Vector a(static_cast<Eigen::Index>(targets.size()));
  for (std::size_t j = 0; j < targets.size(); ++j) a(static_cast<Eigen::Index>(j)) = targets[j];
  return a;
}

std::vector<GapPoint> InterpolationProblem::window_points() const {
  return {seq.points().begin() + static_cast<std::ptrdiff_t>(first - 1),
          seq.points().begin() + static_cast<std::ptrdiff_t>(last)};
}

KernelCombination MinNormSolution::combination(const InterpolationProblem& p) const {
  KernelCombination f{p.family, p.window_points(), {}};
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) f.coeffs.push_back(coeffs(k));
  return f;
}

MinNormSolution min_norm_interpolant(const InterpolationProblem& p, const MinNormOptions& opts) {
  p.validate();
  const Matrix g = build_gram(p.family, p.seq, p.first, p.last).entries;
  const Vector a = p.target_vector();

  MinNormSolution out;
  const auto eig = extremal_eigs(g, opts.eigen);
  out.lambda_min = eig.lambda_min;
  out.lambda_max = eig.lambda_max;
  if (!(eig.lambda_min > opts.tol)) singular(p, eig.lambda_min, "is numerically singular");

  const auto solved = solve_hermitian(g, a, opts.tol);
  if (!(solved.residual <= opts.tol * a.norm()))
    singular(p, eig.lambda_min, "could not be solved to tolerance");
  out.coeffs = solved.x;
  out.residual = solved.residual;
  out.norm = std::sqrt(std::max(0.0, a.dot(out.coeffs).real()));
  return out;
}

double eis_constant(const KernelFamily& family, const BlaschkeSequence& seq, std::size_t first,
                    std::size_t last, const MinNormOptions& opts) {
  const Matrix g = build_gram(family, seq, first, last).entries;
  const auto n = g.rows();
  const auto eig = extremal_eigs(g, opts.eigen);
  if (!(eig.lambda_min > opts.tol)) {
    std::ostringstream msg;
    msg << "Gram window [" << first << ", " << last
        << "] is numerically singular (lambda_min = " << eig.lambda_min << ")";
    throw NonInterpolatingError(msg.str(), eig.lambda_min);
  }

  Matrix inv(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Vector e = Vector::Unit(n, k);
    inv.col(k) = solve_hermitian(g, e, opts.tol).x;
  }
  inv = 0.5 * (inv + inv.adjoint()).eval();

  auto eopts = opts.eigen;
  eopts.tol = std::min(eopts.tol, 1e-12);
  return std::sqrt(top_eig(inv, eopts).lambda_max);
}

ApproxSolver exact_solver(const InterpolationProblem& p, const MinNormOptions& opts) {
  p.validate();
  const Matrix g = build_gram(p.family, p.seq, p.first, p.last).entries;
  const double tol = opts.tol;
  return [g, tol](const Vector& a) { return solve_hermitian(g, a, tol).x; };
}

IterativeSolution iterative_solve(const InterpolationProblem& p, const ApproxSolver& approx,
                                  double eps, std::size_t max_iter) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("iterative_solve: eps must lie in (0, 1)");
  p.validate();
  const Matrix g = build_gram(p.family, p.seq, p.first, p.last).entries;
  const Vector a = p.target_vector();
  const double a_norm = a.norm();
  const double contraction = eps / (1.0 + eps);

  IterativeSolution out;
  out.coeffs = Vector::Zero(a.size());
  Vector current = a;
  for (std::size_t k = 0; current.norm() > 1e-10 * a_norm; ++k) {
    if (k == max_iter) {
      std::ostringstream msg;
      msg << "iterative_solve: residual " << current.norm() << " after " << max_iter << " steps";
      throw SolverNonConvergence(msg.str());
    }
    const Vector step = approx(current);
    if (step.size() != a.size()) throw DomainError("approximate solver returned a wrong-sized vector");
    const Vector next = current - g * step;

    IterationStep rec;
    rec.k = k;
    rec.target_norm = current.norm();
    rec.step_norm = gram_norm(g, step);
    rec.residual = next.norm();
    rec.norm_contract = rec.step_norm <= rec.target_norm * (1.0 + 1e-12);
    out.trace.steps.push_back(rec);

    if (rec.residual > contraction * rec.target_norm * (1.0 + 1e-12)) {
      std::ostringstream msg;
      msg << "approximate solver broke its contract at step " << k + 1 << ": residual "
          << rec.residual << " > " << contraction << " * " << rec.target_norm;
      throw ContractViolation(msg.str(), k + 1);
    }
    out.coeffs += step;
    current = next;
  }
  out.trace.final_norm = gram_norm(g, out.coeffs);
  out.trace.final_residual = (g * out.coeffs - a).norm();
  return out;
}

TransferResult h2_to_model_transfer(const InterpolationProblem& p, const InnerFunction& theta,
                                    const MinNormOptions& opts) {
  if (p.family.is_model()) throw DomainError("h2_to_model_transfer expects a Hardy problem");
  p.validate();

  TransferResult out;
  const auto pts = p.window_points();
  std::vector<double> defect;
  for (const auto& z : pts) {
    const auto v = eval_inner(theta, z);
    out.kappa = std::max(out.kappa, v.modulus_high);
    defect.push_back(v.one_minus_mod_sq());
  }
  if (!(out.kappa < 1.0)) throw DomainError("h2_to_model_transfer: kappa_N must be < 1");
  out.degraded = out.kappa > 0.9;

  InterpolationProblem hardy = p;
  for (std::size_t j = 0; j < defect.size(); ++j) hardy.targets[j] *= std::sqrt(defect[j]);
  const auto sol = min_norm_interpolant(hardy, opts);
  out.hardy_coeffs = sol.coeffs;
  out.model_coeffs = sol.coeffs;
  for (std::size_t j = 0; j < defect.size(); ++j)
    out.model_coeffs(static_cast<Eigen::Index>(j)) *= std::sqrt(defect[j]);

  const Matrix gm = build_gram(KernelFamily::model(theta), p.seq, p.first, p.last).entries;
  out.residual = (gm * out.model_coeffs - p.target_vector()).norm();
  out.model_norm = gram_norm(gm, out.model_coeffs);
  out.bound = out.kappa / std::sqrt(1.0 - out.kappa * out.kappa) * std::sqrt(sol.lambda_max) * sol.norm;
  return out;
}

}  // namespace thinseq
