#pragma once

// Minimal-norm interpolation on kernel windows. Targets are always taken against
// normalized kernels: f interpolates a on [N, M] when f(l_n) / ||K_n|| = a_n.
// The minimal-norm solution is f = sum c_k k_k with G c = a and ||f||^2 = a* c.

#include <cstddef>
#include <functional>
#include <vector>

#include "thinseq/kernels.hpp"
#include "thinseq/spectral.hpp"

namespace thinseq {

struct InterpolationProblem {
  KernelFamily family;
  BlaschkeSequence seq;
  std::size_t first = 1;
  std::size_t last = 1;
  std::vector<cplx> targets;  // a_n for n = first..last

  /// Raw values f(l_n) divided by ||K_n|| in the problem's family.
  static InterpolationProblem from_values(KernelFamily family, BlaschkeSequence seq,
                                          std::size_t first, std::size_t last,
                                          const std::vector<cplx>& values);

  void validate() const;
  std::size_t size() const noexcept { return last - first + 1; }
  Vector target_vector() const;
  std::vector<GapPoint> window_points() const;
};

struct MinNormSolution {
  Vector coeffs;          // over normalized kernels
  double norm = 0.0;
  double residual = 0.0;  // ||G c - a||
  double lambda_min = 0.0;
  double lambda_max = 0.0;

  KernelCombination combination(const InterpolationProblem& p) const;
};

struct MinNormOptions {
  double tol = 1e-12;  // relative residual, also the singularity threshold for lambda_min
  EigenOptions eigen;
};

/// Throws NonInterpolatingError (carrying lambda_min) when lambda_min <= tol or
/// the residual cannot be pushed below tol * ||a||.
MinNormSolution min_norm_interpolant(const InterpolationProblem& p, const MinNormOptions& opts = {});

/// sup over unit targets of the minimal norm, evaluated as sqrt(lambda_max(G^{-1}))
/// with G^{-1} assembled column by column from min-norm solves. Equals
/// lambda_min(G)^{-1/2} up to solver accuracy.
double eis_constant(const KernelFamily& family, const BlaschkeSequence& seq, std::size_t first,
                    std::size_t last, const MinNormOptions& opts = {});

/// Given targets a, returns normalized-kernel coefficients g with
/// ||G g - a|| <= eps / (1 + eps) ||a|| and, ideally, ||g||_G <= ||a||.
using ApproxSolver = std::function<Vector(const Vector& targets)>;

struct IterationStep {
  std::size_t k = 0;            // 0-based step
  double target_norm = 0.0;     // ||a^(k)||
  double step_norm = 0.0;       // ||f_k||
  double residual = 0.0;        // ||a^(k+1)|| = ||a^(k) - G g_k||
  bool norm_contract = true;    // ||f_k|| <= ||a^(k)||
};

struct IterationTrace {
  std::vector<IterationStep> steps;
  double final_norm = 0.0;      // ||F||
  double final_residual = 0.0;  // ||G F - a||, recomputed directly
};

struct IterativeSolution {
  Vector coeffs;
  IterationTrace trace;
};

/// Accumulates F = sum f_k with a^(k+1) = a^(k) - G g_k until ||a^(k)|| <= 1e-10 ||a||.
/// Throws ContractViolation naming the step whose residual exceeds
/// eps / (1 + eps) ||a^(k)||, and SolverNonConvergence after max_iter steps.
IterativeSolution iterative_solve(const InterpolationProblem& p, const ApproxSolver& approx,
                                  double eps, std::size_t max_iter = 200);

/// The exact min-norm solver for the problem's window, as an ApproxSolver.
ApproxSolver exact_solver(const InterpolationProblem& p, const MinNormOptions& opts = {});

struct TransferResult {
  Vector hardy_coeffs;   // min-norm Hardy solution for the rescaled targets
  Vector model_coeffs;   // its projection onto K_T, over normalized model kernels
  double kappa = 0.0;    // max |T(l_n)| over the window (certified upper end)
  double residual = 0.0; // ||G^T e - a||
  double bound = 0.0;    // kappa / sqrt(1 - kappa^2) sqrt(C(mu)) ||f_hardy||
  double model_norm = 0.0;
  bool degraded = false; // kappa > 0.9
};

/// Solves the Hardy problem with targets a_n sqrt(1 - |T(l_n)|^2), projects onto
/// K_T and measures the model-space residual against a. Requires a Hardy problem.
TransferResult h2_to_model_transfer(const InterpolationProblem& p, const InnerFunction& theta,
                                    const MinNormOptions& opts = {});

}  // namespace thinseq
