#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "thinseq/kernels.hpp"
#include "thinseq/linalg.hpp"

namespace thinseq {

struct EigenOptions {
  double tol = 1e-10;              // residual bound, relative to max(1, |lambda|)
  std::size_t max_iter = 100000;   // per start
  std::size_t restarts = 3;
  std::uint64_t seed = 0;
  bool jacobi_check = true;        // cross-check against full Jacobi when n <= 8
};

struct ExtremalEigen {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double residual_min = 0.0;   // ||G v - lambda v|| for the unit Ritz vector
  double residual_max = 0.0;
  std::size_t iterations = 0;
  bool jacobi_checked = false;
  Vector vec_min;
  Vector vec_max;
};

/// Extremal eigenpairs of a Hermitian positive semidefinite matrix. lambda_max
/// comes from power iteration from seeded random starts, lambda_min from the
/// same iteration on s I - G with s = lambda_max + 1. When the iteration stalls
/// the iterated operator is squared, which keeps the Ritz vectors converging on
/// tightly clustered spectra; Rayleigh quotients and residuals always use G.
/// Throws EigenNonConvergence when no start reaches the tolerance.
ExtremalEigen extremal_eigs(const Matrix& g, const EigenOptions& opts = {});
ExtremalEigen extremal_eigs(const GramWindow& g, const EigenOptions& opts = {});

/// Largest eigenvalue only (no shift pass).
ExtremalEigen top_eig(const Matrix& g, const EigenOptions& opts = {});

struct RieszBounds {
  double c = 1.0;            // lambda_min of the window Gram
  double C = 1.0;            // lambda_max
  double certificate = 0.0;  // truncation certificate of the window
  ExtremalEigen eig;

  /// ||G - I|| for the window.
  double tail_norm() const { return std::max(C - 1.0, 1.0 - c); }
};

RieszBounds riesz_bounds(const KernelFamily& family, const BlaschkeSequence& seq, std::size_t first,
                         std::size_t last, const EigenOptions& opts = {});

struct AobRow {
  std::size_t n;
  RieszBounds bounds;
};

/// Riesz bounds of the windows [N, last] for N = first..last; the decay of
/// tail_norm() along N is the asymptotic orthonormality diagnostic.
std::vector<AobRow> aob_profile(const KernelFamily& family, const BlaschkeSequence& seq,
                                std::size_t first, std::size_t last, const EigenOptions& opts = {});

}  // namespace thinseq
