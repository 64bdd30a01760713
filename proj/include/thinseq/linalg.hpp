#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace thinseq {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Full diagonalization of a Hermitian matrix by cyclic Jacobi rotations on the
/// real symmetric embedding [[Re, -Im], [Im, Re]]. Every eigenvalue of H shows up
/// twice in the embedding; the duplicates are folded back.
struct JacobiResult {
  std::vector<double> values;  // ascending, size n
  Matrix vectors;              // column k belongs to values[k]
  std::size_t sweeps = 0;
};
JacobiResult jacobi_eigen(const Matrix& h);

struct SolveResult {
  Vector x;
  double residual = 0.0;   // ||G x - b||
  std::size_t iterations = 0;
  std::string method;
};

/// Solves G x = b for Hermitian positive definite G: eigen-decomposition for
/// n <= 8, conjugate gradients otherwise, with a Cholesky fallback plus one
/// refinement step if CG stalls above `tol * ||b||`.
SolveResult solve_hermitian(const Matrix& g, const Vector& b, double tol);

/// Largest |G_jk - delta_jk|.
double max_offdiag_defect(const Matrix& g);

}  // namespace thinseq
