#include "thinseq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/IterativeLinearSolvers>

namespace thinseq {

namespace {

Eigen::MatrixXd real_embedding(const Matrix& h) {
  const auto n = h.rows();
  Eigen::MatrixXd a(2 * n, 2 * n);
  a.topLeftCorner(n, n) = h.real();
  a.topRightCorner(n, n) = -h.imag();
  a.bottomLeftCorner(n, n) = h.imag();
  a.bottomRightCorner(n, n) = h.real();
  return 0.5 * (a + a.transpose());
}

}  // namespace

JacobiResult jacobi_eigen(const Matrix& h) {
  const Eigen::Index n = h.rows();
  const Eigen::Index m = 2 * n;
  Eigen::MatrixXd a = real_embedding(h);
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(m, m);

  JacobiResult out;
  const double scale = std::max(a.norm(), 1e-300);
  for (out.sweeps = 0; out.sweeps < 100; ++out.sweeps) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < m; ++p)
      for (Eigen::Index q = p + 1; q < m; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-17 * scale) break;

    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < m; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < m; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < m; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x) < a(y, y); });

  // The embedding pairs (x, y) with (-y, x); taking every other sorted entry and
  // mapping (x, y) -> x + i y recovers one complex eigenvector per eigenvalue.
  // For repeated eigenvalues the chosen columns may be dependent, so they are
  // re-orthonormalized with Gram-Schmidt.
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = Matrix::Zero(n, n);
  Eigen::Index filled = 0;
  for (Eigen::Index idx = 0; idx < m && filled < n; ++idx) {
    const auto col = order[static_cast<std::size_t>(idx)];
    Vector z(n);
    for (Eigen::Index k = 0; k < n; ++k) z(k) = {v(k, col), v(k + n, col)};
    for (Eigen::Index j = 0; j < filled; ++j) z -= out.vectors.col(j).dot(z) * out.vectors.col(j);
    const double len = z.norm();
    if (len < 1e-6) continue;
    out.vectors.col(filled) = z / len;
    out.values[static_cast<std::size_t>(filled)] = a(col, col);
    ++filled;
  }
  return out;
}

SolveResult solve_hermitian(const Matrix& g, const Vector& b, double tol) {
  SolveResult out;
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    out.x = Vector::Zero(b.size());
    out.method = "zero";
    return out;
  }

  if (g.rows() <= 8) {
    const auto eig = jacobi_eigen(g);
    Vector coeff = eig.vectors.adjoint() * b;
    for (Eigen::Index k = 0; k < coeff.size(); ++k) coeff(k) /= eig.values[static_cast<std::size_t>(k)];
    out.x = eig.vectors * coeff;
    out.method = "jacobi";
  } else {
    Eigen::ConjugateGradient<Matrix, Eigen::Lower | Eigen::Upper> cg;
    cg.setTolerance(0.1 * tol);
    cg.setMaxIterations(std::max<Eigen::Index>(10 * g.rows(), 1000));
    cg.compute(g);
    out.x = cg.solve(b);
    out.iterations = static_cast<std::size_t>(cg.iterations());
    out.method = "cg";
  }
  out.residual = (g * out.x - b).norm();

  if (!(out.residual <= tol * bnorm)) {
    Eigen::LLT<Matrix> llt(g);
    if (llt.info() == Eigen::Success) {
      Vector x = llt.solve(b);
      x += llt.solve(b - g * x);
      const double r = (g * x - b).norm();
      if (r < out.residual || !std::isfinite(out.residual)) {
        out.x = x;
        out.residual = r;
        out.method += "+cholesky";
      }
    }
  }
  return out;
}

double max_offdiag_defect(const Matrix& g) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

}  // namespace thinseq
