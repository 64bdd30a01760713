#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "oracle.hpp"
#include "thinseq/errors.hpp"
#include "thinseq/linalg.hpp"
#include "thinseq/spectral.hpp"

using namespace thinseq;

namespace {

Matrix random_psd(std::mt19937_64& rng, long n, long rank) {
  std::normal_distribution<double> nd;
  Matrix b(n, rank);
  for (auto& x : b.reshaped()) x = cplx(nd(rng), nd(rng));
  Matrix g = b * b.adjoint() / double(rank);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("closed-form extremal eigenvalues") {
  const auto id = extremal_eigs(Matrix::Identity(3, 3));
  CHECK(id.lambda_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.lambda_max == doctest::Approx(1.0).epsilon(1e-12));
  for (cplx g : {cplx(0.3, 0), cplx(-0.8, 0), cplx(0.2, 0.5)}) {
    Matrix m(2, 2);
    m << 1.0, g, std::conj(g), 1.0;
    const auto e = extremal_eigs(m);
    CHECK(e.lambda_min == doctest::Approx(1 - std::abs(g)).epsilon(1e-10));
    CHECK(e.lambda_max == doctest::Approx(1 + std::abs(g)).epsilon(1e-10));
    CHECK(e.residual_max <= 1e-10 * std::max(1.0, e.lambda_max));
  }
}

TEST_CASE("power iteration agrees with Jacobi and Eigen") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 60; ++t) {
    const long n = 1 + long(rng() % 6), rank = 1 + long(rng() % std::uint64_t(n));
    const Matrix g = random_psd(rng, n, rank);
    EigenOptions opts;
    opts.seed = rng();
    opts.jacobi_check = false;
    const auto e = extremal_eigs(g, opts);
    const auto j = jacobi_eigen(g);
    Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
    CHECK(std::abs(e.lambda_min - j.values.front()) < 1e-8);
    CHECK(std::abs(e.lambda_max - j.values.back()) < 1e-8);
    CHECK(std::abs(j.values.front() - es.eigenvalues()(0)) < 1e-10);
    CHECK(std::abs(j.values.back() - es.eigenvalues()(n - 1)) < 1e-10);
  }
}

TEST_CASE("Jacobi diagonalization returns eigenpairs") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const long n = 1 + long(rng() % 8);
    const Matrix g = random_psd(rng, n, n);
    const auto j = jacobi_eigen(g);
    REQUIRE(j.values.size() == std::size_t(n));
    for (long k = 0; k < n; ++k) {
      const Vector v = j.vectors.col(k);
      CHECK(std::abs(v.norm() - 1.0) < 1e-10);
      CHECK((g * v - j.values[std::size_t(k)] * v).norm() < 1e-9);
    }
  }
}

TEST_CASE("non-convergence carries the best iterate") {
  std::mt19937_64 rng(14);
  const Matrix g = random_psd(rng, 40, 40);
  EigenOptions opts;
  opts.tol = 1e-15;
  opts.max_iter = 2;
  opts.restarts = 1;
  try {
    (void)extremal_eigs(g, opts);
    FAIL("expected EigenNonConvergence");
  } catch (const EigenNonConvergence& e) {
    CHECK(e.best_estimate() > 0.0);
    CHECK(e.residual() > 1e-15);
  }
}

TEST_CASE("solve_hermitian on both paths") {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> nd;
  for (long n : {3L, 8L, 20L, 60L}) {
    const Matrix g = random_psd(rng, n, n) + 0.1 * Matrix::Identity(n, n);
    Vector b(n);
    for (auto& x : b) x = cplx(nd(rng), nd(rng));
    const auto s = solve_hermitian(g, b, 1e-12);
    CHECK((g * s.x - b).norm() <= 1e-11 * b.norm());
    CHECK(s.residual <= 1e-11 * b.norm());
  }
}

TEST_CASE("riesz bounds of windows") {
  const auto one = BlaschkeSequence::from_points({GapPoint::polar(0.3, 1.0)});
  const auto rb = riesz_bounds(KernelFamily::hardy(), one, 1, 1);
  CHECK(rb.c == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rb.C == doctest::Approx(1.0).epsilon(1e-12));

  const auto f = generate_sequence({GeneratorKind::RadialFactorial, 0.5, {}}, 15);
  const auto prof = aob_profile(KernelFamily::hardy(), f, 1, 15);
  for (std::size_t i = 0; i < prof.size(); ++i) {
    CHECK(prof[i].bounds.c <= 1.0 + 1e-12);
    CHECK(prof[i].bounds.C >= 1.0 - 1e-12);
    if (i > 0) {
      CHECK(prof[i].bounds.c >= prof[i - 1].bounds.c - 1e-10);
      CHECK(prof[i].bounds.C <= prof[i - 1].bounds.C + 1e-10);
    }
  }
  const auto g = generate_sequence({GeneratorKind::RadialGeometric, 0.5, {}}, 30);
  for (std::size_t n = 1; n <= 20; ++n) CHECK(riesz_bounds(KernelFamily::hardy(), g, n, 30).C > 1.5);
}

TEST_CASE("enlarging a window widens the spectrum") {
  for (auto kind : {GeneratorKind::RadialFactorial, GeneratorKind::RadialGeometric, GeneratorKind::RadialSuperexp}) {
    const auto seq = generate_sequence({kind, 0.5, {}}, 14);
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t m = n; m < 14; ++m) {
        const auto a = riesz_bounds(KernelFamily::hardy(), seq, n, m);
        const auto b = riesz_bounds(KernelFamily::hardy(), seq, n, m + 1);
        CHECK(b.c <= a.c + 1e-10);
        CHECK(b.C >= a.C - 1e-10);
      }
  }
}
