#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "oracle.hpp"
#include "thinseq/errors.hpp"
#include "thinseq/kernels.hpp"

using namespace thinseq;

namespace {

GapPoint at(double re, double im = 0.0) { return GapPoint::from_complex({re, im}); }

InnerFunction random_theta(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto theta = InnerFunction::atomic_singular(0.1 + 2.0 * u(rng), 6.3 * u(rng));
  if (u(rng) < 0.7) theta = theta * InnerFunction::blaschke({oracle::random_point(rng, 1.0)});
  return theta;
}

}  // namespace

TEST_CASE("szego_inner examples") {
  const double r = 0.6;
  CHECK(std::abs(szego_inner(at(0.2, 0.3), at(0.2, 0.3)) - 1.0) < 1e-15);
  CHECK(szego_inner(at(0.0), at(r)).real() == doctest::Approx(std::sqrt(1 - r * r)).epsilon(1e-15));
  CHECK(szego_inner(at(r), at(-r)).real() == doctest::Approx((1 - r * r) / (1 + r * r)).epsilon(1e-15));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto l = oracle::random_point(rng), m = oracle::random_point(rng);
    const auto ref = oracle::szego_inner(l, m);
    CHECK(std::abs(szego_inner(l, m) - cplx(double(ref.real()), double(ref.imag()))) < 1e-10);
  }
}

TEST_CASE("model kernels of polynomial symbols") {
  const auto l = at(0.3, -0.2), z = at(-0.5, 0.4);
  CHECK(std::abs(model_kernel(InnerFunction::monomial(1), l, z) - 1.0) < 1e-15);
  const cplx lb = std::conj(l.value()), zv = z.value();
  CHECK(std::abs(model_kernel(InnerFunction::monomial(3), l, z) - (1.0 + lb * zv + lb * lb * zv * zv)) < 1e-15);
  const auto b = InnerFunction::blaschke({l, at(0.7)});
  CHECK(std::abs(model_kernel(b, l, z) - szego_kernel(l, z)) < 1e-15);
  const double r = 0.45;
  CHECK(model_inner(InnerFunction::monomial(2), at(0.0), at(r)).real() ==
        doctest::Approx(1 / std::sqrt(1 + r * r)).epsilon(1e-14));
  CHECK(std::abs(model_inner(b, l, l) - 1.0) < 1e-15);
  const auto m = at(0.7);
  CHECK(std::abs(model_inner(b, l, m) - szego_inner(l, m)) < 1e-15);
  CHECK_THROWS_AS(KernelFamily::model(InnerFunction{}), DomainError);
}

TEST_CASE("decomposition K = K^T + T conj(T(l)) K") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const auto theta = random_theta(rng);
    const auto l = oracle::random_point(rng), z = oracle::random_point(rng);
    const cplx k = szego_kernel(l, z);
    const cplx rest = k - model_kernel(theta, l, z) -
                      eval_inner(theta, z).value * std::conj(eval_inner(theta, l).value) * k;
    CHECK(std::abs(rest) <= 1e-12 * std::abs(k));
  }
}

TEST_CASE("gram windows") {
  const auto seq1 = BlaschkeSequence::from_points({at(0.4)});
  CHECK(build_gram(KernelFamily::hardy(), seq1, 1, 1).entries(0, 0) == cplx(1, 0));
  const double r = 0.5;
  const auto two = BlaschkeSequence::from_points({at(0.0), at(r)});
  const auto g = build_gram(KernelFamily::hardy(), two, 1, 2).entries;
  CHECK(g(0, 1).real() == doctest::Approx(std::sqrt(1 - r * r)).epsilon(1e-15));

  // Neighbouring radial-factorial points overlap by sqrt(1 - ((n-1)/(n+1))^2)
  // up to the n-dependent correction in the oracle.
  const auto f = generate_sequence({GeneratorKind::RadialFactorial, 0.5, {}}, 15);
  const auto w = build_gram(KernelFamily::hardy(), f, 5, 15).entries;
  double off = 0.0, ref = 0.0;
  for (std::size_t j = 5; j <= 15; ++j)
    for (std::size_t k = 5; k <= 15; ++k)
      if (j != k) {
        off = std::max(off, std::abs(w(long(j - 5), long(k - 5))));
        ref = std::max(ref, double(std::abs(oracle::szego_inner(f.at(j), f.at(k)))));
      }
  CHECK(off == doctest::Approx(ref).epsilon(1e-12));
  CHECK(off > 0.6);
}

TEST_CASE("gram windows are Hermitian PSD with unit diagonal") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    std::vector<GapPoint> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(oracle::random_point(rng, 4.0));
    const auto seq = BlaschkeSequence::from_points(pts);
    const auto family = t % 2 ? KernelFamily::hardy() : KernelFamily::model(random_theta(rng));
    const auto g = build_gram(family, seq, 1, 8).entries;
    CHECK((g - g.adjoint()).norm() == 0.0);
    for (long i = 0; i < 8; ++i) CHECK(std::abs(g(i, i) - 1.0) < 1e-13);
    CHECK(g.cwiseAbs().maxCoeff() <= 1 + 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("truncation certificate bounds the effect of later points") {
  for (auto kind : {GeneratorKind::RadialFactorial, GeneratorKind::RadialSuperexp}) {
    const auto seq = generate_sequence({kind, 0.5, {}}, 15);
    for (std::size_t last = 4; last < 15; ++last) {
      const auto small = build_gram(KernelFamily::hardy(), seq, 1, last);
      const auto big = build_gram(KernelFamily::hardy(), seq, 1, 15).entries;
      Eigen::SelfAdjointEigenSolver<Matrix> es_s(small.entries, Eigen::EigenvaluesOnly), es_b(big, Eigen::EigenvaluesOnly);
      CHECK(es_b.eigenvalues().maxCoeff() - es_s.eigenvalues().maxCoeff() <= small.truncation_certificate);
    }
  }
}

TEST_CASE("projection onto the model space") {
  // Theta vanishing on the points: identity.
  const std::vector<GapPoint> pts{at(0.2), at(-0.3, 0.5), at(0.1, -0.8)};
  KernelCombination f{KernelFamily::hardy(), pts, {cplx(1, 2), cplx(-0.5, 0), cplx(0, 1)}};
  const auto b = InnerFunction::blaschke(pts);
  const auto pf = project_model(f, b);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const auto z = oracle::random_point(rng);
    CHECK(std::abs(pf.evaluate(z) - f.evaluate(z)) < 1e-12 * (1 + std::abs(f.evaluate(z))));
  }

  // Theta = z, single kernel: P K_r = 1 and K_r(z) = 1 + z r K_r(z).
  const double r = 0.7;
  KernelCombination kr{KernelFamily::hardy(), {at(r)}, {cplx(1, 0)}};
  const auto p = project_model(kr, InnerFunction::monomial(1));
  const auto tz = toeplitz_conj_apply(kr, InnerFunction::monomial(1));
  for (int i = 0; i < 100; ++i) {
    const auto z = oracle::random_point(rng);
    CHECK(std::abs(p.evaluate(z) - std::sqrt(1 - r * r)) < 1e-14);
    const cplx k = szego_kernel(at(r), z);
    CHECK(std::abs(k - (1.0 + z.value() * r * k)) < 1e-12 * std::abs(k));
    CHECK(std::abs(kr.evaluate(z) - (p.evaluate(z) + z.value() * tz.evaluate(z))) < 1e-12 * std::abs(k));
  }
}

TEST_CASE("projection is a norm contraction and idempotent") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 300; ++t) {
    const auto theta = random_theta(rng);
    KernelCombination f{KernelFamily::hardy(), {}, {}};
    for (int i = 0; i < 5; ++i) {
      f.points.push_back(oracle::random_point(rng, 3.0));
      f.coeffs.push_back({nd(rng), nd(rng)});
    }
    const auto pf = project_model(f, theta);
    const double n = pf.norm();
    CHECK(n <= f.norm() * (1 + 1e-12));
    // <P f, f> = ||P f||^2, with <P f, k_i> read off point values of P f.
    cplx pairing = 0.0;
    for (std::size_t i = 0; i < f.points.size(); ++i)
      pairing += std::conj(f.coeffs[i]) * pf.evaluate(f.points[i]) * std::sqrt(f.points[i].one_minus_mod_sq());
    CHECK(pairing.real() == doctest::Approx(n * n).epsilon(1e-9));
    CHECK(std::abs(pairing.imag()) <= 1e-9 * (1 + n * n));
    const auto again = toeplitz_conj_apply(pf, theta);
    for (const auto& c : again.coeffs) CHECK(c == cplx(0, 0));
  }
}
