#pragma once

// Direct long-double formulas used as independent references in the unit tests.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "thinseq/disk_geometry.hpp"

namespace oracle {

using lcplx = std::complex<long double>;

inline lcplx value(const thinseq::GapPoint& p) {
  const long double r = 1.0L - static_cast<long double>(p.gap());
  return std::polar(r, static_cast<long double>(p.arg()));
}

inline long double rho(const thinseq::GapPoint& z, const thinseq::GapPoint& w) {
  const lcplx a = value(z), b = value(w);
  return std::abs(a - b) / std::abs(1.0L - std::conj(b) * a);
}

inline lcplx szego_inner(const thinseq::GapPoint& l, const thinseq::GapPoint& m) {
  const lcplx a = value(l), b = value(m);
  return std::sqrt((1.0L - std::norm(a)) * (1.0L - std::norm(b))) / (1.0L - std::conj(a) * b);
}

// A random point with gap log-uniform in [10^-lo_exp, 1).
inline thinseq::GapPoint random_point(std::mt19937_64& rng, double lo_exp = 3.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double gap = std::min(1.0, std::pow(10.0, -lo_exp * u(rng)));
  return thinseq::GapPoint::polar(gap, 6.283185307179586 * u(rng));
}

}  // namespace oracle
