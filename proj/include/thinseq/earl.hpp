#pragma once

// Earl's interpolation constant and a dual system f_j with f_j(l_k) = delta_jk
// on a finite window.
//
// Construction: for every sign pattern w in {+1, -1}^n (w_1 = +1, the rest
// follows by oddness) let M*(w) be the smallest H^inf norm of an interpolant of
// w, i.e. M*(w)^2 = lambda_max(L^{-1} D G D L^{-*}) with G = L L* the normalized
// window Gram and D = diag(w). With M_w = (1 + eta) M*(w) the Schur algorithm
// produces g_w with g_w(l_k) = w_k and |g_w| <= M_w on the disk. Then
//   f_j(z) = (E_w[w_j g_w(z)])^2
// is Kronecker on the window, and since the w_j are orthonormal under the
// uniform average, sum_j |f_j(z)| <= E_w |g_w(z)|^2 <= E_w[M_w^2] for every z.

#include <cstddef>
#include <memory>
#include <vector>

#include "thinseq/carleson.hpp"
#include "thinseq/disk_geometry.hpp"

namespace thinseq {

/// (2 - d^2 + 2 sqrt(1 - d^2)) / d^2 = ((1 + sqrt(1 - d^2)) / d)^2 for 0 < d <= 1.
double earl_bound(double delta);

struct BeurlingOptions {
  double eta = 1e-3;  // relative slack over the optimal Pick norm
};

inline constexpr std::size_t kMaxBeurlingWindow = 16;

class BeurlingSystem {
 public:
  /// Throws DomainError for an empty window or more than 16 points and
  /// NonInterpolatingError for coincident points.
  static BeurlingSystem build(std::vector<GapPoint> zeros, const BeurlingOptions& opts = {});
  static BeurlingSystem from_window(const BlaschkeSequence& seq, std::size_t first,
                                    std::size_t last, const BeurlingOptions& opts = {});

  const std::vector<GapPoint>& zeros() const noexcept;
  std::size_t size() const noexcept { return zeros().size(); }
  /// min_j of the separation products taken inside the window.
  double gamma() const noexcept;
  /// E_w[M_w^2], a certified bound for sup_z sum_j |f_j(z)|.
  double certified_bound() const noexcept;

  /// f_1(z), ..., f_n(z).
  std::vector<cplx> evaluate_all(const GapPoint& z) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// f_j(z), j 1-based.
cplx beurling_function(const BeurlingSystem& sys, std::size_t j, const GapPoint& z);
/// sum_j |f_j(z)|.
double beurling_sum(const BeurlingSystem& sys, const GapPoint& z);

struct BoundedInterpolant {
  BeurlingSystem system;
  std::vector<cplx> weights;
  double sup_bound = 0.0;  // certified_bound() * max_j |w_j|

  cplx evaluate(const GapPoint& z) const;
};

/// f = sum_j w_j f_j, so that f(l_j) = w_j.
BoundedInterpolant interpolate_bounded(const BeurlingSystem& sys, std::vector<cplx> weights);

/// Polar grid plus rings at gaps 2^-41..2^-60, 1e-100, 1e-300 and the window points.
std::vector<GapPoint> earl_grid(const BeurlingSystem& sys, const GridSpec& spec);

SupResult beurling_grid_sup(const BeurlingSystem& sys, const GridSpec& spec = {});
SupResult interpolant_grid_sup(const BoundedInterpolant& f, const GridSpec& spec = {});

}  // namespace thinseq
