#pragma once

// Pseudohyperbolic geometry of the unit disk with boundary-aware storage.
//
// Thin sequences sit exponentially close to the unit circle, where |z| rounds
// to 1 in double precision long before the interesting structure disappears.
// Every point therefore keeps its gap 1 - |z| as the primary coordinate and all
// quantities involving 1 - |z|^2 or 1 - conj(w) z are assembled from gaps and
// half-angle sines, never from the rounded complex value.
//
// Sequence positions are 1-based throughout the public API (lambda_1, lambda_2,
// ...), matching how windows [N, M] are usually written.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace thinseq {

using cplx = std::complex<double>;

class GapPoint {
 public:
  /// The origin.
  GapPoint() = default;

  /// Point with modulus 1 - gap and argument `arg`. Requires 0 < gap <= 1.
  static GapPoint polar(double gap, double arg);
  /// Requires |z| < 1. Loses the digits of the gap that `z` itself lost.
  static GapPoint from_complex(cplx z);

  double gap() const noexcept { return gap_; }
  double arg() const noexcept { return arg_; }
  double modulus() const noexcept { return 1.0 - gap_; }
  /// 1 - |z|^2 = gap (2 - gap).
  double one_minus_mod_sq() const noexcept { return gap_ * (2.0 - gap_); }
  cplx value() const;

  bool is_origin() const noexcept { return gap_ == 1.0; }

  friend bool operator==(const GapPoint&, const GapPoint&) = default;

 private:
  GapPoint(double gap, double arg) : gap_(gap), arg_(arg) {}
  double gap_ = 1.0;
  double arg_ = 0.0;
};

using DiskPoint = GapPoint;

/// 1 - conj(a) z, cancellation-free.
cplx one_minus_conj_product(const GapPoint& a, const GapPoint& z);

/// |z - w|^2 and |1 - conj(w) z|^2, both cancellation-free.
struct PairMetrics {
  double diff_sq;
  double denom_sq;
};
PairMetrics pair_metrics(const GapPoint& z, const GapPoint& w);

/// rho(z, w) = |z - w| / |1 - conj(w) z|.
double pseudo_distance(const GapPoint& z, const GapPoint& w);

/// 1 - rho(z, w)^2 = (1 - |z|^2)(1 - |w|^2) / |1 - conj(w) z|^2, which is also
/// the squared overlap |<k_z, k_w>|^2 of normalized Szego kernels.
double one_minus_rho_sq(const GapPoint& z, const GapPoint& w);

/// log rho(z, w)^2, accurate both for rho near 0 and rho near 1. -inf when z == w.
double log_rho_sq(const GapPoint& z, const GapPoint& w);

/// (-conj(a)/|a|) (z - a) / (1 - conj(a) z); equals z when a is the origin.
cplx blaschke_factor(const GapPoint& a, const GapPoint& z);

/// Disk automorphism phi_a(z) = (a - z) / (1 - conj(a) z), returned with its gap
/// computed from 1 - |phi_a(z)|^2 = (1 - |a|^2)(1 - |z|^2) / |1 - conj(a) z|^2.
GapPoint automorphism(const GapPoint& a, const GapPoint& z);

/// Certified lower bound for prod_k rho(z, lambda_k) over points lambda_k whose
/// gaps sum to at most `tail_gap_sum`, using 1 - rho^2 <= 2 (2 - g_z) g_k / g_z.
/// Returns 1 for an empty tail and 0 when the bound degenerates.
double tail_product_lower_bound(double gap_z, double tail_gap_sum);

enum class GeneratorKind { RadialGeometric, RadialFactorial, RadialSuperexp, Explicit };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RadialFactorial;
  double q = 0.5;                 // geometric / superexp ratio, 0 < q < 1
  std::vector<GapPoint> points;   // explicit lists only

  std::string describe() const;
  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

std::string to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(const std::string& name);

class BlaschkeSequence {
 public:
  /// Explicit finite sequence. Rejects repeated points unless `check_distinct` is false.
  static BlaschkeSequence from_points(std::vector<GapPoint> points, bool check_distinct = true);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  /// 1-based access.
  const GapPoint& at(std::size_t n) const;
  const std::vector<GapPoint>& points() const noexcept { return points_; }

  /// Sum of stored gaps.
  double blaschke_sum() const noexcept { return blaschke_sum_; }
  /// Upper bound for the sum of gaps the generator would emit after the stored points.
  double tail_gap_sum() const noexcept { return tail_gap_sum_; }
  /// Upper bound for the sum of square roots of those gaps.
  double tail_sqrt_gap_sum() const noexcept { return tail_sqrt_gap_sum_; }
  /// Generation stopped early because the next gap would drop below 1e-300.
  bool truncated() const noexcept { return truncated_; }
  const GeneratorSpec& generator() const noexcept { return generator_; }

  /// Gaps of the stored points with index >= first (1-based), plus the generator tail.
  double gap_sum_from(std::size_t first) const;

 private:
  friend BlaschkeSequence generate_sequence(const GeneratorSpec&, std::size_t);
  std::vector<GapPoint> points_;
  double blaschke_sum_ = 0.0;
  double tail_gap_sum_ = 0.0;
  double tail_sqrt_gap_sum_ = 0.0;
  bool truncated_ = false;
  GeneratorSpec generator_;
};

/// Smallest gap a generator will store.
inline constexpr double kMinGap = 1e-300;

/// Radial generators emit gaps q^n, 1/n!, q^(n^2) for n = 1..count on the
/// positive real axis. Explicit specs return their point list (count ignored).
BlaschkeSequence generate_sequence(const GeneratorSpec& spec, std::size_t count);

struct DeltaEntry {
  std::size_t index;   // 1-based j
  double value;        // product over stored k != j
  double lower;        // certified lower bound including the unstored tail
  double certified_error() const noexcept { return value - lower; }
  bool certified;      // certified_error() <= tail_tol
};

/// delta_j = prod_{k != j} rho(lambda_j, lambda_k) for j = 1..min(j_max, size),
/// accumulated in log space.
std::vector<DeltaEntry> delta_profile(const BlaschkeSequence& seq, std::size_t j_max,
                                      double tail_tol);

/// Separation products restricted to the points of [first, last] (1-based).
std::vector<double> window_deltas(const BlaschkeSequence& seq, std::size_t first,
                                  std::size_t last);

}  // namespace thinseq
