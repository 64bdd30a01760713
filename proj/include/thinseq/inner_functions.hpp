#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "thinseq/disk_geometry.hpp"

namespace thinseq {

struct FiniteBlaschke {
  std::vector<GapPoint> zeros;
  friend bool operator==(const FiniteBlaschke&, const FiniteBlaschke&) = default;
};

/// exp(-mass (zeta + z) / (zeta - z)) with zeta = exp(i boundary_arg).
struct AtomicSingular {
  double mass = 1.0;
  double boundary_arg = 0.0;
  friend bool operator==(const AtomicSingular&, const AtomicSingular&) = default;
};

/// Blaschke product over the first `cutoff` points of `seq`; the remaining
/// points (stored beyond the cutoff and the generator tail) only enter through
/// the certified modulus lower bound.
struct TruncatedBlaschke {
  BlaschkeSequence seq;
  std::size_t cutoff = 0;
  double tail_sum = 0.0;

  static TruncatedBlaschke make(BlaschkeSequence seq, std::size_t cutoff);
};

using InnerFactor = std::variant<FiniteBlaschke, AtomicSingular, TruncatedBlaschke>;

class InnerFunction {
 public:
  /// The constant 1; not usable as a model-space symbol.
  InnerFunction() = default;
  explicit InnerFunction(std::vector<InnerFactor> factors);

  static InnerFunction monomial(unsigned power);
  static InnerFunction blaschke(std::vector<GapPoint> zeros);
  static InnerFunction atomic_singular(double mass, double boundary_arg = 0.0);
  static InnerFunction truncated_blaschke(BlaschkeSequence seq, std::size_t cutoff);

  InnerFunction operator*(const InnerFunction& other) const;

  const std::vector<InnerFactor>& factors() const noexcept { return factors_; }
  bool is_constant() const noexcept;
  std::string describe() const;

 private:
  std::vector<InnerFactor> factors_;
};

struct InnerValue {
  cplx value;
  double modulus_low = 0.0;
  double modulus_high = 0.0;
  /// log |value|^2 of the central value, -inf at a zero.
  double log_mod_sq = 0.0;
  bool exact_zero = false;

  /// 1 - |value|^2 without cancellation when |value| is close to 1.
  double one_minus_mod_sq() const;
};

InnerValue eval_inner(const InnerFunction& theta, const GapPoint& z);

/// kappa_m = max over stored n >= m (1-based) of the certified upper end of |Theta(lambda_n)|.
double tail_kappa(const InnerFunction& theta, const BlaschkeSequence& seq, std::size_t m);

/// kappa_m for m = 1..size in one backward pass.
std::vector<double> kappa_profile(const InnerFunction& theta, const BlaschkeSequence& seq);

}  // namespace thinseq
