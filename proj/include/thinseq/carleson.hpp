#pragma once

// Embedding constants of the discrete tail measures
//   mu_N    = sum_{k>=N} (1 - |l_k|^2) delta_{l_k}
//   nu_N    = sum_{k>=N} (1 - |l_k|^2) / delta_k delta_{l_k}
//   sigma_N = sum_{k>=N} ||K^T_{l_k}||^{-2} delta_{l_k}
// For such a measure ||f||^2_{L^2} = sum_k W_k |<f, k_k>|^2 with W_k = w_k ||K_k||^2,
// so the Carleson constant is lambda_max(W^{1/2} G W^{1/2}) over the tail Gram.
// The reproducing-kernel constant sup_z sum_k w_k |k_z(l_k)|^2 is reported
// squared for both the Hardy and the model family.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "thinseq/disk_geometry.hpp"
#include "thinseq/kernels.hpp"
#include "thinseq/spectral.hpp"

namespace thinseq {

enum class MeasureKind { Mu, Nu, Sigma };

struct DiscreteMeasure {
  MeasureKind kind = MeasureKind::Mu;
  BlaschkeSequence seq;
  std::size_t first = 1;  // N
  std::size_t last = 1;   // cutoff M
  std::vector<double> weights;     // w_k for k = first..last
  std::vector<double> normalized;  // W_k = w_k ||K_k||^2 in the matching family
  /// Worst-case relative growth of W_k when the certified lower ends of delta_k
  /// are used instead of their computed values (nu only, 0 otherwise).
  double weight_uncertainty = 0.0;
  std::optional<InnerFunction> theta;  // sigma only

  static DiscreteMeasure mu(const BlaschkeSequence& seq, std::size_t first, std::size_t last);
  /// delta_k is the separation product over all stored points.
  static DiscreteMeasure nu(const BlaschkeSequence& seq, std::size_t first, std::size_t last);
  static DiscreteMeasure sigma(const BlaschkeSequence& seq, std::size_t first, std::size_t last,
                               const InnerFunction& theta);

  std::size_t size() const noexcept { return weights.size(); }
};

struct Bounded {
  double value = 0.0;
  double error_bar = 0.0;
  double upper() const noexcept { return value + error_bar; }
  double lower() const noexcept { return value - error_bar; }
};

/// Throws IncompatibleMeasure unless (mu|nu, Hardy) or (sigma, Model).
void check_pairing(const DiscreteMeasure& m, const KernelFamily& family);

/// lambda_max of the weighted window Gram; the error bar combines the Gram
/// truncation certificate (scaled by the largest weight), the nu weight
/// uncertainty and the eigen residual.
Bounded carleson_constant(const DiscreteMeasure& m, const KernelFamily& family,
                          const EigenOptions& opts = {});

struct GridSpec {
  int max_level = 40;       // radii 1 - 2^-i for i = 0..max_level
  int angles = 256;
  bool refine = true;       // local search around the incumbent
  std::size_t jobs = 1;
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Polar grid; i = 0 contributes the origin only.
std::vector<GapPoint> polar_grid(const GridSpec& spec);

struct SupResult {
  double value = 0.0;
  GapPoint argmax;
};

/// Maximizes fn over `candidates` (evaluated on grid.jobs threads), then, if
/// grid.refine, runs a pattern search in (log2 gap, arg) around the best point.
SupResult grid_maximize(const std::function<double(const GapPoint&)>& fn,
                        const std::vector<GapPoint>& candidates, const GridSpec& grid);

/// sup over z of sum_k W_k |<k_z, k_k>|^2, i.e. sum_k w_k |k_z(l_k)|^2, over the
/// polar grid, every measure point, and a refinement pass around the best point.
SupResult reproducing_constant(const DiscreteMeasure& m, const KernelFamily& family,
                               const GridSpec& grid = {});

/// The same sum at a single point.
double reproducing_sum(const DiscreteMeasure& m, const KernelFamily& family, const GapPoint& z);

struct WeierstrassSides {
  double product_side = 1.0;        // prod (1 - x_k)
  double one_minus_sum_side = 1.0;  // 1 - sum x_k
  double slack() const noexcept { return product_side - one_minus_sum_side; }
};

/// x_k = 1 - rho(l_k, l_probe)^2 over k in [first, last], k != probe.
WeierstrassSides weierstrass_gap(const BlaschkeSequence& seq, std::size_t first, std::size_t last,
                                 std::size_t probe);

/// (2 - prod_{k != probe} rho(l_k, l_probe)^2) / (1 + kappa)^2, a lower bound for
/// the squared model reproducing constant of sigma_N.
double chain_lower_bound(const BlaschkeSequence& seq, std::size_t first, std::size_t last,
                         std::size_t probe, double kappa);

/// eps_N = max(C(mu_N) - 1, kappa^2 / (1 - kappa^2)); the ratio C_T(sigma_N) / C(mu_N)
/// lies in [1 / (1 + eps_N), 1 + eps_N].
struct RatioBracket {
  double epsilon = 0.0;
  double low() const noexcept { return 1.0 / (1.0 + epsilon); }
  double high() const noexcept { return 1.0 + epsilon; }
  bool contains(double r) const noexcept { return r >= low() && r <= high(); }
};
RatioBracket ratio_bracket(double carleson_mu, double kappa);

}  // namespace thinseq
