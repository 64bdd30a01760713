#pragma once

// Szego kernels K_l(z) = 1 / (1 - conj(l) z) of H^2 and model-space kernels
// K^T_l(z) = (1 - conj(T(l)) T(z)) / (1 - conj(l) z) of K_T = H^2 (-) T H^2.
//
// Inner-product convention: inner(l, m) = K_l(m) / (||K_l|| ||K_m||), i.e. the
// normalized <k_l, k_m>, linear in the first slot. The Gram window stores
// G(m, n) = inner(l_n, l_m), so for f = sum_n c_n k_n one has
// (G c)_m = <f, k_m> = f(l_m) / ||K_m|| and c* G c = ||f||^2.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thinseq/disk_geometry.hpp"
#include "thinseq/inner_functions.hpp"
#include "thinseq/linalg.hpp"

namespace thinseq {

enum class KernelKind { Hardy, Model };

class KernelFamily {
 public:
  static KernelFamily hardy() { return KernelFamily{}; }
  /// Throws DomainError for a constant symbol.
  static KernelFamily model(InnerFunction theta);

  KernelKind kind() const noexcept { return theta_ ? KernelKind::Model : KernelKind::Hardy; }
  bool is_model() const noexcept { return theta_.has_value(); }
  /// Throws for the Hardy family.
  const InnerFunction& theta() const;
  std::string describe() const;

 private:
  std::optional<InnerFunction> theta_;
};

/// A point together with the symbol data the model kernels need there.
struct KernelPoint {
  GapPoint z;
  cplx theta{0.0, 0.0};
  double theta_defect = 1.0;  // 1 - |T(z)|^2

  /// ||K_z||^2 in the family this point was prepared for.
  double norm_sq() const { return theta_defect / z.one_minus_mod_sq(); }
};

KernelPoint prepare(const KernelFamily& family, const GapPoint& z);
std::vector<KernelPoint> prepare(const KernelFamily& family, const std::vector<GapPoint>& pts);

/// 1 / (1 - conj(l) z).
cplx szego_kernel(const GapPoint& l, const GapPoint& z);
/// sqrt((1 - |l|^2)(1 - |m|^2)) / (1 - conj(l) m).
cplx szego_inner(const GapPoint& l, const GapPoint& m);

cplx model_kernel(const InnerFunction& theta, const GapPoint& l, const GapPoint& z);
/// Normalized model-kernel inner product; throws DomainError if |T| = 1 at either point.
cplx model_inner(const InnerFunction& theta, const GapPoint& l, const GapPoint& m);

/// Normalized inner product of two prepared points of the same family.
cplx kernel_inner(const KernelPoint& l, const KernelPoint& m);

/// Normalized kernel k_l evaluated at a prepared point z.
cplx normalized_kernel_at(const KernelPoint& l, const KernelPoint& z);

/// Gram matrix G(m, n) = kernel_inner(p_n, p_m).
Matrix gram_matrix(const std::vector<KernelPoint>& pts);

struct GramWindow {
  KernelFamily family;
  std::size_t first = 1;  // 1-based, inclusive
  std::size_t last = 1;
  Matrix entries;
  /// Schur-test bound on the perturbation of the extremal eigenvalues caused by
  /// the points after `last`: max over window rows of sum_{k > last} |G(j, k)|,
  /// with the generator's unstored tail bounded through sqrt(1 - rho^2) <=
  /// sqrt(2 (2 - g_j) g_k / g_j). For the model family the unstored points are
  /// assumed to satisfy |T| <= |T(l_last)|, which holds for radial sequences and
  /// symbols whose modulus decreases along the radius.
  double truncation_certificate = 0.0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

GramWindow build_gram(const KernelFamily& family, const BlaschkeSequence& seq, std::size_t first,
                      std::size_t last);

/// f = sum_j coeffs[j] k_{points[j]} in a fixed family.
struct KernelCombination {
  KernelFamily family;
  std::vector<GapPoint> points;
  std::vector<cplx> coeffs;

  cplx evaluate(const GapPoint& z) const;
  /// sqrt(c* G c), never by quadrature.
  double norm() const;
  Vector coefficient_vector() const;
};

/// P_T of a Hardy combination: sum c_j K_j maps to sum c_j K^T_j, which for
/// normalized kernels rescales each coefficient by sqrt(1 - |T(l_j)|^2).
KernelCombination project_model(const KernelCombination& f, const InnerFunction& theta);

/// Toeplitz operator with symbol conj(T): sum c_j K_j maps to sum c_j conj(T(l_j)) K_j.
/// Model-space inputs lie in its kernel and map to the zero combination.
KernelCombination toeplitz_conj_apply(const KernelCombination& f, const InnerFunction& theta);

}  // namespace thinseq
