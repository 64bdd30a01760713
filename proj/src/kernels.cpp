#include "thinseq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thinseq/errors.hpp"

namespace thinseq {

KernelFamily KernelFamily::model(InnerFunction theta) {
  if (theta.is_constant()) throw DomainError("model family needs a nonconstant inner function");
  KernelFamily f;
  f.theta_ = std::move(theta);
  return f;
}

const InnerFunction& KernelFamily::theta() const {
  if (!theta_) throw DomainError("Hardy family has no inner function");
  return *theta_;
}

std::string KernelFamily::describe() const {
  return theta_ ? "model[" + theta_->describe() + "]" : "hardy";
}

KernelPoint prepare(const KernelFamily& family, const GapPoint& z) {
  KernelPoint p{z};
  if (!family.is_model()) return p;
  const auto v = eval_inner(family.theta(), z);
  p.theta = v.value;
  p.theta_defect = v.one_minus_mod_sq();
  if (!(p.theta_defect > 0.0)) {
    std::ostringstream msg;
    msg << "model kernel degenerate: |Theta| = 1 at interior point (gap " << z.gap() << ")";
    throw DomainError(msg.str());
  }
  return p;
}

std::vector<KernelPoint> prepare(const KernelFamily& family, const std::vector<GapPoint>& pts) {
  std::vector<KernelPoint> out;
  out.reserve(pts.size());
  for (const auto& z : pts) out.push_back(prepare(family, z));
  return out;
}

cplx szego_kernel(const GapPoint& l, const GapPoint& z) {
  return 1.0 / one_minus_conj_product(l, z);
}

cplx szego_inner(const GapPoint& l, const GapPoint& m) {
  return std::sqrt(l.one_minus_mod_sq() * m.one_minus_mod_sq()) / one_minus_conj_product(l, m);
}

cplx model_kernel(const InnerFunction& theta, const GapPoint& l, const GapPoint& z) {
  const auto tl = eval_inner(theta, l);
  if (l == z) return tl.one_minus_mod_sq() / l.one_minus_mod_sq();
  const auto tz = eval_inner(theta, z);
  return (1.0 - std::conj(tl.value) * tz.value) / one_minus_conj_product(l, z);
}

cplx model_inner(const InnerFunction& theta, const GapPoint& l, const GapPoint& m) {
  const auto family = KernelFamily::model(theta);
  return kernel_inner(prepare(family, l), prepare(family, m));
}

cplx kernel_inner(const KernelPoint& l, const KernelPoint& m) {
  if (l.z == m.z) return 1.0;
  const cplx s = szego_inner(l.z, m.z);
  if (l.theta == cplx{0.0, 0.0} && m.theta == cplx{0.0, 0.0} && l.theta_defect == 1.0 &&
      m.theta_defect == 1.0)
    return s;
  return s * (1.0 - std::conj(l.theta) * m.theta) / std::sqrt(l.theta_defect * m.theta_defect);
}

cplx normalized_kernel_at(const KernelPoint& l, const KernelPoint& z) {
  const cplx num = 1.0 - std::conj(l.theta) * z.theta;
  return num / one_minus_conj_product(l.z, z.z) / std::sqrt(l.norm_sq());
}

Matrix gram_matrix(const std::vector<KernelPoint>& pts) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  Matrix g(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    g(m, m) = 1.0;
    for (Eigen::Index k = m + 1; k < n; ++k) {
      g(m, k) = kernel_inner(pts[static_cast<std::size_t>(k)], pts[static_cast<std::size_t>(m)]);
      g(k, m) = std::conj(g(m, k));
    }
  }
  return g;
}

GramWindow build_gram(const KernelFamily& family, const BlaschkeSequence& seq, std::size_t first,
                      std::size_t last) {
  if (first < 1 || last > seq.size() || first > last) {
    std::ostringstream msg;
    msg << "build_gram: window [" << first << ", " << last << "] outside stored range [1, "
        << seq.size() << "]";
    throw DomainError(msg.str());
  }
  const auto all = prepare(family, seq.points());
  const std::vector<KernelPoint> window(all.begin() + static_cast<std::ptrdiff_t>(first - 1),
                                        all.begin() + static_cast<std::ptrdiff_t>(last));
  GramWindow out{family, first, last, gram_matrix(window), 0.0};

  const auto& tail_ref = all.back();
  const double kappa_tail = std::abs(tail_ref.theta);
  for (const auto& pj : window) {
    double row = 0.0;
    for (std::size_t k = last; k < all.size(); ++k) row += std::abs(kernel_inner(pj, all[k]));
    const double g = pj.z.gap();
    double unstored = std::sqrt(2.0 * (2.0 - g) / g) * seq.tail_sqrt_gap_sum();
    if (family.is_model())
      unstored *= (1.0 + std::abs(pj.theta) * kappa_tail) /
                  std::sqrt(pj.theta_defect * tail_ref.theta_defect);
    out.truncation_certificate = std::max(out.truncation_certificate, row + unstored);
  }
  return out;
}

cplx KernelCombination::evaluate(const GapPoint& z) const {
  const auto zp = prepare(family, z);
  cplx sum{0.0, 0.0};
  for (std::size_t j = 0; j < points.size(); ++j)
    sum += coeffs[j] * normalized_kernel_at(prepare(family, points[j]), zp);
  return sum;
}

Vector KernelCombination::coefficient_vector() const {
  Vector c(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t j = 0; j < coeffs.size(); ++j) c(static_cast<Eigen::Index>(j)) = coeffs[j];
  return c;
}

double KernelCombination::norm() const {
  if (points.empty()) return 0.0;
  const Matrix g = gram_matrix(prepare(family, points));
  const Vector c = coefficient_vector();
  return std::sqrt(std::max(0.0, c.dot(g * c).real()));
}

KernelCombination project_model(const KernelCombination& f, const InnerFunction& theta) {
  if (f.family.is_model()) throw DomainError("project_model expects a Hardy-space combination");
  KernelCombination out{KernelFamily::model(theta), f.points, f.coeffs};
  for (std::size_t j = 0; j < f.points.size(); ++j)
    out.coeffs[j] *= std::sqrt(eval_inner(theta, f.points[j]).one_minus_mod_sq());
  return out;
}

KernelCombination toeplitz_conj_apply(const KernelCombination& f, const InnerFunction& theta) {
  KernelCombination out = f;
  if (f.family.is_model()) {
    std::fill(out.coeffs.begin(), out.coeffs.end(), cplx{0.0, 0.0});
    return out;
  }
  for (std::size_t j = 0; j < f.points.size(); ++j)
    out.coeffs[j] *= std::conj(eval_inner(theta, f.points[j]).value);
  return out;
}

}  // namespace thinseq
