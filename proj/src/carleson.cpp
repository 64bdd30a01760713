#include "thinseq/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "thinseq/errors.hpp"
#include "thinseq/parallel.hpp"

namespace thinseq {

namespace {

void check_window(const BlaschkeSequence& seq, std::size_t first, std::size_t last) {
  if (first < 1 || last > seq.size() || first > last) {
    std::ostringstream msg;
    msg << "measure window [" << first << ", " << last << "] outside stored range [1, "
        << seq.size() << "]";
    throw DomainError(msg.str());
  }
}

DiscreteMeasure base(MeasureKind kind, const BlaschkeSequence& seq, std::size_t first,
                     std::size_t last) {
  check_window(seq, first, last);
  DiscreteMeasure m;
  m.kind = kind;
  m.seq = seq;
  m.first = first;
  m.last = last;
  return m;
}

const char* kind_name(MeasureKind k) {
  switch (k) {
    case MeasureKind::Mu: return "mu";
    case MeasureKind::Nu: return "nu";
    case MeasureKind::Sigma: return "sigma";
  }
  return "?";
}

double weighted_sum(const std::vector<KernelPoint>& pts, const std::vector<double>& w,
                    const KernelPoint& z) {
  double s = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) s += w[k] * std::norm(kernel_inner(z, pts[k]));
  return s;
}

}  // namespace

DiscreteMeasure DiscreteMeasure::mu(const BlaschkeSequence& seq, std::size_t first,
                                    std::size_t last) {
  auto m = base(MeasureKind::Mu, seq, first, last);
  for (std::size_t k = first; k <= last; ++k) {
    m.weights.push_back(seq.at(k).one_minus_mod_sq());
    m.normalized.push_back(1.0);
  }
  return m;
}

DiscreteMeasure DiscreteMeasure::nu(const BlaschkeSequence& seq, std::size_t first,
                                    std::size_t last) {
  auto m = base(MeasureKind::Nu, seq, first, last);
  const auto deltas = delta_profile(seq, last, 1.0);
  for (std::size_t k = first; k <= last; ++k) {
    const auto& d = deltas[k - 1];
    m.weights.push_back(seq.at(k).one_minus_mod_sq() / d.value);
    m.normalized.push_back(1.0 / d.value);
    const double growth = d.lower > 0.0 ? d.value / d.lower - 1.0 : std::numeric_limits<double>::infinity();
    m.weight_uncertainty = std::max(m.weight_uncertainty, growth);
  }
  return m;
}

DiscreteMeasure DiscreteMeasure::sigma(const BlaschkeSequence& seq, std::size_t first,
                                       std::size_t last, const InnerFunction& theta) {
  auto m = base(MeasureKind::Sigma, seq, first, last);
  m.theta = theta;
  for (std::size_t k = first; k <= last; ++k) {
    const double defect = eval_inner(theta, seq.at(k)).one_minus_mod_sq();
    m.weights.push_back(seq.at(k).one_minus_mod_sq() / defect);
    m.normalized.push_back(1.0);
  }
  return m;
}

void check_pairing(const DiscreteMeasure& m, const KernelFamily& family) {
  const bool wants_model = m.kind == MeasureKind::Sigma;
  if (wants_model != family.is_model()) {
    std::ostringstream msg;
    msg << "measure " << kind_name(m.kind) << " cannot be paired with the "
        << (family.is_model() ? "model" : "Hardy") << " family";
    throw IncompatibleMeasure(msg.str());
  }
}

Bounded carleson_constant(const DiscreteMeasure& m, const KernelFamily& family,
                          const EigenOptions& opts) {
  check_pairing(m, family);
  const auto gram = build_gram(family, m.seq, m.first, m.last);
  Matrix a = gram.entries;
  double w_max = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double wi = std::sqrt(m.normalized[static_cast<std::size_t>(i)]);
    a.row(i) *= wi;
    a.col(i) *= wi;
    w_max = std::max(w_max, m.normalized[static_cast<std::size_t>(i)]);
  }
  const auto eig = top_eig(a, opts);
  Bounded out;
  out.value = eig.lambda_max;
  out.error_bar = gram.truncation_certificate * w_max + eig.residual_max +
                  eig.lambda_max * m.weight_uncertainty;
  return out;
}

std::vector<GapPoint> polar_grid(const GridSpec& spec) {
  if (spec.max_level < 0 || spec.angles < 1) throw DomainError("polar_grid: empty grid");
  std::vector<GapPoint> out{GapPoint{}};
  for (int i = 1; i <= spec.max_level; ++i) {
    const double gap = std::ldexp(1.0, -i);
    for (int a = 0; a < spec.angles; ++a)
      out.push_back(GapPoint::polar(gap, 2.0 * std::numbers::pi * a / spec.angles));
  }
  return out;
}

double reproducing_sum(const DiscreteMeasure& m, const KernelFamily& family, const GapPoint& z) {
  check_pairing(m, family);
  std::vector<GapPoint> pts(m.seq.points().begin() + static_cast<std::ptrdiff_t>(m.first - 1),
                            m.seq.points().begin() + static_cast<std::ptrdiff_t>(m.last));
  return weighted_sum(prepare(family, pts), m.normalized, prepare(family, z));
}

SupResult grid_maximize(const std::function<double(const GapPoint&)>& fn,
                        const std::vector<GapPoint>& candidates, const GridSpec& grid) {
  SupResult best;
  if (candidates.empty()) return best;
  std::vector<double> values(candidates.size());
  parallel_for(candidates.size(), grid.jobs, [&](std::size_t i) { values[i] = fn(candidates[i]); });
  const auto top = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) -
                                            values.begin());
  best.value = values[top];
  best.argmax = candidates[top];
  if (!grid.refine) return best;

  double s = std::log2(best.argmax.gap());
  double t = best.argmax.arg();
  double ds = 0.5;
  double dt = 2.0 * std::numbers::pi / std::max(grid.angles, 1);
  const double s_min = std::log2(kMinGap);
  for (int it = 0; it < 400 && (ds > 1e-7 || dt > 1e-12); ++it) {
    bool moved = false;
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) {
        if (a == 0 && b == 0) continue;
        const double s2 = std::clamp(s + a * ds, s_min, 0.0);
        const GapPoint z = GapPoint::polar(std::exp2(s2), t + b * dt);
        const double v = fn(z);
        if (v > best.value) {
          best.value = v;
          best.argmax = z;
          s = s2;
          t = z.arg();
          moved = true;
        }
      }
    }
    if (!moved) {
      ds *= 0.5;
      dt *= 0.5;
    }
  }
  return best;
}

SupResult reproducing_constant(const DiscreteMeasure& m, const KernelFamily& family,
                               const GridSpec& grid) {
  check_pairing(m, family);
  if (m.size() == 0) return {};
  std::vector<GapPoint> pts(m.seq.points().begin() + static_cast<std::ptrdiff_t>(m.first - 1),
                            m.seq.points().begin() + static_cast<std::ptrdiff_t>(m.last));
  const auto prepared = prepare(family, pts);
  auto candidates = polar_grid(grid);
  candidates.insert(candidates.end(), pts.begin(), pts.end());
  return grid_maximize(
      [&](const GapPoint& z) { return weighted_sum(prepared, m.normalized, prepare(family, z)); },
      candidates, grid);
}

WeierstrassSides weierstrass_gap(const BlaschkeSequence& seq, std::size_t first, std::size_t last,
                                 std::size_t probe) {
  check_window(seq, first, last);
  if (probe < first || probe > last) throw DomainError("weierstrass_gap: probe outside window");
  double log_prod = 0.0;
  double sum = 0.0;
  for (std::size_t k = first; k <= last; ++k) {
    if (k == probe) continue;
    log_prod += log_rho_sq(seq.at(k), seq.at(probe));
    sum += one_minus_rho_sq(seq.at(k), seq.at(probe));
  }
  return {std::exp(log_prod), 1.0 - sum};
}

double chain_lower_bound(const BlaschkeSequence& seq, std::size_t first, std::size_t last,
                         std::size_t probe, double kappa) {
  const auto sides = weierstrass_gap(seq, first, last, probe);
  return (2.0 - sides.product_side) / ((1.0 + kappa) * (1.0 + kappa));
}

RatioBracket ratio_bracket(double carleson_mu, double kappa) {
  if (!(kappa >= 0.0 && kappa < 1.0)) throw DomainError("ratio_bracket: kappa must lie in [0, 1)");
  return {std::max(carleson_mu - 1.0, kappa * kappa / (1.0 - kappa * kappa))};
}

}  // namespace thinseq
