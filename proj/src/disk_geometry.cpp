#include "thinseq/disk_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "thinseq/errors.hpp"

namespace thinseq {

namespace {

double half_angle_sin(const GapPoint& z, const GapPoint& w) {
  return std::sin(0.5 * (z.arg() - w.arg()));
}

void require_index(const BlaschkeSequence& seq, std::size_t n, const char* what) {
  if (n < 1 || n > seq.size()) {
    std::ostringstream msg;
    msg << what << ": index " << n << " outside stored range [1, " << seq.size() << "]";
    throw DomainError(msg.str());
  }
}

}  // namespace

GapPoint GapPoint::polar(double gap, double arg) {
  if (!(gap > 0.0 && gap <= 1.0)) {
    std::ostringstream msg;
    msg << "GapPoint: gap must lie in (0, 1], got " << gap;
    throw DomainError(msg.str());
  }
  if (!std::isfinite(arg)) throw DomainError("GapPoint: argument must be finite");
  if (gap == 1.0) return GapPoint{};
  return GapPoint{gap, std::remainder(arg, 2.0 * std::numbers::pi)};
}

GapPoint GapPoint::from_complex(cplx z) {
  const double r = std::abs(z);
  if (!(r < 1.0)) {
    std::ostringstream msg;
    msg << "GapPoint: |z| = " << r << " is not inside the unit disk";
    throw DomainError(msg.str());
  }
  if (r == 0.0) return GapPoint{};
  return polar(1.0 - r, std::arg(z));
}

cplx GapPoint::value() const {
  if (is_origin()) return {0.0, 0.0};
  return std::polar(modulus(), arg_);
}

cplx one_minus_conj_product(const GapPoint& a, const GapPoint& z) {
  const double ra = a.modulus();
  const double rz = z.modulus();
  const double delta = z.arg() - a.arg();
  const double s = std::sin(0.5 * delta);
  const double one_minus_rr = a.gap() + z.gap() - a.gap() * z.gap();
  return {one_minus_rr + 2.0 * ra * rz * s * s, -ra * rz * std::sin(delta)};
}

PairMetrics pair_metrics(const GapPoint& z, const GapPoint& w) {
  const double s = half_angle_sin(z, w);
  const double cross = 4.0 * z.modulus() * w.modulus() * s * s;
  const double dg = w.gap() - z.gap();
  const double one_minus_rr = z.gap() + w.gap() - z.gap() * w.gap();
  return {dg * dg + cross, one_minus_rr * one_minus_rr + cross};
}

double pseudo_distance(const GapPoint& z, const GapPoint& w) {
  const auto m = pair_metrics(z, w);
  return std::sqrt(m.diff_sq / m.denom_sq);
}

double one_minus_rho_sq(const GapPoint& z, const GapPoint& w) {
  const auto m = pair_metrics(z, w);
  return std::min(1.0, z.one_minus_mod_sq() * w.one_minus_mod_sq() / m.denom_sq);
}

double log_rho_sq(const GapPoint& z, const GapPoint& w) {
  const auto m = pair_metrics(z, w);
  const double y = std::min(1.0, z.one_minus_mod_sq() * w.one_minus_mod_sq() / m.denom_sq);
  if (y < 0.5) return std::log1p(-y);
  if (m.diff_sq == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(m.diff_sq / m.denom_sq);
}

cplx blaschke_factor(const GapPoint& a, const GapPoint& z) {
  if (a.is_origin()) return z.value();
  const double ra = a.modulus();
  const double rz = z.modulus();
  const double delta = z.arg() - a.arg();
  const double s = std::sin(0.5 * delta);
  const cplx num{(a.gap() - z.gap()) - 2.0 * rz * s * s, rz * std::sin(delta)};
  const cplx den{a.gap() + z.gap() - a.gap() * z.gap() + 2.0 * ra * rz * s * s,
                 -ra * rz * std::sin(delta)};
  return -num / den;
}

GapPoint automorphism(const GapPoint& a, const GapPoint& z) {
  const cplx v = a.is_origin() ? -z.value() : std::polar(1.0, a.arg()) * blaschke_factor(a, z);
  const double y = one_minus_rho_sq(a, z);
  if (y >= 1.0 || v == cplx{0.0, 0.0}) return GapPoint{};
  const double gap = y / (1.0 + std::sqrt(1.0 - y));
  return GapPoint::polar(gap, std::arg(v));
}

double tail_product_lower_bound(double gap_z, double tail_gap_sum) {
  if (tail_gap_sum <= 0.0) return 1.0;
  const double u = 2.0 * (2.0 - gap_z) * tail_gap_sum / gap_z;
  if (u >= 1.0) return 0.0;
  return std::exp(-u / (2.0 * (1.0 - u)));
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::RadialGeometric: return "radial-geometric";
    case GeneratorKind::RadialFactorial: return "radial-factorial";
    case GeneratorKind::RadialSuperexp: return "radial-superexp";
    case GeneratorKind::Explicit: return "explicit";
  }
  return "unknown";
}

GeneratorKind generator_kind_from_string(const std::string& name) {
  if (name == "radial-geometric") return GeneratorKind::RadialGeometric;
  if (name == "radial-factorial") return GeneratorKind::RadialFactorial;
  if (name == "radial-superexp") return GeneratorKind::RadialSuperexp;
  if (name == "explicit") return GeneratorKind::Explicit;
  throw DomainError("unknown sequence kind '" + name + "'");
}

std::string GeneratorSpec::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  if (kind == GeneratorKind::RadialGeometric || kind == GeneratorKind::RadialSuperexp)
    out << "(q=" << q << ")";
  if (kind == GeneratorKind::Explicit) out << "(" << points.size() << " points)";
  return out.str();
}

const GapPoint& BlaschkeSequence::at(std::size_t n) const {
  require_index(*this, n, "BlaschkeSequence::at");
  return points_[n - 1];
}

double BlaschkeSequence::gap_sum_from(std::size_t first) const {
  double sum = tail_gap_sum_;
  for (std::size_t k = std::max<std::size_t>(first, 1); k <= points_.size(); ++k)
    sum += points_[k - 1].gap();
  return sum;
}

BlaschkeSequence BlaschkeSequence::from_points(std::vector<GapPoint> points, bool check_distinct) {
  if (check_distinct) {
    for (std::size_t j = 0; j < points.size(); ++j)
      for (std::size_t k = j + 1; k < points.size(); ++k)
        if (pair_metrics(points[j], points[k]).diff_sq == 0.0) {
          std::ostringstream msg;
          msg << "repeated point at positions " << j + 1 << " and " << k + 1;
          throw NonInterpolatingError(msg.str());
        }
  }
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Explicit;
  spec.points = points;
  BlaschkeSequence seq;
  seq.points_ = std::move(points);
  for (const auto& p : seq.points_) seq.blaschke_sum_ += p.gap();
  seq.generator_ = std::move(spec);
  return seq;
}

BlaschkeSequence generate_sequence(const GeneratorSpec& spec, std::size_t count) {
  if (spec.kind == GeneratorKind::Explicit) return BlaschkeSequence::from_points(spec.points);
  if (count < 1) throw DomainError("generate_sequence: count must be at least 1");
  const bool uses_q =
      spec.kind == GeneratorKind::RadialGeometric || spec.kind == GeneratorKind::RadialSuperexp;
  if (uses_q && !(spec.q > 0.0 && spec.q < 1.0)) {
    std::ostringstream msg;
    msg << "q must lie in (0, 1) for " << to_string(spec.kind) << ", got " << spec.q;
    throw DomainError(msg.str());
  }

  BlaschkeSequence seq;
  seq.generator_ = spec;
  double factorial_gap = 1.0;
  for (std::size_t n = 1; n <= count; ++n) {
    const double dn = static_cast<double>(n);
    double gap = 0.0;
    switch (spec.kind) {
      case GeneratorKind::RadialGeometric: gap = std::pow(spec.q, dn); break;
      case GeneratorKind::RadialFactorial:
        factorial_gap /= dn;
        gap = factorial_gap;
        break;
      case GeneratorKind::RadialSuperexp: gap = std::pow(spec.q, dn * dn); break;
      case GeneratorKind::Explicit: break;
    }
    if (gap < kMinGap) {
      seq.truncated_ = true;
      break;
    }
    seq.points_.push_back(GapPoint::polar(gap, 0.0));
    seq.blaschke_sum_ += gap;
  }

  // Geometric-ratio bounds for everything after the last stored index L.
  const double L = static_cast<double>(seq.points_.size());
  switch (spec.kind) {
    case GeneratorKind::RadialGeometric: {
      const double first = std::pow(spec.q, L + 1.0);
      seq.tail_gap_sum_ = first / (1.0 - spec.q);
      seq.tail_sqrt_gap_sum_ = std::sqrt(first) / (1.0 - std::sqrt(spec.q));
      break;
    }
    case GeneratorKind::RadialFactorial: {
      const double last = seq.points_.empty() ? 1.0 : seq.points_.back().gap();
      const double first = last / (L + 1.0);
      seq.tail_gap_sum_ = first * (L + 2.0) / (L + 1.0);
      seq.tail_sqrt_gap_sum_ = std::sqrt(first) / (1.0 - 1.0 / std::sqrt(L + 2.0));
      break;
    }
    case GeneratorKind::RadialSuperexp: {
      const double lq = std::log(spec.q);
      const double first_log = (L + 1.0) * (L + 1.0) * lq;
      seq.tail_gap_sum_ = std::exp(first_log) / (1.0 - std::exp((2.0 * L + 3.0) * lq));
      seq.tail_sqrt_gap_sum_ =
          std::exp(0.5 * first_log) / (1.0 - std::exp(0.5 * (2.0 * L + 3.0) * lq));
      break;
    }
    case GeneratorKind::Explicit: break;
  }
  return seq;
}

std::vector<DeltaEntry> delta_profile(const BlaschkeSequence& seq, std::size_t j_max,
                                      double tail_tol) {
  if (seq.size() < 2) throw DomainError("delta_profile: need at least two points");
  if (!(tail_tol > 0.0)) throw DomainError("delta_profile: tail_tol must be positive");
  const auto& pts = seq.points();
  const std::size_t last = std::min(j_max, seq.size());
  std::vector<DeltaEntry> out;
  out.reserve(last);
  for (std::size_t j = 1; j <= last; ++j) {
    double log_sum = 0.0;
    for (std::size_t k = 1; k <= pts.size(); ++k) {
      if (k == j) continue;
      const double term = log_rho_sq(pts[j - 1], pts[k - 1]);
      if (std::isinf(term)) {
        std::ostringstream msg;
        msg << "delta_profile: points " << j << " and " << k << " coincide";
        throw NonInterpolatingError(msg.str());
      }
      log_sum += 0.5 * term;
    }
    const double value = std::exp(log_sum);
    if (value == 0.0) {
      std::ostringstream msg;
      msg << "delta_profile: delta_" << j << " underflows (log delta = " << log_sum << ")";
      throw NonInterpolatingError(msg.str());
    }
    const double lower = value * tail_product_lower_bound(pts[j - 1].gap(), seq.tail_gap_sum());
    out.push_back({j, value, lower, value - lower <= tail_tol});
  }
  return out;
}

std::vector<double> window_deltas(const BlaschkeSequence& seq, std::size_t first,
                                  std::size_t last) {
  require_index(seq, first, "window_deltas");
  require_index(seq, last, "window_deltas");
  if (first > last) throw DomainError("window_deltas: empty window");
  std::vector<double> out;
  for (std::size_t j = first; j <= last; ++j) {
    double log_sum = 0.0;
    for (std::size_t k = first; k <= last; ++k)
      if (k != j) log_sum += 0.5 * log_rho_sq(seq.at(j), seq.at(k));
    out.push_back(std::exp(log_sum));
  }
  return out;
}

}  // namespace thinseq
