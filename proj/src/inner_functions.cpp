#include "thinseq/inner_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "thinseq/errors.hpp"

namespace thinseq {

namespace {

struct Accumulator {
  cplx value{1.0, 0.0};
  double log_mod_sq = 0.0;
  double low_factor = 1.0;
  bool zero = false;

  void blaschke_zero(const GapPoint& a, const GapPoint& z) {
    const cplx b = blaschke_factor(a, z);
    if (b == cplx{0.0, 0.0}) {
      zero = true;
      return;
    }
    value *= b;
    const double y = one_minus_rho_sq(a, z);
    log_mod_sq += y < 0.5 ? std::log1p(-y) : std::log(std::norm(b));
  }
};

}  // namespace

TruncatedBlaschke TruncatedBlaschke::make(BlaschkeSequence seq, std::size_t cutoff) {
  if (cutoff > seq.size()) throw DomainError("TruncatedBlaschke: cutoff exceeds stored points");
  TruncatedBlaschke t;
  t.tail_sum = seq.gap_sum_from(cutoff + 1);
  t.cutoff = cutoff;
  t.seq = std::move(seq);
  return t;
}

InnerFunction::InnerFunction(std::vector<InnerFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_)
    if (const auto* s = std::get_if<AtomicSingular>(&f); s && !(s->mass > 0.0))
      throw DomainError("AtomicSingular: mass must be positive");
}

InnerFunction InnerFunction::monomial(unsigned power) {
  return blaschke(std::vector<GapPoint>(power, GapPoint{}));
}

InnerFunction InnerFunction::blaschke(std::vector<GapPoint> zeros) {
  return InnerFunction({FiniteBlaschke{std::move(zeros)}});
}

InnerFunction InnerFunction::atomic_singular(double mass, double boundary_arg) {
  return InnerFunction({AtomicSingular{mass, boundary_arg}});
}

InnerFunction InnerFunction::truncated_blaschke(BlaschkeSequence seq, std::size_t cutoff) {
  return InnerFunction({TruncatedBlaschke::make(std::move(seq), cutoff)});
}

InnerFunction InnerFunction::operator*(const InnerFunction& other) const {
  auto merged = factors_;
  merged.insert(merged.end(), other.factors_.begin(), other.factors_.end());
  return InnerFunction(std::move(merged));
}

bool InnerFunction::is_constant() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(), [](const InnerFactor& f) {
    if (const auto* b = std::get_if<FiniteBlaschke>(&f)) return b->zeros.empty();
    if (const auto* t = std::get_if<TruncatedBlaschke>(&f)) return t->cutoff == 0;
    return false;
  });
}

std::string InnerFunction::describe() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out << " * ";
    std::visit(
        [&](const auto& f) {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, FiniteBlaschke>)
            out << "blaschke(" << f.zeros.size() << " zeros)";
          else if constexpr (std::is_same_v<T, AtomicSingular>)
            out << "atomic-singular(mass=" << f.mass << ", arg=" << f.boundary_arg << ")";
          else
            out << "truncated-blaschke(" << f.seq.generator().describe() << ", cutoff="
                << f.cutoff << ")";
        },
        factors_[i]);
  }
  return out.str();
}

double InnerValue::one_minus_mod_sq() const {
  if (exact_zero) return 1.0;
  return -std::expm1(log_mod_sq);
}

InnerValue eval_inner(const InnerFunction& theta, const GapPoint& z) {
  Accumulator acc;
  for (const auto& factor : theta.factors()) {
    if (acc.zero) break;
    if (const auto* b = std::get_if<FiniteBlaschke>(&factor)) {
      for (const auto& a : b->zeros) acc.blaschke_zero(a, z);
    } else if (const auto* s = std::get_if<AtomicSingular>(&factor)) {
      const double rz = z.modulus();
      const double delta = z.arg() - s->boundary_arg;
      const double half = std::sin(0.5 * delta);
      const double dist_sq = z.gap() * z.gap() + 4.0 * rz * half * half;
      const double poisson = z.one_minus_mod_sq() / dist_sq;
      const double conj = 2.0 * rz * std::sin(delta) / dist_sq;
      acc.value *= std::exp(cplx{-s->mass * poisson, -s->mass * conj});
      acc.log_mod_sq += -2.0 * s->mass * poisson;
    } else {
      const auto& t = std::get<TruncatedBlaschke>(factor);
      for (std::size_t k = 1; k <= t.cutoff; ++k) acc.blaschke_zero(t.seq.at(k), z);
      acc.low_factor *= tail_product_lower_bound(z.gap(), t.tail_sum);
    }
  }

  InnerValue out;
  if (acc.zero) {
    out.value = {0.0, 0.0};
    out.exact_zero = true;
    out.log_mod_sq = -std::numeric_limits<double>::infinity();
    return out;
  }
  out.value = acc.value;
  out.log_mod_sq = acc.log_mod_sq;
  out.modulus_high = std::min(1.0, std::abs(acc.value));
  out.modulus_low = out.modulus_high * acc.low_factor;
  return out;
}

double tail_kappa(const InnerFunction& theta, const BlaschkeSequence& seq, std::size_t m) {
  if (m < 1 || m > seq.size()) throw DomainError("tail_kappa: m outside the stored window");
  double kappa = 0.0;
  for (std::size_t n = m; n <= seq.size(); ++n)
    kappa = std::max(kappa, eval_inner(theta, seq.at(n)).modulus_high);
  return kappa;
}

std::vector<double> kappa_profile(const InnerFunction& theta, const BlaschkeSequence& seq) {
  std::vector<double> out(seq.size());
  double running = 0.0;
  for (std::size_t n = seq.size(); n >= 1; --n) {
    running = std::max(running, eval_inner(theta, seq.at(n)).modulus_high);
    out[n - 1] = running;
  }
  return out;
}

}  // namespace thinseq
