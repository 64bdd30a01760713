#include "thinseq/earl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "thinseq/errors.hpp"
#include "thinseq/kernels.hpp"

namespace thinseq {

struct BeurlingSystem::Data {
  std::vector<GapPoint> zeros;
  double gamma = 1.0;
  double bound = 0.0;
  // One row per sign pattern.
  std::vector<std::vector<double>> signs;
  std::vector<double> scale;               // M_w
  std::vector<std::vector<cplx>> stages;   // Schur parameters of g_w / M_w
};

double earl_bound(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    std::ostringstream msg;
    msg << "earl_bound: delta must lie in (0, 1], got " << delta;
    throw DomainError(msg.str());
  }
  const double r = (1.0 + std::sqrt((1.0 - delta) * (1.0 + delta))) / delta;
  return r * r;
}

namespace {

// Schur parameters for interpolating `values` at `zeros`; empty when some stage
// reaches modulus 1 (the Pick matrix is not strictly positive).
std::vector<cplx> schur_stages(const std::vector<GapPoint>& zeros, std::vector<cplx> values) {
  const std::size_t n = zeros.size();
  std::vector<cplx> stages;
  stages.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx v = values[i];
    if (!(std::abs(v) < 1.0)) return {};
    stages.push_back(v);
    for (std::size_t k = i + 1; k < n; ++k)
      values[k] = (values[k] - v) / ((1.0 - std::conj(v) * values[k]) * blaschke_factor(zeros[i], zeros[k]));
  }
  return stages;
}

}  // namespace

BeurlingSystem BeurlingSystem::build(std::vector<GapPoint> zeros, const BeurlingOptions& opts) {
  const std::size_t n = zeros.size();
  if (n == 0) throw DomainError("BeurlingSystem: empty window");
  if (n > kMaxBeurlingWindow) {
    std::ostringstream msg;
    msg << "BeurlingSystem: window of " << n << " points exceeds the limit of "
        << kMaxBeurlingWindow;
    throw DomainError(msg.str());
  }
  if (!(opts.eta > 0.0)) throw DomainError("BeurlingSystem: eta must be positive");

  const auto seq = BlaschkeSequence::from_points(zeros);
  auto data = std::make_shared<Data>();
  data->zeros = std::move(zeros);
  if (n > 1) {
    const auto d = window_deltas(seq, 1, n);
    data->gamma = *std::min_element(d.begin(), d.end());
  }

  const Matrix g = gram_matrix(prepare(KernelFamily::hardy(), data->zeros));
  Eigen::LLT<Matrix> llt(g);
  if (llt.info() != Eigen::Success) throw NonInterpolatingError("BeurlingSystem: singular window Gram");
  const Matrix linv = llt.matrixL().solve(Matrix::Identity(g.rows(), g.cols()));

  const std::size_t patterns = std::size_t{1} << (n - 1);
  double total = 0.0;
  for (std::size_t p = 0; p < patterns; ++p) {
    std::vector<double> w(n, 1.0);
    for (std::size_t j = 1; j < n; ++j)
      if (p >> (j - 1) & 1U) w[j] = -1.0;

    Matrix dgd = g;
    for (Eigen::Index r = 0; r < dgd.rows(); ++r)
      for (Eigen::Index c = 0; c < dgd.cols(); ++c) dgd(r, c) *= w[static_cast<std::size_t>(r)] * w[static_cast<std::size_t>(c)];
    Matrix b = linv * dgd * linv.adjoint();
    b = 0.5 * (b + b.adjoint()).eval();
    const double pick = std::sqrt(std::max(1.0, Eigen::SelfAdjointEigenSolver<Matrix>(b, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff()));

    double m = pick * (1.0 + opts.eta);
    std::vector<cplx> stages;
    for (int attempt = 0; attempt < 60; ++attempt, m *= 1.0 + opts.eta) {
      std::vector<cplx> values(n);
      for (std::size_t j = 0; j < n; ++j) values[j] = w[j] / m;
      stages = schur_stages(data->zeros, values);
      if (!stages.empty()) break;
    }
    if (stages.empty()) throw NonInterpolatingError("BeurlingSystem: Schur algorithm failed");
    data->signs.push_back(std::move(w));
    data->scale.push_back(m);
    data->stages.push_back(std::move(stages));
    total += m * m;
  }
  data->bound = total / static_cast<double>(patterns);

  BeurlingSystem sys;
  sys.data_ = std::move(data);
  return sys;
}

BeurlingSystem BeurlingSystem::from_window(const BlaschkeSequence& seq, std::size_t first,
                                           std::size_t last, const BeurlingOptions& opts) {
  if (first < 1 || last > seq.size() || first > last)
    throw DomainError("BeurlingSystem: window outside the stored sequence");
  return build({seq.points().begin() + static_cast<std::ptrdiff_t>(first - 1),
                seq.points().begin() + static_cast<std::ptrdiff_t>(last)},
               opts);
}

const std::vector<GapPoint>& BeurlingSystem::zeros() const noexcept { return data_->zeros; }
double BeurlingSystem::gamma() const noexcept { return data_->gamma; }
double BeurlingSystem::certified_bound() const noexcept { return data_->bound; }

std::vector<cplx> BeurlingSystem::evaluate_all(const GapPoint& z) const {
  const auto& d = *data_;
  const std::size_t n = d.zeros.size();
  std::vector<cplx> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = blaschke_factor(d.zeros[i], z);

  std::vector<cplx> h(n, cplx{0.0, 0.0});
  for (std::size_t p = 0; p < d.stages.size(); ++p) {
    const auto& v = d.stages[p];
    cplx f{0.0, 0.0};
    for (std::size_t i = n; i-- > 0;) {
      const cplx bf = b[i] * f;
      f = (v[i] + bf) / (1.0 + std::conj(v[i]) * bf);
    }
    const cplx g = d.scale[p] * f;
    for (std::size_t j = 0; j < n; ++j) h[j] += d.signs[p][j] * g;
  }
  const double count = static_cast<double>(d.stages.size());
  for (auto& x : h) {
    x /= count;
    x *= x;
  }
  return h;
}

cplx beurling_function(const BeurlingSystem& sys, std::size_t j, const GapPoint& z) {
  if (j < 1 || j > sys.size()) throw DomainError("beurling_function: index outside the window");
  return sys.evaluate_all(z)[j - 1];
}

double beurling_sum(const BeurlingSystem& sys, const GapPoint& z) {
  double s = 0.0;
  for (const auto& f : sys.evaluate_all(z)) s += std::abs(f);
  return s;
}

cplx BoundedInterpolant::evaluate(const GapPoint& z) const {
  const auto f = system.evaluate_all(z);
  cplx s{0.0, 0.0};
  for (std::size_t j = 0; j < f.size(); ++j) s += weights[j] * f[j];
  return s;
}

BoundedInterpolant interpolate_bounded(const BeurlingSystem& sys, std::vector<cplx> weights) {
  if (weights.size() != sys.size()) throw DomainError("interpolate_bounded: one weight per window point");
  double sup = 0.0;
  for (const auto& w : weights) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw DomainError("interpolate_bounded: weights must be finite");
    sup = std::max(sup, std::abs(w));
  }
  return {sys, std::move(weights), sys.certified_bound() * sup};
}

std::vector<GapPoint> earl_grid(const BeurlingSystem& sys, const GridSpec& spec) {
  auto pts = polar_grid(spec);
  std::vector<double> rings;
  for (int i = 41; i <= 60; ++i) rings.push_back(std::ldexp(1.0, -i));
  rings.push_back(1e-100);
  rings.push_back(1e-300);
  for (double gap : rings)
    for (int a = 0; a < spec.angles; ++a)
      pts.push_back(GapPoint::polar(gap, 2.0 * std::numbers::pi * a / spec.angles));
  pts.insert(pts.end(), sys.zeros().begin(), sys.zeros().end());
  return pts;
}

SupResult beurling_grid_sup(const BeurlingSystem& sys, const GridSpec& spec) {
  return grid_maximize([&](const GapPoint& z) { return beurling_sum(sys, z); }, earl_grid(sys, spec),
                       spec);
}

SupResult interpolant_grid_sup(const BoundedInterpolant& f, const GridSpec& spec) {
  return grid_maximize([&](const GapPoint& z) { return std::abs(f.evaluate(z)); },
                       earl_grid(f.system, spec), spec);
}

}  // namespace thinseq
