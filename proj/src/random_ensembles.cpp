#include "perspecta/random_ensembles.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <numbers>

namespace perspecta {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t avalanche(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_label(std::uint64_t key, std::string_view label) {
  std::uint64_t h = key ^ kGolden;
  for (unsigned char ch : label) {
    h = (h ^ ch) * 0x100000001b3ULL;
  }
  return avalanche(avalanche(h));
}

}  // namespace

RngStream::RngStream(std::uint64_t root_seed)
    : root_(root_seed),
      key_(avalanche(root_seed + kGolden)),
      path_(),
      engine_(key_) {}

RngStream::RngStream(std::uint64_t root, std::uint64_t key, std::string path)
    : root_(root), key_(key), path_(std::move(path)), engine_(key) {}

RngStream RngStream::fork(std::string_view label) const {
  std::string child_path =
      path_.empty() ? std::string(label) : path_ + "/" + std::string(label);
  return RngStream(root_, hash_label(key_, label), std::move(child_path));
}

RngStream RngStream::fork(std::string_view label, std::uint64_t index) const {
  std::string component = std::string(label) + "=" + std::to_string(index);
  std::string child_path = path_.empty() ? component : path_ + "/" + component;
  return RngStream(root_, hash_label(key_, component), std::move(child_path));
}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
  return a + (b - a) * uniform();
}

double RngStream::log_uniform(double a, double b) {
  return std::exp(uniform(std::log(a), std::log(b)));
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
  // Rejection-free would bias; n is tiny here so the modulo bias from a
  // 64-bit draw is negligible, but rejection keeps streams exact.
  if (n == 0) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

double RngStream::gaussian() {
  const double u1 = uniform_open();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Complex RngStream::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im);
}

Matrix random_gaussian_matrix(const EnsembleConfig& cfg, RngStream& stream) {
  Matrix g(cfg.dim, cfg.dim);
  for (int i = 0; i < cfg.dim; ++i) {
    for (int j = 0; j < cfg.dim; ++j) {
      g(i, j) = cfg.complex_entries ? stream.complex_gaussian()
                                    : Complex(stream.gaussian(), 0.0);
    }
  }
  return g;
}

Matrix random_unitary(const EnsembleConfig& cfg, RngStream& stream) {
  Matrix g = random_gaussian_matrix(cfg, stream);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases so the distribution does not depend on the QR convention.
  for (int j = 0; j < cfg.dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    const Complex phase = mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

namespace {

PDMatrix pd_from_spectrum(const EnsembleConfig& cfg, RngStream& stream,
                          double lo, double hi) {
  constexpr int kRetryCap = 8;
  for (int attempt = 0;; ++attempt) {
    auto draw = stream.fork("pd", static_cast<std::uint64_t>(attempt));
    Matrix q = random_unitary(cfg, draw);
    RealVector lambda(cfg.dim);
    for (int i = 0; i < cfg.dim; ++i) {
      lambda(i) = draw.log_uniform(lo, hi);
    }
    try {
      return PDMatrix::from(
          hermitize(q * lambda.asDiagonal() * q.adjoint()));
    } catch (const Error&) {
      if (attempt + 1 >= kRetryCap) throw;
    }
  }
}

}  // namespace

PDMatrix random_pd(const EnsembleConfig& cfg, RngStream& stream) {
  const double s = std::sqrt(cfg.cond_target);
  return pd_from_spectrum(cfg, stream, 1.0 / s, s);
}

PDMatrix random_pd_spectrum(const EnsembleConfig& cfg, RngStream& stream,
                            double lo, double hi) {
  return pd_from_spectrum(cfg, stream, lo, hi);
}

Matrix random_contraction(const EnsembleConfig& cfg, RngStream& stream) {
  Matrix g = random_gaussian_matrix(cfg, stream);
  const double margin = 0.5 * stream.uniform_open();
  Eigen::JacobiSVD<Matrix> svd(g);
  const double sigma_max = svd.singularValues()(0);
  return g / (sigma_max * (1.0 + margin));
}

Matrix random_invertible(const EnsembleConfig& cfg, RngStream& stream) {
  auto u_stream = stream.fork("u");
  auto v_stream = stream.fork("v");
  Matrix u = random_unitary(cfg, u_stream);
  Matrix v = random_unitary(cfg, v_stream);
  const double s = std::sqrt(cfg.cond_target);
  RealVector sigma(cfg.dim);
  for (int i = 0; i < cfg.dim; ++i) {
    sigma(i) = stream.log_uniform(1.0 / s, s);
  }
  return u * sigma.asDiagonal() * v.adjoint();
}

std::pair<PDMatrix, PDMatrix> random_commuting_pd_pair(
    const EnsembleConfig& cfg, RngStream& stream) {
  const double s = std::sqrt(cfg.cond_target);
  Matrix q = random_unitary(cfg, stream);
  RealVector la(cfg.dim), lb(cfg.dim);
  for (int i = 0; i < cfg.dim; ++i) la(i) = stream.log_uniform(1.0 / s, s);
  for (int i = 0; i < cfg.dim; ++i) lb(i) = stream.log_uniform(1.0 / s, s);
  PDMatrix a = PDMatrix::from(hermitize(q * la.asDiagonal() * q.adjoint()));
  PDMatrix b = PDMatrix::from(hermitize(q * lb.asDiagonal() * q.adjoint()));
  return {std::move(a), std::move(b)};
}

ProjectionSplit random_projection_split(const EnsembleConfig& cfg,
                                        RngStream& stream) {
  if (cfg.dim < 2) {
    throw DimensionError("projection split needs dim >= 2");
  }
  Matrix q = random_unitary(cfg, stream);
  const auto cut = static_cast<Eigen::Index>(
      1 + stream.uniform_index(static_cast<std::uint64_t>(cfg.dim - 1)));
  ProjectionSplit split;
  split.cut = cut;
  split.p_basis = q.leftCols(cut);
  split.q_basis = q.rightCols(cfg.dim - cut);
  split.p = split.p_basis * split.p_basis.adjoint();
  split.q = split.q_basis * split.q_basis.adjoint();
  return split;
}

std::pair<Matrix, Matrix> random_projection_pair(const EnsembleConfig& cfg,
                                                 RngStream& stream) {
  ProjectionSplit split = random_projection_split(cfg, stream);
  return {std::move(split.p), std::move(split.q)};
}

}  // namespace perspecta
