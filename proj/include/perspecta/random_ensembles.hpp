#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "perspecta/matrix_core.hpp"

namespace perspecta {

/// Parameters for one ensemble draw.
struct EnsembleConfig {
  int dim = 2;
  double cond_target = 100.0;
  bool complex_entries = true;
  std::uint64_t seed = 0;
};

/// Deterministic, forkable random stream. A stream is identified by a root
/// seed and a path of labels; equal (root, path) gives identical draws, and
/// distinct paths give statistically independent substreams via a labeled
/// hash chain. Forking is based on the path only, never on how many values
/// the parent has produced.
class RngStream {
 public:
  explicit RngStream(std::uint64_t root_seed);

  RngStream fork(std::string_view label) const;
  RngStream fork(std::string_view label, std::uint64_t index) const;

  std::uint64_t root_seed() const { return root_; }
  const std::string& path() const { return path_; }

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in (0, 1).
  double uniform_open();
  double uniform(double a, double b);
  double log_uniform(double a, double b);
  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);
  /// Standard normal via Box-Muller.
  double gaussian();
  /// Re + i Im with independent standard normal parts.
  Complex complex_gaussian();

 private:
  RngStream(std::uint64_t root, std::uint64_t key, std::string path);

  std::uint64_t root_;
  std::uint64_t key_;
  std::string path_;
  std::mt19937_64 engine_;
};

/// Square matrix of iid (complex) Gaussians.
Matrix random_gaussian_matrix(const EnsembleConfig& cfg, RngStream& stream);

/// Q diag(lambda) Q* with Q a random unitary and lambda log-uniform in
/// [1/sqrt(cond_target), sqrt(cond_target)].
PDMatrix random_pd(const EnsembleConfig& cfg, RngStream& stream);

/// Q diag(lambda) Q* with eigenvalues log-uniform in [lo, hi].
PDMatrix random_pd_spectrum(const EnsembleConfig& cfg, RngStream& stream,
                            double lo, double hi);

/// Haar-like unitary: QR of a Gaussian matrix with the phases of R's
/// diagonal absorbed into Q. Real orthogonal when cfg.complex_entries is
/// false.
Matrix random_unitary(const EnsembleConfig& cfg, RngStream& stream);

/// Strict contraction: a Gaussian matrix divided by its largest singular
/// value times (1 + margin), margin uniform in (0, 0.5). The resulting norm
/// is 1/(1+margin) < 1, so 1 - C*C stays safely positive definite.
Matrix random_contraction(const EnsembleConfig& cfg, RngStream& stream);

/// U diag(s) V* with s log-uniform in [1/sqrt(cond_target),
/// sqrt(cond_target)]; condition number bounded by cond_target.
Matrix random_invertible(const EnsembleConfig& cfg, RngStream& stream);

/// Shared random eigenbasis, independent log-uniform spectra.
std::pair<PDMatrix, PDMatrix> random_commuting_pd_pair(
    const EnsembleConfig& cfg, RngStream& stream);

/// Complementary orthogonal projections from a random basis split at a
/// random cut 1 <= k <= dim-1, plus the isometries onto each range.
struct ProjectionSplit {
  Matrix p;        ///< dim x dim projection
  Matrix q;        ///< dim x dim projection, p + q = I
  Matrix p_basis;  ///< dim x cut isometry, p = p_basis p_basis*
  Matrix q_basis;  ///< dim x (dim-cut) isometry
  Eigen::Index cut = 0;
};

ProjectionSplit random_projection_split(const EnsembleConfig& cfg,
                                        RngStream& stream);

std::pair<Matrix, Matrix> random_projection_pair(const EnsembleConfig& cfg,
                                                 RngStream& stream);

}  // namespace perspecta
