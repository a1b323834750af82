#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string_view>

#include "perspecta/errors.hpp"

namespace perspecta {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Relative tolerance for accepting input as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

/// Default ceiling on eigmax/eigmin for positive definite inputs. Inputs
/// beyond it are rejected rather than silently regularized.
inline constexpr double kDefaultConditionCap = 1e12;

/// Entrywise max-abs of a complex matrix.
double max_abs(const Matrix& m);

/// Largest singular value.
double spectral_norm(const Matrix& m);

class HermitianMatrix;

/// (X + X*)/2. The result satisfies a_ij == conj(a_ji) exactly in IEEE
/// arithmetic, so Hermitian invariants hold bitwise, not just to tolerance.
HermitianMatrix hermitize(const Matrix& x);

/// Dense self-adjoint matrix. Construction validates squareness, finiteness
/// and hermiticity (within kHermitianTol * max(1, max-abs-entry)), then
/// symmetrizes exactly so downstream order tests are well-posed.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& entries);

  static HermitianMatrix zero(Eigen::Index dim);
  static HermitianMatrix identity(Eigen::Index dim);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }

  double max_abs() const { return perspecta::max_abs(entries_); }
  /// Largest absolute eigenvalue.
  double spectral_norm() const;
  double trace_real() const { return entries_.trace().real(); }

 private:
  struct Trusted {};
  HermitianMatrix(Matrix entries, Trusted) : entries_(std::move(entries)) {}

  Matrix entries_;

  friend HermitianMatrix hermitize(const Matrix& x);
};

/// Eigenvalues ascending with a unitary matrix of column eigenvectors.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  /// Q f(Lambda) Q*, exactly hermitized.
  HermitianMatrix apply(const std::function<double(double)>& f) const;
};

/// Full eigendecomposition of a Hermitian matrix; eigenvalues ascending.
SpectralDecomposition eig(const HermitianMatrix& h);

/// f applied through the spectral decomposition: Q f(Lambda) Q*. Every
/// eigenvalue must exceed domain_floor or a DomainError names the offender.
HermitianMatrix apply_function(const std::function<double(double)>& f,
                               const HermitianMatrix& h,
                               double domain_floor = 0.0,
                               std::string_view fname = "f");

/// Positive definite matrix: a HermitianMatrix together with its cached
/// spectral decomposition and eigenvalue extremes.
class PDMatrix {
 public:
  /// Validates eigmin > 0 (DomainError) and eigmax/eigmin <= condition_cap
  /// (NumericError).
  static PDMatrix from(const HermitianMatrix& base,
                       double condition_cap = kDefaultConditionCap);
  static PDMatrix identity(Eigen::Index dim);

  Eigen::Index dim() const { return base_.dim(); }
  const HermitianMatrix& base() const { return base_; }
  const Matrix& entries() const { return base_.entries(); }
  const SpectralDecomposition& decomposition() const { return decomposition_; }
  double eigmin() const { return eigmin_; }
  double eigmax() const { return eigmax_; }
  double condition() const { return eigmax_ / eigmin_; }

  /// Q g(Lambda) Q* for g on the (positive) spectrum, as a plain matrix.
  Matrix map_spectrum(const std::function<double(double)>& g) const;
  /// A^{1/2}, A^{-1/2}, A^{-1} as plain matrices from the cached
  /// decomposition.
  Matrix sqrt_factor() const;
  Matrix inv_sqrt_factor() const;
  Matrix inverse() const;

 private:
  PDMatrix(HermitianMatrix base, SpectralDecomposition dec, double eigmin,
           double eigmax)
      : base_(std::move(base)),
        decomposition_(std::move(dec)),
        eigmin_(eigmin),
        eigmax_(eigmax) {}

  HermitianMatrix base_;
  SpectralDecomposition decomposition_;
  double eigmin_;
  double eigmax_;
};

/// Hermitian square root: S positive definite with S*S = A.
PDMatrix sqrt_pd(const PDMatrix& a);

/// T positive definite with T*A*T = I.
PDMatrix inv_sqrt_pd(const PDMatrix& a);

/// hermitize(C* H C). C may be rectangular (rows match h.dim()).
HermitianMatrix congruence(const Matrix& c, const HermitianMatrix& h);

/// Outcome of a semidefinite-order test L <= R.
struct LoewnerComparison {
  double margin;  ///< smallest eigenvalue of hermitize(R - L)
  double scale;   ///< max(||L||, ||R||, 1), spectral norms
  bool holds;     ///< margin >= -tol * scale
};

/// Tests L <= R in the Loewner order with relative tolerance tol.
LoewnerComparison loewner_leq(const HermitianMatrix& l,
                              const HermitianMatrix& r, double tol);

}  // namespace perspecta
