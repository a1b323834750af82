#include "perspecta/matrix_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace perspecta {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

namespace {

void require_square_finite(const Matrix& x, const char* who) {
  if (x.rows() != x.cols() || x.rows() < 1) {
    std::ostringstream os;
    os << who << ": expected a square matrix, got " << x.rows() << "x"
       << x.cols();
    throw DimensionError(os.str());
  }
  if (!x.allFinite()) {
    throw NumericError(std::string(who) + ": non-finite entries");
  }
}

}  // namespace

HermitianMatrix hermitize(const Matrix& x) {
  require_square_finite(x, "hermitize");
  Matrix h = (x + x.adjoint()) / 2.0;
  return HermitianMatrix(std::move(h), HermitianMatrix::Trusted{});
}

HermitianMatrix::HermitianMatrix(const Matrix& entries) {
  require_square_finite(entries, "HermitianMatrix");
  const double scale = std::max(1.0, perspecta::max_abs(entries));
  const double asym = perspecta::max_abs(entries - entries.adjoint());
  if (asym > kHermitianTol * scale) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |X - X*| entry is " << asym
       << " (allowed " << kHermitianTol * scale << ")";
    throw NumericError(os.str());
  }
  entries_ = (entries + entries.adjoint()) / 2.0;
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index dim) {
  return HermitianMatrix(Matrix::Zero(dim, dim), Trusted{});
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
  return HermitianMatrix(Matrix::Identity(dim, dim), Trusted{});
}

double HermitianMatrix::spectral_norm() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigendecomposition failed to converge");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

HermitianMatrix SpectralDecomposition::apply(
    const std::function<double(double)>& f) const {
  RealVector mapped(eigenvalues.size());
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    mapped(i) = f(eigenvalues(i));
    if (!std::isfinite(mapped(i))) {
      std::ostringstream os;
      os << "function value not finite at eigenvalue " << eigenvalues(i);
      throw NumericError(os.str());
    }
  }
  Matrix result =
      eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
  return hermitize(result);
}

SpectralDecomposition eig(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.entries());
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigendecomposition failed to converge");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

HermitianMatrix apply_function(const std::function<double(double)>& f,
                               const HermitianMatrix& h, double domain_floor,
                               std::string_view fname) {
  SpectralDecomposition dec = eig(h);
  // Eigenvalues ascend, so the first is the only candidate offender.
  if (dec.eigenvalues(0) <= domain_floor) {
    std::ostringstream os;
    os << "spectrum outside the domain of " << fname << ": eigenvalue "
       << dec.eigenvalues(0) << " <= " << domain_floor;
    throw DomainError(os.str(), dec.eigenvalues(0));
  }
  return dec.apply(f);
}

PDMatrix PDMatrix::from(const HermitianMatrix& base, double condition_cap) {
  SpectralDecomposition dec = eig(base);
  const double eigmin = dec.eigenvalues(0);
  const double eigmax = dec.eigenvalues(dec.eigenvalues.size() - 1);
  if (eigmin <= 0.0) {
    std::ostringstream os;
    os << "matrix is not positive definite: smallest eigenvalue " << eigmin;
    throw DomainError(os.str(), eigmin);
  }
  if (eigmax / eigmin > condition_cap) {
    std::ostringstream os;
    os << "condition number " << eigmax / eigmin << " exceeds cap "
       << condition_cap;
    throw NumericError(os.str());
  }
  return PDMatrix(base, std::move(dec), eigmin, eigmax);
}

PDMatrix PDMatrix::identity(Eigen::Index dim) {
  return PDMatrix::from(HermitianMatrix::identity(dim));
}

Matrix PDMatrix::map_spectrum(const std::function<double(double)>& g) const {
  RealVector mapped(decomposition_.eigenvalues.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) {
    mapped(i) = g(decomposition_.eigenvalues(i));
  }
  return decomposition_.eigenvectors * mapped.asDiagonal() *
         decomposition_.eigenvectors.adjoint();
}

Matrix PDMatrix::sqrt_factor() const {
  return map_spectrum([](double t) { return std::sqrt(t); });
}

Matrix PDMatrix::inv_sqrt_factor() const {
  return map_spectrum([](double t) { return 1.0 / std::sqrt(t); });
}

Matrix PDMatrix::inverse() const {
  return map_spectrum([](double t) { return 1.0 / t; });
}

PDMatrix sqrt_pd(const PDMatrix& a) {
  return PDMatrix::from(hermitize(a.sqrt_factor()));
}

PDMatrix inv_sqrt_pd(const PDMatrix& a) {
  return PDMatrix::from(hermitize(a.inv_sqrt_factor()));
}

HermitianMatrix congruence(const Matrix& c, const HermitianMatrix& h) {
  if (c.rows() != h.dim()) {
    std::ostringstream os;
    os << "congruence: C has " << c.rows() << " rows, H is " << h.dim() << "x"
       << h.dim();
    throw DimensionError(os.str());
  }
  return hermitize(c.adjoint() * h.entries() * c);
}

LoewnerComparison loewner_leq(const HermitianMatrix& l,
                              const HermitianMatrix& r, double tol) {
  if (l.dim() != r.dim()) {
    std::ostringstream os;
    os << "loewner_leq: dimension mismatch " << l.dim() << " vs " << r.dim();
    throw DimensionError(os.str());
  }
  HermitianMatrix gap = hermitize(r.entries() - l.entries());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gap.entries(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigendecomposition failed to converge");
  }
  LoewnerComparison cmp;
  cmp.margin = solver.eigenvalues()(0);
  cmp.scale = std::max({l.spectral_norm(), r.spectral_norm(), 1.0});
  cmp.holds = cmp.margin >= -tol * cmp.scale;
  return cmp;
}

}  // namespace perspecta
