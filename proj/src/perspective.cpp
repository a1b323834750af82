#include "perspecta/perspective.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <vector>

namespace perspecta {

std::string_view to_string(PerspectiveOrder order) {
  return order == PerspectiveOrder::weight_second ? "weight_second"
                                                  : "weight_first";
}

PerspectiveOrder order_from_string(std::string_view s) {
  if (s == "weight_second") return PerspectiveOrder::weight_second;
  if (s == "weight_first") return PerspectiveOrder::weight_first;
  throw ParseError("unknown order '" + std::string(s) +
                   "'; expected weight_first or weight_second");
}

namespace {

void require_same_dim(const PDMatrix& a, const PDMatrix& b, const char* who) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << who << ": dimension mismatch " << a.dim() << " vs " << b.dim();
    throw DimensionError(os.str());
  }
}

}  // namespace

PerspectiveResult perspective(const ScalarFunction& f, const PDMatrix& a,
                              const PDMatrix& b, PerspectiveOrder order) {
  require_same_dim(a, b, "perspective");
  const PDMatrix& weight = order == PerspectiveOrder::weight_second ? b : a;
  const PDMatrix& arg = order == PerspectiveOrder::weight_second ? a : b;

  const Matrix s = weight.sqrt_factor();
  const Matrix t = weight.inv_sqrt_factor();
  const HermitianMatrix inner = hermitize(t * arg.entries() * t);
  const SpectralDecomposition dec = eig(inner);

  const Eigen::Index n = dec.eigenvalues.size();
  const double floor = 1e-12 * dec.eigenvalues(n - 1);
  if (dec.eigenvalues(0) <= floor) {
    std::ostringstream os;
    os << "inner spectrum of the perspective left the positive cone: "
       << "eigenvalue " << dec.eigenvalues(0) << " <= " << floor;
    throw DomainError(os.str(), dec.eigenvalues(0));
  }

  HermitianMatrix f_inner = dec.apply(f.eval);
  HermitianMatrix value = hermitize(s * f_inner.entries() * s);
  return PerspectiveResult{std::move(value), dec.eigenvalues, order};
}

namespace {

struct JointDiagonalization {
  Matrix basis;
  RealVector a_values;
  RealVector b_values;
};

// Common eigenbasis for a commuting Hermitian pair: diagonalize A, cluster
// near-degenerate eigenvalues, and refine each cluster with the
// eigenvectors of B's compression. The a-values are Rayleigh quotients in
// the refined basis, exact for genuinely commuting inputs.
JointDiagonalization joint_diagonalize(const HermitianMatrix& a,
                                       const HermitianMatrix& b) {
  SpectralDecomposition da = eig(a);
  const Eigen::Index n = da.eigenvalues.size();
  const double spread =
      std::max(da.eigenvalues(n - 1) - da.eigenvalues(0), 0.0);
  const double cluster_gap = 1e-6 * std::max(1.0, spread);

  JointDiagonalization joint;
  joint.basis = Matrix(n, n);
  joint.a_values = RealVector(n);
  joint.b_values = RealVector(n);

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n &&
           da.eigenvalues(end) - da.eigenvalues(end - 1) <= cluster_gap) {
      ++end;
    }
    const Eigen::Index k = end - start;
    const Matrix block = da.eigenvectors.middleCols(start, k);
    const HermitianMatrix b_comp = hermitize(
        block.adjoint() * b.entries() * block);
    SpectralDecomposition db = eig(b_comp);
    const Matrix refined = block * db.eigenvectors;
    joint.basis.middleCols(start, k) = refined;
    for (Eigen::Index i = 0; i < k; ++i) {
      const auto col = refined.col(i);
      joint.a_values(start + i) =
          (col.adjoint() * a.entries() * col).value().real();
      joint.b_values(start + i) = db.eigenvalues(i);
    }
    start = end;
  }
  return joint;
}

}  // namespace

HermitianMatrix perspective_commuting_oracle(const ScalarFunction& f,
                                             const PDMatrix& a,
                                             const PDMatrix& b,
                                             PerspectiveOrder order) {
  require_same_dim(a, b, "perspective_commuting_oracle");
  const Matrix commutator =
      a.entries() * b.entries() - b.entries() * a.entries();
  const double comm_norm = spectral_norm(commutator);
  const double bound = 1e-10 * a.base().spectral_norm() *
                       b.base().spectral_norm();
  if (comm_norm > bound) {
    std::ostringstream os;
    os << "inputs do not commute: ||AB - BA|| = " << comm_norm
       << " exceeds " << bound;
    throw DomainError(os.str(), comm_norm);
  }

  JointDiagonalization joint = joint_diagonalize(a.base(), b.base());
  const Eigen::Index n = joint.a_values.size();
  RealVector values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ai = joint.a_values(i);
    const double bi = joint.b_values(i);
    values(i) = order == PerspectiveOrder::weight_second
                    ? bi * f.eval(ai / bi)
                    : ai * f.eval(bi / ai);
    if (!std::isfinite(values(i))) {
      throw NumericError("commuting oracle produced a non-finite value");
    }
  }
  return hermitize(joint.basis * values.asDiagonal() *
                   joint.basis.adjoint());
}

PDMatrix geometric_mean(const PDMatrix& a, const PDMatrix& b) {
  static const ScalarFunction sqrt_fn = require_function("sqrt");
  PerspectiveResult r =
      perspective(sqrt_fn, a, b, PerspectiveOrder::weight_first);
  return PDMatrix::from(r.value);
}

double relative_entropy(const PDMatrix& a, const PDMatrix& b) {
  require_same_dim(a, b, "relative_entropy");
  double tr_a_log_a = 0.0;
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    const double lam = a.decomposition().eigenvalues(i);
    tr_a_log_a += lam * std::log(lam);
  }
  static const ScalarFunction log_fn = require_function("log");
  const HermitianMatrix log_b = apply_function(log_fn, b.base());
  const double tr_a_log_b =
      (a.entries() * log_b.entries()).trace().real();
  return tr_a_log_a - tr_a_log_b;
}

double trace_perspective_neg_log(const PDMatrix& a, const PDMatrix& b) {
  static const ScalarFunction neg_log = require_function("neg_log");
  return perspective(neg_log, a, b, PerspectiveOrder::weight_first)
      .value.trace_real();
}

HermitianMatrix quadratic_congruence(const PDMatrix& a, const PDMatrix& b) {
  require_same_dim(a, b, "quadratic_congruence");
  return hermitize(a.entries() * b.inverse() * a.entries());
}

}  // namespace perspecta
