#pragma once

#include <string_view>

#include "perspecta/function_catalog.hpp"
#include "perspecta/matrix_core.hpp"

namespace perspecta {

/// Which argument carries the outer square-root factors:
///   weight_second: B^{1/2} f(B^{-1/2} A B^{-1/2}) B^{1/2}
///   weight_first:  A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}
enum class PerspectiveOrder {
  weight_second,
  weight_first,
};

std::string_view to_string(PerspectiveOrder order);
PerspectiveOrder order_from_string(std::string_view s);

struct PerspectiveResult {
  HermitianMatrix value;
  RealVector inner_spectrum;  ///< eigenvalues of the conjugated middle argument
  PerspectiveOrder order;
};

/// Non-commutative perspective of f at (A, B). Eigenvalues of the inner
/// conjugated matrix below 1e-12 * its largest eigenvalue are a hard
/// DomainError, never clamped.
PerspectiveResult perspective(const ScalarFunction& f, const PDMatrix& a,
                              const PDMatrix& b, PerspectiveOrder order);

/// Perspective of commuting inputs through simultaneous diagonalization:
/// eigenvalue pairs (a_i, b_i) map to b_i f(a_i/b_i) (weight_second) or
/// a_i f(b_i/a_i) (weight_first) in the common eigenbasis. Inputs must
/// commute: ||AB - BA|| <= 1e-10 ||A|| ||B||.
HermitianMatrix perspective_commuting_oracle(const ScalarFunction& f,
                                             const PDMatrix& a,
                                             const PDMatrix& b,
                                             PerspectiveOrder order);

/// A # B = A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}, the perspective of
/// sqrt in weight_first order.
PDMatrix geometric_mean(const PDMatrix& a, const PDMatrix& b);

/// Tr(A log A) - Tr(A log B), unnormalized, natural logarithm.
double relative_entropy(const PDMatrix& a, const PDMatrix& b);

/// Trace of the weight_first perspective of -log:
/// Tr(-A^{1/2} log(A^{-1/2} B A^{-1/2}) A^{1/2}). Coincides with the
/// relative entropy when A and B commute, generally not otherwise.
double trace_perspective_neg_log(const PDMatrix& a, const PDMatrix& b);

/// A B^{-1} A, hermitized; the weight_first perspective of t -> 1/t.
HermitianMatrix quadratic_congruence(const PDMatrix& a, const PDMatrix& b);

}  // namespace perspecta
