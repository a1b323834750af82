#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perspecta/function_catalog.hpp"
#include "perspecta/perspective.hpp"
#include "perspecta/random_ensembles.hpp"

namespace perspecta {

/// Parameters of one randomized property check.
struct CheckConfig {
  std::vector<int> dims{2, 3, 4, 5, 6};
  int trials = 200;
  double tol = 1e-8;
  std::vector<double> lambda_samples{0.5, 0.25, 0.1};
  bool lambda_random = true;  ///< additionally draw one random lambda per trial
  std::uint64_t seed = 42;
  std::vector<std::string> functions;  ///< catalog ids; empty = check default
  PerspectiveOrder order = PerspectiveOrder::weight_first;
  double cond_target = 100.0;
};

/// Throws ParseError on invalid configuration (trials < 1, lambda outside
/// [0,1], dims outside [1,16], unknown function ids).
void validate(const CheckConfig& cfg);

struct TrialFailure {
  int trial = 0;
  std::string seed_path;
  double margin = 0.0;  ///< normalized margin (margin / scale); NaN on error
  std::string detail;   ///< empty for plain margin failures
};

struct CheckCell {
  int dim = 0;
  std::string function_id;
  int trials_run = 0;
  /// Most negative normalized margin seen in the cell. Inequality checks
  /// report min-eig(R-L)/scale; equality checks report -deviation/scale.
  double worst_margin = 0.0;
  std::vector<TrialFailure> failures;
};

/// A recorded counterexample, replayable from (root seed, seed_path).
struct ViolationWitness {
  std::string seed_path;
  int dim = 0;
  std::string function_id;
  double lambda = 0.0;
  double margin = 0.0;  ///< normalized
  std::vector<HermitianMatrix> matrices;
  bool reverified = false;
};

struct TrialReport {
  std::string check_id;
  CheckConfig config;
  std::vector<CheckCell> cells;
  bool passed = false;
  std::vector<ViolationWitness> witnesses;
};

/// Contraction C with D = (1-CC*)^{1/2}, E = (1-C*C)^{1/2} and the 2n x 2n
/// block matrices U = [[C, D], [E, -C*]], V = [[C, -D], [E, C*]]. The
/// builder verifies U and V are unitary within 1e-9.
struct BlockUnitaryPair {
  Matrix c;
  Matrix d;
  Matrix e;
  Matrix u;
  Matrix v;
};

BlockUnitaryPair make_block_unitary_pair(const Matrix& c);

// Checks. Each is deterministic given (cfg.seed, cfg) and returns a
// TrialReport whose `passed` flag is: no failures (plain checks) or
// a witness was found where one is expected (violation searches).

/// P_f(lam A1 + (1-lam) A2, lam B1 + (1-lam) B2) <= lam P_f(A1,B1) +
/// (1-lam) P_f(A2,B2) for operator convex and affine f.
TrialReport check_joint_convexity(const CheckConfig& cfg);

/// The contraction decomposition behind joint convexity: with
/// B = lam B1 + (1-lam) B2, X = (lam B1)^{1/2} B^{-1/2} and
/// Y = ((1-lam) B2)^{1/2} B^{-1/2}, asserts X*X + Y*Y = 1 and the Jensen
/// step f(X*H X + Y*K Y) <= X* f(H) X + Y* f(K) Y.
TrialReport check_jensen_decomposition(const CheckConfig& cfg);

/// P_f(tA, tB) = t P_f(A, B) for t in {1/2, 2, 10}, plus the vanishing
/// limit ||P_f(eps I, eps I)|| = eps |f(1)| for eps in {1e-2, 1e-4}.
TrialReport check_homogeneity(const CheckConfig& cfg);

/// P_f(U*AU, U*BU) = U* P_f(A,B) U for random unitaries.
TrialReport check_unitary_invariance(const CheckConfig& cfg);

/// P_f splits over complementary block-diagonal compressions.
TrialReport check_block_diagonal(const CheckConfig& cfg);

/// U, V from a random contraction are unitary and average the corner
/// embedding diag(A, 0) to diag(C*AC, DAD).
TrialReport check_block_unitary_identity(const CheckConfig& cfg);

/// P_f(C*AC, C*BC) <= C* P_f(A,B) C for contractions; equality (both
/// directions within 10*tol) for unitary C.
TrialReport check_transformer_inequality(const CheckConfig& cfg);

/// C* P_f(A,B) C = P_f(C*AC, C*BC) for invertible C (condition <= 100),
/// within tol * cond(C)^2 * scale; plus the specialization
/// A^{-1/2} P_f(A,B) A^{-1/2} = P_f(1, A^{-1/2} B A^{-1/2}) in weight_first
/// order.
TrialReport check_transformer_equality(const CheckConfig& cfg);

/// P_f(1, A) = f(A) in weight_first order, and P_f(1, t 1) = f(t) 1 on the
/// scalar grid t in {0.1, 0.5, 1, 2, 10}.
TrialReport check_finite_rank_formula(const CheckConfig& cfg);

/// Midpoint concavity of the geometric mean, its symmetry A#B = B#A, and
/// the scalar value sqrt(ab) at dim 1.
TrialReport check_geometric_mean_concavity(const CheckConfig& cfg);

/// Tr P_neg_log(A,B) equals the relative entropy on commuting pairs; a
/// separating non-commuting pair with gap > 1e-6 is searched for and
/// recorded as a witness.
TrialReport check_relative_entropy_commuting(const CheckConfig& cfg);

/// Searches for a joint-convexity violation of the perspective. For
/// control (not operator convex) functions a witness must be found, be
/// recorded with its matrices, and re-verify deterministically from its
/// seed path; for operator convex/affine functions the same search must
/// come up empty.
TrialReport detect_violation_control(const CheckConfig& cfg);

/// Node recovery for every catalog function on a 20-point log-spaced grid,
/// the rebuild-and-compare uniqueness demonstration for the -log, sqrt and
/// 1/t perspectives, and rejection of a covariance-breaking black box.
TrialReport check_reconstruction(const CheckConfig& cfg);

/// Two-argument matrix map on positive definite pairs.
using MatrixMap2 =
    std::function<HermitianMatrix(const PDMatrix&, const PDMatrix&)>;

struct ScalarRecovery {
  double t = 0.0;
  double f_estimate = 0.0;
};

/// Evaluates blackbox(1, t 1) at the given dimension for every grid point,
/// verifies each output is scalar (off-diagonal mass and diagonal spread
/// <= tol * max(1, |f(t)|)), and returns the recovered scalars. Throws
/// NonScalarError when the black box is not unitarily covariant.
std::vector<ScalarRecovery> reconstruct_scalar(const MatrixMap2& blackbox,
                                               const std::vector<double>& t_grid,
                                               int dim, double tol = 1e-8);

/// Monotonicity-preserving piecewise-cubic interpolant: not-a-knot cubic
/// spline slopes run through a Hyman filter. Abscissae strictly ascending.
class MonotoneCubicInterpolant {
 public:
  MonotoneCubicInterpolant(std::vector<double> x, std::vector<double> y);

  /// Evaluate at t; throws DomainError outside [x.front(), x.back()].
  double operator()(double t) const;

  double min_x() const { return x_.front(); }
  double max_x() const { return x_.back(); }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> slope_;
};

/// 20-point log-spaced reconstruction grid on [0.1, 10].
std::vector<double> reconstruction_grid();

/// Registry: canonical ids of all checks in suite order.
const std::vector<std::string>& suite_check_ids();

/// Runs one check by id ("check_" prefixes are accepted and stripped).
/// Throws ParseError for unknown ids.
TrialReport run_check(std::string_view id, const CheckConfig& cfg);

}  // namespace perspecta
