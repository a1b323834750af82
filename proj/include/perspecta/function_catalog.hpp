#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perspecta/matrix_core.hpp"

namespace perspecta {

enum class Convexity {
  operator_convex,
  operator_concave,
  affine,
  control_not_operator_convex,
};

std::string_view to_string(Convexity c);

/// A scalar function on the positive half-line with its operator-convexity
/// classification. Classification is trusted metadata, verified (not
/// derived) by the empirical midpoint tester.
struct ScalarFunction {
  std::string id;
  std::function<double(double)> eval;
  Convexity classification = Convexity::operator_convex;
  bool monotone = false;
  std::string description;
};

/// Fixed registry of scalar functions. Ids:
///   identity, const_one, neg_log, log, t_log_t, inv, square, sqrt,
///   pow_1.5, pow_-0.5, pow_0.25, cube, quart
const std::vector<ScalarFunction>& catalog();

/// t -> t^p via exp(p log t) for non-integer p, classified by exponent:
/// p in [-1,0] u [1,2] operator convex, p in (0,1) operator concave and
/// monotone, p in {0,1} affine, anything else not operator convex.
ScalarFunction power_function(double p);

/// Lookup by id; also parses dynamic "pow_<p>" ids. nullopt if unknown.
std::optional<ScalarFunction> find_function(std::string_view id);

/// Lookup that throws ParseError listing the catalog on unknown ids.
ScalarFunction require_function(std::string_view id);

inline HermitianMatrix apply_function(const ScalarFunction& f,
                                      const HermitianMatrix& h,
                                      double domain_floor = 0.0) {
  return apply_function(f.eval, h, domain_floor, f.id);
}

struct ConvexityWitness {
  int dim = 0;
  std::string seed_path;
  HermitianMatrix h;
  HermitianMatrix k;
  double margin = 0.0;  ///< normalized: min-eig of the gap over its scale
};

struct ConvexityVerdict {
  bool violated = false;
  std::optional<ConvexityWitness> witness;
};

/// Randomized search for a midpoint operator-convexity violation:
/// f((H+K)/2) <= (f(H)+f(K))/2 in the Loewner order, H and K sampled with
/// spectra in [1e-2, 1e2]. Returns the first violation as a witness, else a
/// clean verdict. Deterministic given seed.
ConvexityVerdict midpoint_operator_convexity_test(const ScalarFunction& f,
                                                  const std::vector<int>& dims,
                                                  int trials,
                                                  std::uint64_t seed,
                                                  double tol = 1e-8);

}  // namespace perspecta
