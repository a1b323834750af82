#include "perspecta/function_catalog.hpp"

#include <cmath>
#include <charconv>
#include <sstream>

#include "perspecta/random_ensembles.hpp"

namespace perspecta {

std::string_view to_string(Convexity c) {
  switch (c) {
    case Convexity::operator_convex:
      return "operator_convex";
    case Convexity::operator_concave:
      return "operator_concave";
    case Convexity::affine:
      return "affine";
    case Convexity::control_not_operator_convex:
      return "control_not_operator_convex";
  }
  return "?";
}

const std::vector<ScalarFunction>& catalog() {
  static const std::vector<ScalarFunction> entries = {
      {"identity", [](double t) { return t; }, Convexity::affine, true,
       "t -> t"},
      {"const_one", [](double) { return 1.0; }, Convexity::affine, true,
       "t -> 1"},
      {"neg_log", [](double t) { return -std::log(t); },
       Convexity::operator_convex, false, "t -> -log t"},
      {"log", [](double t) { return std::log(t); },
       Convexity::operator_concave, true, "t -> log t"},
      {"t_log_t", [](double t) { return t * std::log(t); },
       Convexity::operator_convex, false, "t -> t log t"},
      {"inv", [](double t) { return 1.0 / t; }, Convexity::operator_convex,
       false, "t -> 1/t"},
      {"square", [](double t) { return t * t; }, Convexity::operator_convex,
       false, "t -> t^2"},
      {"sqrt", [](double t) { return std::sqrt(t); },
       Convexity::operator_concave, true, "t -> sqrt(t)"},
      power_function(1.5),
      power_function(-0.5),
      power_function(0.25),
      {"cube", [](double t) { return t * t * t; },
       Convexity::control_not_operator_convex, true,
       "t -> t^3 (convex but not operator convex)"},
      {"quart", [](double t) { return t * t * t * t; },
       Convexity::control_not_operator_convex, true,
       "t -> t^4 (convex but not operator convex)"},
  };
  return entries;
}

ScalarFunction power_function(double p) {
  Convexity cls;
  bool monotone = false;
  if (p == 0.0 || p == 1.0) {
    cls = Convexity::affine;
    monotone = true;
  } else if ((p >= -1.0 && p < 0.0) || (p > 1.0 && p <= 2.0)) {
    cls = Convexity::operator_convex;
  } else if (p > 0.0 && p < 1.0) {
    cls = Convexity::operator_concave;
    monotone = true;
  } else {
    cls = Convexity::control_not_operator_convex;
    monotone = p > 0.0;
  }
  std::ostringstream id;
  id << "pow_" << p;
  std::ostringstream desc;
  desc << "t -> t^" << p;
  return ScalarFunction{
      id.str(), [p](double t) { return std::exp(p * std::log(t)); }, cls,
      monotone, desc.str()};
}

std::optional<ScalarFunction> find_function(std::string_view id) {
  for (const auto& f : catalog()) {
    if (f.id == id) return f;
  }
  if (id.rfind("pow_", 0) == 0) {
    const std::string_view num = id.substr(4);
    double p = 0.0;
    const auto [ptr, ec] =
        std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec == std::errc{} && ptr == num.data() + num.size()) {
      return power_function(p);
    }
  }
  return std::nullopt;
}

ScalarFunction require_function(std::string_view id) {
  if (auto f = find_function(id)) return *f;
  std::ostringstream os;
  os << "unknown function id '" << id << "'; catalog:";
  for (const auto& f : catalog()) os << " " << f.id;
  os << " (also pow_<exponent>)";
  throw ParseError(os.str());
}

ConvexityVerdict midpoint_operator_convexity_test(const ScalarFunction& f,
                                                  const std::vector<int>& dims,
                                                  int trials,
                                                  std::uint64_t seed,
                                                  double tol) {
  if (trials < 1) throw ParseError("midpoint test: trials must be >= 1");
  for (int d : dims) {
    if (d < 1 || d > 16) {
      throw ParseError("midpoint test: dims must lie in [1, 16]");
    }
  }
  constexpr int kRetryCap = 8;
  // Spectra in [1e-2, 1e2], far from the half-line boundary.
  constexpr double kSpectrumLo = 1e-2;
  constexpr double kSpectrumHi = 1e2;

  RngStream root(seed);
  RngStream test_stream = root.fork("midpoint_cvx").fork(f.id);
  for (int dim : dims) {
    EnsembleConfig cfg;
    cfg.dim = dim;
    auto dim_stream = test_stream.fork("dim", static_cast<std::uint64_t>(dim));
    for (int trial = 0; trial < trials; ++trial) {
      auto trial_stream =
          dim_stream.fork("trial", static_cast<std::uint64_t>(trial));
      for (int attempt = 0;; ++attempt) {
        auto draw = trial_stream.fork("attempt",
                                      static_cast<std::uint64_t>(attempt));
        auto h_stream = draw.fork("h");
        auto k_stream = draw.fork("k");
        PDMatrix h = random_pd_spectrum(cfg, h_stream, kSpectrumLo,
                                        kSpectrumHi);
        PDMatrix k = random_pd_spectrum(cfg, k_stream, kSpectrumLo,
                                        kSpectrumHi);
        try {
          HermitianMatrix mid =
              hermitize((h.entries() + k.entries()) / 2.0);
          HermitianMatrix lhs = apply_function(f, mid);
          HermitianMatrix rhs = hermitize(
              (apply_function(f, h.base()).entries() +
               apply_function(f, k.base()).entries()) /
              2.0);
          LoewnerComparison cmp = loewner_leq(lhs, rhs, tol);
          if (!cmp.holds) {
            ConvexityWitness witness{dim, trial_stream.path(), h.base(),
                                     k.base(), cmp.margin / cmp.scale};
            return ConvexityVerdict{true, std::move(witness)};
          }
          break;
        } catch (const DomainError&) {
          if (attempt + 1 >= kRetryCap) throw;
        }
      }
    }
  }
  return ConvexityVerdict{false, std::nullopt};
}

}  // namespace perspecta
