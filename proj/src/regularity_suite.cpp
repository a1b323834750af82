#include "perspecta/regularity_suite.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace perspecta {

void validate(const CheckConfig& cfg) {
  if (cfg.trials < 1) throw ParseError("trials must be >= 1");
  if (cfg.dims.empty()) throw ParseError("dims must not be empty");
  for (int d : cfg.dims) {
    if (d < 1 || d > 16) throw ParseError("dims must lie in [1, 16]");
  }
  for (double lam : cfg.lambda_samples) {
    if (!(lam >= 0.0 && lam <= 1.0)) {
      throw ParseError("lambda samples must lie in [0, 1]");
    }
  }
  if (!(cfg.tol > 0.0)) throw ParseError("tol must be positive");
  if (!(cfg.cond_target >= 1.0)) throw ParseError("cond_target must be >= 1");
  for (const auto& id : cfg.functions) require_function(id);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Accumulates one report cell. Margins are normalized (already divided by
// their scale) so each assertion compares against a plain tolerance bound.
struct CellAccum {
  CheckCell cell;

  explicit CellAccum(int dim, std::string function_id) {
    cell.dim = dim;
    cell.function_id = std::move(function_id);
    cell.worst_margin = kInf;
  }

  void note(double margin_norm, double bound, int trial,
            const std::string& path, std::string detail = {}) {
    cell.worst_margin = std::min(cell.worst_margin, margin_norm);
    if (!(margin_norm >= -bound)) {
      cell.failures.push_back(
          TrialFailure{trial, path, margin_norm, std::move(detail)});
    }
  }

  void error(int trial, const std::string& path, const std::string& what) {
    cell.failures.push_back(TrialFailure{
        trial, path, std::numeric_limits<double>::quiet_NaN(), what});
  }

  CheckCell finish(int trials_run) {
    cell.trials_run = trials_run;
    if (cell.worst_margin == kInf) cell.worst_margin = 0.0;
    return std::move(cell);
  }
};

enum class FunctionSet { convex_and_affine, all_entries, control_search };

std::vector<ScalarFunction> resolve_functions(const CheckConfig& cfg,
                                              FunctionSet set) {
  std::vector<ScalarFunction> out;
  if (!cfg.functions.empty()) {
    for (const auto& id : cfg.functions) out.push_back(require_function(id));
  } else {
    for (const auto& f : catalog()) {
      switch (set) {
        case FunctionSet::convex_and_affine:
          if (f.classification == Convexity::operator_convex ||
              f.classification == Convexity::affine) {
            out.push_back(f);
          }
          break;
        case FunctionSet::all_entries:
          out.push_back(f);
          break;
        case FunctionSet::control_search:
          if (f.id == "quart" || f.id == "cube" || f.id == "square") {
            out.push_back(f);
          }
          break;
      }
    }
  }
  if (set == FunctionSet::convex_and_affine) {
    for (const auto& f : out) {
      if (f.classification != Convexity::operator_convex &&
          f.classification != Convexity::affine) {
        throw ParseError("function '" + f.id +
                         "' is not operator convex or affine; "
                         "this check requires convexity");
      }
    }
  }
  if (set == FunctionSet::control_search) {
    for (const auto& f : out) {
      if (f.classification == Convexity::operator_concave) {
        throw ParseError("function '" + f.id +
                         "' is operator concave; the violation search "
                         "expects convex or control entries");
      }
    }
  }
  return out;
}

EnsembleConfig ensemble_for(const CheckConfig& cfg, int dim) {
  EnsembleConfig ecfg;
  ecfg.dim = dim;
  ecfg.cond_target = cfg.cond_target;
  ecfg.seed = cfg.seed;
  return ecfg;
}

PDMatrix draw_pd(const CheckConfig& cfg, int dim, RngStream& parent,
                 std::string_view label) {
  auto s = parent.fork(label);
  return random_pd(ensemble_for(cfg, dim), s);
}

PDMatrix mix_pd(const PDMatrix& x1, const PDMatrix& x2, double lam) {
  return PDMatrix::from(
      hermitize(lam * x1.entries() + (1.0 - lam) * x2.entries()));
}

std::vector<double> trial_lambdas(const CheckConfig& cfg, RngStream& trial) {
  std::vector<double> lambdas = cfg.lambda_samples;
  if (cfg.lambda_random) {
    auto ls = trial.fork("lambda");
    lambdas.push_back(ls.uniform());
  }
  return lambdas;
}

double equality_margin(const Matrix& lhs, const Matrix& rhs) {
  const double dev = max_abs(lhs - rhs);
  const double scale =
      std::max({spectral_norm(lhs), spectral_norm(rhs), 1.0});
  return -dev / scale;
}

double condition_number(const Matrix& c) {
  Eigen::JacobiSVD<Matrix> svd(c);
  const auto& sv = svd.singularValues();
  return sv(0) / sv(sv.size() - 1);
}

struct JointTrialOutcome {
  double margin_norm = kInf;
  double lambda_at_worst = 0.0;
  std::vector<HermitianMatrix> matrices;  // A1, B1, A2, B2
};

// One joint-convexity trial: draw two pairs, sweep the lambda grid, return
// the most negative normalized Loewner margin. Shared by the convexity
// check and the control violation search; bit-reproducible from the trial
// stream alone.
JointTrialOutcome joint_convexity_trial(const ScalarFunction& f,
                                        const CheckConfig& cfg, int dim,
                                        RngStream trial) {
  PDMatrix a1 = draw_pd(cfg, dim, trial, "a1");
  PDMatrix b1 = draw_pd(cfg, dim, trial, "b1");
  PDMatrix a2 = draw_pd(cfg, dim, trial, "a2");
  PDMatrix b2 = draw_pd(cfg, dim, trial, "b2");
  const std::vector<double> lambdas = trial_lambdas(cfg, trial);

  const PerspectiveResult p1 = perspective(f, a1, b1, cfg.order);
  const PerspectiveResult p2 = perspective(f, a2, b2, cfg.order);

  JointTrialOutcome out;
  for (double lam : lambdas) {
    PDMatrix am = mix_pd(a1, a2, lam);
    PDMatrix bm = mix_pd(b1, b2, lam);
    const PerspectiveResult pm = perspective(f, am, bm, cfg.order);
    const HermitianMatrix rhs = hermitize(lam * p1.value.entries() +
                                          (1.0 - lam) * p2.value.entries());
    const LoewnerComparison cmp = loewner_leq(pm.value, rhs, cfg.tol);
    const double norm = cmp.margin / cmp.scale;
    if (norm < out.margin_norm) {
      out.margin_norm = norm;
      out.lambda_at_worst = lam;
    }
  }
  out.matrices = {a1.base(), b1.base(), a2.base(), b2.base()};
  return out;
}

TrialReport make_report(std::string check_id, const CheckConfig& cfg) {
  TrialReport report;
  report.check_id = std::move(check_id);
  report.config = cfg;
  return report;
}

void finish_report(TrialReport& report) {
  report.passed = true;
  for (const auto& cell : report.cells) {
    if (!cell.failures.empty()) report.passed = false;
  }
}

}  // namespace

TrialReport check_joint_convexity(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("joint_convexity", cfg);
  RngStream root(cfg.seed);
  auto cs = root.fork("joint_convexity");
  for (const auto& f :
       resolve_functions(cfg, FunctionSet::convex_and_affine)) {
    auto fs = cs.fork(f.id);
    for (int dim : cfg.dims) {
      auto ds = fs.fork("dim", static_cast<std::uint64_t>(dim));
      CellAccum acc(dim, f.id);
      for (int t = 0; t < cfg.trials; ++t) {
        auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
        const std::string path = ts.path();
        try {
          const auto outcome =
              joint_convexity_trial(f, cfg, dim, std::move(ts));
          acc.note(outcome.margin_norm, cfg.tol, t, path);
        } catch (const Error& e) {
          acc.error(t, path, e.what());
        }
      }
      report.cells.push_back(acc.finish(cfg.trials));
    }
  }
  finish_report(report);
  return report;
}

TrialReport check_jensen_decomposition(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("jensen_decomposition", cfg);
  RngStream root(cfg.seed);
  auto cs = root.fork("jensen_decomposition");
  for (const auto& f :
       resolve_functions(cfg, FunctionSet::convex_and_affine)) {
    auto fs = cs.fork(f.id);
    for (int dim : cfg.dims) {
      auto ds = fs.fork("dim", static_cast<std::uint64_t>(dim));
      CellAccum acc(dim, f.id);
      for (int t = 0; t < cfg.trials; ++t) {
        auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
        const std::string path = ts.path();
        try {
          PDMatrix a1 = draw_pd(cfg, dim, ts, "a1");
          PDMatrix b1 = draw_pd(cfg, dim, ts, "b1");
          PDMatrix a2 = draw_pd(cfg, dim, ts, "a2");
          PDMatrix b2 = draw_pd(cfg, dim, ts, "b2");
          const std::vector<double> lambdas = trial_lambdas(cfg, ts);

          const Matrix s1 = b1.sqrt_factor();
          const Matrix s2 = b2.sqrt_factor();
          const Matrix t1 = b1.inv_sqrt_factor();
          const Matrix t2 = b2.inv_sqrt_factor();
          const HermitianMatrix h = hermitize(t1 * a1.entries() * t1);
          const HermitianMatrix k = hermitize(t2 * a2.entries() * t2);
          const HermitianMatrix fh = apply_function(f, h);
          const HermitianMatrix fk = apply_function(f, k);
          const Matrix eye = Matrix::Identity(dim, dim);

          for (double lam : lambdas) {
            PDMatrix b = mix_pd(b1, b2, lam);
            const Matrix tb = b.inv_sqrt_factor();
            const Matrix x = std::sqrt(lam) * s1 * tb;
            const Matrix y = std::sqrt(1.0 - lam) * s2 * tb;

            const double unit_dev =
                max_abs(x.adjoint() * x + y.adjoint() * y - eye);
            acc.note(-unit_dev, 0.1 * cfg.tol, t, path, "unit decomposition");

            const HermitianMatrix arg =
                hermitize(x.adjoint() * h.entries() * x +
                          y.adjoint() * k.entries() * y);
            const HermitianMatrix lhs = apply_function(f, arg);
            const HermitianMatrix rhs =
                hermitize(x.adjoint() * fh.entries() * x +
                          y.adjoint() * fk.entries() * y);
            const LoewnerComparison cmp = loewner_leq(lhs, rhs, cfg.tol);
            acc.note(cmp.margin / cmp.scale, cfg.tol, t, path, "jensen step");
          }
        } catch (const Error& e) {
          acc.error(t, path, e.what());
        }
      }
      report.cells.push_back(acc.finish(cfg.trials));
    }
  }
  finish_report(report);
  return report;
}

TrialReport check_homogeneity(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("homogeneity", cfg);
  static constexpr std::array<double, 3> kScales = {0.5, 2.0, 10.0};
  static constexpr std::array<double, 2> kEps = {1e-2, 1e-4};
  RngStream root(cfg.seed);
  auto cs = root.fork("homogeneity");
  for (const auto& f : resolve_functions(cfg, FunctionSet::all_entries)) {
    auto fs = cs.fork(f.id);
    for (int dim : cfg.dims) {
      auto ds = fs.fork("dim", static_cast<std::uint64_t>(dim));
      CellAccum acc(dim, f.id);

      // Vanishing limit along the ray (eps 1, eps 1).
      const double f1 = f.eval(1.0);
      for (double eps : kEps) {
        PDMatrix eps_id = PDMatrix::from(
            hermitize(eps * Matrix::Identity(dim, dim)));
        const PerspectiveResult p =
            perspective(f, eps_id, eps_id, cfg.order);
        const Matrix expected =
            eps * f1 * Matrix::Identity(dim, dim);
        const double dev = max_abs(p.value.entries() - expected);
        acc.note(-dev / (eps * std::max(1.0, std::abs(f1))), 0.1 * cfg.tol,
                 -1, ds.path(), "vanishing limit");
      }

      for (int t = 0; t < cfg.trials; ++t) {
        auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
        const std::string path = ts.path();
        try {
          PDMatrix a = draw_pd(cfg, dim, ts, "a");
          PDMatrix b = draw_pd(cfg, dim, ts, "b");
          const PerspectiveResult p = perspective(f, a, b, cfg.order);
          for (double scalar : kScales) {
            PDMatrix at =
                PDMatrix::from(hermitize(scalar * a.entries()));
            PDMatrix bt =
                PDMatrix::from(hermitize(scalar * b.entries()));
            const PerspectiveResult pt = perspective(f, at, bt, cfg.order);
            const Matrix expected = scalar * p.value.entries();
            const double dev = max_abs(pt.value.entries() - expected);
            const double scale = std::max(
                {pt.value.spectral_norm(),
                 scalar * p.value.spectral_norm(), 1.0});
            acc.note(-dev / (scalar * scale), 0.1 * cfg.tol, t, path);
          }
        } catch (const Error& e) {
          acc.error(t, path, e.what());
        }
      }
      report.cells.push_back(acc.finish(cfg.trials));
    }
  }
  finish_report(report);
  return report;
}

TrialReport check_unitary_invariance(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("unitary_invariance", cfg);
  RngStream root(cfg.seed);
  auto cs = root.fork("unitary_invariance");
  for (const auto& f : resolve_functions(cfg, FunctionSet::all_entries)) {
    auto fs = cs.fork(f.id);
    for (int dim : cfg.dims) {
      auto ds = fs.fork("dim", static_cast<std::uint64_t>(dim));
      CellAccum acc(dim, f.id);
      for (int t = 0; t < cfg.trials; ++t) {
        auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
        const std::string path = ts.path();
        try {
          PDMatrix a = draw_pd(cfg, dim, ts, "a");
          PDMatrix b = draw_pd(cfg, dim, ts, "b");
          auto us = ts.fork("u");
          const Matrix u = random_unitary(ensemble_for(cfg, dim), us);
          const PerspectiveResult p = perspective(f, a, b, cfg.order);
          PDMatrix ua = PDMatrix::from(congruence(u, a.base()));
          PDMatrix ub = PDMatrix::from(congruence(u, b.base()));
          const PerspectiveResult pu = perspective(f, ua, ub, cfg.order);
          const HermitianMatrix expected = congruence(u, p.value);
          acc.note(equality_margin(pu.value.entries(), expected.entries()),
                   cfg.tol, t, path);
        } catch (const Error& e) {
          acc.error(t, path, e.what());
        }
      }
      report.cells.push_back(acc.finish(cfg.trials));
    }
  }
  finish_report(report);
  return report;
}

TrialReport check_block_diagonal(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("block_diagonal", cfg);
  RngStream root(cfg.seed);
  auto cs = root.fork("block_diagonal");
  for (const auto& f : resolve_functions(cfg, FunctionSet::all_entries)) {
    auto fs = cs.fork(f.id);
    for (int dim : cfg.dims) {
      if (dim < 2) continue;  // a complementary split needs two blocks
      auto ds = fs.fork("dim", static_cast<std::uint64_t>(dim));
      CellAccum acc(dim, f.id);
      for (int t = 0; t < cfg.trials; ++t) {
        auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
        const std::string path = ts.path();
        try {
          auto ss = ts.fork("split");
          const ProjectionSplit split =
              random_projection_split(ensemble_for(cfg, dim), ss);
          const int k = static_cast<int>(split.cut);
          PDMatrix ap = draw_pd(cfg, k, ts, "ap");
          PDMatrix bp = draw_pd(cfg, k, ts, "bp");
          PDMatrix aq = draw_pd(cfg, dim - k, ts, "aq");
          PDMatrix bq = draw_pd(cfg, dim - k, ts, "bq");

          const Matrix vp = split.p_basis;
          const Matrix vq = split.q_basis;
          PDMatrix a = PDMatrix::from(
              hermitize(vp * ap.entries() * vp.adjoint() +
                        vq * aq.entries() * vq.adjoint()));
          PDMatrix b = PDMatrix::from(
              hermitize(vp * bp.entries() * vp.adjoint() +
                        vq * bq.entries() * vq.adjoint()));

          const PerspectiveResult whole = perspective(f, a, b, cfg.order);
          const PerspectiveResult part_p = perspective(f, ap, bp, cfg.order);
          const PerspectiveResult part_q = perspective(f, aq, bq, cfg.order);
          const Matrix assembled =
              vp * part_p.value.entries() * vp.adjoint() +
              vq * part_q.value.entries() * vq.adjoint();
          acc.note(equality_margin(whole.value.entries(), assembled),
                   cfg.tol, t, path);
        } catch (const Error& e) {
          acc.error(t, path, e.what());
        }
      }
      report.cells.push_back(acc.finish(cfg.trials));
    }
  }
  finish_report(report);
  return report;
}

namespace {

// Hermitian square root of a positive semidefinite matrix; tolerates tiny
// negative rounding eigenvalues, rejects genuinely indefinite input.
Matrix sqrt_psd(const HermitianMatrix& h) {
  SpectralDecomposition dec = eig(h);
  const Eigen::Index n = dec.eigenvalues.size();
  const double floor = -1e-10 * std::max(1.0, dec.eigenvalues(n - 1));
  if (dec.eigenvalues(0) < floor) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite: eigenvalue "
       << dec.eigenvalues(0);
    throw NumericError(os.str());
  }
  RealVector mapped(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    mapped(i) = std::sqrt(std::max(dec.eigenvalues(i), 0.0));
  }
  return dec.eigenvectors * mapped.asDiagonal() *
         dec.eigenvectors.adjoint();
}

}  // namespace

BlockUnitaryPair make_block_unitary_pair(const Matrix& c) {
  if (c.rows() != c.cols() || c.rows() < 1) {
    throw DimensionError("block unitary pair: contraction must be square");
  }
  const Eigen::Index n = c.rows();
  const Matrix eye = Matrix::Identity(n, n);
  BlockUnitaryPair pair;
  pair.c = c;
  pair.d = sqrt_psd(hermitize(eye - c * c.adjoint()));
  pair.e = sqrt_psd(hermitize(eye - c.adjoint() * c));

  pair.u = Matrix(2 * n, 2 * n);
  pair.u.topLeftCorner(n, n) = c;
  pair.u.topRightCorner(n, n) = pair.d;
  pair.u.bottomLeftCorner(n, n) = pair.e;
  pair.u.bottomRightCorner(n, n) = -c.adjoint();

  pair.v = Matrix(2 * n, 2 * n);
  pair.v.topLeftCorner(n, n) = c;
  pair.v.topRightCorner(n, n) = -pair.d;
  pair.v.bottomLeftCorner(n, n) = pair.e;
  pair.v.bottomRightCorner(n, n) = c.adjoint();

  const Matrix eye2 = Matrix::Identity(2 * n, 2 * n);
  const double udev = max_abs(pair.u.adjoint() * pair.u - eye2);
  const double vdev = max_abs(pair.v.adjoint() * pair.v - eye2);
  if (udev > 1e-9 || vdev > 1e-9) {
    std::ostringstream os;
    os << "block matrices failed the unitarity bound: deviations " << udev
       << ", " << vdev;
    throw NumericError(os.str());
  }
  return pair;
}

TrialReport check_block_unitary_identity(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("block_unitary_identity", cfg);
  RngStream root(cfg.seed);
  auto cs = root.fork("block_unitary_identity");
  for (int dim : cfg.dims) {
    auto ds = cs.fork("dim", static_cast<std::uint64_t>(dim));
    CellAccum acc(dim, "none");
    for (int t = 0; t < cfg.trials; ++t) {
      auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
      const std::string path = ts.path();
      try {
        auto contraction_stream = ts.fork("c");
        const Matrix c =
            random_contraction(ensemble_for(cfg, dim), contraction_stream);
        const BlockUnitaryPair pair = make_block_unitary_pair(c);

        const Matrix eye2 = Matrix::Identity(2 * dim, 2 * dim);
        const double unit_dev =
            std::max(max_abs(pair.u.adjoint() * pair.u - eye2),
                     max_abs(pair.v.adjoint() * pair.v - eye2));
        acc.note(-unit_dev, 0.1 * cfg.tol, t, path, "unitarity");

        PDMatrix a = draw_pd(cfg, dim, ts, "a");
        Matrix corner = Matrix::Zero(2 * dim, 2 * dim);
        corner.topLeftCorner(dim, dim) = a.entries();
        const Matrix averaged =
            0.5 * pair.u.adjoint() * corner * pair.u +
            0.5 * pair.v.adjoint() * corner * pair.v;
        Matrix expected = Matrix::Zero(2 * dim, 2 * dim);
        expected.topLeftCorner(dim, dim) =
            c.adjoint() * a.entries() * c;
        expected.bottomRightCorner(dim, dim) =
            pair.d * a.entries() * pair.d;
        acc.note(equality_margin(averaged, expected), cfg.tol, t, path,
                 "averaging identity");
      } catch (const Error& e) {
        acc.error(t, path, e.what());
      }
    }
    report.cells.push_back(acc.finish(cfg.trials));
  }
  finish_report(report);
  return report;
}

TrialReport check_transformer_inequality(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("transformer_inequality", cfg);
  RngStream root(cfg.seed);
  auto cs = root.fork("transformer_inequality");
  for (const auto& f :
       resolve_functions(cfg, FunctionSet::convex_and_affine)) {
    auto fs = cs.fork(f.id);
    for (int dim : cfg.dims) {
      auto ds = fs.fork("dim", static_cast<std::uint64_t>(dim));
      CellAccum acc(dim, f.id);
      for (int t = 0; t < cfg.trials; ++t) {
        auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
        const std::string path = ts.path();
        try {
          PDMatrix a = draw_pd(cfg, dim, ts, "a");
          PDMatrix b = draw_pd(cfg, dim, ts, "b");
          const PerspectiveResult p = perspective(f, a, b, cfg.order);

          auto contraction_stream = ts.fork("c");
          const Matrix c = random_contraction(ensemble_for(cfg, dim),
                                              contraction_stream);
          PDMatrix ca = PDMatrix::from(congruence(c, a.base()));
          PDMatrix cb = PDMatrix::from(congruence(c, b.base()));
          const PerspectiveResult pc = perspective(f, ca, cb, cfg.order);
          const HermitianMatrix rhs = congruence(c, p.value);
          const LoewnerComparison cmp = loewner_leq(pc.value, rhs, cfg.tol);
          acc.note(cmp.margin / cmp.scale, cfg.tol, t, path, "contraction");

          // Unitary specialization: equality within 10*tol both ways.
          auto us = ts.fork("u");
          const Matrix u = random_unitary(ensemble_for(cfg, dim), us);
          PDMatrix ua = PDMatrix::from(congruence(u, a.base()));
          PDMatrix ub = PDMatrix::from(congruence(u, b.base()));
          const PerspectiveResult pu = perspective(f, ua, ub, cfg.order);
          const HermitianMatrix rhs_u = congruence(u, p.value);
          const LoewnerComparison fwd =
              loewner_leq(pu.value, rhs_u, 10.0 * cfg.tol);
          const LoewnerComparison bwd =
              loewner_leq(rhs_u, pu.value, 10.0 * cfg.tol);
          acc.note(std::min(fwd.margin / fwd.scale, bwd.margin / bwd.scale),
                   10.0 * cfg.tol, t, path, "unitary specialization");
        } catch (const Error& e) {
          acc.error(t, path, e.what());
        }
      }
      report.cells.push_back(acc.finish(cfg.trials));
    }
  }
  finish_report(report);
  return report;
}

TrialReport check_transformer_equality(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("transformer_equality", cfg);
  RngStream root(cfg.seed);
  auto cs = root.fork("transformer_equality");
  for (const auto& f : resolve_functions(cfg, FunctionSet::all_entries)) {
    auto fs = cs.fork(f.id);
    for (int dim : cfg.dims) {
      auto ds = fs.fork("dim", static_cast<std::uint64_t>(dim));
      CellAccum acc(dim, f.id);
      for (int t = 0; t < cfg.trials; ++t) {
        auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
        const std::string path = ts.path();
        try {
          PDMatrix a = draw_pd(cfg, dim, ts, "a");
          PDMatrix b = draw_pd(cfg, dim, ts, "b");
          const PerspectiveResult p = perspective(f, a, b, cfg.order);

          auto is = ts.fork("invertible");
          EnsembleConfig inv_cfg = ensemble_for(cfg, dim);
          inv_cfg.cond_target = 100.0;
          const Matrix c = random_invertible(inv_cfg, is);
          const double cond = condition_number(c);

          const HermitianMatrix lhs = congruence(c, p.value);
          PDMatrix ca = PDMatrix::from(congruence(c, a.base()));
          PDMatrix cb = PDMatrix::from(congruence(c, b.base()));
          const PerspectiveResult pc = perspective(f, ca, cb, cfg.order);
          const double dev = max_abs(lhs.entries() - pc.value.entries());
          const double scale = std::max(
              {lhs.spectral_norm(), pc.value.spectral_norm(), 1.0});
          acc.note(-dev / (scale * cond * cond), cfg.tol, t, path,
                   "invertible transformer");

          // Specialization A^{-1/2} P(A,B) A^{-1/2} = P(1, A^{-1/2}BA^{-1/2})
          // in weight_first order.
          const PerspectiveResult pwf =
              cfg.order == PerspectiveOrder::weight_first
                  ? p
                  : perspective(f, a, b, PerspectiveOrder::weight_first);
          const Matrix ta = a.inv_sqrt_factor();
          const HermitianMatrix lhs2 =
              hermitize(ta * pwf.value.entries() * ta);
          PDMatrix inner =
              PDMatrix::from(hermitize(ta * b.entries() * ta));
          const PerspectiveResult rhs2 =
              perspective(f, PDMatrix::identity(dim), inner,
                          PerspectiveOrder::weight_first);
          const double dev2 =
              max_abs(lhs2.entries() - rhs2.value.entries());
          const double scale2 = std::max(
              {lhs2.spectral_norm(), rhs2.value.spectral_norm(), 1.0});
          acc.note(-dev2 / (scale2 * a.condition()), cfg.tol, t, path,
                   "normalized first argument");
        } catch (const Error& e) {
          acc.error(t, path, e.what());
        }
      }
      report.cells.push_back(acc.finish(cfg.trials));
    }
  }
  finish_report(report);
  return report;
}

TrialReport check_finite_rank_formula(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("finite_rank_formula", cfg);
  static constexpr std::array<double, 5> kGrid = {0.1, 0.5, 1.0, 2.0, 10.0};
  RngStream root(cfg.seed);
  auto cs = root.fork("finite_rank_formula");
  for (const auto& f : resolve_functions(cfg, FunctionSet::all_entries)) {
    auto fs = cs.fork(f.id);
    for (int dim : cfg.dims) {
      auto ds = fs.fork("dim", static_cast<std::uint64_t>(dim));
      CellAccum acc(dim, f.id);
      PDMatrix eye = PDMatrix::identity(dim);

      // Scalar grid: P_f(1, t 1) = f(t) 1, absolute tolerance.
      for (double tval : kGrid) {
        PDMatrix targ = PDMatrix::from(
            hermitize(tval * Matrix::Identity(dim, dim)));
        const PerspectiveResult p =
            perspective(f, eye, targ, PerspectiveOrder::weight_first);
        const Matrix expected =
            f.eval(tval) * Matrix::Identity(dim, dim);
        acc.note(-max_abs(p.value.entries() - expected), 0.01 * cfg.tol, -1,
                 ds.path(), "scalar grid");
      }

      for (int t = 0; t < cfg.trials; ++t) {
        auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
        const std::string path = ts.path();
        try {
          PDMatrix a = draw_pd(cfg, dim, ts, "a");
          const PerspectiveResult p =
              perspective(f, eye, a, PerspectiveOrder::weight_first);
          const HermitianMatrix direct = apply_function(f, a.base());
          acc.note(equality_margin(p.value.entries(), direct.entries()),
                   0.1 * cfg.tol, t, path);
        } catch (const Error& e) {
          acc.error(t, path, e.what());
        }
      }
      report.cells.push_back(acc.finish(cfg.trials));
    }
  }
  finish_report(report);
  return report;
}

TrialReport check_geometric_mean_concavity(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("geometric_mean_concavity", cfg);
  RngStream root(cfg.seed);
  auto cs = root.fork("geometric_mean_concavity");
  for (int dim : cfg.dims) {
    auto ds = cs.fork("dim", static_cast<std::uint64_t>(dim));
    CellAccum acc(dim, "sqrt");
    for (int t = 0; t < cfg.trials; ++t) {
      auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
      const std::string path = ts.path();
      try {
        PDMatrix a1 = draw_pd(cfg, dim, ts, "a1");
        PDMatrix b1 = draw_pd(cfg, dim, ts, "b1");
        PDMatrix a2 = draw_pd(cfg, dim, ts, "a2");
        PDMatrix b2 = draw_pd(cfg, dim, ts, "b2");

        PDMatrix g1 = geometric_mean(a1, b1);
        PDMatrix g2 = geometric_mean(a2, b2);
        PDMatrix am = mix_pd(a1, a2, 0.5);
        PDMatrix bm = mix_pd(b1, b2, 0.5);
        PDMatrix gm = geometric_mean(am, bm);
        const HermitianMatrix avg =
            hermitize((g1.entries() + g2.entries()) / 2.0);
        const LoewnerComparison cmp = loewner_leq(avg, gm.base(), cfg.tol);
        acc.note(cmp.margin / cmp.scale, cfg.tol, t, path,
                 "midpoint concavity");

        PDMatrix g1_swapped = geometric_mean(b1, a1);
        acc.note(
            equality_margin(g1.entries(), g1_swapped.entries()), cfg.tol, t,
            path, "symmetry");

        if (dim == 1) {
          const double ga = g1.entries()(0, 0).real();
          const double expected = std::sqrt(a1.entries()(0, 0).real() *
                                            b1.entries()(0, 0).real());
          acc.note(-std::abs(ga - expected) / expected, 1e-12, t, path,
                   "scalar value");
        }
      } catch (const Error& e) {
        acc.error(t, path, e.what());
      }
    }
    report.cells.push_back(acc.finish(cfg.trials));
  }
  finish_report(report);
  return report;
}

TrialReport check_relative_entropy_commuting(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("relative_entropy_commuting", cfg);
  constexpr double kSeparationGap = 1e-6;
  RngStream root(cfg.seed);
  auto cs = root.fork("relative_entropy_commuting");
  bool separation_found = false;
  for (int dim : cfg.dims) {
    auto ds = cs.fork("dim", static_cast<std::uint64_t>(dim));
    CellAccum acc(dim, "neg_log");
    for (int t = 0; t < cfg.trials; ++t) {
      auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
      const std::string path = ts.path();
      try {
        auto pair_stream = ts.fork("commuting");
        auto [a, b] =
            random_commuting_pd_pair(ensemble_for(cfg, dim), pair_stream);
        const double s = relative_entropy(a, b);
        const double tr_p = trace_perspective_neg_log(a, b);
        const double gap = std::abs(s - tr_p);
        acc.note(-gap / (1.0 + std::abs(s)), 0.1 * cfg.tol, t, path,
                 "commuting equality");
      } catch (const Error& e) {
        acc.error(t, path, e.what());
      }
    }
    report.cells.push_back(acc.finish(cfg.trials));

    // Search for a separating non-commuting pair; generic draws separate.
    if (dim >= 2) {
      auto search = ds.fork("separation");
      for (int t = 0; t < cfg.trials; ++t) {
        auto ts = search.fork("trial", static_cast<std::uint64_t>(t));
        PDMatrix a = draw_pd(cfg, dim, ts, "a");
        PDMatrix b = draw_pd(cfg, dim, ts, "b");
        const double gap = std::abs(relative_entropy(a, b) -
                                    trace_perspective_neg_log(a, b));
        if (gap > kSeparationGap) {
          ViolationWitness witness;
          witness.seed_path = ts.path();
          witness.dim = dim;
          witness.function_id = "neg_log";
          witness.margin = gap;
          witness.matrices = {a.base(), b.base()};
          witness.reverified = true;  // re-derived below
          {
            auto replay = search.fork("trial", static_cast<std::uint64_t>(t));
            PDMatrix ra = draw_pd(cfg, dim, replay, "a");
            PDMatrix rb = draw_pd(cfg, dim, replay, "b");
            const double regap = std::abs(relative_entropy(ra, rb) -
                                          trace_perspective_neg_log(ra, rb));
            witness.reverified = (regap == gap);
          }
          report.witnesses.push_back(std::move(witness));
          separation_found = true;
          break;
        }
      }
    }
  }
  finish_report(report);
  if (!separation_found) report.passed = false;
  for (const auto& w : report.witnesses) {
    if (!w.reverified) report.passed = false;
  }
  return report;
}

TrialReport detect_violation_control(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("detect_violation_control", cfg);
  RngStream root(cfg.seed);
  auto cs = root.fork("detect_violation_control");
  for (const auto& f :
       resolve_functions(cfg, FunctionSet::control_search)) {
    const bool expect_witness =
        f.classification == Convexity::control_not_operator_convex;
    auto fs = cs.fork(f.id);
    bool found_for_f = false;
    for (int dim : cfg.dims) {
      auto ds = fs.fork("dim", static_cast<std::uint64_t>(dim));
      CellAccum acc(dim, f.id);
      int trials_run = 0;
      for (int t = 0; t < cfg.trials; ++t) {
        auto ts = ds.fork("trial", static_cast<std::uint64_t>(t));
        const std::string path = ts.path();
        ++trials_run;
        try {
          const auto outcome = joint_convexity_trial(f, cfg, dim, ts);
          acc.cell.worst_margin =
              std::min(acc.cell.worst_margin, outcome.margin_norm);
          if (outcome.margin_norm < -cfg.tol) {
            if (expect_witness) {
              ViolationWitness witness;
              witness.seed_path = path;
              witness.dim = dim;
              witness.function_id = f.id;
              witness.lambda = outcome.lambda_at_worst;
              witness.margin = outcome.margin_norm;
              witness.matrices = outcome.matrices;
              {
                auto replay =
                    ds.fork("trial", static_cast<std::uint64_t>(t));
                const auto again = joint_convexity_trial(f, cfg, dim, replay);
                witness.reverified =
                    (again.margin_norm == outcome.margin_norm) &&
                    (again.lambda_at_worst == outcome.lambda_at_worst);
              }
              report.witnesses.push_back(std::move(witness));
              found_for_f = true;
            } else {
              acc.cell.failures.push_back(TrialFailure{
                  t, path, outcome.margin_norm,
                  "unexpected joint-convexity violation"});
            }
          }
        } catch (const Error& e) {
          acc.error(t, path, e.what());
        }
        if (found_for_f) break;
      }
      report.cells.push_back(acc.finish(trials_run));
      if (found_for_f) break;
    }
    if (expect_witness && !found_for_f) {
      // Record the miss as a failure on the last cell of this function.
      if (!report.cells.empty()) {
        report.cells.back().failures.push_back(TrialFailure{
            -1, fs.path(), std::numeric_limits<double>::quiet_NaN(),
            "no violation witness found for control function"});
      }
    }
  }
  finish_report(report);
  for (const auto& w : report.witnesses) {
    if (!w.reverified) report.passed = false;
  }
  return report;
}

std::vector<double> reconstruction_grid() {
  std::vector<double> grid(20);
  for (int i = 0; i < 20; ++i) {
    grid[i] = 0.1 * std::pow(100.0, i / 19.0);
  }
  grid.front() = 0.1;
  grid.back() = 10.0;
  return grid;
}

std::vector<ScalarRecovery> reconstruct_scalar(const MatrixMap2& blackbox,
                                               const std::vector<double>& t_grid,
                                               int dim, double tol) {
  if (dim < 1) throw DimensionError("reconstruct_scalar: dim must be >= 1");
  PDMatrix eye = PDMatrix::identity(dim);
  std::vector<ScalarRecovery> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > 0.0)) {
      throw ParseError("reconstruct_scalar: grid points must be positive");
    }
    PDMatrix t_eye =
        PDMatrix::from(hermitize(t * Matrix::Identity(dim, dim)));
    const HermitianMatrix value = blackbox(eye, t_eye);
    const Matrix& m = value.entries();

    double diag_mean = 0.0;
    for (int i = 0; i < dim; ++i) diag_mean += m(i, i).real();
    diag_mean /= dim;

    double off_mass = 0.0;
    double diag_spread = 0.0;
    for (int i = 0; i < dim; ++i) {
      diag_spread = std::max(diag_spread, std::abs(m(i, i).real() - diag_mean));
      for (int j = 0; j < dim; ++j) {
        if (i != j) off_mass = std::max(off_mass, std::abs(m(i, j)));
      }
    }
    const double scale = std::max(1.0, std::abs(diag_mean));
    if (off_mass > tol * scale || diag_spread > tol * scale) {
      std::ostringstream os;
      os << "black box output at (1, " << t
         << " 1) is not scalar: off-diagonal mass " << off_mass
         << ", diagonal spread " << diag_spread
         << " (the map is not unitarily covariant)";
      throw NonScalarError(os.str());
    }
    out.push_back(ScalarRecovery{t, diag_mean});
  }
  return out;
}

MonotoneCubicInterpolant::MonotoneCubicInterpolant(std::vector<double> x,
                                                   std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const auto n = static_cast<Eigen::Index>(x_.size());
  if (n < 2 || y_.size() != x_.size()) {
    throw ParseError("interpolant needs >= 2 matching nodes");
  }
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (!(x_[i + 1] > x_[i])) {
      throw ParseError("interpolant abscissae must be strictly ascending");
    }
  }

  std::vector<double> h(n - 1), delta(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    delta[i] = (y_[i + 1] - y_[i]) / h[i];
  }

  slope_.assign(n, 0.0);
  if (n == 2) {
    slope_[0] = slope_[1] = delta[0];
  } else {
    // Not-a-knot cubic spline: second derivatives from a dense solve
    // (the node count here is tiny), slopes derived from them.
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
      sys(i, i - 1) = h[i - 1];
      sys(i, i) = 2.0 * (h[i - 1] + h[i]);
      sys(i, i + 1) = h[i];
      rhs(i) = 6.0 * (delta[i] - delta[i - 1]);
    }
    if (n == 3) {
      // Single parabola through the three nodes.
      sys(0, 0) = 1.0;
      sys(0, 1) = -1.0;
      sys(2, 1) = -1.0;
      sys(2, 2) = 1.0;
    } else {
      // Third derivative continuous across the first and last interior
      // knots.
      sys(0, 0) = h[1];
      sys(0, 1) = -(h[0] + h[1]);
      sys(0, 2) = h[0];
      sys(n - 1, n - 3) = h[n - 2];
      sys(n - 1, n - 2) = -(h[n - 3] + h[n - 2]);
      sys(n - 1, n - 1) = h[n - 3];
    }
    Eigen::VectorXd sigma = sys.partialPivLu().solve(rhs);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      slope_[i] = delta[i] - h[i] * (2.0 * sigma(i) + sigma(i + 1)) / 6.0;
    }
    slope_[n - 1] =
        delta[n - 2] + h[n - 2] * (sigma(n - 2) + 2.0 * sigma(n - 1)) / 6.0;
  }

  // Hyman filter: clamp slopes into the monotonicity box [0, 3] relative
  // to the adjacent secants.
  auto clamp_slope = [](double d, double lo_secant, double hi_secant) {
    const double lo = std::min(lo_secant, hi_secant);
    const double hi = std::max(lo_secant, hi_secant);
    if (lo > 0.0) return std::clamp(d, 0.0, 3.0 * lo);
    if (hi < 0.0) return std::clamp(d, 3.0 * hi, 0.0);
    return 0.0;  // local extremum in the data
  };
  slope_[0] = clamp_slope(slope_[0], delta[0], delta[0]);
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    slope_[i] = clamp_slope(slope_[i], delta[i - 1], delta[i]);
  }
  slope_[n - 1] = clamp_slope(slope_[n - 1], delta[n - 2], delta[n - 2]);
}

double MonotoneCubicInterpolant::operator()(double t) const {
  if (!(t >= x_.front() && t <= x_.back())) {
    std::ostringstream os;
    os << "interpolation argument " << t << " outside [" << x_.front()
       << ", " << x_.back() << "]";
    throw DomainError(os.str(), t);
  }
  const auto it = std::upper_bound(x_.begin(), x_.end(), t);
  const auto i = std::clamp<std::ptrdiff_t>(it - x_.begin() - 1, 0,
                                            static_cast<std::ptrdiff_t>(
                                                x_.size()) -
                                                2);
  const double hseg = x_[i + 1] - x_[i];
  const double s = (t - x_[i]) / hseg;
  const double s2 = s * s;
  const double s3 = s2 * s;
  return y_[i] * (2.0 * s3 - 3.0 * s2 + 1.0) +
         y_[i + 1] * (-2.0 * s3 + 3.0 * s2) +
         hseg * slope_[i] * (s3 - 2.0 * s2 + s) +
         hseg * slope_[i + 1] * (s3 - s2);
}

namespace {

// Spectra for the rebuild-comparison pairs stay inside the recovered node
// hull with headroom for the interpolant's boundary intervals.
constexpr double kRebuildSpectrumLo = 0.15;
constexpr double kRebuildSpectrumHi = 8.0;

MatrixMap2 perspective_blackbox(const ScalarFunction& f) {
  return [f](const PDMatrix& a, const PDMatrix& b) {
    return perspective(f, a, b, PerspectiveOrder::weight_first).value;
  };
}

}  // namespace

TrialReport check_reconstruction(const CheckConfig& cfg) {
  validate(cfg);
  auto report = make_report("reconstruction", cfg);
  const std::vector<double> grid = reconstruction_grid();
  RngStream root(cfg.seed);
  auto cs = root.fork("reconstruction");

  // Node recovery for the full catalog at every requested dimension.
  for (const auto& f : resolve_functions(cfg, FunctionSet::all_entries)) {
    MatrixMap2 blackbox = perspective_blackbox(f);
    for (int dim : cfg.dims) {
      CellAccum acc(dim, f.id);
      const std::string path = "reconstruction/" + f.id;
      try {
        const auto recovered = reconstruct_scalar(blackbox, grid, dim, cfg.tol);
        double max_err = 0.0;
        for (const auto& rec : recovered) {
          max_err = std::max(max_err, std::abs(rec.f_estimate - f.eval(rec.t)));
        }
        acc.note(-max_err, 0.1 * cfg.tol, -1, path, "node recovery");
      } catch (const Error& e) {
        acc.error(-1, path, e.what());
      }
      report.cells.push_back(acc.finish(0));
    }
  }

  // Uniqueness demonstration: rebuild the map from the recovered scalars
  // alone and compare on random pairs. The geometric mean stands in for
  // sqrt to exercise an independently assembled black box.
  const std::vector<std::string> demo_ids = {"neg_log", "sqrt", "inv"};
  for (const auto& id : demo_ids) {
    const ScalarFunction f = require_function(id);
    MatrixMap2 blackbox;
    if (id == "sqrt") {
      blackbox = [](const PDMatrix& a, const PDMatrix& b) {
        return geometric_mean(a, b).base();
      };
    } else {
      blackbox = perspective_blackbox(f);
    }
    auto fs = cs.fork("rebuild").fork(id);
    for (int dim : cfg.dims) {
      auto ds = fs.fork("dim", static_cast<std::uint64_t>(dim));
      CellAccum acc(dim, id + "/rebuild");
      try {
        const auto recovered = reconstruct_scalar(blackbox, grid, dim, cfg.tol);
        std::vector<double> xs, ys;
        xs.reserve(recovered.size());
        ys.reserve(recovered.size());
        for (const auto& rec : recovered) {
          xs.push_back(std::log(rec.t));
          ys.push_back(rec.f_estimate);
        }
        MonotoneCubicInterpolant interp(std::move(xs), std::move(ys));
        ScalarFunction rebuilt{
            "rebuilt_" + id,
            [interp](double t) { return interp(std::log(t)); },
            f.classification, f.monotone, "rebuilt from recovered nodes"};

        constexpr int kPairs = 50;
        for (int t = 0; t < kPairs; ++t) {
          auto ts = ds.fork("pair", static_cast<std::uint64_t>(t));
          const std::string path = ts.path();
          try {
            PDMatrix a = draw_pd(cfg, dim, ts, "a");
            auto ms = ts.fork("m");
            PDMatrix m = random_pd_spectrum(ensemble_for(cfg, dim), ms,
                                            kRebuildSpectrumLo,
                                            kRebuildSpectrumHi);
            const Matrix sa = a.sqrt_factor();
            PDMatrix b =
                PDMatrix::from(hermitize(sa * m.entries() * sa));
            const HermitianMatrix original = blackbox(a, b);
            const HermitianMatrix rebuilt_value =
                perspective(rebuilt, a, b, PerspectiveOrder::weight_first)
                    .value;
            // Interpolation-limited agreement.
            acc.note(equality_margin(rebuilt_value.entries(),
                                     original.entries()),
                     1e-4, t, path, "rebuild agreement");
          } catch (const Error& e) {
            acc.error(t, path, e.what());
          }
        }
        report.cells.push_back(acc.finish(kPairs));
      } catch (const Error& e) {
        acc.error(-1, ds.path(), e.what());
        report.cells.push_back(acc.finish(0));
      }
    }
  }

  // Negative control: a covariance-breaking defect must be rejected.
  {
    static const ScalarFunction neg_log = require_function("neg_log");
    int defect_dim = 0;
    for (int dim : cfg.dims) {
      if (dim >= 2) {
        defect_dim = dim;
        break;
      }
    }
    if (defect_dim >= 2) {
      CellAccum acc(defect_dim, "defect_control");
      MatrixMap2 defective = [](const PDMatrix& a, const PDMatrix& b) {
        HermitianMatrix clean =
            perspective(neg_log, a, b, PerspectiveOrder::weight_first).value;
        Matrix bump = Matrix::Zero(a.dim(), a.dim());
        bump(0, 0) = 0.01;
        bump(1, 1) = -0.01;
        return hermitize(clean.entries() + bump);
      };
      bool rejected = false;
      try {
        reconstruct_scalar(defective, grid, defect_dim, cfg.tol);
      } catch (const NonScalarError&) {
        rejected = true;
      }
      if (!rejected) {
        acc.cell.failures.push_back(TrialFailure{
            -1, "reconstruction/defect",
            std::numeric_limits<double>::quiet_NaN(),
            "defect-injected black box was not rejected"});
      }
      report.cells.push_back(acc.finish(1));
    }
  }

  finish_report(report);
  return report;
}

const std::vector<std::string>& suite_check_ids() {
  static const std::vector<std::string> ids = {
      "joint_convexity",
      "jensen_decomposition",
      "homogeneity",
      "unitary_invariance",
      "block_diagonal",
      "block_unitary_identity",
      "transformer_inequality",
      "transformer_equality",
      "finite_rank_formula",
      "reconstruction",
      "geometric_mean_concavity",
      "relative_entropy_commuting",
      "detect_violation_control",
  };
  return ids;
}

TrialReport run_check(std::string_view id, const CheckConfig& cfg) {
  std::string name(id);
  if (name.rfind("check_", 0) == 0) name = name.substr(6);
  if (name == "violation_control") name = "detect_violation_control";

  if (name == "joint_convexity") return check_joint_convexity(cfg);
  if (name == "jensen_decomposition") return check_jensen_decomposition(cfg);
  if (name == "homogeneity") return check_homogeneity(cfg);
  if (name == "unitary_invariance") return check_unitary_invariance(cfg);
  if (name == "block_diagonal") return check_block_diagonal(cfg);
  if (name == "block_unitary_identity") {
    return check_block_unitary_identity(cfg);
  }
  if (name == "transformer_inequality") {
    return check_transformer_inequality(cfg);
  }
  if (name == "transformer_equality") return check_transformer_equality(cfg);
  if (name == "finite_rank_formula") return check_finite_rank_formula(cfg);
  if (name == "reconstruction") return check_reconstruction(cfg);
  if (name == "geometric_mean_concavity") {
    return check_geometric_mean_concavity(cfg);
  }
  if (name == "relative_entropy_commuting") {
    return check_relative_entropy_commuting(cfg);
  }
  if (name == "detect_violation_control") return detect_violation_control(cfg);

  std::ostringstream os;
  os << "unknown check id '" << id << "'; available:";
  for (const auto& known : suite_check_ids()) os << " " << known;
  throw ParseError(os.str());
}

}  // namespace perspecta
