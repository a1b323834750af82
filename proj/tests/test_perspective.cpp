#include <doctest.h>

#include <cmath>

#include "perspecta/perspective.hpp"
#include "perspecta/random_ensembles.hpp"
#include "test_helpers.hpp"

using namespace perspecta;
using namespace perspecta::testing;

namespace {

PDMatrix pd(std::initializer_list<std::initializer_list<Complex>> rows) {
  return PDMatrix::from(hermitize(make_matrix(rows)));
}

PDMatrix pd_diag(std::initializer_list<double> values) {
  return PDMatrix::from(hermitize(diag(values)));
}

}  // namespace

TEST_CASE("perspective of identity and const_one collapse to an argument") {
  RngStream root(101);
  EnsembleConfig cfg;
  cfg.dim = 4;
  auto sa = root.fork("a");
  auto sb = root.fork("b");
  const PDMatrix a = random_pd(cfg, sa);
  const PDMatrix b = random_pd(cfg, sb);

  const auto id_result = perspective(require_function("identity"), a, b,
                                     PerspectiveOrder::weight_second);
  CHECK(approx_equal(id_result.value.entries(), a.entries(),
                     1e-12 * a.eigmax()));

  const auto one_result = perspective(require_function("const_one"), a, b,
                                      PerspectiveOrder::weight_second);
  CHECK(approx_equal(one_result.value.entries(), b.entries(),
                     1e-12 * b.eigmax()));
}

TEST_CASE("scalar perspective of -log matches t log t - t log s") {
  const PDMatrix a = pd_diag({2.0});
  const PDMatrix b = pd_diag({1.0});
  const auto result = perspective(require_function("neg_log"), a, b,
                                  PerspectiveOrder::weight_first);
  // 2 log 2 - 2 log 1
  CHECK(result.value.entries()(0, 0).real() ==
        doctest::Approx(1.3862943611198906).epsilon(1e-12));
}

TEST_CASE("perspective of -log vanishes on equal arguments") {
  RngStream root(102);
  EnsembleConfig cfg;
  cfg.dim = 3;
  const PDMatrix a = random_pd(cfg, root);
  const auto result = perspective(require_function("neg_log"), a, a,
                                  PerspectiveOrder::weight_first);
  CHECK(max_abs(result.value.entries()) <= 1e-12 * a.eigmax());
}

TEST_CASE("perspective inner spectrum is strictly positive") {
  RngStream root(103);
  EnsembleConfig cfg;
  cfg.dim = 5;
  auto sa = root.fork("a");
  auto sb = root.fork("b");
  const PDMatrix a = random_pd(cfg, sa);
  const PDMatrix b = random_pd(cfg, sb);
  const auto result = perspective(require_function("inv"), a, b,
                                  PerspectiveOrder::weight_first);
  for (Eigen::Index i = 0; i < result.inner_spectrum.size(); ++i) {
    CHECK(result.inner_spectrum(i) > 0.0);
  }
}

TEST_CASE("perspective rejects dimension mismatches") {
  const PDMatrix a = pd_diag({1.0, 2.0});
  const PDMatrix b = pd_diag({1.0});
  CHECK_THROWS_AS(perspective(require_function("inv"), a, b,
                              PerspectiveOrder::weight_first),
                  DimensionError);
}

TEST_CASE("scalar consistency at dim 1 for the whole catalog") {
  RngStream root(104);
  for (const auto& f : catalog()) {
    for (int rep = 0; rep < 25; ++rep) {
      auto s = root.fork(f.id, rep);
      const double t = s.log_uniform(0.1, 10.0);
      const double w = s.log_uniform(0.1, 10.0);
      const PDMatrix tm = pd_diag({t});
      const PDMatrix wm = pd_diag({w});

      const double second =
          perspective(f, tm, wm, PerspectiveOrder::weight_second)
              .value.entries()(0, 0)
              .real();
      const double second_oracle = w * f.eval(t / w);
      const double scale2 =
          std::max({1.0, std::abs(second_oracle), w});
      CHECK(std::abs(second - second_oracle) <= 1e-12 * scale2);

      const double first =
          perspective(f, tm, wm, PerspectiveOrder::weight_first)
              .value.entries()(0, 0)
              .real();
      const double first_oracle = t * f.eval(w / t);
      const double scale1 = std::max({1.0, std::abs(first_oracle), t});
      CHECK(std::abs(first - first_oracle) <= 1e-12 * scale1);
    }
  }
}

TEST_CASE("commuting oracle on diagonal pairs") {
  const PDMatrix a = pd_diag({2.0, 4.0});
  const PDMatrix b = pd_diag({1.0, 1.0});
  const HermitianMatrix result = perspective_commuting_oracle(
      require_function("neg_log"), a, b, PerspectiveOrder::weight_first);
  // Per eigenvalue: a f(b/a) with f = -log, so 2 log 2 and 4 log 4.
  const Matrix expected = diag({2.0 * std::log(2.0), 4.0 * std::log(4.0)});
  CHECK(approx_equal(result.entries(), expected, 1e-12));
}

TEST_CASE("commuting oracle degenerate cases") {
  RngStream root(105);
  EnsembleConfig cfg;
  cfg.dim = 3;
  const PDMatrix a = random_pd(cfg, root);
  const ScalarFunction inv = require_function("inv");

  // A = B: weight_first gives f(1) A.
  const HermitianMatrix same =
      perspective_commuting_oracle(inv, a, a, PerspectiveOrder::weight_first);
  CHECK(approx_equal(same.entries(), inv.eval(1.0) * a.entries(),
                     1e-10 * a.eigmax()));

  // Scalar multiples of the identity: s f(t/s) I in weight_second order.
  const PDMatrix t_eye = PDMatrix::from(
      hermitize(3.0 * Matrix::Identity(3, 3)));
  const PDMatrix s_eye = PDMatrix::from(
      hermitize(0.5 * Matrix::Identity(3, 3)));
  const HermitianMatrix inflated = perspective_commuting_oracle(
      inv, t_eye, s_eye, PerspectiveOrder::weight_second);
  const double expected = 0.5 * inv.eval(3.0 / 0.5);
  CHECK(approx_equal(inflated.entries(),
                     expected * Matrix::Identity(3, 3), 1e-12));
}

TEST_CASE("commuting oracle rejects non-commuting input") {
  const PDMatrix a = pd({{2.0, 0.5}, {0.5, 1.0}});
  const PDMatrix b = pd_diag({1.0, 3.0});
  CHECK_THROWS_AS(
      perspective_commuting_oracle(require_function("inv"), a, b,
                                   PerspectiveOrder::weight_first),
      DomainError);
}

TEST_CASE("perspective agrees with the commuting oracle on commuting pairs") {
  RngStream root(106);
  EnsembleConfig cfg;
  cfg.dim = 4;
  for (const auto& f : catalog()) {
    for (auto order :
         {PerspectiveOrder::weight_second, PerspectiveOrder::weight_first}) {
      for (int rep = 0; rep < 10; ++rep) {
        auto s = root.fork(f.id, rep).fork(to_string(order));
        const auto [a, b] = random_commuting_pd_pair(cfg, s);
        const HermitianMatrix oracle =
            perspective_commuting_oracle(f, a, b, order);
        const HermitianMatrix direct = perspective(f, a, b, order).value;
        const double scale = std::max(1.0, oracle.spectral_norm());
        CHECK_MESSAGE(
            max_abs(oracle.entries() - direct.entries()) <= 1e-9 * scale,
            f.id << " " << to_string(order));
      }
    }
  }
}

TEST_CASE("geometric mean of scalars and equal arguments") {
  const PDMatrix a = pd_diag({4.0});
  const PDMatrix b = pd_diag({9.0});
  CHECK(geometric_mean(a, b).entries()(0, 0).real() ==
        doctest::Approx(6.0).epsilon(1e-12));

  RngStream root(107);
  EnsembleConfig cfg;
  cfg.dim = 3;
  const PDMatrix c = random_pd(cfg, root);
  CHECK(approx_equal(geometric_mean(c, c).entries(), c.entries(),
                     1e-10 * c.eigmax()));
}

TEST_CASE("geometric mean satisfies the Riccati equation") {
  RngStream root(108);
  EnsembleConfig cfg;
  cfg.dim = 3;
  for (int rep = 0; rep < 20; ++rep) {
    auto s = root.fork("rep", rep);
    auto sa = s.fork("a");
    auto sb = s.fork("b");
    const PDMatrix a = random_pd(cfg, sa);
    const PDMatrix b = random_pd(cfg, sb);
    const PDMatrix x = geometric_mean(a, b);
    // Direct multiplication oracle: X A^{-1} X = B.
    const Matrix riccati = x.entries() * a.inverse() * x.entries();
    const double scale = std::max(1.0, b.base().spectral_norm());
    CHECK(max_abs(riccati - b.entries()) <= 1e-7 * scale);
  }
}

TEST_CASE("geometric mean is symmetric") {
  RngStream root(109);
  EnsembleConfig cfg;
  cfg.dim = 4;
  for (int rep = 0; rep < 20; ++rep) {
    auto s = root.fork("rep", rep);
    auto sa = s.fork("a");
    auto sb = s.fork("b");
    const PDMatrix a = random_pd(cfg, sa);
    const PDMatrix b = random_pd(cfg, sb);
    const PDMatrix ab = geometric_mean(a, b);
    const PDMatrix ba = geometric_mean(b, a);
    const double scale = std::max(1.0, ab.base().spectral_norm());
    CHECK(max_abs(ab.entries() - ba.entries()) <= 1e-8 * scale);
  }
}

TEST_CASE("relative entropy values") {
  RngStream root(110);
  EnsembleConfig cfg;
  cfg.dim = 3;
  const PDMatrix a = random_pd(cfg, root);
  CHECK(std::abs(relative_entropy(a, a)) <= 1e-12 * a.eigmax());

  CHECK(relative_entropy(pd_diag({2.0}), pd_diag({1.0})) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

  // Commuting diagonal oracle: sum of lambda_i (log lambda_i - log mu_i).
  CHECK(relative_entropy(pd_diag({1.0, 2.0}), pd_diag({2.0, 1.0})) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("perspective trace equals relative entropy exactly when commuting") {
  RngStream root(111);
  EnsembleConfig cfg;
  cfg.dim = 4;
  for (int rep = 0; rep < 25; ++rep) {
    auto s = root.fork("rep", rep);
    const auto [a, b] = random_commuting_pd_pair(cfg, s);
    const double entropy = relative_entropy(a, b);
    const double trace = trace_perspective_neg_log(a, b);
    CHECK(std::abs(entropy - trace) <= 1e-9 * (1.0 + std::abs(entropy)));
  }

  const PDMatrix a = pd_diag({1.5, 0.5});
  CHECK(std::abs(trace_perspective_neg_log(a, a)) <= 1e-12);
}

TEST_CASE("perspective trace separates from relative entropy off the commutant") {
  // Recorded witness: seed 42, the first drawn 2x2 pair already separates.
  EnsembleConfig cfg;
  cfg.dim = 2;
  RngStream root(42);
  auto s = root.fork("separation").fork("trial", 0);
  auto sa = s.fork("a");
  auto sb = s.fork("b");
  const PDMatrix a = random_pd(cfg, sa);
  const PDMatrix b = random_pd(cfg, sb);
  const double gap =
      std::abs(relative_entropy(a, b) - trace_perspective_neg_log(a, b));
  CHECK(gap > 1e-6);
}

TEST_CASE("quadratic congruence equals A B^{-1} A") {
  CHECK(quadratic_congruence(pd_diag({2.0}), pd_diag({4.0}))
            .entries()(0, 0)
            .real() == doctest::Approx(1.0).epsilon(1e-14));

  RngStream root(112);
  EnsembleConfig cfg;
  cfg.dim = 3;
  const PDMatrix a = random_pd(cfg, root);
  CHECK(approx_equal(quadratic_congruence(a, a).entries(), a.entries(),
                     1e-10 * a.eigmax()));
}

TEST_CASE("quadratic congruence agrees with the inv perspective") {
  RngStream root(113);
  EnsembleConfig cfg;
  cfg.dim = 4;
  const ScalarFunction inv = require_function("inv");
  for (int rep = 0; rep < 25; ++rep) {
    auto s = root.fork("rep", rep);
    auto sa = s.fork("a");
    auto sb = s.fork("b");
    const PDMatrix a = random_pd(cfg, sa);
    const PDMatrix b = random_pd(cfg, sb);
    const HermitianMatrix direct = quadratic_congruence(a, b);
    const HermitianMatrix via_perspective =
        perspective(inv, a, b, PerspectiveOrder::weight_first).value;
    const double scale = std::max(1.0, direct.spectral_norm());
    CHECK(max_abs(direct.entries() - via_perspective.entries()) <=
          1e-8 * scale);
  }
}

TEST_CASE("perspective is positively homogeneous") {
  RngStream root(114);
  EnsembleConfig cfg;
  cfg.dim = 4;
  const ScalarFunction f = require_function("t_log_t");
  for (double t : {0.5, 2.0, 10.0}) {
    for (int rep = 0; rep < 10; ++rep) {
      auto s = root.fork("rep", rep).fork("t", static_cast<std::uint64_t>(
                                                   t * 2));
      auto sa = s.fork("a");
      auto sb = s.fork("b");
      const PDMatrix a = random_pd(cfg, sa);
      const PDMatrix b = random_pd(cfg, sb);
      const Matrix base =
          perspective(f, a, b, PerspectiveOrder::weight_first)
              .value.entries();
      const PDMatrix at = PDMatrix::from(hermitize(t * a.entries()));
      const PDMatrix bt = PDMatrix::from(hermitize(t * b.entries()));
      const Matrix scaled =
          perspective(f, at, bt, PerspectiveOrder::weight_first)
              .value.entries();
      const double scale = std::max(1.0, spectral_norm(scaled));
      CHECK(max_abs(scaled - t * base) <= 1e-9 * t * scale);
    }
  }
}

TEST_CASE("transformer equality holds for invertible maps") {
  RngStream root(115);
  EnsembleConfig cfg;
  cfg.dim = 4;
  for (const char* id : {"neg_log", "sqrt", "square"}) {
    const ScalarFunction f = require_function(id);
    for (int rep = 0; rep < 10; ++rep) {
      auto s = root.fork(id, rep);
      auto sa = s.fork("a");
      auto sb = s.fork("b");
      auto sc = s.fork("c");
      const PDMatrix a = random_pd(cfg, sa);
      const PDMatrix b = random_pd(cfg, sb);
      const Matrix c = random_invertible(cfg, sc);
      Eigen::JacobiSVD<Matrix> svd(c);
      const double cond =
          svd.singularValues()(0) / svd.singularValues()(cfg.dim - 1);

      const HermitianMatrix lhs = congruence(
          c, perspective(f, a, b, PerspectiveOrder::weight_first).value);
      const PDMatrix ca = PDMatrix::from(congruence(c, a.base()));
      const PDMatrix cb = PDMatrix::from(congruence(c, b.base()));
      const HermitianMatrix rhs =
          perspective(f, ca, cb, PerspectiveOrder::weight_first).value;
      const double scale = std::max(1.0, lhs.spectral_norm());
      CHECK(max_abs(lhs.entries() - rhs.entries()) <=
            1e-7 * cond * cond * scale);
    }
  }
}
