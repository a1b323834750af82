#include <doctest.h>

#include <cmath>
#include <complex>

#include "perspecta/function_catalog.hpp"
#include "perspecta/matrix_core.hpp"
#include "perspecta/random_ensembles.hpp"
#include "test_helpers.hpp"

using namespace perspecta;
using namespace perspecta::testing;
using namespace std::complex_literals;

TEST_CASE("hermitize leaves Hermitian input unchanged") {
  const Matrix x = make_matrix({{1.0, 1.0i}, {-1.0i, 1.0}});
  const HermitianMatrix h = hermitize(x);
  CHECK(approx_equal(h.entries(), x, 0.0));
}

TEST_CASE("hermitize symmetrizes a real upper triangle") {
  const Matrix x = make_matrix({{0.0, 2.0}, {0.0, 0.0}});
  const Matrix expected = make_matrix({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(approx_equal(hermitize(x).entries(), expected, 0.0));
}

TEST_CASE("hermitize averages against the conjugate transpose") {
  // (X + X*)/2 computed by hand for X = [[1, 1+i],[0, 2]].
  const Matrix x = make_matrix({{1.0, 1.0 + 1.0i}, {0.0, 2.0}});
  const Matrix expected =
      make_matrix({{1.0, 0.5 + 0.5i}, {0.5 - 0.5i, 2.0}});
  CHECK(approx_equal(hermitize(x).entries(), expected, 0.0));
}

TEST_CASE("hermitize output is exactly Hermitian") {
  RngStream stream(7);
  EnsembleConfig cfg;
  cfg.dim = 5;
  const Matrix g = random_gaussian_matrix(cfg, stream);
  const Matrix h = hermitize(g).entries();
  CHECK(max_abs(h - h.adjoint()) == 0.0);
}

TEST_CASE("hermitize rejects bad input") {
  CHECK_THROWS_AS(hermitize(Matrix::Zero(2, 3)), DimensionError);
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(hermitize(bad), NumericError);
}

TEST_CASE("HermitianMatrix rejects asymmetry beyond tolerance") {
  Matrix x = make_matrix({{1.0, 0.5}, {0.6, 2.0}});
  CHECK_THROWS_AS(HermitianMatrix{x}, NumericError);
}

TEST_CASE("eig returns ascending eigenvalues") {
  SUBCASE("diagonal") {
    const SpectralDecomposition dec = eig(hermitize(diag({3.0, 1.0})));
    CHECK(dec.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(dec.eigenvalues(1) == doctest::Approx(3.0));
  }
  SUBCASE("off-diagonal flip") {
    const SpectralDecomposition dec =
        eig(hermitize(make_matrix({{0.0, 1.0}, {1.0, 0.0}})));
    CHECK(dec.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(dec.eigenvalues(1) == doctest::Approx(1.0));
  }
}

TEST_CASE("eig reconstructs and is unitary") {
  RngStream stream(11);
  EnsembleConfig cfg;
  cfg.dim = 5;
  const HermitianMatrix h = hermitize(random_gaussian_matrix(cfg, stream));
  const SpectralDecomposition dec = eig(h);
  const Matrix q = dec.eigenvectors;
  CHECK(max_abs(q.adjoint() * q - Matrix::Identity(5, 5)) <= 1e-10);
  const Matrix rebuilt =
      q * dec.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
      q.adjoint();
  const double scale = std::max(1.0, dec.eigenvalues.cwiseAbs().maxCoeff());
  CHECK(max_abs(rebuilt - h.entries()) <= 1e-10 * scale);
  for (Eigen::Index i = 0; i + 1 < dec.eigenvalues.size(); ++i) {
    CHECK(dec.eigenvalues(i) <= dec.eigenvalues(i + 1));
  }
}

TEST_CASE("apply_function identity and scalar log") {
  RngStream stream(3);
  EnsembleConfig cfg;
  cfg.dim = 4;
  auto s = stream.fork("pd");
  const PDMatrix a = random_pd(cfg, s);
  const ScalarFunction identity = require_function("identity");
  CHECK(approx_equal(apply_function(identity, a.base()).entries(),
                     a.entries(), 1e-12 * a.eigmax()));

  const ScalarFunction neg_log = require_function("neg_log");
  const HermitianMatrix h = hermitize(diag({1.0, std::exp(1.0)}));
  const HermitianMatrix result = apply_function(neg_log, h);
  CHECK(approx_equal(result.entries(), diag({0.0, -1.0}), 1e-14));
}

TEST_CASE("apply_function squares against direct multiplication") {
  const HermitianMatrix h =
      hermitize(make_matrix({{2.0, 1.0}, {1.0, 2.0}}));
  // Independent oracle: plain matrix product.
  const Matrix oracle = h.entries() * h.entries();
  CHECK(approx_equal(oracle, make_matrix({{5.0, 4.0}, {4.0, 5.0}}), 1e-14));
  const ScalarFunction square = require_function("square");
  CHECK(approx_equal(apply_function(square, h).entries(), oracle, 1e-12));
}

TEST_CASE("apply_function names the offending eigenvalue") {
  const HermitianMatrix h = hermitize(diag({2.0, -3.0}));
  const ScalarFunction neg_log = require_function("neg_log");
  try {
    apply_function(neg_log, h);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.offending_eigenvalue() == doctest::Approx(-3.0));
    CHECK(std::string(e.what()).find("-3") != std::string::npos);
  }
}

TEST_CASE("spectral mapping: eigenvalues of f(H) are f of eigenvalues") {
  RngStream root(21);
  EnsembleConfig cfg;
  cfg.dim = 5;
  for (const auto& f : catalog()) {
    auto s = root.fork(f.id);
    const PDMatrix a = random_pd(cfg, s);
    const HermitianMatrix fa = apply_function(f, a.base());
    RealVector expected(cfg.dim);
    for (int i = 0; i < cfg.dim; ++i) {
      expected(i) = f.eval(a.decomposition().eigenvalues(i));
    }
    std::sort(expected.begin(), expected.end());
    const RealVector actual = eig(fa).eigenvalues;
    for (int i = 0; i < cfg.dim; ++i) {
      CHECK(actual(i) ==
            doctest::Approx(expected(i)).epsilon(1e-9).scale(
                std::max(1.0, std::abs(expected(i)))));
    }
  }
}

TEST_CASE("apply_function commutes with unitary conjugation") {
  RngStream root(22);
  EnsembleConfig cfg;
  cfg.dim = 4;
  const ScalarFunction f = require_function("neg_log");
  for (int rep = 0; rep < 20; ++rep) {
    auto s = root.fork("rep", rep);
    auto ps = s.fork("pd");
    auto us = s.fork("u");
    const PDMatrix a = random_pd(cfg, ps);
    const Matrix u = random_unitary(cfg, us);
    const HermitianMatrix lhs =
        apply_function(f, congruence(u, a.base()));
    const HermitianMatrix rhs = congruence(u, apply_function(f, a.base()));
    const double scale = std::max(1.0, rhs.spectral_norm());
    CHECK(max_abs(lhs.entries() - rhs.entries()) <= 1e-9 * scale);
  }
}

TEST_CASE("apply_function splits over complementary compressions") {
  RngStream root(23);
  EnsembleConfig cfg;
  cfg.dim = 5;
  const ScalarFunction f = require_function("sqrt");
  for (int rep = 0; rep < 20; ++rep) {
    auto s = root.fork("rep", rep);
    auto ss = s.fork("split");
    const ProjectionSplit split = random_projection_split(cfg, ss);
    auto ps = s.fork("pd");
    const PDMatrix h = random_pd(cfg, ps);

    const Matrix vp = split.p_basis;
    const Matrix vq = split.q_basis;
    const HermitianMatrix compressed = hermitize(
        vp * (vp.adjoint() * h.entries() * vp) * vp.adjoint() +
        vq * (vq.adjoint() * h.entries() * vq) * vq.adjoint());
    const HermitianMatrix lhs = apply_function(f, compressed);

    const HermitianMatrix fp =
        apply_function(f, hermitize(vp.adjoint() * h.entries() * vp));
    const HermitianMatrix fq =
        apply_function(f, hermitize(vq.adjoint() * h.entries() * vq));
    const Matrix rhs = vp * fp.entries() * vp.adjoint() +
                       vq * fq.entries() * vq.adjoint();
    const double scale = std::max(1.0, lhs.spectral_norm());
    CHECK(max_abs(lhs.entries() - rhs) <= 1e-9 * scale);
  }
}

TEST_CASE("sqrt_pd on diagonal and identity") {
  const PDMatrix a = PDMatrix::from(hermitize(diag({4.0, 9.0})));
  CHECK(approx_equal(sqrt_pd(a).entries(), diag({2.0, 3.0}), 1e-14));
  const PDMatrix eye = PDMatrix::identity(3);
  CHECK(approx_equal(sqrt_pd(eye).entries(), Matrix::Identity(3, 3), 1e-14));
}

TEST_CASE("sqrt_pd multiplies back") {
  const PDMatrix a =
      PDMatrix::from(hermitize(make_matrix({{5.0, 4.0}, {4.0, 5.0}})));
  const PDMatrix s = sqrt_pd(a);
  CHECK(max_abs(s.entries() * s.entries() - a.entries()) <= 1e-10);
}

TEST_CASE("sqrt_pd of squares round-trips") {
  RngStream root(31);
  EnsembleConfig cfg;
  cfg.dim = 4;
  for (int rep = 0; rep < 20; ++rep) {
    auto s = root.fork("rep", rep);
    const PDMatrix a = random_pd(cfg, s);
    const PDMatrix squared =
        PDMatrix::from(hermitize(a.entries() * a.entries()));
    const PDMatrix back = sqrt_pd(squared);
    CHECK(max_abs(back.entries() - a.entries()) <=
          1e-8 * squared.condition());
  }
}

TEST_CASE("inv_sqrt_pd reconstructs the identity") {
  const PDMatrix a = PDMatrix::from(hermitize(diag({4.0})));
  CHECK(approx_equal(inv_sqrt_pd(a).entries(), diag({0.5}), 1e-15));
  CHECK(approx_equal(inv_sqrt_pd(PDMatrix::identity(2)).entries(),
                     Matrix::Identity(2, 2), 1e-15));

  RngStream stream(33);
  EnsembleConfig cfg;
  cfg.dim = 4;
  const PDMatrix b = random_pd(cfg, stream);
  const PDMatrix t = inv_sqrt_pd(b);
  CHECK(max_abs(t.entries() * b.entries() * t.entries() -
                Matrix::Identity(4, 4)) <= 1e-9 * b.condition());
}

TEST_CASE("PDMatrix rejects non-positive and ill-conditioned input") {
  CHECK_THROWS_AS(PDMatrix::from(hermitize(diag({1.0, -2.0}))), DomainError);
  CHECK_THROWS_AS(PDMatrix::from(hermitize(diag({1e13, 1.0})), 1e12),
                  NumericError);
  try {
    PDMatrix::from(hermitize(diag({1.0, 0.0})));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.offending_eigenvalue() == doctest::Approx(0.0));
  }
}

TEST_CASE("congruence basics") {
  const HermitianMatrix h = hermitize(diag({1.0, 2.0}));
  CHECK(approx_equal(congruence(Matrix::Identity(2, 2), h).entries(),
                     h.entries(), 0.0));
  CHECK(approx_equal(congruence(2.0 * Matrix::Identity(2, 2), h).entries(),
                     4.0 * h.entries(), 1e-15));
  const Matrix perm = make_matrix({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(approx_equal(congruence(perm, h).entries(), diag({2.0, 1.0}),
                     1e-15));
  CHECK_THROWS_AS(congruence(Matrix::Identity(3, 3), h), DimensionError);
}

TEST_CASE("loewner_leq margins") {
  const HermitianMatrix zero = HermitianMatrix::zero(3);
  const HermitianMatrix eye = HermitianMatrix::identity(3);
  const LoewnerComparison up = loewner_leq(zero, eye, 1e-8);
  CHECK(up.holds);
  CHECK(up.margin == doctest::Approx(1.0));
  const LoewnerComparison down = loewner_leq(eye, zero, 1e-8);
  CHECK_FALSE(down.holds);
  CHECK(down.margin == doctest::Approx(-1.0));

  // Slightly non-positive difference still inside the relative tolerance.
  const HermitianMatrix l = hermitize(diag({1.0, 1.0}));
  const HermitianMatrix r = hermitize(diag({1.0, 1.0 - 5e-9}));
  const LoewnerComparison close = loewner_leq(l, r, 1e-8);
  CHECK(close.holds);
  CHECK(close.margin == doctest::Approx(-5e-9).epsilon(1e-3));

  CHECK_THROWS_AS(loewner_leq(zero, HermitianMatrix::identity(2), 1e-8),
                  DimensionError);
}

TEST_CASE("loewner_leq is reflexive and antisymmetric at tolerance") {
  RngStream root(41);
  EnsembleConfig cfg;
  cfg.dim = 4;
  for (int rep = 0; rep < 20; ++rep) {
    auto s = root.fork("rep", rep);
    const PDMatrix a = random_pd(cfg, s);
    const LoewnerComparison self = loewner_leq(a.base(), a.base(), 1e-8);
    CHECK(self.holds);
    CHECK(self.margin == 0.0);

    // If both directions hold, the matrices agree within tol * scale.
    auto bs = s.fork("bump");
    Matrix bump = random_gaussian_matrix(cfg, bs);
    const HermitianMatrix b =
        hermitize(a.entries() + 1e-10 * hermitize(bump).entries());
    const LoewnerComparison fwd = loewner_leq(a.base(), b, 1e-8);
    const LoewnerComparison bwd = loewner_leq(b, a.base(), 1e-8);
    CHECK(fwd.holds);
    CHECK(bwd.holds);
    CHECK(max_abs(a.entries() - b.entries()) <= 1e-8 * fwd.scale);
  }
}
