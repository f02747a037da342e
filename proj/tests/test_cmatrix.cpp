#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loccstar/cmatrix.hpp"
#include "loccstar/rng.hpp"
#include "loccstar/suite.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace loccstar;
using testutil::diag;
using testutil::mat;

TEST_CASE("construction rejects bad matrices") {
  Eigen::MatrixXcd bad(2, 3);
  bad.setZero();
  CHECK_THROWS_AS(CMatrix{bad}, Error);
  Eigen::MatrixXcd nan2 = Eigen::MatrixXcd::Zero(2, 2);
  nan2(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(CMatrix{nan2}, Error);
  Eigen::MatrixXcd empty(0, 0);
  CHECK_THROWS_AS(CMatrix{empty}, Error);
}

TEST_CASE("mnorm on known matrices") {
  CHECK(mnorm(CMatrix::identity(2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mnorm(mat({{0, 2}, {0, 0}})) == doctest::Approx(2.0).epsilon(1e-12));
  // singular values of [[3,4],[0,0]] are {5, 0}
  CHECK(mnorm(mat({{3, 4}, {0, 0}})) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("mnorm matches the power-iteration oracle on random input") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    CMatrix a = gen_matrix(rng, 5);
    double expected = oracles::power_iteration_norm(a);
    CHECK(mnorm(a) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("mspectrum on known matrices") {
  auto s = mspectrum(diag({1, 2, 3}));
  REQUIRE(s.size() == 3);
  CHECK(s[0].real() == doctest::Approx(1.0));
  CHECK(s[1].real() == doctest::Approx(2.0));
  CHECK(s[2].real() == doctest::Approx(3.0));

  auto nil = mspectrum(mat({{0, 1}, {0, 0}}));
  REQUIRE(nil.size() == 2);
  CHECK(std::abs(nil[0]) <= 1e-8);
  CHECK(std::abs(nil[1]) <= 1e-8);

  // Hermitian [[2,1],[1,2]] has eigenvalues {1, 3} and an exactly real output
  auto h = mspectrum(mat({{2, 1}, {1, 2}}));
  REQUIRE(h.size() == 2);
  CHECK(h[0].imag() == 0.0);
  CHECK(h[1].imag() == 0.0);
  CHECK(h[0].real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(h[1].real() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("mspectrum matches the characteristic-polynomial oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    CMatrix b = gen_matrix(rng, 4);
    CMatrix h = CMatrix(0.5 * (b.raw() + b.raw().adjoint().eval()));
    double d = oracles::sorted_pair_distance(mspectrum(h), oracles::charpoly_roots(h));
    CHECK(d <= 1e-8);
  }
  for (int trial = 0; trial < 25; ++trial) {
    CMatrix a = gen_matrix(rng, 3);  // general complex route
    double d = oracles::sorted_pair_distance(mspectrum(a), oracles::charpoly_roots(a));
    CHECK(d <= 1e-7);
  }
}

TEST_CASE("mspectrum of the adjoint is the conjugate spectrum") {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    CMatrix a = gen_matrix(rng, 4);
    auto sa = mspectrum(a);
    auto sadj = mspectrum(a.adjoint());
    std::vector<Complex> conj;
    for (const auto& z : sa) conj.push_back(std::conj(z));
    CHECK(oracles::sorted_pair_distance(sadj, conj) <= 1e-8);
  }
}

TEST_CASE("mis_positive on known matrices") {
  CHECK(mis_positive(diag({0, 3})));
  CHECK_FALSE(mis_positive(diag({1, -1})));
  CHECK_FALSE(mis_positive(mat({{0, 1}, {0, 0}})));  // not Hermitian
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    CMatrix b = gen_matrix(rng, rng.range(1, 6));
    CHECK(mis_positive(b.adjoint() * b));
  }
}

TEST_CASE("msqrt on known matrices") {
  CMatrix r = msqrt(diag({4, 9}));
  CHECK(mnorm(r - diag({2, 3})) <= 1e-12);
  CHECK(mnorm(msqrt(CMatrix::identity(3)) - CMatrix::identity(3)) <= 1e-12);
  // u diag(1,2) u* squared, with u the normalized Hadamard basis
  CMatrix a = mat({{2.5, -1.5}, {-1.5, 2.5}});
  CMatrix expected = mat({{1.5, -0.5}, {-0.5, 1.5}});
  CHECK(mnorm(msqrt(a) - expected) <= 1e-12);
}

TEST_CASE("msqrt reproduces a generated root") {
  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    int d = rng.range(1, 6);
    std::vector<double> spec;
    for (int i = 0; i < d; ++i) spec.push_back(0.1 + 2.9 * rng.uniform01());
    CMatrix h = oracles::positive_with_spectrum(rng, spec);
    CHECK(mnorm(msqrt(h * h) - h) <= 1e-8);
  }
}

TEST_CASE("msqrt squares back even with zero eigenvalues") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int d = rng.range(2, 6);
    std::vector<double> spec{0.0};
    for (int i = 1; i < d; ++i) spec.push_back(3.0 * rng.uniform01());
    CMatrix h = oracles::positive_with_spectrum(rng, spec);
    CMatrix a = h * h;
    CMatrix r = msqrt(a);
    CHECK(mnorm(r * r - a) <= 1e-8 * (1.0 + mnorm(a)));
    CHECK(mis_positive(r));
  }
}

TEST_CASE("msqrt rejects non-positive input") {
  CHECK_THROWS_AS(msqrt(diag({1, -1})), Error);
  try {
    msqrt(diag({1, -1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPositive);
  }
}

TEST_CASE("minverse on known matrices") {
  CHECK(mnorm(minverse(diag({2, 4})) - diag({0.5, 0.25})) <= 1e-12);
  CHECK(mnorm(minverse(CMatrix::identity(4)) - CMatrix::identity(4)) <= 1e-12);
}

TEST_CASE("minverse of one plus a positive multiple is a contraction") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int d = rng.range(1, 6);
    CMatrix b = gen_matrix(rng, d);
    CMatrix p = b.adjoint() * b;
    double t = 0.1 + 3.0 * rng.uniform01();
    CMatrix u = CMatrix::identity(d) + Complex(t, 0.0) * p;
    CMatrix inv = minverse(u);
    CHECK(mnorm(inv) <= 1.0 + 1e-9);
    CHECK(mnorm(u * inv - CMatrix::identity(d)) <= 1e-9 * (1.0 + mnorm(u)));
  }
}

TEST_CASE("minverse rejects singular input") {
  CHECK_THROWS_AS(minverse(mat({{1, 1}, {1, 1}})), Error);
  try {
    minverse(diag({1, 0}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

TEST_CASE("cstar identity, involution isometry, submultiplicativity") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int d = rng.range(1, 6);
    CMatrix a = gen_matrix(rng, d);
    CMatrix b = gen_matrix(rng, d);
    double na = mnorm(a);
    CHECK(std::abs(mnorm(a.adjoint() * a) - na * na) <= 1e-8 * (1.0 + na * na));
    CHECK(std::abs(mnorm(a.adjoint()) - na) <= 1e-10);
    CHECK(mnorm(a * b) <= na * mnorm(b) + 1e-8);
  }
}

TEST_CASE("sqrt of a positive square is idempotent under squaring") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    int d = rng.range(1, 6);
    CMatrix b = gen_matrix(rng, d);
    CMatrix p = b.adjoint() * b;
    CMatrix r = msqrt(p);
    CHECK(mnorm(r * r - p) <= 1e-8 * (1.0 + mnorm(p)));
  }
}
