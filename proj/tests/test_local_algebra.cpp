#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loccstar/local_algebra.hpp"
#include "loccstar/rng.hpp"
#include "loccstar/suite.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace loccstar;
using testutil::diag;
using testutil::mat;

namespace {

LocalAlgebra three_fibers() {
  return LocalAlgebra::finite({"a1", "a2", "a3"}, {2, 2, 1});
}

LocalElement elem(const LocalAlgebra& a, std::vector<CMatrix> comps) {
  return LocalElement(a, std::move(comps), std::nullopt);
}

LocalElement tail_elem(const LocalAlgebra& a, std::vector<CMatrix> comps,
                       std::vector<CMatrix> coeffs) {
  return LocalElement(a, std::move(comps), TailRule(std::move(coeffs)));
}

}  // namespace

TEST_CASE("algebra validation") {
  CHECK_THROWS_AS(LocalAlgebra::finite({}, {}), Error);
  CHECK_THROWS_AS(LocalAlgebra::finite({"a", "a"}, {1, 1}), Error);
  CHECK_THROWS_AS(LocalAlgebra::finite({"a"}, {0}), Error);
  CHECK_THROWS_AS(LocalAlgebra::tail(0, 3), Error);
  CHECK_THROWS_AS(LocalAlgebra::tail(2, 0), Error);
}

TEST_CASE("seminorm of the identity is 1 at every index") {
  LocalAlgebra a = three_fibers();
  LocalElement e = LocalElement::identity(a);
  for (const auto& idx : a.prefix_indices())
    CHECK(seminorm(e, idx) == doctest::Approx(1.0).epsilon(1e-12));

  LocalAlgebra t = LocalAlgebra::tail(2, 3);
  LocalElement et = LocalElement::identity(t);
  CHECK(seminorm(et, FiberIndex::at(2)) == doctest::Approx(1.0));
  CHECK(seminorm(et, FiberIndex::at(100)) == doctest::Approx(1.0));
}

TEST_CASE("seminorm vanishes on a kernel component and evaluates tails") {
  LocalAlgebra a = three_fibers();
  LocalElement x = elem(a, {CMatrix::zero(2), CMatrix::identity(2),
                            CMatrix::identity(1)});
  CHECK(seminorm(x, FiberIndex::label("a1")) == 0.0);

  // tail a_n = n*C with |C| = 2: at index 7 the seminorm is 14
  LocalAlgebra t = LocalAlgebra::tail(2, 2);
  CMatrix c = diag({2, 0});
  LocalElement y = tail_elem(t, {CMatrix::zero(2), CMatrix::zero(2)},
                             {CMatrix::zero(2), c});
  CHECK(seminorm(y, FiberIndex::at(7)) == doctest::Approx(14.0).epsilon(1e-12));
}

TEST_CASE("unknown indices are rejected") {
  LocalAlgebra a = three_fibers();
  LocalElement e = LocalElement::identity(a);
  CHECK_THROWS_AS(seminorm(e, FiberIndex::label("zz")), Error);
  LocalAlgebra t = LocalAlgebra::tail(2, 2);
  CHECK_THROWS_AS(seminorm(LocalElement::identity(t), FiberIndex::label("a1")),
                  Error);
  try {
    seminorm(e, FiberIndex::label("zz"));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::UnknownIndex);
  }
}

TEST_CASE("sup_norm: finite max, constant tails, growth") {
  LocalAlgebra a = three_fibers();
  CHECK(*sup_norm(LocalElement::identity(a)) == doctest::Approx(1.0));

  LocalElement x = elem(a, {diag({3, 0}), diag({1, 0}), diag({2})});
  CHECK(*sup_norm(x) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(is_in_bounded_part(x));

  LocalAlgebra t = LocalAlgebra::tail(2, 2);
  LocalElement grow = tail_elem(t, {CMatrix::zero(2), CMatrix::zero(2)},
                                {CMatrix::zero(2), diag({1, 0})});
  CHECK_FALSE(sup_norm(grow).has_value());
  CHECK_FALSE(is_in_bounded_part(grow));

  // prefix norms {3, 1}, constant tail of norm 2 -> 3
  LocalElement mixed = tail_elem(t, {diag({3, 0}), diag({1, 0})}, {diag({2, 0})});
  CHECK(*sup_norm(mixed) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("spectrum is the union over fibers") {
  LocalAlgebra a = LocalAlgebra::finite({"a1", "a2"}, {2, 1});
  LocalElement x = elem(a, {diag({1, 2}), diag({3})});
  Spectrum s = spectrum(x);
  CHECK(s.exact);
  REQUIRE(s.points.size() == 3);
  CHECK(s.points[0].real() == doctest::Approx(1.0));
  CHECK(s.points[1].real() == doctest::Approx(2.0));
  CHECK(s.points[2].real() == doctest::Approx(3.0));

  Spectrum e = spectrum(LocalElement::identity(a));
  REQUIRE(e.points.size() == 1);  // duplicates collapse
  CHECK(e.points[0].real() == doctest::Approx(1.0));
}

TEST_CASE("spectrum matches per-fiber oracles on random elements") {
  Rng rng(29);
  TrialConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    LocalAlgebra a = gen_finite_algebra(rng, cfg);
    LocalElement x = gen_element(rng, a, 0);
    std::vector<Complex> expected;
    for (const auto& idx : a.prefix_indices()) {
      auto pts = oracles::charpoly_roots(quotient_map(x, idx));
      expected.insert(expected.end(), pts.begin(), pts.end());
    }
    CHECK(hausdorff_distance(spectrum(x).points, expected) <= 1e-7);
  }
}

TEST_CASE("spectrum of tails: constant exact, growing flagged") {
  LocalAlgebra t = LocalAlgebra::tail(2, 2);
  LocalElement c = tail_elem(t, {diag({5, 0}), diag({6, 0})}, {diag({7, 0})});
  Spectrum sc = spectrum(c);
  CHECK(sc.exact);
  bool has7 = false;
  for (auto& z : sc.points) has7 = has7 || std::abs(z - Complex(7, 0)) < 1e-9;
  CHECK(has7);

  LocalElement g = tail_elem(t, {diag({0, 0}), diag({0, 0})},
                             {CMatrix::zero(2), diag({1, 0})});
  Spectrum sg = spectrum(g, 16);
  CHECK_FALSE(sg.exact);
  bool has18 = false;  // evaluation at n = 18 = prefix + horizon
  for (auto& z : sg.points) has18 = has18 || std::abs(z - Complex(18, 0)) < 1e-9;
  CHECK(has18);
}

TEST_CASE("is_positive across fibers and tails") {
  Rng rng(31);
  TrialConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    LocalAlgebra a = gen_algebra(rng, cfg);
    LocalElement b = gen_element(rng, a, 1);
    Verdict v = is_positive(b.adjoint() * b);
    CHECK(v.value);
    LocalElement h = gen_hermitian_element(rng, a, 1);
    Verdict v2 = is_positive(h * h);
    CHECK(v2.value);
  }

  LocalAlgebra a = three_fibers();
  LocalElement bad = elem(a, {diag({1, -1}), CMatrix::identity(2),
                              CMatrix::identity(1)});
  Verdict v = is_positive(bad);
  CHECK_FALSE(v.value);
  CHECK(v.exact);  // a witness makes the verdict exact

  // growing positive tail: verified through the horizon only
  LocalAlgebra t = LocalAlgebra::tail(2, 2);
  LocalElement g = tail_elem(t, {CMatrix::identity(2), CMatrix::identity(2)},
                             {CMatrix::identity(2), diag({1, 1})});
  Verdict vg = is_positive(g);
  CHECK(vg.value);
  CHECK_FALSE(vg.exact);

  // non-Hermitian tail coefficient: exactly non-positive
  LocalElement nh = tail_elem(t, {CMatrix::identity(2), CMatrix::identity(2)},
                              {CMatrix::identity(2), mat({{0, 1}, {0, 0}})});
  Verdict vn = is_positive(nh);
  CHECK_FALSE(vn.value);
  CHECK(vn.exact);
}

TEST_CASE("sqrt componentwise with constant tails") {
  LocalAlgebra a = three_fibers();
  LocalElement e = LocalElement::identity(a);
  for (const auto& idx : a.prefix_indices())
    CHECK(seminorm(sqrt(e) - e, idx) <= 1e-12);

  LocalElement x = elem(a, {diag({4, 9}), diag({4, 9}), diag({4})});
  LocalElement r = sqrt(x);
  CHECK(seminorm(r - elem(a, {diag({2, 3}), diag({2, 3}), diag({2})}),
                 FiberIndex::label("a1")) <= 1e-12);

  Rng rng(37);
  TrialConfig cfg;
  for (int trial = 0; trial < 15; ++trial) {
    LocalAlgebra alg = gen_algebra(rng, cfg);
    LocalElement h = gen_positive_element(rng, alg, 0) +
                     Complex(0.1, 0.0) * LocalElement::identity(alg);
    LocalElement rr = sqrt(h * h);
    for (const auto& idx : alg.prefix_indices())
      CHECK(seminorm(rr - h, idx) <= 1e-8);
  }
}

TEST_CASE("sqrt error paths") {
  LocalAlgebra a = three_fibers();
  LocalElement bad = elem(a, {diag({1, -1}), CMatrix::identity(2),
                              CMatrix::identity(1)});
  CHECK_THROWS_AS(sqrt(bad), Error);

  LocalAlgebra t = LocalAlgebra::tail(2, 2);
  LocalElement g = tail_elem(t, {CMatrix::identity(2), CMatrix::identity(2)},
                             {CMatrix::identity(2), CMatrix::identity(2)});
  try {
    sqrt(g);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedTail);
  }
}

TEST_CASE("inverse componentwise, contraction bound") {
  LocalAlgebra one = LocalAlgebra::finite({"a1"}, {1});
  LocalElement two = elem(one, {diag({2})});
  CHECK(seminorm(inverse(two) - elem(one, {diag({0.5})}),
                 FiberIndex::label("a1")) <= 1e-12);

  Rng rng(41);
  TrialConfig cfg;
  for (int trial = 0; trial < 15; ++trial) {
    LocalAlgebra alg = gen_algebra(rng, cfg);
    LocalElement p = gen_positive_element(rng, alg, 0);
    LocalElement u = LocalElement::identity(alg) + p;
    LocalElement inv = inverse(u);
    for (const auto& idx : alg.prefix_indices()) {
      CHECK(seminorm(inv, idx) <= 1.0 + 1e-9);
      CHECK(seminorm(u * inv - LocalElement::identity(alg), idx) <= 1e-8);
    }
  }
}

TEST_CASE("inverse error paths name the offending index") {
  LocalAlgebra a = LocalAlgebra::finite({"a1", "a2"}, {2, 2});
  LocalElement x = elem(a, {CMatrix::identity(2), diag({1, 0})});
  try {
    inverse(x);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
    CHECK(std::string(e.what()).find("a2") != std::string::npos);
  }

  LocalAlgebra t = LocalAlgebra::tail(2, 2);
  LocalElement g = tail_elem(t, {CMatrix::identity(2), CMatrix::identity(2)},
                             {CMatrix::identity(2), CMatrix::identity(2)});
  CHECK_THROWS_AS(inverse(g), Error);
}

TEST_CASE("quotient_map is a *-homomorphism") {
  Rng rng(43);
  TrialConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    LocalAlgebra alg = gen_algebra(rng, cfg);
    LocalElement a = gen_element(rng, alg, 2);
    LocalElement b = gen_element(rng, alg, 2);
    for (const auto& idx : alg.prefix_indices()) {
      CMatrix pa = quotient_map(a, idx), pb = quotient_map(b, idx);
      CHECK(mnorm(quotient_map(a * b, idx) - pa * pb) <=
            1e-9 * (1.0 + mnorm(pa) * mnorm(pb)));
      CHECK(mnorm(quotient_map(a + b, idx) - (pa + pb)) <= 1e-12);
      CHECK(mnorm(quotient_map(a.adjoint(), idx) - pa.adjoint()) <= 1e-12);
    }
  }
  // beyond the prefix the tail is evaluated
  LocalAlgebra t = LocalAlgebra::tail(1, 1);
  LocalElement lin = tail_elem(t, {diag({0})}, {diag({0}), diag({1})});
  CHECK(mnorm(quotient_map(lin, FiberIndex::at(9)) - diag({9})) <= 1e-12);
}

TEST_CASE("approximate identity of an ideal") {
  LocalAlgebra a = three_fibers();
  Ideal ideal(a, {FiberIndex::label("a1")});
  LocalElement u = approximate_identity(ideal);
  CHECK(quotient_map(u, FiberIndex::label("a1")).is_zero());
  CHECK(mnorm(quotient_map(u, FiberIndex::label("a2")) - CMatrix::identity(2)) ==
        0.0);
  for (const auto& idx : a.prefix_indices()) CHECK(seminorm(u, idx) <= 1.0);

  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    LocalElement x = gen_element(rng, a, 0);
    std::vector<CMatrix> comps = x.components();
    comps[a.position(FiberIndex::label("a1"))] = CMatrix::zero(2);
    LocalElement member(a, comps, std::nullopt);
    CHECK(ideal.contains(member));
    auto res = sup_norm(member - member * u);
    CHECK(*res == 0.0);  // exact, not just small
  }

  CHECK_THROWS_AS(approximate_identity(Ideal(a, {})), Error);
  try {
    approximate_identity(Ideal(a, {}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyKernel);
  }

  // kernel sites beyond the prefix are not representable
  LocalAlgebra t = LocalAlgebra::tail(2, 2);
  try {
    approximate_identity(Ideal(t, {FiberIndex::at(5)}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedTail);
  }
}

TEST_CASE("order lemmas on constructed pairs") {
  Rng rng(53);
  TrialConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    LocalAlgebra alg = gen_algebra(rng, cfg);
    LocalElement a = gen_positive_element(rng, alg, 0);
    LocalElement c = gen_element(rng, alg, 0);
    LocalElement b = a + c.adjoint() * c;
    for (const auto& idx : alg.prefix_indices())
      CHECK(seminorm(a, idx) <= seminorm(b, idx) + 1e-8);

    // conjugation preserves order
    LocalElement g = gen_element(rng, alg, 0);
    Verdict v = is_positive(g.adjoint() * b * g - g.adjoint() * a * g);
    CHECK(v.value);
  }
}

TEST_CASE("inverses reverse the order of invertible positives") {
  Rng rng(59);
  TrialConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    LocalAlgebra alg = gen_algebra(rng, cfg);
    LocalElement d0 = gen_element(rng, alg, 0);
    LocalElement a = Complex(0.7, 0.0) * LocalElement::identity(alg) +
                     d0.adjoint() * d0;
    LocalElement c = gen_element(rng, alg, 0);
    LocalElement b = a + c.adjoint() * c;
    Verdict v = is_positive(inverse(a) - inverse(b));
    CHECK(v.value);
  }
}

TEST_CASE("positive cone: sums stay positive, only zero is two-sided") {
  Rng rng(61);
  TrialConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    LocalAlgebra alg = gen_algebra(rng, cfg);
    LocalElement p = gen_positive_element(rng, alg, 1);
    LocalElement q = gen_positive_element(rng, alg, 1);
    CHECK(is_positive(p + q).value);
    // p and -p both positive forces every fiber to vanish
    if (is_positive(-p, kDefaultHorizon, 1e-9).value) {
      auto s = sup_norm(p);
      CHECK((!s || *s <= 1e-7));
    }
  }
}

TEST_CASE("separation: all seminorms zero means the element is zero") {
  LocalAlgebra a = three_fibers();
  LocalElement z = LocalElement::zero(a);
  for (const auto& idx : a.prefix_indices()) CHECK(seminorm(z, idx) == 0.0);
  CHECK(z.is_zero());

  LocalAlgebra t = LocalAlgebra::tail(3, 2);
  LocalElement zt = LocalElement::zero(t);
  CHECK(zt.is_zero());
  CHECK(*sup_norm(zt) == 0.0);
}

TEST_CASE("tail arithmetic: convolution degrees and adjoints") {
  LocalAlgebra t = LocalAlgebra::tail(2, 2);
  LocalElement lin = tail_elem(t, {CMatrix::identity(2), CMatrix::identity(2)},
                               {CMatrix::identity(2), diag({1, 2})});
  LocalElement prod = lin * lin;
  CHECK(prod.tail().degree() == 2);
  // evaluation commutes with multiplication
  for (std::uint64_t n : {3ull, 10ull, 31ull}) {
    CMatrix direct = quotient_map(prod, FiberIndex::at(n));
    CMatrix expected = quotient_map(lin, FiberIndex::at(n)) *
                       quotient_map(lin, FiberIndex::at(n));
    CHECK(mnorm(direct - expected) <= 1e-9 * (1.0 + mnorm(expected)));
  }

  LocalElement adj = lin.adjoint();
  for (std::uint64_t n : {5ull, 17ull}) {
    CMatrix d1 = quotient_map(adj, FiberIndex::at(n));
    CMatrix d2 = quotient_map(lin, FiberIndex::at(n)).adjoint();
    CHECK(mnorm(d1 - d2) == 0.0);
  }

  // trailing zero coefficients are trimmed
  TailRule trimmed(std::vector<CMatrix>{CMatrix::identity(2), CMatrix::zero(2)});
  CHECK(trimmed.degree() == 0);
}

TEST_CASE("mixed-algebra arithmetic is rejected") {
  LocalAlgebra a = three_fibers();
  LocalAlgebra b = LocalAlgebra::finite({"a1"}, {2});
  CHECK_THROWS_AS(LocalElement::identity(a) + LocalElement::identity(b), Error);
}
