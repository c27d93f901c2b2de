#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parrylab/rootfinder.hpp"
#include "parrylab/sturm.hpp"

using namespace parrylab;

namespace {
const PrecisionContext ctx(256);

double as_d(const BigFloat& x) { return x.to_double(); }
}  // namespace

TEST_CASE("golden mean roots") {
  RootSet rs = find_roots(IntPolynomial({-1, -1, 1}), ctx);
  REQUIRE(rs.roots.size() == 2);
  std::vector<double> vals = {as_d(rs.roots[0].value.re), as_d(rs.roots[1].value.re)};
  std::sort(vals.begin(), vals.end());
  CHECK(vals[0] == doctest::Approx(-0.6180339887498949).epsilon(1e-12));
  CHECK(vals[1] == doctest::Approx(1.6180339887498949).epsilon(1e-12));
  for (const auto& r : rs.roots) CHECK(as_d(r.radius) < 1e-19);
}

TEST_CASE("root product reproduces the constant coefficient") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 12; trial++) {
    std::vector<mpz_class> c;
    size_t d = 2 + rng() % 7;
    for (size_t i = 0; i <= d; i++) c.emplace_back(static_cast<long>(rng() % 9) - 4);
    IntPolynomial p(std::move(c));
    if (p.is_zero() || p.degree() < 2 || p.coeff(0) == 0) continue;
    RootSet rs = find_roots(p, ctx);
    BigComplex prod(BigFloat::of(p.leading(), 256), BigFloat::of(0L, 256));
    for (const auto& r : rs.roots) prod = prod * r.value;
    double expect = std::abs(mpz_class(p.coeff(0)).get_d());
    CHECK(as_d(abs(prod)) == doctest::Approx(expect).epsilon(1e-20));
  }
}

TEST_CASE("G_12 moduli stay in the Selmer band and the sector count holds") {
  RootSet rs = find_roots(IntPolynomial::trinomial_gn(12), ctx);
  REQUIRE(rs.roots.size() == 12);
  double lo = 1.0 - 2.0 * std::log(12.0) / 12.0;
  double hi = 1.0 + 2.0 * std::log(2.0) / 12.0;
  int right_of_half = 0;
  for (const auto& r : rs.roots) {
    double m = as_d(abs(r.value));
    CHECK(m >= lo - 1e-12);
    CHECK(m <= hi + 1e-12);
    if (as_d(r.value.re) > 0.5) right_of_half++;
  }
  // 1 + 2 floor(12/6) = 5 roots in the open sector |arg z| < pi/3
  CHECK(right_of_half == 5);
}

TEST_CASE("Mahler measures of the reference corpus") {
  MahlerResult g2 = mahler_measure(IntPolynomial::trinomial_gn(2), ctx);
  CHECK(as_d(g2.value) == doctest::Approx(1.6180339887498949).epsilon(1e-14));

  MahlerResult lehmer = mahler_measure(IntPolynomial::lehmer(), ctx);
  CHECK(as_d(lehmer.value) == doctest::Approx(1.17628081825991750).epsilon(1e-12));

  // cyclotomic products measure 1
  MahlerResult cyc = mahler_measure(IntPolynomial({1, 1, 1}), ctx);
  CHECK(as_d(cyc.value) == doctest::Approx(1.0));
}

TEST_CASE("Mahler measure is multiplicative and reciprocal-invariant") {
  IntPolynomial p = IntPolynomial::lehmer();
  IntPolynomial q({-1, -1, 0, 1});  // Pisot cubic
  BigFloat mpq_ = mahler_measure(p * q, ctx).value;
  BigFloat mp = mahler_measure(p, ctx).value;
  BigFloat mq = mahler_measure(q, ctx).value;
  CHECK(as_d(abs(mpq_ - mp * mq)) < 1e-30);
  CHECK(as_d(abs(mahler_measure(q.reciprocal(), ctx).value - mq)) < 1e-30);
}

TEST_CASE("Smyth floor for nonreciprocal polynomials in the corpus") {
  // every nonreciprocal irreducible in the small corpus has M >= 1.3247
  for (long n : {2L, 3L, 4L, 6L, 7L, 8L}) {
    IntPolynomial g = IntPolynomial::trinomial_gn(n);
    CHECK_FALSE(structure_flags(g).reciprocal);
    CHECK(as_d(mahler_measure(g, ctx).value) >= 1.3247);
  }
}

TEST_CASE("house and height") {
  HouseHeight hh = house_and_height(IntPolynomial({-1, -1, 1}), ctx);
  CHECK(as_d(hh.house) == doctest::Approx(1.6180339887498949).epsilon(1e-12));
  CHECK(as_d(hh.weil_height) == doctest::Approx(0.2406059125).epsilon(1e-8));

  HouseHeight lehmer = house_and_height(IntPolynomial::lehmer(), ctx);
  // Salem: house = M
  CHECK(as_d(lehmer.house) == doctest::Approx(1.17628081825991750).epsilon(1e-10));

  HouseHeight unit = house_and_height(IntPolynomial({-1, 1}), ctx);
  CHECK(as_d(unit.house) == doctest::Approx(1.0));
  CHECK(as_d(unit.weil_height) == doctest::Approx(0.0));
}

TEST_CASE("rootfinder confirms the Sturm count on Lehmer's polynomial") {
  // independent cross-check of the exact route: 2 real roots, 8 unimodular
  RootSet rs = find_roots(IntPolynomial::lehmer(), ctx);
  int real_roots = 0, unimodular = 0;
  for (const auto& r : rs.roots) {
    if (as_d(abs(r.value.im)) < 1e-40) real_roots++;
    if (std::abs(as_d(abs(r.value)) - 1.0) < 1e-40) unimodular++;
  }
  CHECK(real_roots == 2);
  CHECK(unimodular == 8);
  CHECK(sturm_real_root_count(IntPolynomial::lehmer()) == real_roots);
}

TEST_CASE("pierce numbers") {
  CHECK(pierce_delta(IntPolynomial({-2, 1}), 3) == 7);  // 2^3 - 1
  CHECK(pierce_delta(IntPolynomial::lehmer(), 1) == -1);

  // brute-force oracle on a quadratic: Delta_n of X^2 - 3X + 1 has the
  // closed form (a^n - 1)(b^n - 1) with ab = 1, a + b = 3
  IntPolynomial p({1, -3, 1});
  mpz_class s_prev = 2, s_cur = 3;  // s_n = a^n + b^n by the recurrence
  for (unsigned long n = 1; n <= 12; n++) {
    // (a^n-1)(b^n-1) = (ab)^n - (a^n + b^n) + 1 = 2 - s_n
    mpz_class expect = 2 - s_cur;
    CHECK(pierce_delta(p, n) == expect);
    mpz_class s_next = 3 * s_cur - s_prev;
    s_prev = s_cur;
    s_cur = s_next;
  }

  CHECK_THROWS_AS(pierce_delta(IntPolynomial({1, 2}), 3), Error);
}

TEST_CASE("pierce growth tracks log M for Lehmer's polynomial") {
  mpz_class d500 = pierce_delta(IntPolynomial::lehmer(), 500);
  mpz_class mag = abs(d500);
  double lg = std::log(mag.get_d()) / 500.0;
  double logm = std::log(1.17628081825991750);
  CHECK(std::abs(lg - logm) < 0.02);
}

TEST_CASE("reciprocal polynomials have root sets closed under inversion") {
  RootSet rs = find_roots(IntPolynomial::lehmer(), ctx);
  for (const auto& r : rs.roots) {
    BigComplex inv = BigComplex(BigFloat::of(1L, 256), BigFloat::of(0L, 256)) / r.value;
    bool found = false;
    for (const auto& s : rs.roots)
      if (as_d(abs(s.value - inv)) < 1e-40) found = true;
    CHECK(found);
  }
}
