#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parrylab/cyclotomic.hpp"
#include "parrylab/intpoly.hpp"
#include "parrylab/sturm.hpp"

using namespace parrylab;

TEST_CASE("structure flags read off the coefficients") {
  // X^2 - X - 1
  StructureFlags f = structure_flags(IntPolynomial({-1, -1, 1}));
  CHECK(f.monic);
  CHECK_FALSE(f.reciprocal);
  CHECK(f.height == 1);
  CHECK(f.sign_changes == 1);

  StructureFlags lehmer = structure_flags(IntPolynomial::lehmer());
  CHECK(lehmer.monic);
  CHECK(lehmer.reciprocal);
  CHECK(lehmer.height == 1);

  // X^m - t1 X^(m-1) - ... - t_m with t_i >= 0, t_m > 0: one alternation
  StructureFlags g = structure_flags(IntPolynomial({-3, 0, -1, -2, 1}));
  CHECK(g.sign_changes == 1);

  CHECK_THROWS_AS(structure_flags(IntPolynomial()), Error);
}

TEST_CASE("reciprocal structure is preserved under reversal") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; trial++) {
    std::vector<mpz_class> c;
    size_t d = 1 + rng() % 8;
    for (size_t i = 0; i <= d; i++) c.emplace_back(static_cast<long>(rng() % 11) - 5);
    IntPolynomial p(std::move(c));
    if (p.is_zero()) continue;
    StructureFlags f = structure_flags(p);
    if (p.reciprocal().degree() == p.degree())
      CHECK(f.reciprocal == structure_flags(p.reciprocal()).reciprocal);
  }
}

TEST_CASE("sturm root counting on explicit intervals") {
  IntPolynomial x2m2({-2, 0, 1});  // X^2 - 2
  CHECK(sturm_real_root_count(x2m2, mpq_class(0), mpq_class(2)) == 1);
  CHECK(sturm_real_root_count(x2m2) == 2);

  // golden mean lies in (1, 2)
  CHECK(sturm_real_root_count(IntPolynomial({-1, -1, 1}), mpq_class(1), mpq_class(2)) == 1);

  // Lehmer's polynomial has exactly two real roots
  CHECK(sturm_real_root_count(IntPolynomial::lehmer()) == 2);
}

TEST_CASE("sturm counts add over a partition") {
  IntPolynomial p = IntPolynomial({-1, -1, 1}) * IntPolynomial({-2, 0, 1}) *
                    IntPolynomial({-3, 1});  // roots: golden pair, +-sqrt2, 3
  long whole = sturm_real_root_count(p, mpq_class(-10), mpq_class(10));
  CHECK(whole == 5);
  mpq_class cuts[] = {mpq_class(-10), mpq_class(-1), mpq_class(0), mpq_class(1), mpq_class(2),
                      mpq_class(10)};
  long sum = 0;
  for (int i = 0; i + 1 < 6; i++) sum += sturm_real_root_count(p, cuts[i], cuts[i + 1]);
  CHECK(sum == whole);
}

TEST_CASE("exact division") {
  IntPolynomial x2m1({-1, 0, 1}), xm1({-1, 1});
  CHECK(exact_divide(x2m1, xm1) == IntPolynomial({1, 1}));

  // G_5 factors through X^2 - X + 1 with cofactor the Pisot cubic:
  // -G_5*(X) / (X^2 - X + 1) = X^3 - X - 1
  IntPolynomial g5s = IntPolynomial::trinomial_gn_star(5);
  CHECK(exact_divide(-g5s, IntPolynomial({1, -1, 1})) == IntPolynomial({-1, -1, 0, 1}));

  CHECK_THROWS_AS(exact_divide(IntPolynomial({1, 0, 1}), xm1), Error);
}

TEST_CASE("exact_divide inverts multiplication on random pairs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; trial++) {
    auto rand_poly = [&](size_t d) {
      std::vector<mpz_class> c;
      for (size_t i = 0; i <= d; i++) c.emplace_back(static_cast<long>(rng() % 9) - 4);
      return IntPolynomial(std::move(c));
    };
    IntPolynomial p = rand_poly(rng() % 6), q = rand_poly(rng() % 6);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("cyclotomic product detection by Graeffe iteration") {
  CHECK(cyclotomic_product_test(IntPolynomial({1, 1, 1})));  // Phi_3
  CHECK_FALSE(cyclotomic_product_test(IntPolynomial({-2, 1})));
  CHECK(cyclotomic_product_test(IntPolynomial::parse("[ -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1 ]")));  // x^23 - 1
  CHECK_FALSE(cyclotomic_product_test(IntPolynomial::lehmer()));
  CHECK_FALSE(cyclotomic_product_test(IntPolynomial({-1, -1, 0, 1})));  // Pisot cubic
  CHECK_THROWS_AS(cyclotomic_product_test(IntPolynomial({1, 2})), Error);  // non-monic
}

TEST_CASE("products of cyclotomics up to index 30 pass the test") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; trial++) {
    IntPolynomial p({1});
    int factors = 1 + rng() % 3;
    for (int i = 0; i < factors; i++) p = p * cyclotomic_polynomial(1 + rng() % 30);
    CHECK(cyclotomic_product_test(p));
  }
}

TEST_CASE("cyclotomic polynomials are what they should be") {
  CHECK(cyclotomic_polynomial(1) == IntPolynomial({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == IntPolynomial({1, 1}));
  CHECK(cyclotomic_polynomial(6) == IntPolynomial({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == IntPolynomial({1, 0, -1, 0, 1}));
}

TEST_CASE("polynomial text round-trips through both grammars") {
  IntPolynomial p = IntPolynomial::lehmer();
  CHECK(IntPolynomial::parse(p.str()) == p);
  CHECK(IntPolynomial::parse("[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]") == p);
  CHECK(IntPolynomial::parse("-1 + x + x^12") == IntPolynomial::trinomial_gn(12));
  CHECK(IntPolynomial::parse("3*x^2 - 2") == IntPolynomial({-2, 0, 3}));
  CHECK(IntPolynomial::parse(" - x + 1 ") == IntPolynomial({1, -1}));
  CHECK_THROWS_AS(IntPolynomial::parse("x^"), Error);
}

TEST_CASE("squarefree part strips repeated factors") {
  IntPolynomial p = IntPolynomial({-1, 1}) * IntPolynomial({-1, 1}) * IntPolynomial({1, 1});
  CHECK(squarefree_part(p) == IntPolynomial({-1, 0, 1}));
}

TEST_CASE("argument shift is exact") {
  // minimal polynomial of (golden - 1): substitute X -> X + 1
  IntPolynomial p = IntPolynomial({-1, -1, 1}).shift_argument(1);
  CHECK(p == IntPolynomial({-1, 1, 1}));
}
