#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parrylab/betadynamics.hpp"
#include "parrylab/cyclotomic.hpp"
#include "parrylab/rootfinder.hpp"

using namespace parrylab;

namespace {
std::vector<int> digits_of(const char* pattern, size_t n) {
  return ParryExpansion::parse(pattern).digits(n);
}
}  // namespace

TEST_CASE("orbit of theta_n^-1 terminates at n with the published digits") {
  for (long n : {2L, 5L, 6L, 12L}) {
    AlgebraicReal beta = theta_perron(n);
    ParryExpansion e = renyi_expansion(beta);
    CHECK(e.kind == ExpansionKind::simple);
    // d = 0.1 0^(n-2) 1
    std::vector<int> expect(static_cast<size_t>(n), 0);
    expect.front() = 1;
    expect.back() = 1;
    CHECK(e.preperiod == expect);
  }
}

TEST_CASE("first orbit steps of theta_5^-1") {
  AlgebraicReal beta = theta_perron(5);
  OrbitState s = OrbitState::initial(beta.minpoly().degree());
  auto [t1, s1] = orbit_step(beta, s);
  CHECK(t1 == 1);  // floor(1.3247...)
  // next state represents theta_5^-1 - 1
  CHECK(s1.vec == std::vector<mpz_class>{-1, 1, 0});
  // T^j(1) = theta_5^(5-j); in particular T^5(1) = 0 (simple at m = 5)
  auto [t2, s2] = orbit_step(beta, s1);
  CHECK(t2 == 0);
  ParryExpansion e = renyi_expansion(beta);
  CHECK(e.preperiod.size() == 5);
}

TEST_CASE("Lehmer's number has the published eventually periodic expansion") {
  AlgebraicReal beta(IntPolynomial::lehmer(), mpq_class(1), mpq_class(2));
  ParryExpansion e = renyi_expansion(beta);
  REQUIRE(e.kind == ExpansionKind::eventually_periodic);
  CHECK(e.preperiod == std::vector<int>{1});
  CHECK(e.period.size() == 74);
  ParryExpansion expect =
      ParryExpansion::parse("0.1(0^10 1 0^18 1 0^12 1 0^18 1 0^12)^w");
  CHECK(e.period == expect.period);
  CHECK(e.str() == "0.1 (0^10 1 0^18 1 0^12 1 0^18 1 0^12)^w");
}

TEST_CASE("Salem 1.280638 expansion and Parry polynomial") {
  IntPolynomial p = IntPolynomial::parse("x^8 - x^5 - x^4 - x^3 + 1");
  AlgebraicReal beta(p, mpq_class(1), mpq_class(2));
  ParryExpansion e = renyi_expansion(beta);
  CHECK(e.str() == "0.1 (0^5 1 0^5 1 0^7)^w");
  ParryPolynomials pp = parry_polynomial(e, &p);
  CHECK(pp.parry == IntPolynomial::parse("z^20 - z^19 - z^13 - z^7 - z + 1"));
  CHECK(pp.parry.degree() == 20);
  CHECK(cyclotomic_product_test(pp.complementary));
}

TEST_CASE("admissibility") {
  CHECK(self_admissible(std::vector<int>{1, 0, 0, 1}));
  CHECK_FALSE(self_admissible(std::vector<int>{1, 0, 1, 1}));  // shift 11 beats 10
  CHECK(admissible({0, 0, 1}, {1, 0, 0, 1}));
  CHECK_FALSE(admissible({1, 0, 0, 1}, {1, 0, 0, 1}));  // shift 0 not strict

  // the all-ones infinite word is not self-admissible (periodic mode)
  ParryExpansion ones;
  ones.kind = ExpansionKind::eventually_periodic;
  ones.period = {1};
  CHECK_FALSE(self_admissible(ones));

  // but the finite word 1111 (a simple expansion) is
  CHECK(self_admissible(std::vector<int>{1, 1, 1, 1}));

  // every expansion the engine produces is self-admissible
  for (long n : {5L, 9L, 12L}) CHECK(self_admissible(renyi_expansion(theta_perron(n))));
}

TEST_CASE("dynamical degree on exact input") {
  CHECK(dyg(AlgebraicReal::golden()) == 2);
  AlgebraicReal lehmer(IntPolynomial::lehmer(), mpq_class(1), mpq_class(2));
  CHECK(dyg(lehmer) == 12);
  CHECK_THROWS_AS(dyg(AlgebraicReal::rational(mpq_class(3))), Error);
}

TEST_CASE("dyg(theta_n^-1) = n across the whole range") {
  for (long n = 2; n <= 400; n++) {
    AlgebraicReal t = theta_perron(n);
    CAPTURE(n);
    CHECK(dyg(t) == n);
  }
}

TEST_CASE("dyg in float mode just above theta_31^-1") {
  AlgebraicReal b31 = theta_perron(31);
  BigFloat x = b31.approx(320) + pow2(-130, 320);
  CHECK(dyg(x) == 31);
}

TEST_CASE("theta_perron matches the published values and degrees") {
  AlgebraicReal t5 = theta_perron(5);
  CHECK(t5.minpoly() == IntPolynomial({-1, -1, 0, 1}));
  CHECK(t5.approx(128).to_double() == doctest::Approx(1.324717957).epsilon(1e-9));

  AlgebraicReal t12 = theta_perron(12);
  CHECK(t12.minpoly().degree() == 12);
  CHECK(t12.approx(128).to_double() == doctest::Approx(1.172950).epsilon(1e-6));

  AlgebraicReal t11 = theta_perron(11);
  CHECK(t11.minpoly().degree() == 9);  // 11 = 5 mod 6
  CHECK(t11.approx(128).to_double() == doctest::Approx(1.184276).epsilon(1e-6));
}

TEST_CASE("reconstruction identity for simple and periodic expansions") {
  // simple: 1 = sum t_i beta^-i exactly at the truncation
  AlgebraicReal t6 = theta_perron(6);
  ParryExpansion e = renyi_expansion(t6);
  BigFloat b = t6.approx(256);
  BigFloat acc = BigFloat::of(0L, 256);
  for (size_t i = 1; i <= e.preperiod.size(); i++)
    acc = acc + BigFloat::of(static_cast<long>(e.digit(i)), 256) / pow(b, static_cast<long>(i));
  CHECK(abs(acc - BigFloat::of(1L, 256)) < pow2(-200, 256));

  // periodic: partial sums approach 1 geometrically
  AlgebraicReal lehmer(IntPolynomial::lehmer(), mpq_class(1), mpq_class(2));
  ParryExpansion el = renyi_expansion(lehmer);
  BigFloat bl = lehmer.approx(256);
  BigFloat accl = BigFloat::of(0L, 256);
  for (size_t i = 1; i <= 600; i++)
    accl = accl + BigFloat::of(static_cast<long>(el.digit(i)), 256) / pow(bl, static_cast<long>(i));
  CHECK(abs(accl - BigFloat::of(1L, 256)) < pow(BigFloat::of(1.17, 256), -590));
}

TEST_CASE("blanchard classification") {
  CHECK(classify_blanchard(theta_perron(6)).cls == BlanchardClass::C1);
  AlgebraicReal lehmer(IntPolynomial::lehmer(), mpq_class(1), mpq_class(2));
  CHECK(classify_blanchard(lehmer).cls == BlanchardClass::C2);
  // budget exhaustion is an explicit result, not an error
  AlgebraicReal quartic(IntPolynomial({-1, -1, 0, 0, 1}), mpq_class(1), mpq_class(2));
  BlanchardResult r = classify_blanchard(quartic, 40);
  if (r.cls == BlanchardClass::undetermined) CHECK(r.expansion.budget_used >= 40);
}

TEST_CASE("expansion grammar round-trips") {
  const char* cases[] = {"0.1 0^3 1", "0.1 (0^4 1 0^9 1 0^6)^w",
                         "0.1 (0^10 1 0^18 1 0^12 1 0^18 1 0^12)^w"};
  for (const char* s : cases) {
    ParryExpansion e = ParryExpansion::parse(s);
    CHECK(e.str() == s);
  }
  CHECK(digits_of("0.1 0^2 1", 4) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("gap condition from the dynamical degree") {
  // dyg(beta) = n forces 1 0^(n-2) 1 and zero runs >= n-2
  AlgebraicReal lehmer(IntPolynomial::lehmer(), mpq_class(1), mpq_class(2));
  ParryExpansion e = renyi_expansion(lehmer);
  long n = dyg(lehmer);
  std::vector<int> d = e.digits(300);
  CHECK(d[0] == 1);
  for (long i = 1; i < n - 1; i++) CHECK(d[static_cast<size_t>(i)] == 0);
  CHECK(d[static_cast<size_t>(n - 1)] == 1);
  long run = 0;
  std::vector<long> ones;
  for (size_t i = 0; i < d.size(); i++)
    if (d[i] == 1) ones.push_back(static_cast<long>(i + 1));
  for (size_t k = 1; k + 1 < ones.size(); k++)
    CHECK(ones[k + 1] - ones[k] >= n - 1);
  (void)run;
}

TEST_CASE("Ostrowski gappiness certificate for the Table-1 style Salems") {
  // for a Salem number Log M / Log beta = 1 and gap lengths inside the
  // period are < period length, so s_k/m_k <= 1 + L/m_k past one period
  AlgebraicReal lehmer(IntPolynomial::lehmer(), mpq_class(1), mpq_class(2));
  ParryExpansion e = renyi_expansion(lehmer);
  long L = static_cast<long>(e.period.size());
  std::vector<int> d = e.digits(static_cast<size_t>(3 * L));
  std::vector<long> ones;
  for (size_t i = 0; i < d.size(); i++)
    if (d[i] != 0) ones.push_back(static_cast<long>(i + 1));
  for (size_t k = 0; k + 1 < ones.size(); k++) {
    long m = ones[k], s = ones[k + 1];
    if (m > L) CHECK(double(s) / double(m) <= 1.0 + double(L) / double(m) + 1e-12);
  }
}

TEST_CASE("error paths surface as typed errors") {
  ParryExpansion undet;
  undet.kind = ExpansionKind::undetermined;
  undet.preperiod = {1, 0, 0, 1};
  CHECK_THROWS_AS(parry_polynomial(undet), Error);
  CHECK_THROWS_AS(theta_perron(1), Error);
  CHECK_THROWS_AS(renyi_expansion(AlgebraicReal::golden(), 0), Error);
}
