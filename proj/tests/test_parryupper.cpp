#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parrylab/parryupper.hpp"
#include "parrylab/trinomial.hpp"

using namespace parrylab;

namespace {
const PrecisionContext ctx(256);

AlgebraicReal lehmer_number() {
  return AlgebraicReal(IntPolynomial::lehmer(), mpq_class(1), mpq_class(2));
}
AlgebraicReal salem_1291741() {
  // dyg-6 Salem with irreducible Parry polynomial, from its expansion
  ParryExpansion e = ParryExpansion::parse("0.1(0^4 1 0^11 1 0^6)^w");
  return AlgebraicReal(parry_polynomial(e).parry, mpq_class(1), mpq_class(2));
}
}  // namespace

TEST_CASE("f_beta for theta_n^-1 is the trinomial G_n itself") {
  TruncatedSeries f = f_beta(theta_perron(12), 40);
  CHECK(f.complete);
  REQUIRE(f.coeffs.size() == 13);
  CHECK(f.coeffs[0] == -1);
  CHECK(f.coeffs[1] == 1);
  CHECK(f.coeffs[12] == 1);
  for (size_t i = 2; i < 12; i++) CHECK(f.coeffs[i] == 0);
  check_gap_structure(f, 12);
}

TEST_CASE("f_beta for Lehmer's number starts -1 + z + z^12 + z^31 + z^44 + z^63") {
  TruncatedSeries f = f_beta(lehmer_number(), 70);
  auto sup = f.support();
  REQUIRE(sup.size() >= 5);
  CHECK(sup[0] == 1);
  CHECK(sup[1] == 12);
  CHECK(sup[2] == 31);
  CHECK(sup[3] == 44);
  CHECK(sup[4] == 63);
  check_gap_structure(f, 12);
}

TEST_CASE("zeta rational forms match the published ones") {
  // Salem 1.280638: f = -(z^20 - z^19 - z^13 - z^7 - z + 1)/(1 - z^19)
  ParryExpansion e = ParryExpansion::parse("0.1(0^5 1 0^5 1 0^7)^w");
  ZetaRationalForm z = zeta_rational_form(e);
  CHECK(z.numerator == -IntPolynomial::parse("z^20 - z^19 - z^13 - z^7 - z + 1").reciprocal());
  CHECK(z.denominator == IntPolynomial::parse("[1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,-1]"));

  // Lehmer: denominator 1 - z^74, numerator degree 75
  ZetaRationalForm zl = zeta_rational_form(renyi_expansion(lehmer_number()));
  CHECK(zl.parry.degree() == 75);
  CHECK(zl.denominator.degree() == 74);

  // theta_n^-1: f = G_n, denominator 1
  ZetaRationalForm zt = zeta_rational_form(renyi_expansion(theta_perron(9)));
  CHECK(zt.numerator == IntPolynomial::trinomial_gn(9));
  CHECK(zt.denominator == IntPolynomial({1}));
}

TEST_CASE("U_beta of the dyg-6 Salem with irreducible Parry polynomial is -(1 - z^23)") {
  AlgebraicReal beta = salem_1291741();
  TruncatedSeries f = f_beta(beta, 400);
  std::vector<mpz_class> b = u_beta_coeffs(beta.minpoly(), f, 300);
  for (size_t r = 0; r <= 300; r++) {
    if (r == 0) CHECK(b[r] == -1);
    else if (r == 23) CHECK(b[r] == 1);
    else CHECK(b[r] == 0);
  }
}

TEST_CASE("U_beta product check holds to order 300 for Lehmer's number") {
  AlgebraicReal beta = lehmer_number();
  TruncatedSeries f = f_beta(beta, 400);
  // u_beta_coeffs verifies (U f)_k = (P*)_k exactly and throws on failure
  std::vector<mpz_class> b = u_beta_coeffs(beta.minpoly(), f, 300);
  CHECK(b[0] == -1);
}

TEST_CASE("U_beta for theta_5^-1 follows -1/(z^2 - z + 1)") {
  AlgebraicReal beta = theta_perron(5);
  TruncatedSeries f = f_beta(beta, 250);
  std::vector<mpz_class> b = u_beta_coeffs(beta.minpoly(), f, 200);
  // -1/(z^2-z+1) = -(1 + z - z^3 - z^4 + z^6 + z^7 - ...)
  std::vector<long> expect{-1, -1, 0, 1, 1, 0};
  for (size_t r = 0; r <= 200; r++) CHECK(b[r] == expect[r % 6]);
}

TEST_CASE("taylor coefficients at 1/beta are positive; golden-mean case is explicit") {
  // beta = theta_2^-1 (golden): f = -1 + z + z^2, f' = 1 + 2z at 1/beta
  AlgebraicReal golden = AlgebraicReal::golden();
  TaylorCoeff c1 = taylor_c_m(golden, 1, ctx);
  double expect = 1.0 + 2.0 / 1.6180339887498949;
  CHECK(c1.value.to_double() == doctest::Approx(expect).epsilon(1e-10));

  for (long m : {1L, 2L, 3L}) {
    TaylorCoeff c = taylor_c_m(lehmer_number(), m, ctx);
    CHECK(c.value.sign() > 0);
  }

  // theta_12^-1: c_1 = G_12'(theta_12) = 1 + 12 theta_12^11
  AlgebraicReal t12 = theta_perron(12);
  BigFloat th = BigFloat::of(1L, 256) / t12.approx(256);
  BigFloat expect12 = pow(th, 11) * 12L + 1L;
  TaylorCoeff c12 = taylor_c_m(t12, 1, ctx);
  CHECK(abs(c12.value - expect12) < pow2(-180, 256));
}

TEST_CASE("winding numbers count zeros inside circles") {
  // f for theta_12^-1 is G_12: floor(12/6) = 2 upper-half roots inside
  // |z| < 1 plus conjugates plus theta_12: 5 zeros inside |z| = 0.995
  TruncatedSeries f = f_beta(theta_perron(12), 20);
  long w = winding_number(f, BigFloat::of(0.995, 256), 256);
  CHECK(w == 5);
  // no zero strictly inside |z| = theta_12 - 0.01
  BigFloat inner = trinomial::theta_n(12, 256) - BigFloat::of(0.01, 256);
  CHECK(winding_number(f, inner, 256) == 0);
}

TEST_CASE("annulus zero count obeys the Solomyak majorant for Lehmer's number") {
  AlgebraicReal beta = lehmer_number();
  for (double r : {0.9, 0.95}) {
    AnnulusCount ac = annulus_zero_count(beta, BigFloat::of(r, 256), 512, ctx);
    CHECK(ac.count >= 1);  // at least the real zero 1/beta
    CHECK(BigFloat::of(static_cast<long>(ac.count), 256) <= ac.bound);
  }
}

TEST_CASE("no zero of f_beta below 1/beta, simple zero at 1/beta") {
  AlgebraicReal beta = lehmer_number();
  TruncatedSeries f = f_beta(beta, 2000);
  BigFloat b = beta.approx(256);
  // f(1/beta) = 0 to certified tolerance
  BigComplex at(BigFloat::of(1L, 256) / b, BigFloat::of(0L, 256));
  BigFloat tail = f.tail_bound(abs(at.re));
  CHECK(abs(f.eval(at)) < tail + pow2(-120, 256));
  // c_(beta,1) > 0 means simple
  CHECK(taylor_c_m(beta, 1, ctx).value.sign() > 0);
}

TEST_CASE("rational form agrees with the unrolled digits through order 1000") {
  for (const char* pat :
       {"0.1(0^10 1 0^18 1 0^12 1 0^18 1 0^12)^w", "0.1(0^5 1 0^5 1 0^7)^w", "0.1 0^7 1"}) {
    ParryExpansion e = ParryExpansion::parse(pat);
    ZetaRationalForm z = zeta_rational_form(e);
    TruncatedSeries f = f_beta(e, 1000);
    auto fc = [&](size_t i) { return i < f.coeffs.size() ? f.coeffs[i] : 0; };
    for (size_t k = 0; k <= 1000; k++) {
      mpz_class conv = 0;
      for (size_t j = 0; j <= std::min(k, z.denominator.degree()); j++)
        conv += z.denominator.coeff(j) * fc(k - j);
      REQUIRE(conv == z.numerator.coeff(k));
    }
  }
}

TEST_CASE("annulus count for theta_300^-1 equals the direct root count of G_300") {
  // independent oracle: count the indexed roots of G_300 with modulus in
  // [theta_300 - 0.01, 0.99], plus conjugates, plus theta_300 itself
  AlgebraicReal beta = theta_perron(300);
  BigFloat r = BigFloat::of(0.99, 256);
  AnnulusCount ac = annulus_zero_count(beta, r, 512, ctx);

  trinomial::IndexedTrinomialRoots roots = trinomial::gn_roots(300, PrecisionContext(256));
  BigFloat inner = BigFloat::of(1L, 256) / beta.approx(256) - BigFloat::of(0.01, 256);
  long direct = 1;  // theta_300 = 1/beta
  for (const auto& z : roots.z) {
    BigFloat a = abs(z);
    if (a > inner && a <= r) direct += (z.im.sign() != 0) ? 2 : 1;
  }
  CHECK(ac.count == direct);
  CHECK(BigFloat::of(ac.count, 256) <= ac.bound);
}

TEST_CASE("series and contour error paths") {
  ParryExpansion undet;
  undet.kind = ExpansionKind::undetermined;
  undet.preperiod = {1, 0, 0, 0, 1};
  CHECK_THROWS_AS(f_beta(undet, 50), Error);          // beyond computed digits
  CHECK_THROWS_AS(zeta_rational_form(undet), Error);  // no rational form
  AlgebraicReal golden = AlgebraicReal::golden();
  CHECK_THROWS_AS(annulus_zero_count(golden, BigFloat::of(0.3, 256), 64, ctx), Error);
}

TEST_CASE("no zero of f_beta strictly below 1/beta across the corpus") {
  for (const char* pat : {"0.1(0^4 1 0^6)^w", "0.1(0^6 1 0^24 1 0^8)^w", "0.1(0^8 1 0^10)^w"}) {
    ParryExpansion e = ParryExpansion::parse(pat);
    IntPolynomial parry = parry_polynomial(e).parry;
    AlgebraicReal beta(parry, mpq_class(1), mpq_class(2));
    TruncatedSeries f = f_beta(e, 1500);
    BigFloat inner = BigFloat::of(1L, 256) / beta.approx(256) - BigFloat::of(0.01, 256);
    CHECK(winding_number(f, inner, 256) == 0);
  }
}
