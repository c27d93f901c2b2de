#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "parrylab/lenticulus.hpp"
#include "parrylab/table1.hpp"

using namespace parrylab;
using namespace parrylab::lenticulus;

namespace {
const PrecisionContext ctx(256);
double as_d(const BigFloat& x) { return x.to_double(); }
}  // namespace

TEST_CASE("kappa and the derived Rouche constants") {
  RoucheConstants rc = find_amax(ctx);
  CHECK(as_d(rc.kappa) == doctest::Approx(0.171572875253).epsilon(1e-9));
  CHECK(std::abs(as_d(rc.kappa * rc.kappa - rc.kappa * 6L + 1L)) < 1e-40);
  CHECK(as_d(rc.a_max) == doctest::Approx(5.87433).epsilon(1e-4 / 5.87));
  CHECK(as_d(rc.S) == doctest::Approx(0.171784).epsilon(1e-5));
  CHECK(as_d(rc.c) == doctest::Approx(1.76274).epsilon(1e-5));
  CHECK(as_d(rc.exp_term) == doctest::Approx(0.0355344).epsilon(1e-4));
  CHECK(std::abs(as_d(rc.kappa_maximized) - as_d(rc.kappa)) < 1e-6);
  // the maximum beats the endpoints
  BigFloat one = BigFloat::of(1L, 256);
  CHECK(kappa(one, one) < rc.kappa);
  CHECK(kappa(one, BigFloat::of(20L, 256)) < rc.kappa);
}

TEST_CASE("kappa decreases in X for fixed a") {
  for (double a : {2.0, 5.87433, 20.0}) {
    BigFloat aa = BigFloat::of(a, 192);
    BigFloat prev = kappa(BigFloat::of(-1.0, 192), aa);
    for (double x = -0.9; x <= 1.0; x += 0.1) {
      BigFloat cur = kappa(BigFloat::of(x, 192), aa);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("limit constants") {
  LimitConstants lc = limit_constants(ctx);
  CHECK(as_d(lc.lambda_r) == doctest::Approx(1.16302).epsilon(1e-5 / 1.16));
  CHECK(as_d(lc.mu_r) == doctest::Approx(0.992337).epsilon(1e-5));
  CHECK(as_d(lc.product) == doctest::Approx(1.15411).epsilon(1e-5 / 1.15));
  CHECK(as_d(lc.lambda_r / lc.mu_r) == doctest::Approx(1.172).epsilon(1e-3));
  RoucheConstants rc = find_amax(ctx);
  CHECK(as_d(rc.slope) == doctest::Approx(0.0315536).epsilon(1e-6 / 0.0315));
}

TEST_CASE("J and H at n = 615 and the asymptotic cross-check") {
  trinomial::IndexedTrinomialRoots roots = trinomial::gn_roots(615, ctx);
  LenticularIndices li = lenticular_indices(615, roots, ctx);
  CHECK(li.J == 17);
  CHECK(li.H == 12);
  CHECK(std::abs(li.J - li.J_asymptotic) <= 1);
  // c_n tends to -Log kappa = 1.76274
  CHECK(as_d(li.c_n) == doctest::Approx(1.76274).epsilon(0.05));
  for (long n : {260L, 1000L}) {
    auto r = trinomial::gn_roots(n, ctx);
    auto l = lenticular_indices(n, r, ctx);
    CHECK(std::abs(l.J - l.J_asymptotic) <= 1);
  }
}

TEST_CASE("c_n and arg z_H at n = 5000") {
  auto roots = trinomial::gn_roots(5000, ctx);
  auto li = lenticular_indices(5000, roots, ctx);
  CHECK(std::abs(li.J - li.J_asymptotic) <= 1);
  CHECK(as_d(li.c_n) == doctest::Approx(1.76274).epsilon(0.01 / 1.76));
  double argH = arg(roots.z[static_cast<size_t>(li.H - 1)]).to_double();
  CHECK(std::abs(argH - 0.13625) < 0.005);
}

TEST_CASE("Rouche margins positive on all lenticular circles at n = 615") {
  auto roots = trinomial::gn_roots(615, ctx);
  auto li = lenticular_indices(615, roots, ctx);
  for (long j = 1; j <= li.J; j++) {
    RoucheMargin m = rouche_verify(615, j, 512, ctx);
    CHECK(m.pass);
  }
}

TEST_CASE("first-root Rouche circle from n = 32, and the threshold constants") {
  double lhs = (std::log(32.0) - std::log(std::log(32.0))) / 32.0;
  CHECK(lhs == doctest::Approx(0.0694628).epsilon(1e-5));
  RoucheConstants rc = find_amax(ctx);
  CHECK(as_d(rc.kappa / (rc.kappa + 1L)) == doctest::Approx(0.146447).epsilon(1e-5));
  for (long n : {32L, 60L, 150L}) {
    RoucheMargin m = rouche_verify(n, 1, 256, ctx, RoucheMode::first_root);
    CHECK(m.pass);
  }
}

TEST_CASE("external contour margins at n = 300") {
  RoucheMargin m = rouche_verify(300, 0, 512, ctx, RoucheMode::external_contour);
  CHECK(m.pass);
}

TEST_CASE("lenticulus of theta_300^-1 collapses onto the trinomial roots") {
  AlgebraicReal beta = theta_perron(300);
  Lenticulus L = locate_lenticulus(beta, ctx);
  auto roots = trinomial::gn_roots(300, ctx);
  auto li = lenticular_indices(300, roots, ctx);
  REQUIRE(static_cast<long>(L.entries.size()) == li.J + 1);
  for (const auto& e : L.entries) {
    CHECK(e.certified);
    if (e.j >= 1) {
      CHECK(as_d(abs(e.omega - e.z_jn)) < 1e-40);  // f = G_300 exactly
      CHECK(e.identification_residual <= e.identification_bound);
      CHECK(as_d(e.rouche_margin) > 0.0);
    }
  }
}

TEST_CASE("first-root lenticulus for theta_40^-1") {
  AlgebraicReal beta = theta_perron(40);
  Lenticulus L = locate_lenticulus(beta, ctx);
  CHECK(L.first_root_only);
  REQUIRE(L.entries.size() == 2);
  CHECK(L.entries[1].certified);
  CHECK(as_d(abs(L.entries[1].omega)) < 1.0);
  CHECK(std::abs(as_d(L.entries[1].omega.im)) > 1e-8);  // nonreal conjugate
}

TEST_CASE("float-mode lenticulus inside (theta_300^-1, theta_299^-1)") {
  BigFloat lo = theta_inv(300, 320), hi = theta_inv(299, 320);
  BigFloat beta = (lo + hi) / 2L;
  Lenticulus L = locate_lenticulus(beta, ctx);
  CHECK_FALSE(L.exact_digits);
  auto roots = trinomial::gn_roots(300, ctx);
  auto li = lenticular_indices(300, roots, ctx);
  CHECK(static_cast<long>(L.certified_count()) >= li.J);  // all J zeros + 1/beta entry
}

TEST_CASE("lenticular measure of theta_n^-1 beats the Dobrowolski floor") {
  LimitConstants lc = limit_constants(ctx);
  RoucheConstants rc = find_amax(ctx);
  BigFloat pi = BigFloat::pi(256);
  for (long n : {260L, 300L}) {
    AlgebraicReal beta = theta_perron(n);
    Lenticulus L = locate_lenticulus(beta, ctx);
    LenticularMeasure lm = lenticular_measure(beta.approx(256), L, ctx);
    BigFloat floor_n =
        lc.product * (BigFloat::of(1L, 256) - rc.S / (pi * 2L * log(BigFloat::of(n, 256))));
    CHECK(lm.M_r >= floor_n);
    CHECK(lm.M_r >= exp(lm.L_r) - pow2(-60, 256));
    // the lenticular measure really is a minorant of the full measure
    CHECK(trinomial::mahler_gn(n, ctx).M >= lm.M_r);
  }
}

TEST_CASE("bounds report carries the dyg >= 260 fields for theta_261^-1") {
  IntPolynomial p = -IntPolynomial::trinomial_gn_star(261);
  BoundsReport b = bounds_suite(p, ctx);
  CHECK(b.dyg == 261);
  REQUIRE(b.dygdeg_ok.has_value());
  CHECK(*b.dygdeg_ok);
  REQUIRE(b.dobrowolski.has_value());
  CHECK(b.M >= *b.dobrowolski);
  CHECK(b.lehmer_ok);
  CHECK(b.sz_ok);
  // certified lenticulus exists here, so M >= M_r >= exp(L_r)
  REQUIRE(b.M_r.has_value());
  REQUIRE(b.L_r.has_value());
  CHECK(b.M >= *b.M_r);
  CHECK(*b.M_r >= exp(*b.L_r) - pow2(-60, 256));
}

TEST_CASE("bounds suite at 512-bit verification precision") {
  PrecisionContext hi(512);
  BoundsReport b = bounds_suite(IntPolynomial::lehmer(), hi);
  CHECK(b.lehmer_ok);
  CHECK(b.salem_ok);
  CHECK(as_d(b.M) == doctest::Approx(1.17628081825991750).epsilon(1e-14));
}

TEST_CASE("M_r jumps at theta_(n-1)^-1 by |z_(J,n-1)|^-2 where J increments") {
  // the jump exists exactly where J_n = J_(n-1) + 1; n = 286 is the
  // first such point past 262 (at n = 300 both sides have J = 8 and the
  // ratio is 1, which is also checked)
  const long n = 286;
  auto li_lo = lenticular_indices(n - 1, trinomial::gn_roots(n - 1, ctx), ctx);
  auto li_hi = lenticular_indices(n, trinomial::gn_roots(n, ctx), ctx);
  REQUIRE(li_hi.J == li_lo.J + 1);
  BigFloat tcut = theta_inv(n - 1, 400);
  BigFloat eps = BigFloat::of(1e-8, 400);
  Lenticulus below = locate_lenticulus(tcut - eps, ctx);
  Lenticulus above = locate_lenticulus(tcut + eps, ctx);
  LenticularMeasure mb = lenticular_measure(tcut - eps, below, ctx);
  LenticularMeasure ma = lenticular_measure(tcut + eps, above, ctx);
  auto roots = trinomial::gn_roots(n - 1, ctx);
  BigFloat zJ = abs(roots.z[static_cast<size_t>(li_hi.J - 1)]);
  double expect = 1.0 / (as_d(zJ) * as_d(zJ));
  CHECK(as_d(mb.M_r) / as_d(ma.M_r) == doctest::Approx(expect).epsilon(1e-3));

  // no J increment at 300: the one-sided limits agree there
  BigFloat t299 = theta_inv(299, 400);
  LenticularMeasure nb =
      lenticular_measure(t299 - eps, locate_lenticulus(t299 - eps, ctx), ctx);
  LenticularMeasure na =
      lenticular_measure(t299 + eps, locate_lenticulus(t299 + eps, ctx), ctx);
  CHECK(as_d(nb.M_r) / as_d(na.M_r) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("bounds suite on the published corpus") {
  BoundsReport lehmer = bounds_suite(IntPolynomial::lehmer(), ctx);
  CHECK(lehmer.lehmer_ok);
  CHECK(lehmer.sz_ok);
  CHECK(lehmer.salem_profile);
  CHECK(lehmer.salem_ok);
  CHECK(lehmer.dyg == 12);

  BoundsReport pisot = bounds_suite(IntPolynomial({-1, -1, 0, 1}), ctx);
  CHECK(as_d(pisot.M) == doctest::Approx(1.32471795724475).epsilon(1e-10));
  CHECK(pisot.lehmer_ok);
  CHECK(pisot.sz_ok);
  CHECK_FALSE(pisot.salem_profile);

  BoundsReport cyc = bounds_suite(IntPolynomial({1, 1, 1}), ctx);
  CHECK(cyc.root_of_unity);

  // totally real: golden mean quadratic, h = 0.2406 > (1/4) Log theta_31^-1
  BoundsReport golden = bounds_suite(IntPolynomial({-1, -1, 1}), ctx);
  CHECK(golden.bogomolov_applicable);
  CHECK(golden.bogomolov_ok);
  double floor31 = 0.25 * std::log(as_d(theta_inv(31, 128)));
  CHECK(floor31 == doctest::Approx(0.020498).epsilon(1e-5));
}

TEST_CASE("same-degree Salem gap constant") {
  BigFloat t31 = theta_inv(31, 256);
  CHECK(as_d(t31 * (t31 - 1L)) == doctest::Approx(0.0927512).epsilon(1e-6));
  CHECK(as_d(t31) == doctest::Approx(1.08544).epsilon(1e-5));
  CHECK(as_d(theta_inv(259, 256)) == doctest::Approx(1.016126).epsilon(1e-6));
}

TEST_CASE("M_r is continuous inside an interval (grid Lipschitz probe)") {
  // sample beta on a grid inside (theta_300^-1, theta_299^-1)
  BigFloat lo = theta_inv(300, 320), hi = theta_inv(299, 320);
  const int grid = 6;
  std::vector<double> vals;
  for (int i = 1; i < grid; i++) {
    BigFloat beta = lo + (hi - lo) * i / static_cast<long>(grid);
    Lenticulus L = locate_lenticulus(beta, ctx);
    vals.push_back(as_d(lenticular_measure(beta, L, ctx).M_r));
  }
  for (size_t i = 0; i + 1 < vals.size(); i++)
    CHECK(std::abs(vals[i + 1] - vals[i]) < 0.01);
}

TEST_CASE("S solves the sine quadratic 4 sin^2(x/2) - 12 sin(x/2) + 1 = 0") {
  RoucheConstants rc = find_amax(ctx);
  BigFloat s2 = sin(rc.S / 2L);
  BigFloat q = s2 * s2 * 4L - s2 * 12L + 1L;
  CHECK(std::abs(as_d(q)) < 1e-50);
}

TEST_CASE("index machinery names its thresholds") {
  CHECK_THROWS_WITH_AS(lenticular_indices(100, trinomial::gn_roots(100, ctx), ctx),
                       doctest::Contains("195"), Error);
  CHECK_THROWS_AS(rouche_verify(40, 0, 64, ctx, RoucheMode::external_contour), Error);
  CHECK_THROWS_AS(rouche_verify(20, 1, 64, ctx, RoucheMode::first_root), Error);
}
