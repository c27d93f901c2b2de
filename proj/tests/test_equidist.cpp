#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "parrylab/equidist.hpp"
#include "parrylab/trinomial.hpp"

using namespace parrylab;

namespace {
const PrecisionContext ctx(192);

// full root set of G_n assembled from the indexed upper-half roots
RootSet gn_rootset(long n) {
  trinomial::IndexedTrinomialRoots r = trinomial::gn_roots(n, ctx);
  RootSet rs;
  rs.source = IntPolynomial::trinomial_gn(n);
  CertifiedRoot t{BigComplex(r.theta, BigFloat::of(0L, 192)), BigFloat::of(0L, 192), true};
  rs.roots.push_back(t);
  for (size_t i = 0; i < r.z.size(); i++) {
    rs.roots.push_back({r.z[i], r.radius[i], true});
    if (r.z[i].im.sign() != 0)
      rs.roots.push_back({r.z[i].conj(), r.radius[i], true});
  }
  return rs;
}
}  // namespace

TEST_CASE("roots of unity have discrepancy exactly 1/m") {
  for (long m : {4L, 7L, 12L}) {
    std::vector<mpz_class> c(static_cast<size_t>(m) + 1, 0);
    c[0] = -1;
    c[static_cast<size_t>(m)] = 1;
    RootSet rs = find_roots(IntPolynomial(std::move(c)), ctx);
    CHECK(circle_discrepancy(rs).to_double() == doctest::Approx(1.0 / double(m)).epsilon(1e-12));
  }
}

TEST_CASE("single off-circle root is the boundary case") {
  RootSet rs = find_roots(IntPolynomial({-2, 1}), ctx);
  CHECK(circle_discrepancy(rs).to_double() == doctest::Approx(1.0));
}

TEST_CASE("G_n discrepancy under the 8 Log n/sqrt(n) bound, nonincreasing over the scale") {
  double prev = 2.0;
  for (long n : {100L, 400L, 1600L}) {
    double d = circle_discrepancy(gn_rootset(n)).to_double();
    double bound = 8.0 * std::log(double(n)) / std::sqrt(double(n));
    CHECK(d <= bound);
    CHECK(d <= prev + 1e-12);
    prev = d;
  }
}

TEST_CASE("belotserkovski sigma formula") {
  BigFloat zero = BigFloat::of(0L, 192);
  // m = 100, eps = 0.05: max(0.4615, 0.3870) = 0.4615
  BigFloat s = belotserkovski_bound(100, BigFloat::of(0.05, 192), zero);
  CHECK(s.to_double() == doctest::Approx(0.46151).epsilon(1e-4));
  // monic case delta = 0: only the first two terms enter
  BigFloat s2 = belotserkovski_bound(100, zero, zero);
  CHECK(s2.to_double() == doctest::Approx(std::log(101.0) / 10.0).epsilon(1e-12));
  // eps = delta = 0, m large: sigma tends to 0
  CHECK(belotserkovski_bound(100000000, zero, zero).to_double() < 2e-3);
  CHECK_THROWS_AS(belotserkovski_bound(10, BigFloat::of(0.7, 192), zero), Error);
}

TEST_CASE("fitted universal constant over the G_n corpus stays modest") {
  double cmax = 0.0;
  for (long n : {100L, 400L, 1600L}) {
    RootSet rs = gn_rootset(n);
    double d = circle_discrepancy(rs).to_double();
    double eps = 2.0 * std::log(double(n)) / double(n);
    double sigma =
        belotserkovski_bound(n, BigFloat::of(eps, 192), BigFloat::of(0L, 192)).to_double();
    cmax = std::max(cmax, d / sigma);
  }
  CHECK(cmax < 1.0);  // the fitted C for this corpus
}
