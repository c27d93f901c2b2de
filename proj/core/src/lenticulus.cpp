#include "parrylab/lenticulus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "parrylab/cyclotomic.hpp"
#include "parrylab/quadrature.hpp"
#include "parrylab/sturm.hpp"

namespace parrylab {
namespace lenticulus {

BigFloat theta_inv(long n, mpfr_prec_t bits) {
  return (BigFloat::of(1L, bits + 8) / trinomial::theta_n(n, bits + 8)).round_to(bits);
}

BigFloat kappa(const BigFloat& X, const BigFloat& a) {
  mpfr_prec_t prec = std::max(X.prec(), a.prec());
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat pi = BigFloat::pi(prec);
  BigFloat E = exp(pi * X / a);
  BigFloat s = sqrt(max(one - X * X, BigFloat::of(0L, prec)));
  BigFloat phase = pi * s / a;
  BigFloat B = sqrt(one - E * cos(phase) * 2L + E * E);
  return B / (E * (E + B));
}

RoucheConstants find_amax(const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.bits + 16;
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat X = one;

  // golden-section maximization of a -> kappa(1, a) on [1, 100]
  BigFloat lo = one, hi = BigFloat::of(100L, prec);
  BigFloat invphi = (sqrt(BigFloat::of(5L, prec)) - 1L) / 2L;
  BigFloat c1 = hi - (hi - lo) * invphi;
  BigFloat c2 = lo + (hi - lo) * invphi;
  BigFloat f1 = kappa(X, c1), f2 = kappa(X, c2);
  BigFloat span_tol = pow2(-(ctx.bits / 2), prec);
  while (hi - lo > span_tol) {
    if (f1 < f2) {
      lo = c1;
      c1 = c2;
      f1 = f2;
      c2 = lo + (hi - lo) * invphi;
      f2 = kappa(X, c2);
    } else {
      hi = c2;
      c2 = c1;
      f2 = f1;
      c1 = hi - (hi - lo) * invphi;
      f1 = kappa(X, c1);
    }
  }
  BigFloat a_gs = (lo + hi) / 2L;
  BigFloat kappa_gs = kappa(X, a_gs);

  // polish with the exact relations: discriminant kappa^2 - 6 kappa + 1 = 0
  // and exp(pi/a_max) = (kappa+1)/(4 kappa)
  RoucheConstants rc;
  rc.kappa = BigFloat::of(3L, prec) - sqrt(BigFloat::of(2L, prec)) * 2L;
  rc.kappa_maximized = kappa_gs;
  if (abs(kappa_gs - rc.kappa) > pow2(-24, prec))
    throw Error("find_amax: maximization far from the exact kappa");
  BigFloat pi = BigFloat::pi(prec);
  rc.a_max = pi / log((rc.kappa + 1L) / (rc.kappa * 4L));
  rc.S = asin(rc.kappa / 2L) * 2L;
  rc.c = -log(rc.kappa);
  rc.exp_term = rc.kappa * rc.kappa / (BigFloat::of(1L, prec) - rc.kappa);
  LimitConstants lc = limit_constants(ctx);
  rc.dobrowolski_floor = lc.product;
  rc.slope = lc.product * rc.S / (pi * 2L);
  return rc;
}

namespace {

// integrand of mu_r (and of the Dobrowolski product when combined with
// the log-sine): F(x) = Log[(1 + 2 sin(x/2) - sqrt(1 - 12 sin(x/2)
// + 4 sin(x/2)^2)) / (8 sin(x/2))]
BigFloat mu_integrand(const BigFloat& x) {
  mpfr_prec_t prec = x.prec();
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat s = sin(x / 2L) * 2L;
  BigFloat disc = one - s * 6L + s * s;
  if (disc.sign() < 0) disc = BigFloat::of(0L, prec);
  return log((one + s - sqrt(disc)) / (s * 4L));
}

}  // namespace

LimitConstants limit_constants(const PrecisionContext& ctx) {
  static std::map<mpfr_prec_t, LimitConstants> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(ctx.bits);
    if (it != cache.end()) return it->second;
  }
  mpfr_prec_t prec = ctx.bits + 32;
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat pi = BigFloat::pi(prec);
  BigFloat kap = BigFloat::of(3L, prec) - sqrt(BigFloat::of(2L, prec)) * 2L;
  BigFloat S = asin(kap / 2L) * 2L;
  BigFloat tol = pow2(-(ctx.bits / 2) - 16, prec);

  // Lambda_r: log-sine over [0, S]; Log x singularity split on [0, delta]
  BigFloat delta = one / 1000L;
  RealFn smooth = [&](const BigFloat& x) { return log(sin(x / 2L) * 2L / x); };
  RealFn logsine = [&](const BigFloat& x) { return log(sin(x / 2L) * 2L); };
  BigFloat i0 = delta * (log(delta) - one) +
                integrate(smooth, BigFloat::of(0L, prec), delta, tol, prec);
  BigFloat i1 = integrate(logsine, delta, S, tol, prec);
  BigFloat lambda_r = exp(-(i0 + i1) / pi);

  // mu_r: sqrt singularity of the discriminant at S removed by x = S - t^2
  RealFn mu_sub = [&](const BigFloat& t) {
    return mu_integrand(S - t * t) * t * 2L;
  };
  BigFloat imu = integrate(mu_sub, BigFloat::of(0L, prec), sqrt(S), tol, prec);
  BigFloat mu_r = exp(-imu / pi);

  LimitConstants out{lambda_r.round_to(ctx.bits), mu_r.round_to(ctx.bits),
                     (lambda_r * mu_r).round_to(ctx.bits)};
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(ctx.bits, out);
  return out;
}

LenticularIndices lenticular_indices(long n, const trinomial::IndexedTrinomialRoots& roots,
                                     const PrecisionContext& ctx) {
  if (n < 195) throw Error("lenticular indices need n >= 195 (H_n needs n >= 260)");
  if (roots.n != n) throw Error("lenticular_indices: root set mismatch");
  mpfr_prec_t prec = ctx.bits;
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat pi = BigFloat::pi(prec);
  RoucheConstants rc = find_amax(ctx);

  LenticularIndices out;
  out.n = n;
  trinomial::TransitionSequences ts = trinomial::transition_sequences(n);
  out.v_n = ts.v.round_to(prec);

  // J: largest j <= floor(n/6) with |-1 + z_j| / |z_j| <= kappa
  long n6 = n / 6;
  long J = 0;
  for (long j = 1; j <= n6; j++) {
    const BigComplex& z = roots.z[static_cast<size_t>(j - 1)];
    BigComplex zm1 = z;
    zm1.re = zm1.re - 1L;
    if (abs(zm1) / abs(z) <= rc.kappa) J = j;
  }
  if (J == 0) throw Error("lenticular_indices: no root satisfies the Rouche criterion");
  out.J = J;

  // asymptotic cross-check (must agree within +-1)
  BigFloat j_est = BigFloat::of(n, prec) / pi * asin(rc.kappa / 2L) +
                   rc.kappa * log(rc.kappa) / (pi * sqrt(BigFloat::of(4L, prec) - rc.kappa * rc.kappa));
  out.J_asymptotic = std::lround(j_est.to_double());

  out.H = static_cast<long>(
      std::floor(((BigFloat::of(n, prec) / (pi * 2L)) * (rc.S - rc.exp_term) - one).to_double()));

  out.c_n = (one - abs(roots.z[static_cast<size_t>(J - 1)])) * n;

  BigFloat ln = log(BigFloat::of(n, prec));
  BigFloat lln = log(ln);
  out.t_0n = (lln / ln) * (lln / ln);

  // refined radii: a_(J,n) = a_max; below ceil(v_n) the coarse a_max;
  // in between the quadratic solution plus its tail term
  out.a_jn.assign(static_cast<size_t>(J) + 1, rc.a_max);
  long jlo = static_cast<long>(std::ceil(ts.v.to_double()));
  for (long j = std::max<long>(1, jlo); j < J; j++) {
    BigFloat x = pi * BigFloat::of(j, prec) / BigFloat::of(n, prec);
    BigFloat s2 = sin(x) * 2L;
    BigFloat B = s2 * (one - log(s2) / n);
    BigFloat disc = one - B * 6L + B * B;
    if (disc.sign() < 0) disc = BigFloat::of(0L, prec);
    BigFloat D = log((one + B - sqrt(disc)) / (B * 4L));
    BigFloat eD = exp(D);
    BigFloat tail = (BigFloat::of(2L, prec) / n) / B *
                    ((BigFloat::of(-3L, prec) + one / eD + eD * 2L) /
                     (BigFloat::of(4L, prec) - one / eD - eD * 2L)) *
                    out.t_0n;
    out.a_jn[static_cast<size_t>(j)] = pi / (D + tail);
  }
  return out;
}

namespace {

// |z|^(2n-1) / (1 - |z|^(n-1)) — the tail side of the Rouche inequality
BigFloat rouche_lhs(long n, const BigFloat& az) {
  mpfr_prec_t prec = az.prec();
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat an1 = pow(az, n - 1);
  return pow(az, 2 * n - 1) / (one - an1);
}

BigFloat circle_margin(long n, const BigComplex& center, const BigFloat& radius, int K) {
  mpfr_prec_t prec = center.prec();
  BigFloat two_pi = BigFloat::pi(prec) * 2L;
  BigFloat margin(prec);
  bool first = true;
  for (int k = 0; k < K; k++) {
    BigFloat ang = two_pi * k / static_cast<long>(K);
    BigComplex z = center + BigComplex::polar(radius, ang);
    BigFloat az = abs(z);
    if (!(az < 1.0)) {
      // points at or beyond the unit circle make the tail bound vacuous
      return BigFloat::of(-1L, prec);
    }
    BigComplex g = pow(z, static_cast<unsigned long>(n)) + z;
    g.re = g.re - 1L;
    BigFloat m = abs(g) - rouche_lhs(n, az);
    if (first || m < margin) margin = m;
    first = false;
  }
  return margin;
}

}  // namespace

RoucheMargin rouche_verify(long n, long j, int samples, const PrecisionContext& ctx,
                           RoucheMode mode) {
  mpfr_prec_t prec = ctx.bits;
  RoucheConstants rc = find_amax(ctx);
  BigFloat pi = BigFloat::pi(prec);

  if (mode == RoucheMode::external_contour) {
    if (n < 260) throw Error("external contour needs n >= 260");
    trinomial::IndexedTrinomialRoots roots = trinomial::gn_roots(n, ctx);
    LenticularIndices li = lenticular_indices(n, roots, ctx);
    BigFloat r_ext = BigFloat::of(1L, prec) - li.c_n / n;
    BigFloat margin(prec);
    bool first = true;
    // arcs of |z| = 1 - c_n/n clear of the protecting disks
    for (int k = 0; k <= samples; k++) {
      BigFloat ang = BigFloat::pi(prec) * k / static_cast<long>(samples);
      BigComplex z = BigComplex::polar(r_ext, ang);
      bool inside_protecting_disk = false;
      for (long jj = 1; jj <= 2 * li.J - li.H + 1 && jj <= n / 2; jj++) {
        const BigComplex& zj = roots.z[static_cast<size_t>(jj - 1)];
        BigFloat rad = pi * abs(zj) / (BigFloat::of(n, prec) * rc.a_max);
        if (jj > li.J) {
          BigFloat q = rc.a_max * (jj - li.J) / (pi * li.J);
          BigFloat s_jn = rc.a_max / sqrt(BigFloat::of(1L, prec) + q * q);
          rad = pi * abs(zj) / (BigFloat::of(n, prec) * s_jn);
        }
        if (abs(z - zj) < rad) {
          inside_protecting_disk = true;
          break;
        }
      }
      if (inside_protecting_disk) continue;
      BigComplex g = pow(z, static_cast<unsigned long>(n)) + z;
      g.re = g.re - 1L;
      BigFloat m = abs(g) - rouche_lhs(n, abs(z));
      if (first || m < margin) margin = m;
      first = false;
    }
    // the arcs of the s_(j,n) circles that dip inside |z| <= 1 - c_n/n
    int arc_samples = std::max(16, samples / 8);
    for (long jj = li.J + 1; jj <= 2 * li.J - li.H + 1 && jj <= n / 2; jj++) {
      const BigComplex& zj = roots.z[static_cast<size_t>(jj - 1)];
      BigFloat q = rc.a_max * (jj - li.J) / (pi * li.J);
      BigFloat s_jn = rc.a_max / sqrt(BigFloat::of(1L, prec) + q * q);
      BigFloat rad = pi * abs(zj) / (BigFloat::of(n, prec) * s_jn);
      for (int k = 0; k < arc_samples; k++) {
        BigFloat ang = BigFloat::pi(prec) * 2L * k / static_cast<long>(arc_samples);
        BigComplex z = zj + BigComplex::polar(rad, ang);
        if (!(abs(z) < r_ext)) continue;
        BigComplex g = pow(z, static_cast<unsigned long>(n)) + z;
        g.re = g.re - 1L;
        BigFloat m = abs(g) - rouche_lhs(n, abs(z));
        if (first || m < margin) margin = m;
        first = false;
      }
    }
    return {margin, margin.sign() > 0};
  }

  if (mode == RoucheMode::first_root) {
    if (n < 32) throw Error("first-root circle needs n >= 32");
    if (j != 1) throw Error("first-root mode verifies j = 1");
  }
  long half = n / 2;
  if (j < 1 || j > half) throw Error("rouche_verify: index out of range");

  trinomial::IndexedTrinomialRoots roots = trinomial::gn_roots(n, ctx);
  const BigComplex& zj = roots.z[static_cast<size_t>(j - 1)];
  BigFloat radius = pi * abs(zj) / (BigFloat::of(n, prec) * rc.a_max);

  BigFloat m1 = circle_margin(n, zj, radius, samples);
  BigFloat m2 = circle_margin(n, zj, radius, samples * 2);
  BigFloat margin = min(m1, m2);
  return {margin, margin.sign() > 0};
}

namespace {

struct SeriesContext {
  TruncatedSeries f;
  long n;  // dynamical degree
};

// winding number of the truncated series along an arbitrary circle,
// requiring min |f| > 4 * tail for the count to be meaningful
long winding_on_circle(const TruncatedSeries& f, const BigComplex& center,
                       const BigFloat& radius, int samples) {
  mpfr_prec_t prec = center.prec();
  BigFloat pi = BigFloat::pi(prec);
  BigFloat two_pi = pi * 2L;
  BigFloat rmax = abs(center) + radius;
  BigFloat tail = f.tail_bound(rmax);

  long prev = 0;
  bool have_prev = false;
  for (int K = samples; K <= samples * 16; K *= 2) {
    BigFloat total = BigFloat::of(0L, prec);
    BigFloat prev_arg(prec), first_arg(prec), min_abs(prec);
    for (int k = 0; k < K; k++) {
      BigFloat ang = two_pi * k / static_cast<long>(K);
      BigComplex fz = f.eval(center + BigComplex::polar(radius, ang));
      BigFloat a = abs(fz);
      if (k == 0 || a < min_abs) min_abs = a;
      BigFloat ar = arg(fz);
      if (k == 0) first_arg = ar;
      else {
        BigFloat d = ar - prev_arg;
        if (d > pi) d = d - two_pi;
        if (d < -pi) d = d + two_pi;
        total = total + d;
      }
      prev_arg = ar;
    }
    BigFloat d = first_arg - prev_arg;
    if (d > pi) d = d - two_pi;
    if (d < -pi) d = d + two_pi;
    total = total + d;
    if (!(min_abs > tail * 4L)) throw Error("contour too close");
    long count = std::lround((total / two_pi).to_double());
    if (have_prev && count == prev) return count;
    prev = count;
    have_prev = true;
  }
  throw Error("winding_on_circle: no stabilization");
}

Lenticulus locate_core(const BigFloat& beta_val, const TruncatedSeries& f, long n,
                       const IntPolynomial* minpoly, const PrecisionContext& ctx, int samples) {
  mpfr_prec_t prec = ctx.bits;
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat pi = BigFloat::pi(prec);
  RoucheConstants rc = find_amax(ctx);
  trinomial::IndexedTrinomialRoots roots = trinomial::gn_roots(n, ctx);

  Lenticulus L;
  L.n = n;
  L.exact_digits = f.exact;
  long J = 1;
  std::vector<BigFloat> radii;
  if (n >= 195) {
    LenticularIndices li = lenticular_indices(n, roots, ctx);
    J = li.J;
    for (long j = 1; j <= J; j++)
      radii.push_back(pi * abs(roots.z[static_cast<size_t>(j - 1)]) /
                      (BigFloat::of(n, prec) * li.a_jn[static_cast<size_t>(j)]));
  } else if (n >= 32) {
    L.first_root_only = true;
    radii.push_back(pi * abs(roots.z[0]) / (BigFloat::of(n, prec) * rc.a_max));
  } else {
    throw Error("locate_lenticulus: dynamical degree below 32");
  }

  // reciprocal-normalized minimal polynomial, the one vanishing at 1/beta
  IntPolynomial pstar;
  if (minpoly != nullptr) pstar = minpoly->reciprocal();

  // j = 0 entry: theta_n and 1/beta inside the t_0n/n disk
  {
    BigFloat ln = log(BigFloat::of(n, prec));
    BigFloat lln = log(ln);
    BigFloat t0_radius = (lln / ln) * (lln / ln) / n;
    LenticulusEntry e0;
    e0.j = 0;
    e0.z_jn = BigComplex(roots.theta, BigFloat::of(0L, prec));
    e0.omega = BigComplex(one / beta_val, BigFloat::of(0L, prec));
    e0.radius = t0_radius;
    e0.rouche_margin = BigFloat::of(0L, prec);
    e0.certified = abs(e0.omega.re - roots.theta) < t0_radius;
    if (minpoly != nullptr) {
      e0.identification_residual = abs(pstar.eval(e0.omega));
      // 1/beta is a root of P* by construction; the bound reflects only
      // the numeric enclosure of beta
      e0.identification_bound = pow2(-(ctx.bits / 2), prec);
      e0.certified = e0.certified && e0.identification_residual <= e0.identification_bound;
    } else {
      e0.identification_residual = BigFloat::nan(prec);
      e0.identification_bound = BigFloat::nan(prec);
    }
    L.entries.push_back(std::move(e0));
  }

  for (long j = 1; j <= (L.first_root_only ? 1 : J); j++) {
    const BigComplex& zj = roots.z[static_cast<size_t>(j - 1)];
    const BigFloat& disk_radius = radii[static_cast<size_t>(j - 1)];
    LenticulusEntry e;
    e.j = j;
    e.z_jn = zj;
    e.rouche_margin =
        rouche_verify(n, j, samples / 4 > 16 ? samples / 4 : 16, ctx,
                      L.first_root_only ? RoucheMode::first_root : RoucheMode::standard)
            .margin;
    e.certified = true;

    // Newton from the disk center on the truncated series
    BigComplex w = zj;
    bool inside = true;
    for (int it = 0; it < 64; it++) {
      BigComplex num = f.eval(w);
      BigComplex den = f.eval_derivative(w);
      if (norm(den).sign() == 0) {
        inside = false;
        break;
      }
      BigComplex step = num / den;
      w -= step;
      if (!(abs(w - zj) < disk_radius * 2L)) {
        inside = false;
        break;
      }
      if (abs(step) < pow2(-(ctx.bits * 3 / 4), prec)) break;
    }
    e.omega = w;
    if (!inside || !(abs(w - zj) < disk_radius)) {
      e.certified = false;
      e.radius = BigFloat::nan(prec);
    } else {
      BigFloat fw = abs(f.eval(w)) + f.tail_bound(abs(w) + pow2(-8, prec));
      BigFloat dfw = abs(f.eval_derivative(w));
      BigFloat rho = max(fw * 4L / dfw, pow2(-(ctx.bits / 2), prec));
      e.radius = rho;
      try {
        long wind = winding_on_circle(f, w, rho, std::max(32, samples / 8));
        if (wind != 1) e.certified = false;
      } catch (const Error&) {
        e.certified = false;
      }
    }

    if (minpoly != nullptr && e.certified) {
      // |P*(omega_true) - P*(omega)| <= rho * max |P*'| on the disk
      BigFloat R = abs(e.omega) + e.radius;
      BigFloat dbound = BigFloat::of(0L, prec);
      for (size_t i = 1; i < pstar.coeffs().size(); i++) {
        BigFloat term = abs(BigFloat::of(pstar[i], prec)) * static_cast<long>(i) *
                        pow(max(R, one), static_cast<long>(i) - 1);
        dbound = dbound + term;
      }
      e.identification_residual = abs(pstar.eval(e.omega));
      e.identification_bound = e.radius * dbound + pow2(-(ctx.bits / 2), prec);
      if (!(e.identification_residual <= e.identification_bound)) e.certified = false;
    } else if (minpoly == nullptr) {
      e.identification_residual = BigFloat::nan(prec);
      e.identification_bound = BigFloat::nan(prec);
    }
    L.entries.push_back(std::move(e));
  }
  return L;
}

}  // namespace

Lenticulus locate_lenticulus(const AlgebraicReal& beta, const PrecisionContext& ctx,
                             int samples, long budget) {
  BigFloat b = beta.approx(ctx.bits);
  long n = dyg(beta);
  ParryExpansion e = renyi_expansion(beta, budget);
  size_t N = std::max<size_t>(1000, 20 * static_cast<size_t>(n) *
                                        std::max<size_t>(1, e.period_length()));
  if (e.kind == ExpansionKind::simple) N = e.preperiod.size();
  TruncatedSeries f = f_beta(e, N);
  return locate_core(b, f, n, &beta.minpoly(), ctx, samples);
}

Lenticulus locate_lenticulus(const BigFloat& beta, const PrecisionContext& ctx, int samples) {
  long n = dyg(beta);
  ParryExpansion e = renyi_expansion_float(beta, 40L * n + 4000);
  TruncatedSeries f = f_beta(e, e.preperiod.size());
  return locate_core(beta, f, n, nullptr, ctx, samples);
}

LenticularMeasure lenticular_measure(const BigFloat& beta, const Lenticulus& L,
                                     const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.bits;
  BigFloat one = BigFloat::of(1L, prec);
  LenticularMeasure out;
  out.M_r = beta.round_to(prec);  // the 1/beta factor
  for (const auto& e : L.entries) {
    if (e.j == 0) continue;
    if (!e.certified) {
      out.excluded++;
      continue;
    }
    BigFloat a = abs(e.omega);
    out.M_r = out.M_r / (a * a);
  }

  // the four-term minorant L_r (a function of n only)
  long n = L.n;
  trinomial::IndexedTrinomialRoots roots = trinomial::gn_roots(n, ctx);
  if (n >= 195 && !L.first_root_only) {
    LenticularIndices li = lenticular_indices(n, roots, ctx);
    RoucheConstants rc = find_amax(ctx);
    BigFloat pi = BigFloat::pi(prec);
    BigFloat lr = log(beta);
    for (long j = 1; j <= li.J; j++)
      lr = lr - log(abs(roots.z[static_cast<size_t>(j - 1)])) * 2L;
    long vfloor = static_cast<long>(std::floor(li.v_n.to_double()));
    long coarse = std::min(vfloor, li.J);
    lr = lr - log(one + pi / (BigFloat::of(n, prec) * rc.a_max)) * 2L * coarse;
    for (long j = std::max<long>(1, vfloor + 1); j <= li.J; j++)
      lr = lr - log(one + pi / (BigFloat::of(n, prec) * li.a_jn[static_cast<size_t>(j)])) * 2L;
    out.L_r = lr;
  } else {
    out.L_r = BigFloat::nan(prec);
  }
  return out;
}

BoundsReport bounds_suite(const IntPolynomial& p, const PrecisionContext& ctx) {
  if (p.is_zero() || !p.is_monic()) throw Error("bounds_suite: monic polynomial required");
  mpfr_prec_t prec = ctx.bits;
  BoundsReport r;
  r.degree = p.degree();
  if (p.coeff(0) != 0 && cyclotomic_product_test(p)) {
    r.root_of_unity = true;
    r.M = BigFloat::of(1L, prec);
    r.house = BigFloat::of(1L, prec);
    r.weil_height = BigFloat::of(0L, prec);
    return r;
  }

  RootSet rs = find_roots(p, ctx);
  MahlerResult m = mahler_measure(rs);
  r.M = m.value;
  r.house = rs.house();
  r.weil_height = log(m.value) / static_cast<long>(p.degree());

  BigFloat one = BigFloat::of(1L, prec);
  BigFloat golden = (sqrt(BigFloat::of(5L, prec)) + 1L) / 2L;
  if (r.house > one && r.house <= golden) r.dyg = dyg(r.house);

  BigFloat th259 = theta_inv(259, prec);
  BigFloat th31 = theta_inv(31, prec);
  r.lehmer_ok = r.M >= th259 - pow2(-(ctx.bits / 4), prec);
  r.sz_ok = r.house >= one + (th259 - one) / static_cast<long>(p.degree());

  int strictly_out = 0, strictly_in = 0, on_circle = 0;
  for (const auto& root : rs.roots) {
    BigFloat a = abs(root.value);
    if (a - root.radius > one) strictly_out++;
    else if (a + root.radius < one) strictly_in++;
    else on_circle++;
  }
  r.roots_on_circle = on_circle;
  bool reciprocal = structure_flags(p).reciprocal;
  r.salem_profile = reciprocal && strictly_out == 1 && strictly_in == 1 &&
                    on_circle == static_cast<int>(p.degree()) - 2 && p.degree() >= 4;
  // dyg = 0 marks house > golden mean, where the dynamical degree (and
  // its <= 31 bound for Salem numbers) has no content
  if (r.salem_profile) r.salem_ok = r.house > th31 && (r.dyg == 0 || r.dyg <= 31);

  // totally real iff the squarefree part has as many distinct real roots
  // as its degree
  IntPolynomial sf = squarefree_part(p);
  bool totally_real = sturm_real_root_count(sf) == static_cast<long>(sf.degree());
  bool trivial_unit = (p.degree() == 1 && (p.coeff(0) == 0 || abs(p.coeff(0)) == 1));
  r.bogomolov_applicable = totally_real && !trivial_unit && p.coeff(0) != 0;
  if (r.bogomolov_applicable)
    r.bogomolov_ok = r.weil_height > log(th31) / 4L;

  if (r.dyg >= 260) {
    RoucheConstants rc = find_amax(ctx);
    BigFloat pi = BigFloat::pi(prec);
    BigFloat lhs = BigFloat::of(r.dyg, prec) * rc.S / pi +
                   rc.kappa * log(rc.kappa) * 2L /
                       (pi * sqrt(BigFloat::of(4L, prec) - rc.kappa * rc.kappa));
    r.dygdeg_ok = lhs <= BigFloat::of(static_cast<long>(p.degree()), prec);
    r.dobrowolski = rc.dobrowolski_floor - rc.slope / log(BigFloat::of(r.dyg, prec));
  }

  if (r.dyg >= 32) {
    // lenticular measure when the house is attained by a real root > 1
    bool house_is_real = false;
    for (const auto& root : rs.roots)
      if (abs(root.value.im) < root.radius && root.value.re.sign() > 0 &&
          abs(abs(root.value) - r.house) <= root.radius * 2L)
        house_is_real = true;
    if (house_is_real) {
      try {
        AlgebraicReal beta(squarefree_part(p), mpq_class(1), mpq_class(2));
        Lenticulus L = locate_lenticulus(beta, ctx);
        LenticularMeasure lm = lenticular_measure(beta.approx(prec), L, ctx);
        r.M_r = lm.M_r;
        if (!lm.L_r.is_nan()) r.L_r = lm.L_r;
      } catch (const Error&) {
        // several roots in (1,2) or no certified lenticulus: leave unset
      }
    }
  }
  return r;
}

}  // namespace lenticulus
}  // namespace parrylab
