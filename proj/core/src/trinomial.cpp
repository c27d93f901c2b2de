#include "parrylab/trinomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "parrylab/betadynamics.hpp"
#include "parrylab/quadrature.hpp"

namespace parrylab {
namespace trinomial {

namespace {

// G_n(z) and G_n'(z) = 1 + n z^(n-1), sparse evaluation
BigComplex gn_eval(long n, const BigComplex& z) {
  BigComplex zn = pow(z, static_cast<unsigned long>(n));
  BigComplex r = z + zn;
  r.re = r.re - 1L;
  return r;
}
BigComplex gn_deriv(long n, const BigComplex& z) {
  BigComplex r = pow(z, static_cast<unsigned long>(n - 1)) * BigFloat::of(n, z.prec());
  r.re = r.re + 1L;
  return r;
}

BigFloat gn_eval_real(long n, const BigFloat& x) {
  return pow(x, n) + x - 1L;
}

}  // namespace

BigFloat theta_n(long n, mpfr_prec_t bits) {
  if (n < 2) throw Error("theta_n: n >= 2");
  mpfr_prec_t prec = bits + 16;
  BigFloat lo = BigFloat::of(0L, prec), hi = BigFloat::of(1L, prec);
  // G_n is strictly increasing on (0,1): G(0) = -1, G(1) = 1
  for (mpfr_prec_t i = 0; i < bits + 8; i++) {
    BigFloat mid = (lo + hi) / 2L;
    if (gn_eval_real(n, mid).sign() < 0) lo = mid;
    else hi = mid;
  }
  return ((lo + hi) / 2L).round_to(bits);
}

TransitionSequences transition_sequences(long n) {
  if (n < 18) throw Error("transition sequences need n >= 18");
  mpfr_prec_t prec = 128;
  BigFloat ln = log(BigFloat::of(n, prec));
  BigFloat lln = log(ln);
  TransitionSequences t{n, BigFloat(prec), BigFloat(prec), 0.25};
  t.u = pow(ln, BigFloat::of(0.75, prec)) * pow(lln, BigFloat::of(0.25, prec));
  t.v = pow(ln, BigFloat::of(1.25, prec));
  return t;
}

namespace {

BigFloat lambda_n_dev(long n, mpfr_prec_t prec) {
  BigFloat ln = log(BigFloat::of(n, prec));
  BigFloat lln = log(ln);
  return (lln / ln) / (BigFloat::of(1L, prec) + 1L / ln);
}

BigFloat theta_dev(long n, mpfr_prec_t prec) {
  // D(theta_n) = 1 - (Log n/n)[1 - ((n - Log n)/(n Log n + n - Log n))
  //                   (LogLog n - n Log(1 - Log n/n) - Log n)]
  BigFloat nn = BigFloat::of(n, prec);
  BigFloat ln = log(nn);
  BigFloat lln = log(ln);
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat frac = (nn - ln) / (nn * ln + nn - ln);
  BigFloat inner = lln - nn * log(one - ln / nn) - ln;
  return one - (ln / nn) * (one - frac * inner);
}

}  // namespace

AsymptoticRoot asym_root(long n, long j, mpfr_prec_t bits) {
  if (n < 18) throw Error("below asymptotic regime");
  if (j < 0) throw Error("asym_root: j >= 0");
  mpfr_prec_t prec = bits;
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat pi = BigFloat::pi(prec);
  BigFloat nn = BigFloat::of(n, prec);
  BigFloat ln = log(nn);
  BigFloat lln = log(ln);
  AsymptoticRoot out{BigFloat(prec), BigFloat(prec), BigFloat(prec), BigFloat(prec),
                     Sector::main, BigFloat(prec)};
  out.terminant = (lln / ln) * (lln / ln) / nn;

  if (j == 0) {
    out.sector = Sector::theta;
    out.re = theta_dev(n, prec);
    out.im = BigFloat::of(0L, prec);
    out.mod = out.re;
    out.arg = BigFloat::of(0L, prec);
    return out;
  }

  TransitionSequences t = transition_sequences(n);
  BigFloat jj = BigFloat::of(j, prec);
  if (jj > t.v.round_to(prec)) {
    // Main sector. The development is evaluated at the order-0 phase
    // solution of z^n = 1 - z on the unit circle,
    //   phi_0 = (4 pi j - pi)/(2n - 1),
    // not at 2 pi j/n: the j-th root's argument carries the rotation
    // (arg - pi)/(2n), and only on this base do the correction terms
    // reach the stated (LogLog n/Log n)^2/n order (the n = 615 anchors
    // arg z_(17,615) = 0.17129 pin this down).
    out.sector = Sector::main;
    BigFloat phi0 = pi * (4 * j - 1L) / (2 * n - 1L);
    BigFloat x = phi0 / 2L;
    BigFloat ls = log(BigFloat::of(2L, prec) * sin(x));
    out.arg = (pi * (4 * j - 1L) / 2L - ls * (cos(x) / sin(x)) / (nn * 2L)) /
              (nn - BigFloat::of(0.5, prec));
    out.mod = one + ls / nn + (lln / ln) * (lln / ln) / (nn * 2L);
    out.re = out.mod * cos(out.arg);
    out.im = out.mod * sin(out.arg);
    return out;
  }

  BigFloat lam = lambda_n_dev(n, prec);
  BigFloat td = theta_dev(n, prec);
  BigFloat y = jj / ln;  // the bump variable j / Log n
  BigFloat pi2 = pi * pi;
  if (jj > t.u.round_to(prec)) {
    // outer bump regime
    out.sector = Sector::bump_outer;
    out.re = td + (pi2 * 2L / nn) * y * y *
                      (one + (pi2 * 2L / 3L) * y * y * (one + lam));
    out.im = (pi * 2L * ln / nn) * y *
             (one - (one - (pi2 * 4L / 3L) * y * y * (one - (one - lam) / ln)) / ln);
    out.terminant = pow(y, 5) / nn;
  } else {
    // inner bump regime
    out.sector = Sector::bump_inner;
    out.re = td + (pi2 * 2L / nn) * y * y * (one + lam * 2L);
    out.im = (pi * 2L * ln / nn) * y * (one - (one + lam) / ln);
    out.terminant = y * (lln / ln) * (lln / ln) / (nn * ln);
  }
  BigComplex z(out.re, out.im);
  out.mod = abs(z);
  out.arg = arg(z);
  return out;
}

namespace {

// Outside the bump the roots sit near the unit circle; the exact phase
// relation n*phi = 2 pi j + phi/2 - pi/2 (from z^n = 1 - z on |z| = 1)
// gives phi = (4 pi j - pi)/(2n - 1), and |z| = 1 + Log(2 sin(phi/2))/n.
BigComplex seed_circle(long n, long j, mpfr_prec_t prec) {
  BigFloat pi = BigFloat::pi(prec);
  BigFloat phi = pi * (4 * j - 1L) / (2 * n - 1L);
  BigFloat rho = BigFloat::of(1L, prec) +
                 log(sin(phi / 2L) * 2L) / BigFloat::of(n, prec);
  return BigComplex::polar(rho, phi);
}

// In and near the bump write z = theta_n e^(zeta/n); the j-th root has
// zeta near 2 pi i j and solves (1-s) e^(zeta/n) + s e^zeta = 1 with
// s = 1 - theta_n. Newton in the zeta plane is well conditioned there
// (branches are 2 pi apart).
BigComplex solve_bump_root(long n, long j, const BigFloat& theta, mpfr_prec_t prec) {
  BigFloat pi = BigFloat::pi(prec);
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat s = one - theta;
  BigFloat ns = s * n;
  BigComplex two_pi_ij(BigFloat::of(0L, prec), pi * 2L * j);
  BigComplex inner = BigComplex(one, BigFloat::of(0L, prec)) -
                     two_pi_ij * ((one - s) / ns);
  BigComplex zeta = two_pi_ij + log(inner);
  for (int it = 0; it < 80; it++) {
    BigComplex ezn = exp(zeta / BigFloat::of(n, prec));
    BigComplex ez = exp(zeta);
    BigComplex f = ezn * (one - s) + ez * s;
    f.re = f.re - 1L;
    BigComplex df = ezn * ((one - s) / n) + ez * s;
    BigComplex step = f / df;
    zeta -= step;
    if (abs(step) < pow2(-(prec * 3 / 4), prec)) break;
  }
  return exp(zeta / BigFloat::of(n, prec)) * theta;
}

}  // namespace

IndexedTrinomialRoots gn_roots(long n, const PrecisionContext& ctx) {
  if (n < 2) throw Error("gn_roots: n >= 2");
  mpfr_prec_t prec = ctx.bits;
  IndexedTrinomialRoots out;
  out.n = n;
  out.theta = theta_n(n, prec);

  long half = n / 2;
  out.z.reserve(static_cast<size_t>(half));
  out.radius.reserve(static_cast<size_t>(half));

  if (n < 18) {
    RootSet rs = find_roots(IntPolynomial::trinomial_gn(n), ctx);
    std::vector<std::pair<BigFloat, size_t>> by_arg;
    for (size_t i = 0; i < rs.roots.size(); i++) {
      const auto& r = rs.roots[i];
      BigFloat tiny = r.radius * 4L + pow2(-(ctx.bits / 2), prec);
      bool realish = abs(r.value.im) < tiny;
      if (realish && r.value.re.sign() > 0) continue;  // theta_n
      if (realish) {
        // the even-n real root < -1 occurs once; pin it onto the axis
        by_arg.emplace_back(BigFloat::pi(prec), i);
        continue;
      }
      if (r.value.im.sign() < 0) continue;
      by_arg.emplace_back(arg(r.value), i);
    }
    std::sort(by_arg.begin(), by_arg.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [a, i] : by_arg) {
      BigComplex v = rs.roots[i].value;
      if (a == BigFloat::pi(prec)) v.im = BigFloat::of(0L, prec);
      out.z.push_back(v);
      out.radius.push_back(rs.roots[i].radius);
    }
  } else {
    BigFloat tol = pow2(-(ctx.bits * 3 / 4), prec);
    double bump_limit = 3.0 * std::log(static_cast<double>(n)) + 2.0;
    for (long j = 1; j <= (n % 2 == 0 ? half - 1 : half); j++) {
      BigComplex z = (j <= static_cast<long>(bump_limit))
                         ? solve_bump_root(n, j, out.theta, prec)
                         : seed_circle(n, j, prec);
      for (int it = 0; it < 80; it++) {
        BigComplex g = gn_eval(n, z);
        BigComplex dg = gn_deriv(n, z);
        BigComplex step = g / dg;
        z -= step;
        if (abs(step) < tol) break;
      }
      BigFloat rad = abs(gn_eval(n, z)) * n / abs(gn_deriv(n, z));
      out.z.push_back(z);
      out.radius.push_back(rad);
    }
    if (n % 2 == 0) {
      // real root < -1, G_n decreasing there
      BigFloat lo = BigFloat::of(-1.5, prec), hi = BigFloat::of(-1L, prec);
      for (mpfr_prec_t i = 0; i < ctx.bits + 8; i++) {
        BigFloat mid = (lo + hi) / 2L;
        if (gn_eval_real(n, mid).sign() > 0) lo = mid;
        else hi = mid;
      }
      out.z.push_back(BigComplex((lo + hi) / 2L, BigFloat::of(0L, prec)));
      out.radius.push_back(hi - lo);
    }
  }

  if (static_cast<long>(out.z.size()) != half)
    throw Error("gn_roots: wrong root count (solver precision insufficient)");

  // invariants: argument strictly increasing, floor(n/6) of the roots
  // strictly inside the unit disk with Re > 1/2, the rest not strictly
  // inside, moduli increasing up to floor(n/6), theta below all of them
  BigFloat prev_arg = BigFloat::of(0L, prec);
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat half_bf = BigFloat::of(0.5, prec);
  long n6 = n / 6;
  BigFloat prev_mod(prec);
  for (long j = 1; j <= half; j++) {
    const BigComplex& z = out.z[static_cast<size_t>(j - 1)];
    const BigFloat& rad = out.radius[static_cast<size_t>(j - 1)];
    BigFloat a = arg(z);
    if (!(a > prev_arg)) throw Error("gn_roots: argument ordering violated");
    prev_arg = a;
    BigFloat m = abs(z);
    if (j <= n6) {
      if (!(m + rad < one) || !(z.re - rad > half_bf))
        throw Error("gn_roots: inside-disk indexation violated");
      if (j >= 2 && !(m > prev_mod))
        throw Error("gn_roots: modulus monotonicity violated");
    } else if (m + rad < one) {
      throw Error("gn_roots: unexpected root inside the unit disk");
    }
    prev_mod = m;
    if (j == 1 && !(out.theta < m)) throw Error("gn_roots: theta_n not smallest");
  }
  return out;
}

namespace {

std::vector<mpq_class> bernoulli_numbers(size_t count) {
  // B_0 .. B_(count-1) by the defining recurrence
  std::vector<mpq_class> b(count);
  for (size_t m = 0; m < count; m++) {
    if (m == 0) {
      b[0] = 1;
      continue;
    }
    mpq_class acc = 0;
    for (size_t j = 0; j < m; j++) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), m + 1, j);
      acc += mpq_class(c) * b[j];
    }
    b[m] = -acc / mpz_class(m + 1);
  }
  return b;
}

// Hurwitz zeta(2, a) by Euler-Maclaurin
BigFloat hurwitz_zeta2(const mpq_class& a, mpfr_prec_t prec) {
  const long K = 64, M = 64;
  static std::vector<mpq_class> bern = bernoulli_numbers(2 * M + 2);
  BigFloat sum = BigFloat::of(0L, prec);
  BigFloat af = BigFloat::of(a, prec);
  for (long k = 0; k < K; k++) {
    BigFloat t = af + BigFloat::of(k, prec);
    sum = sum + 1L / (t * t);
  }
  BigFloat t = af + BigFloat::of(K, prec);
  sum = sum + 1L / t;                 // (a+K)^(1-s)/(s-1), s = 2
  sum = sum + 1L / (t * t * 2L);      // (a+K)^(-s)/2
  BigFloat tp = 1L / (t * t * t);     // (a+K)^(-3)
  BigFloat t2 = 1L / (t * t);
  for (long j = 1; j <= M; j++) {
    sum = sum + BigFloat::of(bern[static_cast<size_t>(2 * j)], prec) * tp;
    tp = tp * t2;
  }
  return sum;
}

}  // namespace

BigFloat dirichlet_l2_chi3(mpfr_prec_t bits) {
  mpfr_prec_t prec = bits + 32;
  BigFloat z1 = hurwitz_zeta2(mpq_class(1, 3), prec);
  BigFloat z2 = hurwitz_zeta2(mpq_class(2, 3), prec);
  return ((z1 - z2) / 9L).round_to(bits);
}

LambdaValue lambda_limit(const PrecisionContext& ctx) {
  static std::map<mpfr_prec_t, LambdaValue> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(ctx.bits);
    if (it != cache.end()) return it->second;
  }
  mpfr_prec_t prec = ctx.bits + 32;
  BigFloat one = BigFloat::of(1L, prec);

  // route 1: Dirichlet L-series
  BigFloat l2 = dirichlet_l2_chi3(prec);
  BigFloat pi = BigFloat::pi(prec);
  BigFloat lam_series = exp(sqrt(BigFloat::of(3L, prec)) * 3L / (pi * 4L) * l2);

  // route 2: log-sine integral, log singularity at 0 split analytically:
  // int_0^d Log(2 sin(x/2)) = d(Log d - 1) + int_0^d Log(2 sin(x/2)/x)
  BigFloat delta = BigFloat::of(1L, prec) / 1000L;
  BigFloat tol = pow2(-(ctx.bits / 2) - 16, prec);
  RealFn smooth = [&](const BigFloat& x) {
    return log(sin(x / 2L) * 2L / x);
  };
  RealFn logsine = [&](const BigFloat& x) {
    return log(sin(x / 2L) * 2L);
  };
  BigFloat i0 = delta * (log(delta) - one) + integrate(smooth, BigFloat::of(0L, prec), delta, tol, prec);
  BigFloat i1 = integrate(logsine, delta, pi / 3L, tol, prec);
  BigFloat lam_quad = exp(-(i0 + i1) / pi);

  if (abs(lam_series - lam_quad) > pow2(-(ctx.bits / 3), prec))
    throw Error("lambda_limit: L-series and quadrature routes disagree");

  LambdaValue out{lam_series.round_to(ctx.bits), lam_quad.round_to(ctx.bits)};
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(ctx.bits, out);
  return out;
}

MahlerGn mahler_gn(long n, const PrecisionContext& ctx) {
  if (n < 2) throw Error("mahler_gn: n >= 2");
  mpfr_prec_t prec = ctx.bits;
  IndexedTrinomialRoots roots = gn_roots(n, ctx);
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat m = one / roots.theta;
  for (long j = 1; j <= roots.inside(); j++) {
    BigFloat a = abs(roots.z[static_cast<size_t>(j - 1)]);
    m = m / (a * a);
  }
  MahlerGn out{m, BigFloat(prec), false, false};

  if (n <= 120) {
    MahlerResult generic = mahler_measure(IntPolynomial::trinomial_gn(n), ctx);
    if (abs(generic.value - m) > pow2(-(ctx.bits / 4), prec))
      throw Error("mahler_gn: root-product route disagrees with the generic Mahler route");
    out.cross_checked = true;
  }

  BigFloat lam = lambda_limit(ctx).value;
  BigFloat ln = log(BigFloat::of(n, prec));
  out.rn = (m / lam - one) * ln;
  out.minorant_ok = m > lam - lam / (ln * 6L);
  return out;
}

ZhangZagier zhang_zagier_check(long n, const PrecisionContext& ctx) {
  if (n < 2) throw Error("zhang_zagier_check: n >= 2");
  mpfr_prec_t prec = ctx.bits;
  AlgebraicReal theta_inv_n = theta_perron(n);
  IntPolynomial shifted = theta_inv_n.minpoly().shift_argument(1);  // minpoly of theta_n^-1 - 1
  MahlerResult m = mahler_measure(shifted, ctx);
  BigFloat eta = BigFloat::parse("1.2817770214", prec);
  long u = (n % 6 == 5) ? -2 : 0;
  BigFloat lam = lambda_limit(ctx).value;
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat rhs = pow(eta, n + u) / lam * (one - one / (log(BigFloat::of(n, prec)) * 6L));
  return {m.value >= rhs, m.value, rhs};
}

}  // namespace trinomial
}  // namespace parrylab
