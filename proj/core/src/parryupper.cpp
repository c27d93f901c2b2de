#include "parrylab/parryupper.hpp"

#include <algorithm>
#include <cmath>

namespace parrylab {

BigComplex TruncatedSeries::eval(const BigComplex& z) const {
  mpfr_prec_t prec = z.prec();
  BigComplex acc(prec);
  BigComplex zc(prec);  // z^q accumulator over the support
  BigFloat one = BigFloat::of(1L, prec);
  acc.re = BigFloat::of(coeffs.empty() ? 0L : static_cast<long>(coeffs[0]), prec);
  unsigned long last = 0;
  BigComplex power(one, BigFloat::of(0L, prec));
  for (size_t i = 1; i < coeffs.size(); i++) {
    if (coeffs[i] == 0) continue;
    power = power * pow(z, static_cast<unsigned long>(i) - last);
    last = static_cast<unsigned long>(i);
    acc += power * BigFloat::of(static_cast<long>(coeffs[i]), prec);
  }
  return acc;
}

BigComplex TruncatedSeries::eval_derivative(const BigComplex& z) const {
  mpfr_prec_t prec = z.prec();
  BigComplex acc(prec);
  BigFloat one = BigFloat::of(1L, prec);
  unsigned long last = 1;
  BigComplex power(one, BigFloat::of(0L, prec));  // z^(q-1)
  for (size_t i = 1; i < coeffs.size(); i++) {
    if (coeffs[i] == 0) continue;
    power = power * pow(z, static_cast<unsigned long>(i) - last);
    last = static_cast<unsigned long>(i);
    acc += power * BigFloat::of(static_cast<long>(coeffs[i]) * static_cast<long>(i), prec);
  }
  return acc;
}

std::vector<long> TruncatedSeries::support() const {
  std::vector<long> s;
  for (size_t i = 1; i < coeffs.size(); i++)
    if (coeffs[i] != 0) s.push_back(static_cast<long>(i));
  return s;
}

TruncatedSeries f_beta(const ParryExpansion& e, size_t N) {
  TruncatedSeries f;
  f.exact = e.exact;
  if (e.kind == ExpansionKind::undetermined && N > e.preperiod.size())
    throw Error("f_beta: requested order beyond computed digits");
  if (e.kind == ExpansionKind::simple && N >= e.preperiod.size()) {
    f.complete = true;
    N = e.preperiod.size();
  }
  f.coeffs.assign(N + 1, 0);
  f.coeffs[0] = -1;
  for (size_t i = 1; i <= N; i++) f.coeffs[i] = e.digit(i);
  return f;
}

TruncatedSeries f_beta(const AlgebraicReal& beta, size_t N, long budget) {
  ParryExpansion e = renyi_expansion(beta, budget);
  return f_beta(e, N);
}

void check_gap_structure(const TruncatedSeries& f, long dyg_n) {
  if (f.coeffs.empty() || f.coeffs[0] != -1) throw Error("f_beta must start with -1");
  auto sup = f.support();
  if (sup.empty()) throw Error("f_beta has no nonzero digit");
  if (sup[0] != 1) throw Error("f_beta: t_1 must be 1 for beta <= golden mean");
  if (sup.size() >= 2 && sup[1] != dyg_n)
    throw Error("f_beta: second exponent must equal the dynamical degree");
  for (size_t q = 1; q + 1 < sup.size(); q++) {
    if (sup[q + 1] - sup[q] < dyg_n - 1) throw Error("f_beta: gap below dyg-1");
  }
}

ZetaRationalForm zeta_rational_form(const ParryExpansion& e) {
  if (e.kind == ExpansionKind::undetermined) throw Error("no rational form");
  ZetaRationalForm z;
  z.parry = parry_polynomial(e).parry;
  z.numerator = -z.parry.reciprocal();
  if (e.kind == ExpansionKind::simple) {
    z.denominator = IntPolynomial({1});
  } else {
    size_t L = e.period_length();
    std::vector<mpz_class> den(L + 1, 0);
    den[0] = 1;
    den[L] = -1;
    z.denominator = IntPolynomial(std::move(den));
  }
  // exact cross-check against the digit-unrolled series:
  //   numerator = f * denominator  coefficientwise
  size_t guard = z.numerator.degree() + 2 * std::max<size_t>(1, e.period_length()) + 2;
  TruncatedSeries f = f_beta(e, guard);
  auto fc = [&](size_t i) -> long {
    return i < f.coeffs.size() ? f.coeffs[i] : 0;  // complete series end in zeros
  };
  for (size_t k = 0; k <= guard; k++) {
    mpz_class conv = 0;
    for (size_t j = 0; j <= std::min(k, z.denominator.degree()); j++)
      conv += z.denominator.coeff(j) * fc(k - j);
    if (conv != z.numerator.coeff(k))
      throw Error("zeta rational form mismatch at order " + std::to_string(k));
  }
  return z;
}

std::vector<mpz_class> u_beta_coeffs(const IntPolynomial& p, const TruncatedSeries& f, size_t N) {
  if (p.is_zero() || !p.is_monic()) throw Error("u_beta_coeffs: minimal polynomial must be monic");
  IntPolynomial q = p.reciprocal();  // constant term +1
  if (q.coeff(0) != 1) throw Error("u_beta_coeffs: reciprocal polynomial must have constant 1");
  if (f.coeffs.size() <= N && !f.complete)
    throw Error("u_beta_coeffs: series shorter than requested order");

  auto t = [&](size_t i) -> long {
    return i < f.coeffs.size() ? f.coeffs[i] : 0;
  };
  std::vector<mpz_class> b(N + 1);
  b[0] = -1;
  for (size_t r = 1; r <= N; r++) {
    mpz_class acc = -t(r) - q.coeff(r);
    for (size_t j = 1; j < r; j++)
      if (t(r - j) != 0) acc += b[j] * t(r - j);
    b[r] = acc;
  }
  // exact verification (U f)_k = (P*)_k for k <= N
  for (size_t k = 0; k <= N; k++) {
    mpz_class conv = 0;
    for (size_t j = 0; j <= k; j++)
      if (t(k - j) != 0) conv += b[j] * t(k - j);
    if (conv != q.coeff(k))
      throw Error("u_beta_coeffs: product check failed at order " + std::to_string(k));
  }
  return b;
}

TaylorCoeff taylor_c_m(const AlgebraicReal& beta, long m, const PrecisionContext& ctx, long budget) {
  if (m < 1) throw Error("taylor_c_m: m must be >= 1");
  mpfr_prec_t prec = ctx.bits;
  ParryExpansion e = renyi_expansion(beta, budget);
  BigFloat x = BigFloat::of(1L, prec) / beta.approx(prec);  // 1/beta < 1

  // choose N so the ratio (n+1)/(n+1-m) * x stays below rho < 1
  size_t base = (e.kind == ExpansionKind::simple)
                    ? e.preperiod.size()
                    : e.preperiod.size() + 4 * e.period.size() + 64;
  size_t N = std::max<size_t>(base, static_cast<size_t>(8 * m) + 64);

  BigFloat val = BigFloat::of(0L, prec);
  BigFloat binom = BigFloat::of(1L, prec);  // C(n, m) tracked incrementally from n = m
  BigFloat xpow = BigFloat::of(1L, prec);   // x^(n-m)
  for (size_t n = static_cast<size_t>(m); n <= N; n++) {
    if (n > static_cast<size_t>(m)) {
      binom = binom * static_cast<long>(n) / static_cast<long>(n - m);
      xpow = xpow * x;
    }
    int tn = e.digit(n);
    if (tn != 0) val = val + binom * xpow * tn;
  }
  // tail: terms decrease by factor rho = (N+1)/(N+1-m) * x once N >> m
  BigFloat rho = x * static_cast<long>(N + 1) / static_cast<long>(N + 1 - m);
  if (!(rho < 1.0)) throw Error("taylor_c_m: truncation too short");
  BigFloat next = binom * static_cast<long>(N + 1) / static_cast<long>(N + 1 - m) * xpow * x *
                  static_cast<long>(e.alphabet_max);
  TaylorCoeff out;
  out.value = val;
  out.error = next / (BigFloat::of(1L, prec) - rho);
  if (e.kind == ExpansionKind::simple && N >= e.preperiod.size())
    out.error = BigFloat::of(0L, prec);
  return out;
}

long winding_number(const TruncatedSeries& f, const BigFloat& rho, int samples) {
  mpfr_prec_t prec = rho.prec();
  BigFloat pi = BigFloat::pi(prec);
  BigFloat two_pi = pi * 2L;
  BigFloat tail = f.tail_bound(rho);
  auto sup = f.support();

  long prev_count = 0;
  bool have_prev = false;
  for (int K = samples; K <= samples * 64; K *= 2) {
    // incremental evaluation along the circle: v_q = rho^q e^(2 pi i k q / K)
    std::vector<BigComplex> val;
    std::vector<BigComplex> rot;
    val.reserve(sup.size());
    rot.reserve(sup.size());
    for (long q : sup) {
      val.push_back(BigComplex(pow(rho, q), BigFloat::of(0L, prec)));
      BigFloat ang = two_pi * q / static_cast<long>(K);
      rot.push_back(BigComplex(cos(ang), sin(ang)));
    }
    BigFloat total = BigFloat::of(0L, prec);
    BigFloat prev_arg(prec);
    BigFloat first_arg(prec);
    BigFloat min_abs(prec);
    for (int k = 0; k < K; k++) {
      BigComplex fz(BigFloat::of(-1L, prec), BigFloat::of(0L, prec));
      for (size_t q = 0; q < sup.size(); q++) {
        int c = f.coeffs[static_cast<size_t>(sup[q])];
        fz += (c == 1) ? val[q] : val[q] * BigFloat::of(static_cast<long>(c), prec);
        val[q] = val[q] * rot[q];
      }
      BigFloat a = abs(fz);
      if (k == 0 || a < min_abs) min_abs = a;
      BigFloat ar = arg(fz);
      if (k == 0) {
        first_arg = ar;
      } else {
        BigFloat d = ar - prev_arg;
        if (d > pi) d = d - two_pi;
        if (d < -pi) d = d + two_pi;
        total = total + d;
      }
      prev_arg = ar;
    }
    {
      BigFloat d = first_arg - prev_arg;
      if (d > pi) d = d - two_pi;
      if (d < -pi) d = d + two_pi;
      total = total + d;
    }
    if (!(min_abs > tail * 4L)) {
      throw Error("contour too close");
    }
    BigFloat w = total / two_pi;
    long count = std::lround(w.to_double());
    if (have_prev && count == prev_count) return count;
    prev_count = count;
    have_prev = true;
  }
  throw Error("winding_number: sample doubling did not stabilize");
}

AnnulusCount annulus_zero_count(const AlgebraicReal& beta, const BigFloat& r, int samples,
                                const PrecisionContext& ctx, long budget) {
  mpfr_prec_t prec = ctx.bits;
  BigFloat b = beta.approx(prec);
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat inv_b = one / b;
  if (r < inv_b || !(r < one)) throw Error("annulus_zero_count: need 1/beta <= r < 1");

  // theta_6^{-1} bound for the validity of the majorant
  BigFloat theta6inv = theta_perron(6).approx(prec);
  if (!(b < theta6inv)) throw Error("annulus_zero_count: majorant needs beta < theta_6^{-1}");

  ParryExpansion e = renyi_expansion(beta, budget);
  long n = dyg(beta);
  size_t N = std::max<size_t>(1000, 20 * static_cast<size_t>(n) *
                                        std::max<size_t>(1, e.period_length()));
  // keep the tail below any realistic sampled minimum on |z| = r
  while (!e.period.empty()) {
    BigFloat t = pow(r, static_cast<long>(N) + 1) / (one - r);
    if (t < pow2(-64, prec)) break;
    N *= 2;
    if (N > (1u << 24)) break;
  }
  TruncatedSeries f = f_beta(e, N);

  long outer = winding_number(f, r.round_to(prec), samples);
  BigFloat inner_r = inv_b - BigFloat::of(0.01, prec);
  long inner = inner_r.sign() > 0 ? winding_number(f, inner_r, samples) : 0;

  AnnulusCount out;
  out.count = outer - inner;
  // c_(beta) = [Log(1-1/b) - Log(2-1/b)] / [((b-1)/Log(b-1) + 1) Log(1-1/b)]
  BigFloat l1 = log(one - inv_b);
  BigFloat l2 = log(BigFloat::of(2L, prec) - inv_b);
  BigFloat c = (l1 - l2) / (((b - one) / log(b - one) + one) * l1);
  out.bound = c * log(one - r) / log(r);
  return out;
}

}  // namespace parrylab
