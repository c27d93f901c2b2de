#include "parrylab/rootfinder.hpp"

#include <algorithm>
#include <cmath>

namespace parrylab {

namespace {

struct EvalPair {
  BigComplex p, dp;
};

EvalPair eval_with_derivative(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
  mpfr_prec_t prec = z.prec();
  BigComplex p(prec), dp(prec);
  for (size_t i = coeffs.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + coeffs[i];
  }
  return {p, dp};
}

std::vector<BigComplex> to_complex(const IntPolynomial& poly, mpfr_prec_t prec) {
  std::vector<BigComplex> c;
  c.reserve(poly.coeffs().size());
  for (const auto& v : poly.coeffs())
    c.emplace_back(BigFloat::of(v, prec), BigFloat::of(0L, prec));
  return c;
}

}  // namespace

BigFloat RootSet::house() const {
  if (roots.empty()) throw Error("house of an empty root set");
  BigFloat h = abs(roots[0].value);
  for (const auto& r : roots) h = max(h, abs(r.value));
  return h;
}

RootSet find_roots(const IntPolynomial& p, const PrecisionContext& ctx) {
  if (p.is_zero() || p.degree() < 1) throw Error("find_roots: degree must be >= 1");

  // pull out roots at the origin first
  size_t zero_roots = 0;
  std::vector<mpz_class> cc = p.coeffs();
  while (cc[zero_roots] == 0) zero_roots++;
  IntPolynomial q(std::vector<mpz_class>(cc.begin() + static_cast<long>(zero_roots), cc.end()));

  mpfr_prec_t prec = ctx.bits;
  const int max_restarts = 3;
  std::string last_residual;

  for (int attempt = 0; attempt <= max_restarts; attempt++, prec *= 2) {
    size_t d = q.degree();
    RootSet rs;
    rs.source = p;
    for (size_t i = 0; i < zero_roots; i++)
      rs.roots.push_back({BigComplex(prec), BigFloat::of(0L, prec), true});
    if (d == 0) return rs;

    auto coeffs = to_complex(q, prec);
    BigFloat pi = BigFloat::pi(prec);

    // start on the circle of the geometric mean of the root moduli,
    // golden-angle spacing to break symmetry
    BigFloat r0(prec);
    {
      BigFloat a0 = abs(BigFloat::of(q[0], prec));
      BigFloat ad = abs(BigFloat::of(q.leading(), prec));
      r0 = exp(log(a0 / ad) / static_cast<long>(d));
      if (r0.to_double() < 1e-8) r0 = BigFloat::of(0.5, prec);
    }
    BigFloat golden = (sqrt(BigFloat::of(5L, prec)) - 1L) / 2L;
    std::vector<BigComplex> z;
    z.reserve(d);
    for (size_t i = 0; i < d; i++) {
      BigFloat frac = BigFloat::of(static_cast<long>(i), prec) * golden;
      frac = frac - floor(frac);
      BigFloat ang = frac * 2L * pi + BigFloat::of(0.3, prec);
      // radial jitter: a start with every point exactly on one circle is
      // an invariant set for reciprocal polynomials
      double jit = 0.2 * std::sin(2.4 * static_cast<double>(i) + 0.7) +
                   0.1 * std::cos(0.9 * static_cast<double>(i));
      BigFloat rad = r0 * exp(BigFloat::of(jit, prec));
      z.push_back(BigComplex::polar(rad, ang));
    }

    BigFloat tol = pow2(-(ctx.bits * 3 / 4), prec);
    bool converged = false;
    BigFloat residual_norm(prec);
    for (int iter = 0; iter < 60 + static_cast<int>(d); iter++) {
      BigFloat maxstep = BigFloat::of(0L, prec);
      for (size_t i = 0; i < d; i++) {
        EvalPair e = eval_with_derivative(coeffs, z[i]);
        if (norm(e.p).sign() == 0) continue;
        BigComplex newton = e.p / e.dp;
        BigComplex sum(prec);
        for (size_t j = 0; j < d; j++) {
          if (j == i) continue;
          BigComplex diff = z[i] - z[j];
          BigFloat n = norm(diff);
          if (n.sign() == 0) {
            // coincident iterates: nudge
            diff = BigComplex(pow2(-(prec / 2), prec), pow2(-(prec / 2), prec));
            n = norm(diff);
          }
          sum += diff.conj() / n;
        }
        BigComplex denom = BigComplex(BigFloat::of(1L, prec), BigFloat::of(0L, prec)) - newton * sum;
        BigComplex w = (norm(denom).sign() == 0) ? newton : newton / denom;
        z[i] -= w;
        BigFloat step = abs(w) / max(BigFloat::of(1L, prec), abs(z[i]));
        maxstep = max(maxstep, step);
      }
      if (maxstep < tol) {
        converged = true;
        break;
      }
      residual_norm = maxstep;
    }

    if (!converged) {
      last_residual = residual_norm.str(6);
      continue;
    }

    // Newton polish at full precision
    for (size_t i = 0; i < d; i++) {
      for (int it = 0; it < 4; it++) {
        EvalPair e = eval_with_derivative(coeffs, z[i]);
        if (norm(e.dp).sign() == 0) break;
        z[i] -= e.p / e.dp;
      }
    }

    // certified inclusion radii: deg * |P(z)| / |P'(z)|
    bool radii_ok = true;
    std::vector<CertifiedRoot> out;
    BigFloat limit = pow2(-(ctx.bits / 4), prec);
    for (size_t i = 0; i < d; i++) {
      EvalPair e = eval_with_derivative(coeffs, z[i]);
      BigFloat dpn = abs(e.dp);
      if (dpn.sign() == 0) {
        radii_ok = false;
        break;
      }
      BigFloat rad = abs(e.p) * static_cast<long>(d) / dpn;
      if (!(rad < limit)) {
        radii_ok = false;
        break;
      }
      out.push_back({z[i], rad, true});
    }
    if (!radii_ok) {
      last_residual = "radius above 2^-(bits/4)";
      continue;
    }

    // pairwise isolation; overlapping disks are flagged, never dropped
    for (size_t i = 0; i < d; i++)
      for (size_t j = i + 1; j < d; j++) {
        BigFloat dist = abs(out[i].value - out[j].value);
        if (!(dist > out[i].radius + out[j].radius)) {
          out[i].isolated = false;
          out[j].isolated = false;
        }
      }

    std::sort(out.begin(), out.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
      if (a.value.re != b.value.re) return a.value.re < b.value.re;
      return a.value.im < b.value.im;
    });
    for (auto& r : out) rs.roots.push_back(std::move(r));
    return rs;
  }
  throw Error("find_roots: no convergence, best residual " + last_residual);
}

MahlerResult mahler_measure(const RootSet& rs) {
  mpfr_prec_t prec = rs.roots.empty() ? 64 : rs.roots[0].value.prec();
  MahlerResult m;
  m.value = abs(BigFloat::of(rs.source.leading(), prec));
  m.error_bound = BigFloat::of(0L, prec);
  BigFloat one = BigFloat::of(1L, prec);
  for (const auto& r : rs.roots) {
    BigFloat a = abs(r.value);
    if (a - r.radius > one) {
      m.value = m.value * a;
      // relative error per factor is at most radius/(|z|-radius)
      m.error_bound = m.error_bound + r.radius / (a - r.radius);
    } else if (a + r.radius < one) {
      // inside; contributes 1
    } else {
      m.on_circle++;
      if (!r.isolated || r.radius > pow2(-16, prec)) m.uncertain = true;
      m.error_bound = m.error_bound + r.radius;
    }
  }
  m.error_bound = m.error_bound * m.value * 2L;
  return m;
}

MahlerResult mahler_measure(const IntPolynomial& p, const PrecisionContext& ctx) {
  if (p.is_zero()) throw Error("mahler_measure: zero polynomial");
  if (p.degree() == 0) {
    MahlerResult m;
    m.value = abs(BigFloat::of(p.leading(), ctx.bits));
    m.error_bound = BigFloat::of(0L, ctx.bits);
    return m;
  }
  return mahler_measure(find_roots(p, ctx));
}

HouseHeight house_and_height(const IntPolynomial& p, const PrecisionContext& ctx) {
  if (p.is_zero() || p.degree() < 1) throw Error("house_and_height: degree must be >= 1");
  RootSet rs = find_roots(p, ctx);
  MahlerResult m = mahler_measure(rs);
  HouseHeight h;
  h.house = rs.house();
  h.weil_height = log(m.value) / static_cast<long>(p.degree());
  return h;
}

mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  size_t n = p.degree(), m = q.degree();
  if (n == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.leading().get_mpz_t(), m);
    return r;
  }
  if (m == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), q.leading().get_mpz_t(), n);
    return r;
  }
  size_t dim = n + m;
  // Sylvester matrix, rows of q-shifts then p-shifts (highest degree first)
  std::vector<std::vector<mpz_class>> a(dim, std::vector<mpz_class>(dim, 0));
  for (size_t i = 0; i < m; i++)
    for (size_t j = 0; j <= n; j++) a[i][i + j] = p[n - j];
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j <= m; j++) a[m + i][i + j] = q[m - j];

  // Bareiss fraction-free elimination
  mpz_class denom = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < dim; k++) {
    if (a[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < dim && a[piv][k] == 0) piv++;
      if (piv == dim) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < dim; i++) {
      for (size_t j = k + 1; j < dim; j++) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
      }
      a[i][k] = 0;
    }
    denom = a[k][k];
  }
  return sign > 0 ? a[dim - 1][dim - 1] : mpz_class(-a[dim - 1][dim - 1]);
}

mpz_class pierce_delta(const IntPolynomial& p, unsigned long n) {
  if (p.is_zero() || !p.is_monic()) throw Error("pierce_delta: polynomial must be monic");
  if (n < 1) throw Error("pierce_delta: n must be >= 1");
  size_t d = p.degree();
  if (d == 0) return 1;
  // x^n mod P by repeated squaring, exact
  auto mod_p = [&](const IntPolynomial& f) {
    IntPolynomial quo, rem;
    if (!try_divide(f, p, quo, rem)) throw Error("pierce_delta: internal division");
    return rem;
  };
  IntPolynomial acc({1});
  IntPolynomial base = mod_p(IntPolynomial::monomial(1, 1));
  unsigned long e = n;
  while (e) {
    if (e & 1) acc = mod_p(acc * base);
    base = mod_p(base * base);
    e >>= 1;
  }
  IntPolynomial s = acc - IntPolynomial({1});
  if (s.is_zero()) return 0;
  // P monic: Res(P, S) = prod S(alpha_i)
  return resultant(p, s);
}

}  // namespace parrylab
