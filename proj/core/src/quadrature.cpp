#include "parrylab/quadrature.hpp"

#include <map>
#include <mutex>

namespace parrylab {

namespace {

// P_k(x) and P_k'(x) by the three-term recurrence
void legendre_eval(int k, const BigFloat& x, BigFloat& p, BigFloat& dp) {
  mpfr_prec_t prec = x.prec();
  BigFloat p0 = BigFloat::of(1L, prec), p1 = x;
  for (int j = 2; j <= k; j++) {
    BigFloat p2 = (x * p1 * (2 * j - 1L) - p0 * (j - 1L)) / static_cast<long>(j);
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  // (1-x^2) P_k' = k (P_{k-1} - x P_k)
  dp = (p0 - x * p1) * static_cast<long>(k) / (BigFloat::of(1L, prec) - x * x);
}

GaussRule make_rule(int k, mpfr_prec_t prec) {
  GaussRule rule;
  BigFloat pi = BigFloat::pi(prec);
  for (int i = 1; 2 * i <= k + 1; i++) {
    // Newton from the Chebyshev-like estimate
    BigFloat x = cos(pi * (BigFloat::of(static_cast<long>(i), prec) - BigFloat::of(0.25, prec)) /
                     (BigFloat::of(static_cast<long>(k), prec) + BigFloat::of(0.5, prec)));
    BigFloat p(prec), dp(prec);
    for (int it = 0; it < 200; it++) {
      legendre_eval(k, x, p, dp);
      BigFloat step = p / dp;
      x = x - step;
      if (abs(step) < pow2(-(prec - 8), prec)) break;
    }
    legendre_eval(k, x, p, dp);
    BigFloat w = BigFloat::of(2L, prec) / ((BigFloat::of(1L, prec) - x * x) * dp * dp);
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
    if (x.sign() != 0) {
      rule.nodes.push_back(-x);
      rule.weights.push_back(w);
    }
  }
  return rule;
}

BigFloat panel(const GaussRule& rule, const RealFn& f, const BigFloat& a, const BigFloat& b) {
  mpfr_prec_t prec = a.prec();
  BigFloat half = (b - a) / 2L;
  BigFloat mid = (a + b) / 2L;
  BigFloat acc = BigFloat::of(0L, prec);
  for (size_t i = 0; i < rule.nodes.size(); i++)
    acc = acc + rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

BigFloat adapt(const GaussRule& rule, const RealFn& f, const BigFloat& a, const BigFloat& b,
               const BigFloat& whole, const BigFloat& tol, int depth) {
  BigFloat mid = (a + b) / 2L;
  BigFloat left = panel(rule, f, a, mid);
  BigFloat right = panel(rule, f, mid, b);
  BigFloat sum = left + right;
  if (abs(sum - whole) < tol || depth > 48) {
    if (depth > 48) throw Error("integrate: panel refinement did not converge");
    return sum;
  }
  BigFloat half_tol = tol / 2L;
  return adapt(rule, f, a, mid, left, half_tol, depth + 1) +
         adapt(rule, f, mid, b, right, half_tol, depth + 1);
}

}  // namespace

const GaussRule& gauss_legendre(int k, mpfr_prec_t prec) {
  static std::map<std::pair<int, mpfr_prec_t>, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(k, prec);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_rule(k, prec)).first;
  return it->second;
}

BigFloat integrate(const RealFn& f, const BigFloat& a, const BigFloat& b,
                   const BigFloat& tol, mpfr_prec_t prec) {
  const GaussRule& rule = gauss_legendre(24, prec);
  BigFloat aa = a.round_to(prec), bb = b.round_to(prec);
  BigFloat whole = panel(rule, f, aa, bb);
  return adapt(rule, f, aa, bb, whole, tol.round_to(prec), 0);
}

}  // namespace parrylab
