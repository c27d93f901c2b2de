#include "parrylab/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace parrylab {

namespace {

unsigned long euler_phi(unsigned long m) {
  unsigned long r = m;
  for (unsigned long p = 2; p * p <= m; p++) {
    if (m % p == 0) {
      r -= r / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

}  // namespace

IntPolynomial graeffe(const IntPolynomial& p) {
  if (p.is_zero()) throw Error("graeffe: zero polynomial");
  size_t d = p.degree();
  // split into even and odd parts: P(x) = E(x^2) + x O(x^2)
  std::vector<mpz_class> e, o;
  for (size_t i = 0; i <= d; i++) {
    if (i % 2 == 0) e.push_back(p[i]);
    else o.push_back(p[i]);
  }
  IntPolynomial E{std::vector<mpz_class>(e)}, O{std::vector<mpz_class>(o)};
  IntPolynomial q = E * E - IntPolynomial::monomial(1, 1) * O * O;
  if (d % 2 == 1) q = -q;  // sign that keeps the result monic for monic input
  return q;
}

bool cyclotomic_product_test(const IntPolynomial& p) {
  if (p.is_zero() || !p.is_monic()) throw Error("cyclotomic test needs a monic polynomial");
  if (p.degree() == 0) return true;
  if (p[0] == 0) return false;  // root at 0 is not a root of unity
  // every Graeffe iterate of a cyclotomic product has unimodular roots,
  // so its coefficients stay below binomial(d, d/2); anything larger
  // certifies a root off the unit circle (the measure squares each step)
  mpz_class height_cap;
  mpz_bin_uiui(height_cap.get_mpz_t(), p.degree(), p.degree() / 2);
  IntPolynomial cur = p;
  size_t cap = 2 * p.degree() + 4;
  for (size_t i = 0; i < cap; i++) {
    if (structure_flags(cur).height > height_cap) return false;
    IntPolynomial next = graeffe(cur);
    if (next == cur) return true;
    cur = std::move(next);
  }
  return false;
}

IntPolynomial cyclotomic_polynomial(unsigned long m) {
  static std::map<unsigned long, IntPolynomial> cache;
  static std::mutex mtx;
  if (m == 0) throw Error("cyclotomic index must be >= 1");
  std::lock_guard<std::mutex> lock(mtx);
  // non-recursive so the lock can stay simple: build all divisors bottom-up
  auto build = [](auto&& self, unsigned long k) -> const IntPolynomial& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<mpz_class> xm(k + 1, 0);
    xm[0] = -1;
    xm[k] = 1;
    IntPolynomial num{std::vector<mpz_class>(xm)};
    for (unsigned long d = 1; d < k; d++) {
      if (k % d == 0) num = exact_divide(num, self(self, d));
    }
    return cache.emplace(k, std::move(num)).first->second;
  };
  return build(build, m);
}

CyclotomicStripResult strip_cyclotomic_factors(const IntPolynomial& p) {
  if (p.is_zero()) throw Error("strip_cyclotomic_factors: zero polynomial");
  CyclotomicStripResult res;
  res.quotient = p;
  // Phi_m can divide only if phi(m) <= deg; phi(m) >= sqrt(m/2) bounds the scan
  size_t d0 = p.degree();
  unsigned long mmax = 2 * static_cast<unsigned long>(d0) * static_cast<unsigned long>(d0) + 2;
  for (unsigned long m = 1; m <= mmax && res.quotient.degree() > 0; m++) {
    if (euler_phi(m) > res.quotient.degree()) continue;
    IntPolynomial phi = cyclotomic_polynomial(m);
    for (;;) {
      IntPolynomial quo, rem;
      if (!try_divide(res.quotient, phi, quo, rem) || !rem.is_zero()) break;
      res.quotient = quo;
      res.removed.push_back(m);
      if (res.quotient.degree() == 0) break;
    }
  }
  return res;
}

}  // namespace parrylab
