#include "parrylab/sturm.hpp"

namespace parrylab {

namespace {

// Pseudo-remainder of a by b scaled by a positive power of |lc(b)| so the
// computation stays in Z[x] and the sign of the true remainder is kept.
IntPolynomial signed_prem(const IntPolynomial& a, const IntPolynomial& b) {
  size_t db = b.degree();
  if (db == 0) return IntPolynomial();  // constant divisor, remainder 0
  IntPolynomial r = a;
  const mpz_class& lb = b.leading();
  mpz_class lb2 = lb * lb;  // positive multiplier
  while (!r.is_zero() && r.degree() >= db) {
    size_t dr = r.degree();
    // r <- lb^2 * r - (lb * r_lead) * x^(dr-db) * b  keeps signs of the
    // remainder sequence consistent with the rational Sturm chain
    IntPolynomial t = IntPolynomial::monomial(r.leading() * lb, dr - db) * b;
    r = r * lb2 - t;
    if (!r.is_zero() && r.degree() >= dr && dr >= db) {
      // degree must strictly drop; guards against pathological input
      throw Error("sturm: pseudo-division failed to reduce degree");
    }
  }
  return r;
}

int sign_at_bound(const IntPolynomial& p, const Bound& x, int side) {
  // side: -1 for -inf, +1 for +inf when x is nullopt
  if (x) return p.sign_at(*x);
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (side < 0 && p.degree() % 2 == 1) s = -s;
  return s;
}

long sign_variations(const std::vector<IntPolynomial>& chain, const Bound& x, int side) {
  long v = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = sign_at_bound(q, x, side);
    if (s != 0) {
      if (prev != 0 && s != prev) v++;
      prev = s;
    }
  }
  return v;
}

}  // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  if (p.is_zero()) throw Error("sturm: zero polynomial");
  std::vector<IntPolynomial> chain;
  chain.push_back(p.primitive_part());
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive_part());
  while (true) {
    const IntPolynomial& s0 = chain[chain.size() - 2];
    const IntPolynomial& s1 = chain[chain.size() - 1];
    if (s1.degree() == 0) break;
    IntPolynomial r = signed_prem(s0, s1);
    if (r.is_zero()) break;
    // next element is -rem, content stripped but sign preserved
    mpz_class g = r.content();
    std::vector<mpz_class> c;
    c.reserve(r.coeffs().size());
    for (const auto& v : r.coeffs()) c.push_back(mpz_class(-v / g));
    chain.emplace_back(std::move(c));
  }
  return chain;
}

long sturm_real_root_count(const IntPolynomial& p, const Bound& a, const Bound& b) {
  if (p.is_zero()) throw Error("sturm: zero polynomial");
  if (a && b && *a >= *b) throw Error("sturm: empty interval");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return sign_variations(chain, a, -1) - sign_variations(chain, b, +1);
}

long sturm_real_root_count(const IntPolynomial& p) {
  return sturm_real_root_count(p, std::nullopt, std::nullopt);
}

IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero()) return q.primitive_part();
  if (q.is_zero()) return p.primitive_part();
  IntPolynomial a = p.primitive_part(), b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = signed_prem(a, b);
    a = b;
    b = r.is_zero() ? IntPolynomial() : r.primitive_part();
    if (!b.is_zero() && b.degree() >= a.degree() && a.degree() > 0)
      throw Error("poly_gcd: no degree progress");
  }
  return a.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw Error("squarefree_part: zero polynomial");
  if (p.degree() == 0) return IntPolynomial({1});
  IntPolynomial g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  return exact_divide(p.primitive_part() * g.leading(), g).primitive_part();
}

}  // namespace parrylab
