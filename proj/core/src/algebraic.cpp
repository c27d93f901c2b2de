#include "parrylab/algebraic.hpp"

namespace parrylab {

namespace {

// certified sign of P at a rational point: interval evaluation at
// increasing precision, exact rational Horner as the last resort
int certified_sign_at(const IntPolynomial& p, const mpq_class& x) {
  for (mpfr_prec_t prec = 128; prec <= 1024; prec *= 2) {
    Interval ix = Interval::of(x, prec);
    int s = p.eval(ix).sign();
    if (s != 0) return s;
  }
  return p.sign_at(x);
}

}  // namespace

AlgebraicReal::AlgebraicReal(IntPolynomial minpoly, mpq_class lo, mpq_class hi)
    : p_(std::move(minpoly)), s_(std::make_shared<State>()) {
  if (p_.is_zero() || p_.degree() < 1) throw Error("AlgebraicReal: needs degree >= 1");
  if (lo >= hi) throw Error("AlgebraicReal: empty interval");
  s_->lo = std::move(lo);
  s_->hi = std::move(hi);
  if (p_.degree() == 1) return;
  int sl = certified_sign_at(p_, s_->lo);
  int sh = certified_sign_at(p_, s_->hi);
  if (sl == 0 || sh == 0 || sl == sh)
    throw Error("AlgebraicReal: endpoints do not isolate a sign change");
  if (p_.degree() <= 80) {
    if (sturm_real_root_count(p_, Bound(s_->lo), Bound(s_->hi)) != 1)
      throw Error("AlgebraicReal: interval does not isolate exactly one root");
  }
}

AlgebraicReal AlgebraicReal::rational(const mpq_class& q) {
  AlgebraicReal a;
  a.p_ = IntPolynomial({mpz_class(-q.get_num()), mpz_class(q.get_den())});
  a.s_ = std::make_shared<State>();
  a.s_->lo = q - 1;
  a.s_->hi = q + 1;
  return a;
}

AlgebraicReal AlgebraicReal::golden() {
  return AlgebraicReal(IntPolynomial({-1, -1, 1}), mpq_class(1), mpq_class(2));
}

mpq_class AlgebraicReal::lo() const {
  std::lock_guard<std::mutex> lock(s_->mtx);
  return s_->lo;
}
mpq_class AlgebraicReal::hi() const {
  std::lock_guard<std::mutex> lock(s_->mtx);
  return s_->hi;
}

void AlgebraicReal::refine_to_width(const mpq_class& w) const {
  std::lock_guard<std::mutex> lock(s_->mtx);
  if (p_.degree() == 1) {
    mpq_class root(-p_[0], p_[1]);
    root.canonicalize();
    s_->lo = root;
    s_->hi = root;
    return;
  }
  int sl = 0;  // sign at lo, lazily fetched
  while (s_->hi - s_->lo > w) {
    if (sl == 0) sl = certified_sign_at(p_, s_->lo);
    mpq_class mid = (s_->lo + s_->hi) / 2;
    int sm = certified_sign_at(p_, mid);
    if (sm == 0) {  // landed exactly on the root
      s_->lo = mid;
      s_->hi = mid;
      return;
    }
    if (sm == sl) {
      s_->lo = mid;
    } else {
      s_->hi = mid;
    }
  }
}

Interval AlgebraicReal::enclosure(mpfr_prec_t bits) const {
  mpq_class w(1);
  w >>= static_cast<unsigned long>(bits);
  refine_to_width(w);
  std::lock_guard<std::mutex> lock(s_->mtx);
  mpfr_prec_t prec = bits + 16;
  Interval lo = Interval::of(s_->lo, prec);
  Interval hi = Interval::of(s_->hi, prec);
  return {lo.lo, hi.hi};
}

BigFloat AlgebraicReal::approx(mpfr_prec_t bits) const {
  return enclosure(bits).mid().round_to(bits);
}

int AlgebraicReal::sign_of(const IntPolynomial& q) const {
  if (q.is_zero()) return 0;
  {
    IntPolynomial quo, rem;
    if (try_divide(q, p_, quo, rem) && rem.is_zero()) return 0;
  }
  for (mpfr_prec_t bits = 64;; bits *= 2) {
    Interval enc = enclosure(bits);
    int s = q.eval(enc).sign();
    if (s != 0) return s;
    if (bits > 1 << 20) throw Error("sign_of: no separation (is the value a root?)");
  }
}

int AlgebraicReal::cmp(const mpq_class& q) const {
  if (is_rational()) {
    mpq_class root(-p_[0], p_[1]);
    root.canonicalize();
    return ::cmp(root, q);
  }
  int s = p_.sign_at(q);
  if (s == 0) {
    // q is a root of the minimal polynomial; equal iff it is *our* root
    std::lock_guard<std::mutex> lock(s_->mtx);
    if (q > s_->lo && q < s_->hi) return 0;
  }
  for (mpfr_prec_t bits = 64;; bits *= 2) {
    refine_to_width(mpq_class(1) >> static_cast<unsigned long>(bits));
    std::lock_guard<std::mutex> lock(s_->mtx);
    if (q <= s_->lo) {
      if (q < s_->lo || p_.sign_at(q) != 0) return 1;
      return 0;
    }
    if (q >= s_->hi) {
      if (q > s_->hi || p_.sign_at(q) != 0) return -1;
      return 0;
    }
    if (bits > 1 << 20) throw Error("cmp: refinement failed to separate");
  }
}

bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.p_.primitive_part() != b.p_.primitive_part()) {
    // different minimal polynomials can still share a root only if either
    // is reducible; the library always stores squarefree polynomials whose
    // relevant factor is irreducible, so distinct primitive parts with a
    // common root are resolved through the gcd
    IntPolynomial g = poly_gcd(a.p_, b.p_);
    if (g.degree() == 0) return false;
    mpq_class lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
    if (lo >= hi) return false;
    return sturm_real_root_count(g, Bound(lo), Bound(hi)) == 1 &&
           a.cmp(lo) > 0 && b.cmp(lo) > 0 && a.cmp(hi) < 0 && b.cmp(hi) < 0;
  }
  mpq_class lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  if (lo >= hi) return false;
  return sturm_real_root_count(a.p_, Bound(lo), Bound(hi)) >= 1;
}

}  // namespace parrylab
