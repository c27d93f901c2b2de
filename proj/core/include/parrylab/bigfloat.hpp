#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace parrylab {

/// Error type for every failure the library reports deliberately.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision real number (MPFR value semantics).
///
/// Every value carries its own precision; binary operations compute at the
/// larger of the two operand precisions, rounding to nearest unless a
/// directed-rounding variant is used (see Interval).
class BigFloat {
public:
  BigFloat() { mpfr_init2(v_, 64); mpfr_set_nan(v_); }
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(double x, mpfr_prec_t prec) { BigFloat r(prec); mpfr_set_d(r.v_, x, MPFR_RNDN); return r; }
  static BigFloat of(long x, mpfr_prec_t prec) { BigFloat r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
  static BigFloat of(const mpz_class& x, mpfr_prec_t prec) { BigFloat r(prec); mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN); return r; }
  static BigFloat of(const mpq_class& x, mpfr_prec_t prec) { BigFloat r(prec); mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN); return r; }
  static BigFloat parse(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw Error("BigFloat: cannot parse '" + s + "'");
    return r;
  }
  static BigFloat pi(mpfr_prec_t prec) { BigFloat r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  static BigFloat nan(mpfr_prec_t prec) { BigFloat r(prec); mpfr_set_nan(r.v_); return r; }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  mpz_class floor_z() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
  }
  long exponent() const { return mpfr_zero_p(v_) ? LONG_MIN : mpfr_get_exp(v_); }

  std::string str(size_t digits = 0) const;

  // in-place precision change (rounds)
  BigFloat round_to(mpfr_prec_t prec) const { BigFloat r(prec); mpfr_set(r.v_, v_, MPFR_RNDN); return r; }

#define PARRYLAB_BF_BINOP(op, fn)                                            \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {        \
    BigFloat r(std::max(a.prec(), b.prec()));                                \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                         \
    return r;                                                                \
  }                                                                          \
  BigFloat& operator op##=(const BigFloat& b) {                              \
    *this = *this op b;                                                      \
    return *this;                                                            \
  }
  PARRYLAB_BF_BINOP(+, mpfr_add)
  PARRYLAB_BF_BINOP(-, mpfr_sub)
  PARRYLAB_BF_BINOP(*, mpfr_mul)
  PARRYLAB_BF_BINOP(/, mpfr_div)
#undef PARRYLAB_BF_BINOP

  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec()); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r;
  }
  friend BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend BigFloat operator/(long a, const BigFloat& b) {
    BigFloat r(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r;
  }
  friend BigFloat operator+(const BigFloat& a, long b) {
    BigFloat r(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend BigFloat operator-(const BigFloat& a, long b) {
    BigFloat r(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend BigFloat operator-(long a, const BigFloat& b) {
    BigFloat r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

private:
  mpfr_t v_;
};

#define PARRYLAB_BF_FN1(name, fn)                            \
  inline BigFloat name(const BigFloat& a) {                  \
    BigFloat r(a.prec());                                    \
    fn(r.raw(), a.raw(), MPFR_RNDN);                         \
    return r;                                                \
  }
PARRYLAB_BF_FN1(abs, mpfr_abs)
PARRYLAB_BF_FN1(sqrt, mpfr_sqrt)
PARRYLAB_BF_FN1(log, mpfr_log)
PARRYLAB_BF_FN1(exp, mpfr_exp)
PARRYLAB_BF_FN1(sin, mpfr_sin)
PARRYLAB_BF_FN1(cos, mpfr_cos)
PARRYLAB_BF_FN1(tan, mpfr_tan)
PARRYLAB_BF_FN1(asin, mpfr_asin)
PARRYLAB_BF_FN1(acos, mpfr_acos)
PARRYLAB_BF_FN1(atan, mpfr_atan)
#undef PARRYLAB_BF_FN1

inline BigFloat floor(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_floor(r.raw(), a.raw());
  return r;
}
inline BigFloat ceil(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_ceil(r.raw(), a.raw());
  return r;
}

inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat pow(const BigFloat& a, long e) {
  BigFloat r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}
inline BigFloat pow(const BigFloat& a, const BigFloat& e) {
  BigFloat r(std::max(a.prec(), e.prec()));
  mpfr_pow(r.raw(), a.raw(), e.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }
inline BigFloat max(const BigFloat& a, const BigFloat& b) { return a > b ? a : b; }

/// 2^-k at the given precision.
inline BigFloat pow2(long k, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, k, MPFR_RNDN);
  return r;
}

/// Closed real interval [lo, hi] with outward (directed) rounding.
/// Just enough interval arithmetic for certified signs and floors.
struct Interval {
  BigFloat lo, hi;

  Interval() = default;
  Interval(BigFloat l, BigFloat h) : lo(std::move(l)), hi(std::move(h)) {}
  static Interval point(const BigFloat& x) { return {x, x}; }
  static Interval of(const mpz_class& x, mpfr_prec_t prec) {
    BigFloat l(prec), h(prec);
    mpfr_set_z(l.raw(), x.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(h.raw(), x.get_mpz_t(), MPFR_RNDU);
    return {l, h};
  }
  static Interval of(const mpq_class& x, mpfr_prec_t prec) {
    BigFloat l(prec), h(prec);
    mpfr_set_q(l.raw(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(h.raw(), x.get_mpq_t(), MPFR_RNDU);
    return {l, h};
  }

  mpfr_prec_t prec() const { return std::max(lo.prec(), hi.prec()); }
  BigFloat width() const {
    BigFloat r(prec());
    mpfr_sub(r.raw(), hi.raw(), lo.raw(), MPFR_RNDU);
    return r;
  }
  BigFloat mid() const { return (lo + hi) / 2L; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  /// sign of every element, or 0 if undetermined
  int sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    BigFloat l(p), h(p);
    mpfr_add(l.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDD);
    mpfr_add(h.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDU);
    return {l, h};
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    BigFloat l(p), h(p);
    mpfr_sub(l.raw(), a.lo.raw(), b.hi.raw(), MPFR_RNDD);
    mpfr_sub(h.raw(), a.hi.raw(), b.lo.raw(), MPFR_RNDU);
    return {l, h};
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    BigFloat best_l(p), best_h(p);
    bool first = true;
    for (const BigFloat* x : {&a.lo, &a.hi})
      for (const BigFloat* y : {&b.lo, &b.hi}) {
        BigFloat l(p), h(p);
        mpfr_mul(l.raw(), x->raw(), y->raw(), MPFR_RNDD);
        mpfr_mul(h.raw(), x->raw(), y->raw(), MPFR_RNDU);
        if (first || l < best_l) best_l = l;
        if (first || h > best_h) best_h = h;
        first = false;
      }
    return {best_l, best_h};
  }
  Interval operator-() const {
    BigFloat l(prec()), h(prec());
    mpfr_neg(l.raw(), hi.raw(), MPFR_RNDD);
    mpfr_neg(h.raw(), lo.raw(), MPFR_RNDU);
    return {l, h};
  }
};

}  // namespace parrylab
