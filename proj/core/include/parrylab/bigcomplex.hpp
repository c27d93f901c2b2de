#pragma once

#include "parrylab/bigfloat.hpp"

namespace parrylab {

/// Complex number over BigFloat.
struct BigComplex {
  BigFloat re, im;

  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  static BigComplex of(double r, double i, mpfr_prec_t prec) {
    return {BigFloat::of(r, prec), BigFloat::of(i, prec)};
  }
  static BigComplex polar(const BigFloat& rho, const BigFloat& phi) {
    return {rho * cos(phi), rho * sin(phi)};
  }

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_nan() const { return re.is_nan() || im.is_nan(); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& b) { return {a.re * b, a.im * b}; }
  friend BigComplex operator/(const BigComplex& a, const BigFloat& b) { return {a.re / b, a.im / b}; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  BigComplex& operator+=(const BigComplex& b) { *this = *this + b; return *this; }
  BigComplex& operator-=(const BigComplex& b) { *this = *this - b; return *this; }
  BigComplex conj() const { return {re, -im}; }
};

inline BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigFloat abs(const BigComplex& z) {
  BigFloat r(z.prec());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

inline BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}
inline BigComplex log(const BigComplex& z) {  // principal branch
  return {log(abs(z)), arg(z)};
}

/// z^e by binary powering (e >= 0).
inline BigComplex pow(const BigComplex& z, unsigned long e) {
  BigComplex acc(BigFloat::of(1L, z.prec()), BigFloat::of(0L, z.prec()));
  BigComplex base = z;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace parrylab
