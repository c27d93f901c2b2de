#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "parrylab/bigcomplex.hpp"
#include "parrylab/bigfloat.hpp"

namespace parrylab {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first. The zero polynomial has an empty
/// coefficient vector; everything else is normalized (nonzero leading
/// coefficient).
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
  }

  /// x^k with integer coefficient a
  static IntPolynomial monomial(const mpz_class& a, size_t k) {
    std::vector<mpz_class> c(k + 1, 0);
    c[k] = a;
    return IntPolynomial(std::move(c));
  }
  static IntPolynomial constant(long a) { return IntPolynomial({a}); }

  /// G_n(X) = -1 + X + X^n
  static IntPolynomial trinomial_gn(long n);
  /// G_n*(X) = 1 + X^(n-1) - X^n
  static IntPolynomial trinomial_gn_star(long n);
  /// X^10+X^9-X^7-X^6-X^5-X^4-X^3+X+1
  static IntPolynomial lehmer();

  bool is_zero() const { return c_.empty(); }
  size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& operator[](size_t i) const { return c_[i]; }
  /// coefficient of x^i, 0 beyond the degree
  mpz_class coeff(size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const mpz_class& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const mpz_class& s);
  friend IntPolynomial operator-(const IntPolynomial& a);

  IntPolynomial derivative() const;
  /// reciprocal polynomial X^deg * P(1/X)
  IntPolynomial reciprocal() const;
  /// P(X + a)
  IntPolynomial shift_argument(const mpz_class& a) const;
  /// P(-X)
  IntPolynomial negate_argument() const;
  /// gcd of the coefficients (positive; 0 for the zero polynomial)
  mpz_class content() const;
  /// P / content, sign normalized so the leading coefficient is positive
  IntPolynomial primitive_part() const;

  mpq_class eval(const mpq_class& x) const;
  mpz_class eval(const mpz_class& x) const;
  BigFloat eval(const BigFloat& x) const;
  BigComplex eval(const BigComplex& x) const;
  /// certified interval enclosure of P([x])
  Interval eval(const Interval& x) const;

  /// exact sign of P(x) at a rational point
  int sign_at(const mpq_class& x) const;

  std::string str(const std::string& var = "x") const;

  /// Parses either a JSON-style integer array "[c0, c1, ...]" (lowest
  /// degree first) or the grammar "c0 + c1*x + ... - x^k" with '^', '*'
  /// and optional spaces.
  static IntPolynomial parse(const std::string& text);

private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

/// Structural facts read off the coefficient vector.
struct StructureFlags {
  bool monic = false;
  bool reciprocal = false;
  mpz_class height;      // max |coefficient|
  int sign_changes = 0;  // strict alternations, zeros skipped
};

/// exactpoly.structure_flags; throws on the zero polynomial.
StructureFlags structure_flags(const IntPolynomial& p);

/// Exact quotient P/Q over the integers; throws Error("not divisible")
/// if the division leaves a remainder.
IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q);

/// Division with remainder when it stays integral (q monic or divides
/// exactly step by step); returns false if a non-integral step occurs.
bool try_divide(const IntPolynomial& p, const IntPolynomial& q,
                IntPolynomial& quotient, IntPolynomial& remainder);

}  // namespace parrylab
