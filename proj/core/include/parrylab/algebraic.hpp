#pragma once

#include <memory>
#include <mutex>

#include "parrylab/intpoly.hpp"
#include "parrylab/sturm.hpp"

namespace parrylab {

/// Real algebraic number: a squarefree integer polynomial together with a
/// rational isolating interval (Sturm count 1). Refinement narrows the
/// interval without ever moving the represented root; the cached
/// enclosure is guarded so shared handles can refine concurrently.
class AlgebraicReal {
public:
  AlgebraicReal() = default;
  AlgebraicReal(IntPolynomial minpoly, mpq_class lo, mpq_class hi);

  /// the rational number q itself
  static AlgebraicReal rational(const mpq_class& q);
  /// the golden mean (1+sqrt 5)/2
  static AlgebraicReal golden(/*no args*/);

  const IntPolynomial& minpoly() const { return p_; }
  mpq_class lo() const;
  mpq_class hi() const;
  bool is_rational() const { return p_.degree() == 1; }

  /// certified enclosure of width <= 2^-bits
  Interval enclosure(mpfr_prec_t bits) const;
  /// point approximation at the given precision
  BigFloat approx(mpfr_prec_t bits) const;

  /// exact sign of Q at this number (0 iff minpoly divides Q)
  int sign_of(const IntPolynomial& q) const;

  /// exact comparison with a rational
  int cmp(const mpq_class& q) const;

  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b);

private:
  void refine_to_width(const mpq_class& w) const;

  IntPolynomial p_;  // squarefree
  struct State {
    mpq_class lo, hi;
    mutable std::mutex mtx;
  };
  std::shared_ptr<State> s_;
};

}  // namespace parrylab
