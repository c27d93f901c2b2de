#pragma once

#include "parrylab/intpoly.hpp"

namespace parrylab {

/// Working-precision settings shared across numeric operations.
struct PrecisionContext {
  mpfr_prec_t bits = 256;
  long newton_tol_exp = 0;  // residual target 2^-(bits/2) when 0

  explicit PrecisionContext(mpfr_prec_t b = 256) : bits(b) {
    if (b < 64) throw Error("PrecisionContext: bits must be >= 64");
  }
  long tol_exp() const { return newton_tol_exp ? newton_tol_exp : -(bits / 2); }
};

/// One solved root with a certified inclusion radius.
struct CertifiedRoot {
  BigComplex value;
  BigFloat radius;       // disk around value containing exactly one root
  bool isolated = true;  // false when inclusion disks overlap
};

/// All complex roots of an integer polynomial.
struct RootSet {
  std::vector<CertifiedRoot> roots;  // size = degree(source)
  IntPolynomial source;

  /// max |root| and a bound on its error
  BigFloat house() const;
};

/// Computes all complex roots of P (degree >= 1) at ctx.bits working
/// precision: simultaneous Aberth-Ehrlich iteration started on a circle
/// with golden-angle spacing, Newton-polished, with deg*|P|/|P'|
/// inclusion radii. Restarts at doubled precision on stagnation; throws
/// after repeated non-convergence with the best residual in the message.
RootSet find_roots(const IntPolynomial& p, const PrecisionContext& ctx);

/// Mahler measure with the unit-circle policy of the root certification:
/// a root counts as inside only when |z|+radius < 1, outside only when
/// |z|-radius > 1; roots whose disk meets the circle contribute factor 1
/// and are tallied in on_circle.
struct MahlerResult {
  BigFloat value;
  BigFloat error_bound;   // propagated from certified radii
  int on_circle = 0;      // roots treated as modulus 1
  bool uncertain = false; // true when on_circle came from genuinely ambiguous disks
};
MahlerResult mahler_measure(const IntPolynomial& p, const PrecisionContext& ctx);
MahlerResult mahler_measure(const RootSet& rs);

struct HouseHeight {
  BigFloat house;
  BigFloat weil_height;  // Log M / deg
};
HouseHeight house_and_height(const IntPolynomial& p, const PrecisionContext& ctx);

/// Pierce number Delta_n = prod (alpha_i^n - 1), exact, via the resultant
/// Res(P, x^n - 1) computed over the integers (P monic).
mpz_class pierce_delta(const IntPolynomial& p, unsigned long n);

/// Exact resultant Res(P, Q) by fraction-free (Bareiss) elimination of the
/// Sylvester matrix.
mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace parrylab
