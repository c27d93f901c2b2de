#pragma once

#include "parrylab/intpoly.hpp"

namespace parrylab {

/// One Graeffe root-squaring step: the monic polynomial whose roots are
/// the squares of the roots of P (P monic).
IntPolynomial graeffe(const IntPolynomial& p);

/// True iff every root of P is a root of unity (P monic, P(0) != 0).
/// Graeffe iterates of a cyclotomic product reach a fixed point; for any
/// other monic polynomial the Mahler measure squares each step and the
/// iterates never stabilize. Iteration cap 2*degree.
bool cyclotomic_product_test(const IntPolynomial& p);

/// m-th cyclotomic polynomial, exact.
IntPolynomial cyclotomic_polynomial(unsigned long m);

/// Divides out every cyclotomic factor (with multiplicity). Returns the
/// cyclotomic-free quotient and the product of removed factors as the
/// list of indices m (with repetition).
struct CyclotomicStripResult {
  IntPolynomial quotient;
  std::vector<unsigned long> removed;  // cyclotomic indices, with multiplicity
};
CyclotomicStripResult strip_cyclotomic_factors(const IntPolynomial& p);

}  // namespace parrylab
