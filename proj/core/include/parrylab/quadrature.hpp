#pragma once

#include <functional>

#include "parrylab/bigfloat.hpp"

namespace parrylab {

using RealFn = std::function<BigFloat(const BigFloat&)>;

/// Adaptive Gauss-Legendre integration of f over [a, b] to absolute
/// tolerance tol (panels split until two refinement levels agree).
/// The integrand must be smooth on the open interval; endpoint
/// singularities are the caller's job (split or substitute first).
BigFloat integrate(const RealFn& f, const BigFloat& a, const BigFloat& b,
                   const BigFloat& tol, mpfr_prec_t prec);

/// Nodes and weights of the k-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<BigFloat> nodes, weights;
};
const GaussRule& gauss_legendre(int k, mpfr_prec_t prec);

}  // namespace parrylab
