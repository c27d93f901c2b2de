#pragma once

#include "parrylab/betadynamics.hpp"
#include "parrylab/rootfinder.hpp"

namespace parrylab {

/// Truncation of f_beta(z) = -1 + sum t_i z^i to order N, with the
/// geometric tail bound r^(N+1)/(1-r) on |z| <= r < 1 (zero when the
/// series is a polynomial).
struct TruncatedSeries {
  std::vector<int> coeffs;  // c_0 = -1, c_i = t_i
  bool complete = false;    // true when f_beta is the polynomial itself
  bool exact = true;        // false when digits came from float mode

  size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  BigFloat tail_bound(const BigFloat& r) const {
    if (complete) return BigFloat::of(0L, r.prec());
    return pow(r, static_cast<long>(order()) + 1) / (BigFloat::of(1L, r.prec()) - r);
  }
  BigComplex eval(const BigComplex& z) const;
  BigComplex eval_derivative(const BigComplex& z) const;
  /// exponents of the nonzero digits (the m_q of the lacunary form)
  std::vector<long> support() const;
};

/// f_beta to order N from an exact expansion (period unrolled).
TruncatedSeries f_beta(const ParryExpansion& e, size_t N);
/// f_beta for an algebraic integer; digits from the exact orbit.
TruncatedSeries f_beta(const AlgebraicReal& beta, size_t N, long budget = 100000);

/// Verifies the lacunarity forced by the dynamical degree: coefficients
/// begin -1, 1, 0^(n-2), 1 and consecutive nonzero exponents differ by
/// at least n-1. Throws on violation.
void check_gap_structure(const TruncatedSeries& f, long dyg_n);

/// f_beta as a rational function: numerator / denominator with
/// numerator = -P*_(beta,P) and denominator 1 - z^(p+1) (nonsimple) or 1
/// (simple). The pair is cross-checked exactly against the digit-unrolled
/// series.
struct ZetaRationalForm {
  IntPolynomial numerator;
  IntPolynomial denominator;
  IntPolynomial parry;  // the Parry polynomial itself
};
ZetaRationalForm zeta_rational_form(const ParryExpansion& e);

/// Coefficients b_0..b_N of U_beta = P* / f_beta via the convolution
/// recurrence, then the exact check (U*f)_k = P*_k for k <= N.
/// P is the (monic) minimal polynomial of beta.
std::vector<mpz_class> u_beta_coeffs(const IntPolynomial& p, const TruncatedSeries& f, size_t N);

/// Taylor coefficient c_(beta,m) of f_beta at 1/beta: truncated binomial
/// sum plus a certified geometric tail bound.
struct TaylorCoeff {
  BigFloat value;
  BigFloat error;
};
TaylorCoeff taylor_c_m(const AlgebraicReal& beta, long m, const PrecisionContext& ctx,
                       long budget = 100000);

/// Zero count of f_beta in the annulus 1/beta <= |z| <= r by winding
/// numbers of the truncated series (outer circle minus a circle just
/// inside 1/beta), with the Solomyak density majorant
/// c_(beta) Log(1-r)/Log(r). Throws "contour too close" when the sampled
/// minimum of |f| does not clear 4x the tail bound.
struct AnnulusCount {
  long count = 0;
  BigFloat bound;
};
AnnulusCount annulus_zero_count(const AlgebraicReal& beta, const BigFloat& r, int samples,
                                const PrecisionContext& ctx, long budget = 100000);

/// Winding number of the truncated series along |z| = rho (sample count
/// doubles until two consecutive counts agree and min |f| > 4 tail).
long winding_number(const TruncatedSeries& f, const BigFloat& rho, int samples);

}  // namespace parrylab
