#pragma once

#include <optional>

#include "parrylab/parryupper.hpp"
#include "parrylab/trinomial.hpp"

namespace parrylab {
namespace lenticulus {

/// kappa(X, a) of the Rouche condition, on [-1,1] x [1, inf).
BigFloat kappa(const BigFloat& X, const BigFloat& a);

/// The constants of the optimal Rouche circles. kappa satisfies
/// kappa^2 - 6 kappa + 1 = 0 (kappa = 3 - 2 sqrt2); a_max is recovered
/// from exp(pi/a_max) = (kappa+1)/(4 kappa).
struct RoucheConstants {
  BigFloat a_max;
  BigFloat kappa;             // kappa(1, a_max)
  BigFloat S;                 // 2 arcsin(kappa/2)
  BigFloat c;                 // -Log kappa
  BigFloat exp_term;          // e^(-2c)/(1 - e^(-c)) = kappa^2/(1-kappa)
  BigFloat dobrowolski_floor; // Lambda_r mu_r
  BigFloat slope;             // Lambda_r mu_r S / (2 pi)
  BigFloat kappa_maximized;   // raw golden-section value, for cross-check
};
RoucheConstants find_amax(const PrecisionContext& ctx);

/// Lambda_r (log-sine over [0, S], log endpoint split analytically) and
/// mu_r (F-integrand, sqrt endpoint singularity removed by t = sqrt(S-x)).
struct LimitConstants {
  BigFloat lambda_r, mu_r, product;
};
LimitConstants limit_constants(const PrecisionContext& ctx);

/// J_n, H_n, c_n, the refined radii parameters a_(j,n) and t_(0,n).
struct LenticularIndices {
  long n = 0;
  long J = 0;          // largest j with |-1+z_j|/|z_j| <= kappa
  long J_asymptotic;   // the closed-form estimate, for the +-1 check
  long H = 0;          // floor formula (needs n >= 260)
  BigFloat c_n;        // |z_(J,n)| = 1 - c_n/n
  BigFloat t_0n;       // (LogLog n / Log n)^2
  BigFloat v_n;
  /// a_(j,n) for j = 1..J; a_max below ceil(v_n), refined quadratic
  /// solution plus tail above
  std::vector<BigFloat> a_jn;
};
LenticularIndices lenticular_indices(long n, const trinomial::IndexedTrinomialRoots& roots,
                                     const PrecisionContext& ctx);

enum class RoucheMode { standard, first_root, external_contour };

/// Sampled Rouche margin min(|G_n(z)| - |z|^(2n-1)/(1-|z|^(n-1))) on the
/// j-th circle (or the external contour when mode says so); the sample
/// count is doubled once and the worse margin kept.
struct RoucheMargin {
  BigFloat margin;
  bool pass;
};
RoucheMargin rouche_verify(long n, long j, int samples, const PrecisionContext& ctx,
                           RoucheMode mode = RoucheMode::standard);

/// One certified lenticular zero.
struct LenticulusEntry {
  long j;
  BigComplex z_jn;     // trinomial root, the disk center
  BigComplex omega;    // located zero of f_beta
  BigFloat radius;     // certified error radius of omega
  BigFloat rouche_margin;
  bool certified;
  BigFloat identification_residual;  // |P*(omega)|, when a minpoly is known
  BigFloat identification_bound;     // certified residual bound
};

struct Lenticulus {
  long n = 0;  // dynamical degree
  bool first_root_only = false;
  bool exact_digits = true;
  std::vector<LenticulusEntry> entries;  // j = 0 (theta / 1/beta) first
  size_t certified_count() const {
    size_t c = 0;
    for (const auto& e : entries)
      if (e.certified) c++;
    return c;
  }
};

/// Locates the lenticular zeroes of f_beta by Newton from the z_(j,n),
/// certifying each by a winding number 1 on a small circle (with a
/// tail-bound safety margin), and identifying them against the minimal
/// polynomial of beta when available. Entries that fail any step are
/// marked uncertified, never dropped.
Lenticulus locate_lenticulus(const AlgebraicReal& beta, const PrecisionContext& ctx,
                             int samples = 512, long budget = 100000);
/// Float-mode variant for beta given as a high-precision real (digits
/// flagged non-exact, no identification step).
Lenticulus locate_lenticulus(const BigFloat& beta, const PrecisionContext& ctx,
                             int samples = 512);

/// M_r from the certified entries, and the four-term minorant L_r
/// (coarse radii below v_n, refined a_(j,n) radii above).
struct LenticularMeasure {
  BigFloat M_r;
  BigFloat L_r;
  size_t excluded = 0;  // uncertified entries left out of the product
};
LenticularMeasure lenticular_measure(const BigFloat& beta, const Lenticulus& L,
                                     const PrecisionContext& ctx);

/// The universal-bound verification for one polynomial.
struct BoundsReport {
  size_t degree = 0;
  bool root_of_unity = false;  // cyclotomic product: bounds vacuous
  BigFloat M, house, weil_height;
  long dyg = 0;  // 0 when house > golden mean
  /// lenticular measure and its minorant, when dyg >= 32 and the house
  /// is attained by a real positive root (M >= M_r >= exp(L_r) then)
  std::optional<BigFloat> M_r, L_r;
  bool lehmer_ok = false;
  bool sz_ok = false;
  bool salem_profile = false;
  bool salem_ok = false;
  bool bogomolov_applicable = false;
  bool bogomolov_ok = false;
  std::optional<bool> dygdeg_ok;        // only when dyg >= 260
  std::optional<BigFloat> dobrowolski;  // the floor, when dyg >= 260
  int roots_on_circle = 0;
};
BoundsReport bounds_suite(const IntPolynomial& p, const PrecisionContext& ctx);

/// theta_n^-1 at working precision (from G_n*, never a hardcoded decimal).
BigFloat theta_inv(long n, mpfr_prec_t bits);

}  // namespace lenticulus
}  // namespace parrylab
