#pragma once

#include "parrylab/rootfinder.hpp"

namespace parrylab {
namespace trinomial {

/// Roots of G_n = -1 + z + z^n in the closed upper half-plane, indexed by
/// strictly increasing argument (z_(n/2,n) real < -1 for even n), plus
/// the real root theta_n in (0,1). Exactly floor(n/6) of the z_j lie
/// inside the unit disk.
struct IndexedTrinomialRoots {
  long n = 0;
  BigFloat theta;                // theta_n in (0,1)
  std::vector<BigComplex> z;     // z[j-1] = z_(j,n), j = 1..floor(n/2)
  std::vector<BigFloat> radius;  // certified inclusion radii
  long inside() const { return n / 6; }  // count of |z_j| < 1
};

/// theta_n by bisection of G_n on (0,1) (monotone there), to 2^-bits.
BigFloat theta_n(long n, mpfr_prec_t bits);

/// All indexed upper-half roots; per-index Newton seeded by the
/// sectorized asymptotic expansions for n >= 18, generic solver below.
/// Indexing and interlacing invariants are checked; violations throw.
IndexedTrinomialRoots gn_roots(long n, const PrecisionContext& ctx);

/// The transition sequences delimiting the bump regimes:
/// u_n = (Log n)^(3/4) (LogLog n)^(1/4), v_n = (Log n)^(5/4), eps = 1/4.
struct TransitionSequences {
  long n;
  BigFloat u, v;
  double epsilon = 0.25;
};
TransitionSequences transition_sequences(long n);

enum class Sector { theta, bump_inner, bump_outer, main };

/// Development (lowest-order) terms of the asymptotic expansion of
/// z_(j,n) (j >= 1) or theta_n (j = 0), dispatched on the angular
/// sector. The terminant order is reported as metadata, not added in.
struct AsymptoticRoot {
  BigFloat re, im, mod, arg;
  Sector sector;
  /// magnitude of the stated terminant, e.g. (1/n)(LogLog n/Log n)^2
  BigFloat terminant;
};
AsymptoticRoot asym_root(long n, long j, mpfr_prec_t bits = 128);

/// M(G_n) through the indexed-root product theta_n^-1 prod |z_j|^-2,
/// cross-checked against the generic Mahler route when the degree is
/// small enough to solve generically.
struct MahlerGn {
  BigFloat M;
  BigFloat rn;       // (M/Lambda - 1) Log n
  bool minorant_ok;  // M > Lambda - Lambda/(6 Log n)
  bool cross_checked;
};
MahlerGn mahler_gn(long n, const PrecisionContext& ctx);

/// lim M(G_n) = Lambda, by two independent routes: the Dirichlet L-series
/// exp(3 sqrt3/(4 pi) L(2, chi_3)) with Euler-Maclaurin acceleration, and
/// quadrature of the log-sine integral with the endpoint log singularity
/// split off analytically. Throws if the routes disagree beyond
/// 2^-(bits/3).
struct LambdaValue {
  BigFloat value;       // L-series route
  BigFloat quadrature;  // log-sine route
};
LambdaValue lambda_limit(const PrecisionContext& ctx);

/// Zhang-Zagier floor for theta_n^-1 - 1:
/// M(theta_n^-1 - 1) >= eta^(n+u)/Lambda (1 - 1/(6 Log n)), eta Doche's
/// constant, u = -2 iff n = 5 mod 6.
struct ZhangZagier {
  bool ok;
  BigFloat lhs, rhs;
};
ZhangZagier zhang_zagier_check(long n, const PrecisionContext& ctx);

/// L(2, chi_3) for the odd character mod 3, Euler-Maclaurin accelerated.
BigFloat dirichlet_l2_chi3(mpfr_prec_t bits);

}  // namespace trinomial
}  // namespace parrylab
