#pragma once

#include "parrylab/algebraic.hpp"

namespace parrylab {

/// T_beta^j(1) as an exact integer vector in the basis {1, beta, ...,
/// beta^(d-1)}, reduced modulo the (monic) minimal polynomial.
struct OrbitState {
  std::vector<mpz_class> vec;

  static OrbitState initial(size_t d) {
    OrbitState s;
    s.vec.assign(d, 0);
    if (d > 0) s.vec[0] = 1;
    return s;
  }
  bool is_zero() const {
    for (const auto& v : vec)
      if (v != 0) return false;
    return true;
  }
  bool operator==(const OrbitState& o) const { return vec == o.vec; }
  size_t hash() const;
};

enum class ExpansionKind { simple, eventually_periodic, undetermined };

/// Digits of d_beta(1) with their preperiod/period structure.
struct ParryExpansion {
  ExpansionKind kind = ExpansionKind::undetermined;
  std::vector<int> preperiod;  // t_1 .. t_m
  std::vector<int> period;     // t_{m+1} .. t_{m+p+1}; empty unless eventually periodic
  int alphabet_max = 1;        // t_1 = floor(beta)
  long budget_used = 0;
  bool exact = true;  // false for float-mode digits

  size_t preperiod_length() const { return preperiod.size(); }
  size_t period_length() const { return period.size(); }
  /// t_1, t_2, ..., t_n (period unrolled; zero-extended for simple)
  std::vector<int> digits(size_t n) const;
  int digit(size_t i) const;  // 1-based t_i

  /// standard notation 0.t1 t2 (t...)^w with run-length zeros 0^k
  std::string str() const;
  static ParryExpansion parse(const std::string& text);
};

/// One exact step of the beta-transformation on the orbit of 1:
/// returns the emitted digit and the next state. The floor is certified
/// by interval refinement, with exact integer detection through the
/// vector identity; throws "floor uncertain" only if the precision
/// budget is exhausted (never guesses).
std::pair<long, OrbitState> orbit_step(const AlgebraicReal& beta, const OrbitState& s);

/// Renyi expansion d_beta(1) for an algebraic integer beta > 1, exact.
/// Cycle detection is Brent's algorithm on hashed exact states; returns
/// simple(m) when the orbit hits 0, eventually_periodic on the first
/// exact state repeat, undetermined when the budget runs out.
ParryExpansion renyi_expansion(const AlgebraicReal& beta, long budget = 100000);

/// Float-mode digits for a beta given only as a high-precision real;
/// digits are floors at working precision and flagged non-exact.
ParryExpansion renyi_expansion_float(const BigFloat& beta, long n_digits);

/// Lexicographic admissibility of y against the control sequence c
/// (both finite words, zero-extended): every shift sigma^j(y), j >= 0,
/// must be strictly smaller than c.
bool admissible(const std::vector<int>& y, const std::vector<int>& c);
/// Self-admissibility of a finite word (shifts j >= 1 against the word
/// itself, zero-extended).
bool self_admissible(const std::vector<int>& y);
/// Exact self-admissibility of the full (infinite) expansion.
bool self_admissible(const ParryExpansion& e);

/// Dynamical degree: the unique n >= 3 with theta_n^-1 <= beta <
/// theta_(n-1)^-1; dyg(golden mean) = 2 by convention. The initial
/// guess floor((beta/(beta-1)) Log(beta/(beta-1))) is corrected by exact
/// sign tests of G_k*(beta).
long dyg(const AlgebraicReal& beta);
/// Float-mode variant (non-certified signs at the given precision).
long dyg(const BigFloat& beta);

struct ParryPolynomials {
  IntPolynomial parry;
  IntPolynomial complementary;  // parry / minpoly when the minpoly is supplied
};
/// Parry polynomial of the expansion (three cases: simple, eventually
/// periodic with preperiod, purely periodic). The complementary factor
/// is filled when the minimal polynomial is passed.
ParryPolynomials parry_polynomial(const ParryExpansion& e,
                                  const IntPolynomial* minpoly = nullptr);

/// theta_n^-1 as an algebraic real with its minimal polynomial
/// (X^n - X^(n-1) - 1, divided by X^2-X+1 when n = 5 mod 6).
AlgebraicReal theta_perron(long n);

enum class BlanchardClass { C1, C2, undetermined };
struct BlanchardResult {
  BlanchardClass cls;
  ParryExpansion expansion;
  long longest_zero_run = 0;  // heuristic tag for the undetermined case
};
BlanchardResult classify_blanchard(const AlgebraicReal& beta, long budget = 100000);

}  // namespace parrylab
