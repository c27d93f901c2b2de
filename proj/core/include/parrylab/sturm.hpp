#pragma once

#include <optional>

#include "parrylab/intpoly.hpp"

namespace parrylab {

/// Endpoint of a root-counting interval; nullopt means -inf / +inf.
using Bound = std::optional<mpq_class>;

/// Sturm chain of P (content-stripped signed pseudo-remainders, exact).
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

/// Number of distinct real roots of P in (a, b]; open at -inf / +inf.
/// P must be squarefree on the interval (divide by gcd(P, P') first).
long sturm_real_root_count(const IntPolynomial& p, const Bound& a, const Bound& b);

/// Distinct real roots in the whole line.
long sturm_real_root_count(const IntPolynomial& p);

/// gcd(P, Q) over Z[x], primitive with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q);

/// P / gcd(P, P'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

}  // namespace parrylab
