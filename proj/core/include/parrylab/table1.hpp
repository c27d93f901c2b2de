#pragma once

#include "parrylab/betadynamics.hpp"
#include "parrylab/rootfinder.hpp"

namespace parrylab {

/// One row of the embedded dataset of small Parry-Salem numbers and the
/// Perron numbers theta_n^-1 delimiting their intervals.
struct Table1Entry {
  int dyg;                      // column 1
  int degree;                   // column 2, deg(beta)
  const char* beta_decimal;     // column 3, as printed
  int parry_degree;             // column 4
  bool parry_degree_published;  // false where the source leaves it blank
  bool parry_irreducible;       // the "irr." mark
  const char* expansion;        // column 5, run-length grammar
  bool theta_row;               // beta = theta_dyg^-1
  const char* minpoly;          // published minimal polynomial, or ""
};

/// The embedded rows, in source order.
const std::vector<Table1Entry>& table1();

/// Two further published Salem numbers (degrees 4 and 6) with their
/// expansions; used to widen the bounds corpus.
const std::vector<Table1Entry>& salem_examples();

/// Full re-derivation of one row. The minimal polynomial is the
/// published one where available, otherwise the cyclotomic-free part of
/// the Parry polynomial built from the stored expansion; everything else
/// (digits, dyg, Parry degree, irreducibility) is recomputed from it
/// through the exact dynamics and compared field by field.
struct Table1RowCheck {
  size_t row = 0;
  bool self_admissible = false;
  bool parry_degree_match = false;
  bool minpoly_ok = false;        // derived/published minpoly divides, cofactor cyclotomic
  bool irreducible_match = false;
  bool value_match = false;       // decimal column at printed precision
  bool expansion_match = false;   // renyi_expansion(beta) reproduces the digits
  bool dyg_match = false;
  IntPolynomial minpoly;
  ParryExpansion expansion;
  std::string note;

  bool ok() const {
    return self_admissible && parry_degree_match && minpoly_ok && irreducible_match &&
           value_match && expansion_match && dyg_match;
  }
};

Table1RowCheck verify_table1_row(const Table1Entry& entry, size_t index);
std::vector<Table1RowCheck> verify_table1();

/// Minimal polynomial of a row (published or derived), with beta isolated
/// in (1, 2).
AlgebraicReal table1_beta(const Table1Entry& entry);

}  // namespace parrylab
