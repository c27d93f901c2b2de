#pragma once

#include "parrylab/rootfinder.hpp"

namespace parrylab {

/// Sorted angular profile of a root set.
struct AngularProfile {
  std::vector<BigFloat> args;    // sorted in [0, 2 pi)
  std::vector<BigFloat> moduli;  // matching moduli
  static AngularProfile of(const RootSet& rs);
};

/// Angular discrepancy: sup over arcs of |N_F/m - arclength/(2 pi)|.
/// For a counting measure the sup is attained on arcs with endpoints at
/// the sample arguments (one-sided limits), which collapses to
/// (max_i h_i - min_i h_i) + 1/m with h_i = i/m - phi_i/(2 pi).
BigFloat circle_discrepancy(const AngularProfile& profile);
BigFloat circle_discrepancy(const RootSet& rs);

/// sigma_dis = max(m^(-1/2) Log(m+1), sqrt(-eps Log eps), sqrt(-delta Log delta)).
BigFloat belotserkovski_bound(long m, const BigFloat& epsilon, const BigFloat& delta);

}  // namespace parrylab
