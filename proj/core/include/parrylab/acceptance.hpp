#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "parrylab/rootfinder.hpp"

namespace parrylab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full verification suite (one entry per criterion) at the
/// given precision. When progress is non-null, one pass/fail line per
/// criterion is streamed to it as results come in.
std::vector<CriterionResult> run_acceptance(const PrecisionContext& ctx,
                                            std::ostream* progress = nullptr);

}  // namespace parrylab
