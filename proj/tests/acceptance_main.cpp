// Acceptance suite driver: runs every criterion at 256-bit precision and
// prints one pass/fail line each; exit status 1 if anything failed.
#include <cstring>
#include <iostream>

#include "parrylab/acceptance.hpp"

int main(int argc, char** argv) {
  mpfr_prec_t bits = 256;
  for (int i = 1; i < argc; i++) {
    if (std::strcmp(argv[i], "--precision") == 0 && i + 1 < argc) bits = std::atol(argv[++i]);
  }
  try {
    parrylab::PrecisionContext ctx(bits);
    auto results = parrylab::run_acceptance(ctx, &std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES present")
              << std::endl;
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
}
