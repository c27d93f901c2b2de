// Micro-benchmarks for the hot paths: trinomial root indexing, the
// Aberth solver, the exact orbit, winding numbers and the quadrature
// constants. Self-timed (median of repeated runs); takes a repetition
// count as the only optional argument.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "parrylab/lenticulus.hpp"
#include "parrylab/parryupper.hpp"
#include "parrylab/table1.hpp"

using namespace parrylab;

namespace {

double time_once(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void bench(const char* name, int reps, const std::function<void()>& f) {
  std::vector<double> t;
  for (int i = 0; i < reps; i++) t.push_back(time_once(f));
  std::sort(t.begin(), t.end());
  std::printf("%-44s median %9.3f ms   min %9.3f ms   (%d runs)\n", name,
              1e3 * t[t.size() / 2], 1e3 * t.front(), reps);
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 5;
  PrecisionContext ctx(256);

  bench("gn_roots n=615 (indexed Newton)", reps, [&] { trinomial::gn_roots(615, ctx); });
  bench("gn_roots n=5000 (indexed Newton)", reps, [&] { trinomial::gn_roots(5000, ctx); });
  bench("find_roots Lehmer degree 10 (Aberth)", reps,
        [&] { find_roots(IntPolynomial::lehmer(), ctx); });
  bench("find_roots G_100 degree 100 (Aberth)", reps,
        [&] { find_roots(IntPolynomial::trinomial_gn(100), ctx); });
  bench("renyi_expansion Lehmer (exact orbit)", reps, [&] {
    AlgebraicReal beta(IntPolynomial::lehmer(), mpq_class(1), mpq_class(2));
    renyi_expansion(beta);
  });
  bench("verify_table1 (27 rows, exact)", std::max(1, reps / 2), [&] { verify_table1(); });
  bench("lambda_limit dual route, cold cache", std::max(1, reps / 2), [&] {
    PrecisionContext fresh(ctx.bits + 2);  // defeat the per-precision cache
    trinomial::lambda_limit(fresh);
  });
  bench("locate_lenticulus theta_300^-1", std::max(1, reps / 2), [&] {
    lenticulus::locate_lenticulus(theta_perron(300), ctx);
  });
  bench("pierce_delta Lehmer n=500 (resultant)", reps,
        [&] { pierce_delta(IntPolynomial::lehmer(), 500); });
  bench("winding_number Lehmer r=0.95 N=2000", std::max(1, reps / 2), [&] {
    AlgebraicReal beta(IntPolynomial::lehmer(), mpq_class(1), mpq_class(2));
    TruncatedSeries f = f_beta(beta, 2000);
    winding_number(f, BigFloat::of(0.95, 256), 512);
  });
  return 0;
}
