#include "parrylab/equidist.hpp"

#include <algorithm>
#include <numeric>

namespace parrylab {

AngularProfile AngularProfile::of(const RootSet& rs) {
  if (rs.roots.empty()) throw Error("angular profile of an empty root set");
  mpfr_prec_t prec = rs.roots[0].value.prec();
  BigFloat two_pi = BigFloat::pi(prec) * 2L;
  AngularProfile p;
  std::vector<std::pair<BigFloat, BigFloat>> v;
  for (const auto& r : rs.roots) {
    BigFloat a = arg(r.value);
    if (a.sign() < 0) a = a + two_pi;
    v.emplace_back(a, abs(r.value));
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [a, m] : v) {
    p.args.push_back(a);
    p.moduli.push_back(m);
  }
  return p;
}

BigFloat circle_discrepancy(const AngularProfile& profile) {
  size_t m = profile.args.size();
  if (m == 0) throw Error("circle_discrepancy: empty profile");
  mpfr_prec_t prec = profile.args[0].prec();
  BigFloat two_pi = BigFloat::pi(prec) * 2L;
  BigFloat inv_m = BigFloat::of(1L, prec) / static_cast<long>(m);
  BigFloat hmin(prec), hmax(prec);
  for (size_t i = 0; i < m; i++) {
    BigFloat h = inv_m * static_cast<long>(i + 1) - profile.args[i] / two_pi;
    if (i == 0) {
      hmin = h;
      hmax = h;
    } else {
      hmin = min(hmin, h);
      hmax = max(hmax, h);
    }
  }
  return hmax - hmin + inv_m;
}

BigFloat circle_discrepancy(const RootSet& rs) {
  return circle_discrepancy(AngularProfile::of(rs));
}

BigFloat belotserkovski_bound(long m, const BigFloat& epsilon, const BigFloat& delta) {
  if (m < 1) throw Error("belotserkovski_bound: m >= 1");
  mpfr_prec_t prec = std::max(epsilon.prec(), delta.prec());
  BigFloat half = BigFloat::of(0.5, prec);
  if (epsilon.sign() < 0 || delta.sign() < 0 || epsilon > half || delta > half)
    throw Error("belotserkovski_bound: eps, delta must lie in [0, 1/2]");
  BigFloat mm = BigFloat::of(m, prec);
  BigFloat s = log(mm + 1L) / sqrt(mm);
  if (epsilon.sign() > 0) s = max(s, sqrt(-(epsilon * log(epsilon))));
  if (delta.sign() > 0) s = max(s, sqrt(-(delta * log(delta))));
  return s;
}

}  // namespace parrylab
