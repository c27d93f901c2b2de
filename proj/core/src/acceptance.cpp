#include "parrylab/acceptance.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "parrylab/equidist.hpp"
#include "parrylab/lenticulus.hpp"
#include "parrylab/parryupper.hpp"
#include "parrylab/table1.hpp"

namespace parrylab {

namespace {

using lenticulus::bounds_suite;
using lenticulus::find_amax;
using lenticulus::lenticular_indices;
using lenticulus::lenticular_measure;
using lenticulus::limit_constants;
using lenticulus::locate_lenticulus;
using lenticulus::rouche_verify;
using lenticulus::theta_inv;

struct Runner {
  const PrecisionContext& ctx;
  std::ostream* out;
  std::vector<CriterionResult> results;

  void report(int id, const std::string& name, bool pass, const std::string& detail) {
    results.push_back({id, name, pass, detail});
    if (out != nullptr)
      *out << (pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << detail
           << std::endl;
  }

  void run(int id, const std::string& name,
           const std::function<std::pair<bool, std::string>()>& f) {
    try {
      auto [pass, detail] = f();
      report(id, name, pass, detail);
    } catch (const std::exception& e) {
      report(id, name, false, std::string("exception: ") + e.what());
    }
  }
};

double dd(const BigFloat& x) { return x.to_double(); }

bool within(const BigFloat& value, double target, double tol) {
  return std::fabs(dd(value) - target) <= tol;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const PrecisionContext& ctx, std::ostream* progress) {
  Runner r{ctx, progress, {}};

  r.run(1, "Table-1 reproduction", [&] {
    auto checks = verify_table1();
    size_t ok = 0;
    std::string bad;
    for (const auto& c : checks) {
      if (c.ok()) ok++;
      else bad += " row " + std::to_string(c.row);
    }
    std::ostringstream os;
    os << ok << "/" << checks.size()
       << " rows reproduced exactly (expansion, dyg, Parry degree, irreducibility)";
    if (!bad.empty()) os << "; failing:" << bad;
    return std::make_pair(ok == checks.size(), os.str());
  });

  r.run(2, "M(G_2), M(G_5), minimum at n = 5", [&] {
    trinomial::MahlerGn g2 = trinomial::mahler_gn(2, ctx);
    trinomial::MahlerGn g5 = trinomial::mahler_gn(5, ctx);
    bool ok = within(g2.M, 1.6180339887498949, 1e-9) && within(g5.M, 1.3247179572447460, 1e-9);
    double m5 = dd(g5.M);
    long argmin = 5;
    double best = m5;
    for (long n = 3; n <= 100; n++) {
      if (n == 5) continue;
      double m = dd(trinomial::mahler_gn(n, ctx).M);
      if (m < best) {
        best = m;
        argmin = n;
      }
      ok = ok && m > m5;
    }
    std::ostringstream os;
    os << "M(G_2) = " << g2.M.str(12) << ", M(G_5) = " << g5.M.str(12)
       << ", min over 3..100 at n = " << argmin;
    return std::make_pair(ok && argmin == 5, os.str());
  });

  r.run(3, "Lambda dual route and r(n) window", [&] {
    trinomial::LambdaValue lv = trinomial::lambda_limit(ctx);
    bool ok = within(lv.value, 1.38135, 5e-5) && dd(abs(lv.value - lv.quadrature)) < 1e-12;
    std::ostringstream os;
    os << "Lambda = " << lv.value.str(10) << ", |series - quadrature| = "
       << abs(lv.value - lv.quadrature).str(3);
    for (long n : {50L, 100L, 500L, 1000L}) {
      double rn = dd(trinomial::mahler_gn(n, ctx).rn);
      ok = ok && std::fabs(rn) <= 1.0 / 6.0 + 0.05;
      os << "; r(" << n << ") = " << rn;
    }
    return std::make_pair(ok, os.str());
  });

  r.run(4, "Rouche constants", [&] {
    lenticulus::RoucheConstants rc = find_amax(ctx);
    BigFloat disc = rc.kappa * rc.kappa - rc.kappa * 6L + 1L;
    bool ok = within(rc.kappa, 0.171573, 1e-6) && dd(abs(disc)) <= 1e-10 &&
              std::fabs(dd(rc.kappa_maximized) - dd(rc.kappa)) <= 1e-6 &&
              within(rc.a_max, 5.87433, 1e-4) && within(rc.S, 0.171784, 1e-6) &&
              within(rc.c, 1.76274, 1e-5) && within(rc.exp_term, 0.0355344, 1e-6);
    std::ostringstream os;
    os << "kappa = " << rc.kappa.str(9) << ", a_max = " << rc.a_max.str(9) << ", S = "
       << rc.S.str(9) << ", c = " << rc.c.str(9) << ", e^-2c/(1-e^-c) = " << rc.exp_term.str(9);
    return std::make_pair(ok, os.str());
  });

  r.run(5, "lenticular limit constants", [&] {
    lenticulus::LimitConstants lc = limit_constants(ctx);
    lenticulus::RoucheConstants rc = find_amax(ctx);
    bool ok = within(lc.lambda_r, 1.16302, 1e-5) && within(lc.mu_r, 0.992337, 1e-5) &&
              within(lc.product, 1.15411, 1e-5) && within(rc.slope, 0.0315536, 1e-6);
    std::ostringstream os;
    os << "Lambda_r = " << lc.lambda_r.str(9) << ", mu_r = " << lc.mu_r.str(9)
       << ", product = " << lc.product.str(9) << ", slope = " << rc.slope.str(9);
    return std::make_pair(ok, os.str());
  });

  r.run(6, "J_615 = 17, H_615 = 12, asymptotic J within 1", [&] {
    bool ok = true;
    std::ostringstream os;
    for (long n : {260L, 615L, 1000L, 5000L}) {
      auto li = lenticular_indices(n, trinomial::gn_roots(n, ctx), ctx);
      if (n == 615) {
        ok = ok && li.J == 17 && li.H == 12;
        os << "J_615 = " << li.J << ", H_615 = " << li.H << "; ";
      }
      ok = ok && std::labs(li.J - li.J_asymptotic) <= 1;
      os << "J_" << n << " = " << li.J << " (formula " << li.J_asymptotic << ") ";
    }
    return std::make_pair(ok, os.str());
  });

  r.run(7, "asymptotic expansion accuracy", [&] {
    bool ok = true;
    std::ostringstream os;
    for (long n : {200L, 615L, 1000L}) {
      auto roots = trinomial::gn_roots(n, ctx);
      auto ts = trinomial::transition_sequences(n);
      double ln = std::log(double(n)), lln = std::log(ln);
      double tol = 2.0 * (lln / ln) * (lln / ln) / double(n);
      double worst = 0.0;
      long lo = static_cast<long>(std::ceil(ts.v.to_double())) + 1;
      for (long j = lo; j <= n / 4; j++) {
        trinomial::AsymptoticRoot a = trinomial::asym_root(n, j);
        const BigComplex& z = roots.z[static_cast<size_t>(j - 1)];
        double err = std::hypot(dd(z.re) - dd(a.re), dd(z.im) - dd(a.im));
        worst = std::max(worst, err);
      }
      trinomial::AsymptoticRoot a0 = trinomial::asym_root(n, 0);
      worst = std::max(worst, std::fabs(dd(a0.re) - dd(roots.theta)));
      ok = ok && worst <= tol;
      os << "n = " << n << ": worst |z - D| = " << worst << " vs " << tol << "; ";
    }
    return std::make_pair(ok, os.str());
  });

  r.run(8, "Rouche margins positive", [&] {
    bool ok = true;
    double worst615 = 1e9, worst_first = 1e9;
    auto li = lenticular_indices(615, trinomial::gn_roots(615, ctx), ctx);
    for (long j = 1; j <= li.J; j++) {
      lenticulus::RoucheMargin m = rouche_verify(615, j, 512, ctx);
      ok = ok && m.pass;
      worst615 = std::min(worst615, dd(m.margin));
    }
    for (long n = 32; n <= 200; n++) {
      lenticulus::RoucheMargin m =
          rouche_verify(n, 1, 256, ctx, lenticulus::RoucheMode::first_root);
      ok = ok && m.pass;
      worst_first = std::min(worst_first, dd(m.margin));
    }
    std::ostringstream os;
    os << "min margin over j <= " << li.J << " at n = 615: " << worst615
       << "; min first-root margin over 32 <= n <= 200: " << worst_first;
    return std::make_pair(ok, os.str());
  });

  r.run(9, "lenticulus identification and Dobrowolski floor", [&] {
    bool ok = true;
    std::ostringstream os;
    {
      AlgebraicReal beta = theta_perron(300);
      lenticulus::Lenticulus L = locate_lenticulus(beta, ctx);
      auto li = lenticular_indices(300, trinomial::gn_roots(300, ctx), ctx);
      size_t certified = 0;
      bool ident = true;
      for (const auto& e : L.entries) {
        if (e.j == 0) continue;
        if (e.certified) certified++;
        ident = ident && e.identification_residual <= e.identification_bound;
      }
      ok = ok && certified == static_cast<size_t>(li.J) && ident;
      os << "theta_300^-1: " << certified << "/" << li.J
         << " certified zeros, residuals within bounds; ";
    }
    lenticulus::LimitConstants lc = limit_constants(ctx);
    lenticulus::RoucheConstants rc = find_amax(ctx);
    BigFloat pi = BigFloat::pi(ctx.bits);
    for (long n : {260L, 300L, 400L}) {
      AlgebraicReal beta = theta_perron(n);
      lenticulus::Lenticulus L = locate_lenticulus(beta, ctx);
      lenticulus::LenticularMeasure lm = lenticular_measure(beta.approx(ctx.bits), L, ctx);
      BigFloat floor_n =
          lc.product *
          (BigFloat::of(1L, ctx.bits) - rc.S / (pi * 2L * log(BigFloat::of(n, ctx.bits))));
      ok = ok && lm.M_r >= floor_n;
      os << "M_r(theta_" << n << "^-1) = " << lm.M_r.str(8) << " >= " << floor_n.str(8) << "; ";
    }
    return std::make_pair(ok, os.str());
  });

  r.run(10, "U_beta factorizations", [&] {
    bool ok = true;
    std::ostringstream os;
    {
      // the dyg-6 Salem 1.291741 has U_beta = -(1 - z^23) exactly
      ParryExpansion e = ParryExpansion::parse("0.1(0^4 1 0^11 1 0^6)^w");
      IntPolynomial p = parry_polynomial(e).parry;
      TruncatedSeries f = f_beta(e, 400);
      std::vector<mpz_class> b = u_beta_coeffs(p, f, 300);
      for (size_t i = 0; i <= 300 && ok; i++) {
        mpz_class want = (i == 0) ? -1 : (i == 23 ? 1 : 0);
        ok = b[i] == want;
      }
      os << "U(1.291741) = -(1 - z^23) to order 300; ";
    }
    size_t checked = 0;
    for (const auto& row : table1()) {
      if (row.theta_row) continue;
      AlgebraicReal beta = table1_beta(row);
      TruncatedSeries f = f_beta(beta, 400);
      u_beta_coeffs(beta.minpoly(), f, 300);  // throws on any coefficient mismatch
      checked++;
    }
    os << "(U f - P*) = 0 through order 300 for all " << checked << " Salem rows";
    return std::make_pair(ok, os.str());
  });

  r.run(11, "universal bounds over the corpus", [&] {
    bool ok = true;
    std::ostringstream os;
    BigFloat th259 = theta_inv(259, ctx.bits);
    BigFloat one = BigFloat::of(1L, ctx.bits);
    size_t salems = 0, entries = 0;
    auto check_poly = [&](const IntPolynomial& p, bool expect_salem, ExpansionKind kind) {
      lenticulus::BoundsReport b = bounds_suite(p, ctx);
      if (b.root_of_unity) return;
      entries++;
      ok = ok && b.lehmer_ok && b.sz_ok;
      ok = ok && b.house >= one + (th259 - one) / static_cast<long>(p.degree());
      if (expect_salem) {
        salems++;
        ok = ok && b.salem_profile && b.salem_ok;
        ok = ok && kind != ExpansionKind::simple;
      }
    };
    for (const auto& row : table1()) {
      AlgebraicReal beta = table1_beta(row);
      ParryExpansion e = renyi_expansion(beta);
      check_poly(beta.minpoly(), !row.theta_row, e.kind);
    }
    for (const auto& row : salem_examples()) {
      AlgebraicReal beta = table1_beta(row);
      ParryExpansion e = renyi_expansion(beta);
      check_poly(beta.minpoly(), true, e.kind);
    }
    os << entries << " corpus entries: M >= theta_259^-1, house >= 1+0.016126/deg; " << salems
       << " Salem entries: eventually periodic with house > theta_31^-1 and dyg <= 31";
    return std::make_pair(ok, os.str());
  });

  r.run(12, "Pierce number growth", [&] {
    mpz_class d500 = pierce_delta(IntPolynomial::lehmer(), 500);
    mpz_class mag = abs(d500);
    double lg = std::log(mag.get_d()) / 500.0;
    MahlerResult m = mahler_measure(IntPolynomial::lehmer(), ctx);
    double logm = std::log(dd(m.value));
    std::ostringstream os;
    os << "|log|Delta_500||/500 = " << lg << " vs Log M = " << logm;
    return std::make_pair(std::fabs(lg - logm) < 0.02, os.str());
  });

  r.run(13, "annulus zero counts under the Solomyak majorant", [&] {
    AlgebraicReal lehmer(IntPolynomial::lehmer(), mpq_class(1), mpq_class(2));
    bool ok = true;
    std::ostringstream os;
    for (double rr : {0.9, 0.95}) {
      AnnulusCount ac = annulus_zero_count(lehmer, BigFloat::of(rr, ctx.bits), 512, ctx);
      ok = ok && BigFloat::of(static_cast<long>(ac.count), ctx.bits) <= ac.bound;
      os << "r = " << rr << ": count " << ac.count << " <= bound " << ac.bound.str(6) << "; ";
    }
    return std::make_pair(ok, os.str());
  });

  r.run(14, "angular discrepancy of G_n roots", [&] {
    bool ok = true;
    double prev = 2.0;
    std::ostringstream os;
    for (long n : {100L, 400L, 1600L}) {
      trinomial::IndexedTrinomialRoots rr = trinomial::gn_roots(n, ctx);
      RootSet rs;
      rs.source = IntPolynomial::trinomial_gn(n);
      rs.roots.push_back({BigComplex(rr.theta, BigFloat::of(0L, ctx.bits)),
                          BigFloat::of(0L, ctx.bits), true});
      for (size_t i = 0; i < rr.z.size(); i++) {
        rs.roots.push_back({rr.z[i], rr.radius[i], true});
        if (rr.z[i].im.sign() != 0) rs.roots.push_back({rr.z[i].conj(), rr.radius[i], true});
      }
      double d = dd(circle_discrepancy(rs));
      double bound = 8.0 * std::log(double(n)) / std::sqrt(double(n));
      ok = ok && d <= bound && d <= prev + 1e-12;
      os << "D(G_" << n << ") = " << d << " <= " << bound << "; ";
      prev = d;
    }
    return std::make_pair(ok, os.str());
  });

  return r.results;
}

}  // namespace parrylab
