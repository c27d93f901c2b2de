// parrylab: validated-numerics toolbox for Renyi-Parry dynamics, trinomial
// asymptotics, lenticular zero detection and the universal Mahler-measure
// bounds. JSON reports on stdout, human summaries on stderr.
//
// exit codes: 0 success, 1 failed verification (suite / table1-verify),
// 2 usage error, 3 computation error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parrylab/acceptance.hpp"
#include "parrylab/equidist.hpp"
#include "parrylab/lenticulus.hpp"
#include "parrylab/parryupper.hpp"
#include "parrylab/table1.hpp"

using json = nlohmann::ordered_json;
using namespace parrylab;

namespace {

struct GlobalOpts {
  long precision = 256;
  long budget = 100000;
  int samples = 512;
  std::string emit;
};

std::string slurp_if_file(const std::string& arg) {
  std::ifstream in(arg);
  if (!in.good()) return arg;  // inline text
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntPolynomial load_poly(const std::string& arg) { return IntPolynomial::parse(slurp_if_file(arg)); }

// --beta accepts a plain decimal (float mode) or a polynomial file/string
// (exact mode, root isolated in (1, 2))
struct BetaInput {
  bool exact;
  AlgebraicReal algebraic;
  BigFloat value;
};

BetaInput load_beta(const std::string& arg, long precision) {
  std::string text = slurp_if_file(arg);
  bool plain_decimal = text.find_first_not_of("0123456789.+-eE \t\n") == std::string::npos;
  BetaInput b;
  if (plain_decimal) {
    b.exact = false;
    b.value = BigFloat::parse(text, precision);
  } else {
    b.exact = true;
    b.algebraic = AlgebraicReal(IntPolynomial::parse(text), mpq_class(1), mpq_class(2));
    b.value = b.algebraic.approx(precision);
  }
  return b;
}

void emit_report(const json& j, const GlobalOpts& g) {
  std::string text = j.dump(2);
  if (!g.emit.empty()) {
    std::ofstream out(g.emit);
    if (!out) throw Error("cannot write " + g.emit);
    out << text << "\n";
    std::cerr << "report written to " << g.emit << "\n";
  } else {
    std::cout << text << std::endl;
  }
}

json expansion_json(const ParryExpansion& e) {
  json j;
  switch (e.kind) {
    case ExpansionKind::simple: j["kind"] = "simple"; break;
    case ExpansionKind::eventually_periodic: j["kind"] = "eventually_periodic"; break;
    default: j["kind"] = "undetermined";
  }
  j["preperiod"] = e.preperiod;
  j["period"] = e.period;
  j["pretty"] = e.str();
  j["alphabet_max"] = e.alphabet_max;
  j["exact"] = e.exact;
  j["budget_used"] = e.budget_used;
  return j;
}

json bounds_json(const lenticulus::BoundsReport& b, size_t digits) {
  json j;
  j["degree"] = b.degree;
  j["root_of_unity"] = b.root_of_unity;
  if (b.root_of_unity) return j;
  j["M"] = b.M.str(digits);
  j["house"] = b.house.str(digits);
  j["weil_height"] = b.weil_height.str(digits);
  j["dyg"] = b.dyg;
  j["lehmer_ok"] = b.lehmer_ok;
  j["sz_ok"] = b.sz_ok;
  j["salem_profile"] = b.salem_profile;
  if (b.salem_profile) j["salem_ok"] = b.salem_ok;
  j["bogomolov_applicable"] = b.bogomolov_applicable;
  if (b.bogomolov_applicable) j["bogomolov_ok"] = b.bogomolov_ok;
  if (b.M_r.has_value()) j["M_r"] = b.M_r->str(digits);
  if (b.L_r.has_value()) j["L_r"] = b.L_r->str(digits);
  if (b.dygdeg_ok.has_value()) j["dygdeg_ok"] = *b.dygdeg_ok;
  if (b.dobrowolski.has_value()) j["dobrowolski_floor"] = b.dobrowolski->str(digits);
  j["roots_on_circle"] = b.roots_on_circle;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parrylab: Renyi-Parry dynamics, trinomial asymptotics and Mahler bounds"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--precision", g.precision, "working precision in bits")->capture_default_str();
  app.add_option("--budget", g.budget, "orbit iteration budget")->capture_default_str();
  app.add_option("--samples", g.samples, "contour sample count")->capture_default_str();

  std::string beta_arg, poly_arg, n_list_arg;
  long n_arg = 0;
  long m_arg = 1;
  double r_arg = 0.95;
  long digits_arg = 30;

  auto* c_expand = app.add_subcommand("expand", "Renyi expansion d_beta(1)");
  c_expand->add_option("--beta", beta_arg, "beta as decimal or polynomial (file or inline)")
      ->required();
  c_expand->add_option("--emit", g.emit, "write the JSON report to a file");

  auto* c_classify = app.add_subcommand("classify", "Blanchard class of beta");
  c_classify->add_option("--beta", beta_arg)->required();
  c_classify->add_option("--emit", g.emit);

  auto* c_dyg = app.add_subcommand("dyg", "dynamical degree of beta");
  c_dyg->add_option("--beta", beta_arg)->required();
  c_dyg->add_option("--emit", g.emit);

  auto* c_mahler = app.add_subcommand("mahler", "Mahler measure, house, height, roots");
  c_mahler->add_option("--poly", poly_arg, "integer polynomial (file or inline)")->required();
  c_mahler->add_option("--emit", g.emit);

  auto* c_trinomial = app.add_subcommand("trinomial", "indexed roots and asymptotics of G_n");
  c_trinomial->add_option("--n", n_arg, "trinomial index")->required();
  c_trinomial->add_option("--emit", g.emit, "write roots CSV here");

  auto* c_lenticulus = app.add_subcommand("lenticulus", "certified lenticular zeros of f_beta");
  c_lenticulus->add_option("--beta", beta_arg)->required();
  c_lenticulus->add_option("--emit", g.emit);

  auto* c_bounds = app.add_subcommand("bounds", "universal-bound report for a polynomial");
  c_bounds->add_option("--poly", poly_arg)->required();
  c_bounds->add_flag("--json", "kept for compatibility; output is always JSON");
  c_bounds->add_option("--emit", g.emit);

  auto* c_equidist = app.add_subcommand("equidist", "angular discrepancy of G_n roots");
  c_equidist->add_option("--n", n_list_arg, "comma-separated trinomial indices")->required();
  c_equidist->add_option("--emit", g.emit, "write CSV here");

  auto* c_constants = app.add_subcommand("constants", "the constants of the theory");
  c_constants->add_option("--digits", digits_arg, "decimal digits to print")->capture_default_str();
  c_constants->add_option("--emit", g.emit);

  auto* c_taylor = app.add_subcommand("taylor", "Taylor coefficient c_(beta,m) at 1/beta");
  c_taylor->add_option("--beta", beta_arg)->required();
  c_taylor->add_option("--m", m_arg, "coefficient index")->capture_default_str();
  c_taylor->add_option("--emit", g.emit);

  auto* c_annulus = app.add_subcommand("annulus", "zero count of f_beta in 1/beta <= |z| <= r");
  c_annulus->add_option("--beta", beta_arg)->required();
  c_annulus->add_option("--r", r_arg, "outer radius")->capture_default_str();
  c_annulus->add_option("--emit", g.emit);

  auto* c_table1 = app.add_subcommand("table1-verify", "re-derive every embedded dataset row");
  c_table1->add_option("--emit", g.emit);

  auto* c_suite = app.add_subcommand("suite", "run the full verification suite");
  c_suite->add_option("--emit", g.emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    PrecisionContext ctx(g.precision);
    size_t digits = static_cast<size_t>(g.precision * 0.301) - 2;
    json out;
    out["schema"] = "parry-lab/1";
    out["precision_bits"] = g.precision;

    if (c_expand->parsed() || c_classify->parsed()) {
      BetaInput b = load_beta(beta_arg, g.precision);
      ParryExpansion e = b.exact ? renyi_expansion(b.algebraic, g.budget)
                                 : renyi_expansion_float(b.value, g.budget);
      out["beta"] = b.value.str(digits);
      out["expansion"] = expansion_json(e);
      if (c_classify->parsed()) {
        const char* cls = e.kind == ExpansionKind::simple ? "C1"
                          : e.kind == ExpansionKind::eventually_periodic
                              ? "C2"
                              : "undetermined (C3-C5 heuristic)";
        out["blanchard_class"] = cls;
        long run = 0, best = 0;
        for (size_t i = 1; i <= std::max<size_t>(e.preperiod.size(), 64); i++) {
          if (e.digit(i) == 0) best = std::max(best, ++run);
          else run = 0;
        }
        out["longest_zero_run"] = best;
        std::cerr << "beta = " << b.value.str(12) << " is " << cls << "\n";
      } else {
        std::cerr << "d_beta(1) = " << e.str() << (e.exact ? "" : "  [float mode, not certified]")
                  << "\n";
      }
      if (b.exact && e.kind != ExpansionKind::undetermined) {
        ParryPolynomials pp = parry_polynomial(e, &b.algebraic.minpoly());
        out["parry_polynomial"] = pp.parry.str();
        out["parry_degree"] = pp.parry.degree();
        out["complementary_factor"] = pp.complementary.str();
        ZetaRationalForm z = zeta_rational_form(e);
        out["f_beta"] = {{"numerator", z.numerator.str("z")},
                         {"denominator", z.denominator.str("z")}};
      }
      if (e.kind != ExpansionKind::undetermined) {
        // sparse form of the truncated Parry Upper function
        size_t N = std::min<size_t>(400, e.preperiod.size() + 2 * e.period.size() + 32);
        TruncatedSeries f = f_beta(e, N);
        json sparse;
        sparse["0"] = -1;
        for (long q : f.support()) sparse[std::to_string(q)] = f.coeffs[static_cast<size_t>(q)];
        out["f_beta_sparse"] = sparse;
        out["f_beta_truncation_order"] = f.order();
      }
      emit_report(out, g);
      return 0;
    }

    if (c_dyg->parsed()) {
      BetaInput b = load_beta(beta_arg, g.precision);
      long n = b.exact ? dyg(b.algebraic) : dyg(b.value);
      out["beta"] = b.value.str(digits);
      out["dyg"] = n;
      out["exact"] = b.exact;
      std::cerr << "dyg(" << b.value.str(10) << ") = " << n << "\n";
      emit_report(out, g);
      return 0;
    }

    if (c_mahler->parsed()) {
      IntPolynomial p = load_poly(poly_arg);
      RootSet rs = find_roots(p, ctx);
      MahlerResult m = mahler_measure(rs);
      HouseHeight hh{rs.house(), log(m.value) / static_cast<long>(p.degree())};
      out["poly"] = p.str();
      out["M"] = m.value.str(digits);
      out["mahler_error_bound"] = m.error_bound.str(6);
      out["roots_on_circle"] = m.on_circle;
      out["uncertain"] = m.uncertain;
      out["house"] = hh.house.str(digits);
      out["weil_height"] = hh.weil_height.str(digits);
      json roots = json::array();
      for (const auto& root : rs.roots)
        roots.push_back({{"re", root.value.re.str(digits)},
                         {"im", root.value.im.str(digits)},
                         {"radius", root.radius.str(6)}});
      out["roots"] = roots;
      std::cerr << "M = " << m.value.str(15) << ", house = " << hh.house.str(15) << "\n";
      emit_report(out, g);
      return 0;
    }

    if (c_trinomial->parsed()) {
      trinomial::IndexedTrinomialRoots roots = trinomial::gn_roots(n_arg, ctx);
      trinomial::MahlerGn m = trinomial::mahler_gn(n_arg, ctx);
      out["n"] = n_arg;
      out["theta_n"] = roots.theta.str(digits);
      out["theta_n_inv"] = (BigFloat::of(1L, ctx.bits) / roots.theta).str(digits);
      out["M_Gn"] = m.M.str(digits);
      out["rn"] = m.rn.str(8);
      out["minorant_ok"] = m.minorant_ok;
      if (n_arg >= 195) {
        auto li = lenticulus::lenticular_indices(n_arg, roots, ctx);
        out["J_n"] = li.J;
        out["H_n"] = n_arg >= 260 ? json(li.H) : json(nullptr);
        out["c_n"] = li.c_n.str(8);
        out["t_0n"] = li.t_0n.str(8);
      }
      if (!g.emit.empty()) {
        std::ofstream csv(g.emit);
        if (!csv) throw Error("cannot write " + g.emit);
        csv << "j,re,im,modulus,arg,D_re,D_im,sector\n";
        const char* names[] = {"theta", "bump_inner", "bump_outer", "main"};
        for (long j = 0; j <= static_cast<long>(roots.z.size()); j++) {
          BigComplex z = j == 0 ? BigComplex(roots.theta, BigFloat::of(0L, ctx.bits))
                                : roots.z[static_cast<size_t>(j - 1)];
          csv << j << "," << z.re.str(20) << "," << z.im.str(20) << "," << abs(z).str(20) << ","
              << arg(z).str(20);
          if (n_arg >= 18 && j <= n_arg / 4) {
            trinomial::AsymptoticRoot a = trinomial::asym_root(n_arg, j);
            csv << "," << a.re.str(20) << "," << a.im.str(20) << ","
                << names[static_cast<int>(a.sector)];
          } else {
            csv << ",,,";
          }
          csv << "\n";
        }
        std::cerr << "roots written to " << g.emit << "\n";
        g.emit.clear();
        std::cout << out.dump(2) << std::endl;
      } else {
        emit_report(out, g);
      }
      std::cerr << "M(G_" << n_arg << ") = " << m.M.str(15) << "\n";
      return 0;
    }

    if (c_lenticulus->parsed()) {
      BetaInput b = load_beta(beta_arg, g.precision);
      lenticulus::Lenticulus L =
          b.exact ? lenticulus::locate_lenticulus(b.algebraic, ctx, g.samples, g.budget)
                  : lenticulus::locate_lenticulus(b.value, ctx, g.samples);
      lenticulus::LenticularMeasure lm = lenticulus::lenticular_measure(b.value, L, ctx);
      out["beta"] = b.value.str(digits);
      out["dyg"] = L.n;
      out["first_root_only"] = L.first_root_only;
      out["exact_digits"] = L.exact_digits;
      out["M_r"] = lm.M_r.str(digits);
      out["L_r"] = lm.L_r.is_nan() ? json(nullptr) : json(lm.L_r.str(digits));
      out["excluded_entries"] = lm.excluded;
      json entries = json::array();
      for (const auto& e : L.entries) {
        json je;
        je["j"] = e.j;
        je["z_jn"] = {{"re", e.z_jn.re.str(digits)}, {"im", e.z_jn.im.str(digits)}};
        je["omega"] = {{"re", e.omega.re.str(digits)}, {"im", e.omega.im.str(digits)}};
        je["radius"] = e.radius.is_nan() ? json(nullptr) : json(e.radius.str(6));
        je["rouche_margin"] = e.rouche_margin.str(6);
        je["certified"] = e.certified;
        if (!e.identification_residual.is_nan()) {
          je["identification_residual"] = e.identification_residual.str(6);
          je["identification_bound"] = e.identification_bound.str(6);
        }
        entries.push_back(je);
      }
      out["entries"] = entries;
      std::cerr << "lenticulus of " << b.value.str(10) << ": " << L.certified_count() << "/"
                << L.entries.size() << " certified, M_r = " << lm.M_r.str(12) << "\n";
      emit_report(out, g);
      return 0;
    }

    if (c_bounds->parsed()) {
      IntPolynomial p = load_poly(poly_arg);
      lenticulus::BoundsReport b = lenticulus::bounds_suite(p, ctx);
      out["poly"] = p.str();
      out.update(bounds_json(b, digits));
      std::cerr << (b.root_of_unity
                        ? "root of unity: bounds vacuous"
                        : "M = " + b.M.str(12) +
                              (b.lehmer_ok ? " (Lehmer bound ok)" : " (BELOW Lehmer bound)"))
                << "\n";
      emit_report(out, g);
      return 0;
    }

    if (c_equidist->parsed()) {
      std::vector<long> ns;
      std::stringstream ss(n_list_arg);
      for (std::string tok; std::getline(ss, tok, ',');) ns.push_back(std::stol(tok));
      json rows = json::array();
      std::ostringstream csv;
      csv << "n,discrepancy,bound\n";
      for (long n : ns) {
        trinomial::IndexedTrinomialRoots rr = trinomial::gn_roots(n, ctx);
        RootSet rs;
        rs.source = IntPolynomial::trinomial_gn(n);
        rs.roots.push_back({BigComplex(rr.theta, BigFloat::of(0L, ctx.bits)),
                            BigFloat::of(0L, ctx.bits), true});
        for (size_t i = 0; i < rr.z.size(); i++) {
          rs.roots.push_back({rr.z[i], rr.radius[i], true});
          if (rr.z[i].im.sign() != 0) rs.roots.push_back({rr.z[i].conj(), rr.radius[i], true});
        }
        BigFloat d = circle_discrepancy(rs);
        double eps = 2.0 * std::log(double(n)) / double(n);
        BigFloat sigma =
            belotserkovski_bound(n, BigFloat::of(eps, ctx.bits), BigFloat::of(0L, ctx.bits));
        rows.push_back({{"n", n}, {"discrepancy", d.str(10)}, {"sigma_dis", sigma.str(10)}});
        csv << n << "," << d.str(12) << "," << sigma.str(12) << "\n";
      }
      out["rows"] = rows;
      if (!g.emit.empty()) {
        std::ofstream f(g.emit);
        if (!f) throw Error("cannot write " + g.emit);
        f << csv.str();
        std::cerr << "CSV written to " << g.emit << "\n";
        std::cout << out.dump(2) << std::endl;
      } else {
        emit_report(out, g);
      }
      return 0;
    }

    if (c_constants->parsed()) {
      size_t nd = static_cast<size_t>(digits_arg);
      trinomial::LambdaValue lv = trinomial::lambda_limit(ctx);
      lenticulus::RoucheConstants rc = lenticulus::find_amax(ctx);
      lenticulus::LimitConstants lc = lenticulus::limit_constants(ctx);
      json c;
      c["Lambda"] = lv.value.str(nd);
      c["Lambda_quadrature_route"] = lv.quadrature.str(nd);
      c["Lambda_r"] = lc.lambda_r.str(nd);
      c["mu_r"] = lc.mu_r.str(nd);
      c["Lambda_r_mu_r"] = lc.product.str(nd);
      c["kappa"] = rc.kappa.str(nd);
      c["a_max"] = rc.a_max.str(nd);
      c["S"] = rc.S.str(nd);
      c["c"] = rc.c.str(nd);
      c["exp_minus2c_over_1_minus_exp_minus_c"] = rc.exp_term.str(nd);
      c["dobrowolski_slope"] = rc.slope.str(nd);
      c["theta_5_inv"] = lenticulus::theta_inv(5, ctx.bits).str(nd);
      c["theta_31_inv"] = lenticulus::theta_inv(31, ctx.bits).str(nd);
      c["theta_259_inv"] = lenticulus::theta_inv(259, ctx.bits).str(nd);
      c["golden_mean"] = ((sqrt(BigFloat::of(5L, ctx.bits)) + 1L) / 2L).str(nd);
      out["constants"] = c;
      std::cerr << "Lambda = " << lv.value.str(12) << ", Lambda_r mu_r = " << lc.product.str(12)
                << "\n";
      emit_report(out, g);
      return 0;
    }

    if (c_taylor->parsed()) {
      BetaInput b = load_beta(beta_arg, g.precision);
      if (!b.exact) throw Error("taylor needs an exact (polynomial) beta");
      TaylorCoeff c = taylor_c_m(b.algebraic, m_arg, ctx, g.budget);
      out["beta"] = b.value.str(digits);
      out["m"] = m_arg;
      out["c_beta_m"] = c.value.str(digits);
      out["error_bound"] = c.error.str(6);
      std::cerr << "c_(beta," << m_arg << ") = " << c.value.str(15) << "\n";
      emit_report(out, g);
      return 0;
    }

    if (c_annulus->parsed()) {
      BetaInput b = load_beta(beta_arg, g.precision);
      if (!b.exact) throw Error("annulus needs an exact (polynomial) beta");
      AnnulusCount ac =
          annulus_zero_count(b.algebraic, BigFloat::of(r_arg, ctx.bits), g.samples, ctx, g.budget);
      out["beta"] = b.value.str(digits);
      out["r"] = r_arg;
      out["count"] = ac.count;
      out["bound"] = ac.bound.str(10);
      out["within_bound"] = BigFloat::of(static_cast<long>(ac.count), ctx.bits) <= ac.bound;
      std::cerr << "zeros in annulus up to r = " << r_arg << ": " << ac.count << " (bound "
                << ac.bound.str(6) << ")\n";
      emit_report(out, g);
      return 0;
    }

    if (c_table1->parsed()) {
      auto checks = verify_table1();
      size_t ok = 0;
      json rows = json::array();
      for (size_t i = 0; i < checks.size(); i++) {
        const auto& c = checks[i];
        const auto& e = table1()[i];
        if (c.ok()) ok++;
        rows.push_back({{"row", i},
                        {"dyg", e.dyg},
                        {"degree", e.degree},
                        {"beta", e.beta_decimal},
                        {"parry_degree", e.parry_degree},
                        {"parry_degree_published", e.parry_degree_published},
                        {"parry_irreducible", e.parry_irreducible},
                        {"expansion", e.expansion},
                        {"minpoly", c.minpoly.str()},
                        {"self_admissible", c.self_admissible},
                        {"parry_degree_match", c.parry_degree_match},
                        {"minpoly_ok", c.minpoly_ok},
                        {"irreducible_match", c.irreducible_match},
                        {"value_match", c.value_match},
                        {"expansion_match", c.expansion_match},
                        {"dyg_match", c.dyg_match},
                        {"note", c.note},
                        {"ok", c.ok()}});
      }
      out["rows"] = rows;
      out["rows_total"] = checks.size();
      out["rows_ok"] = ok;
      std::cerr << ok << "/" << checks.size() << " rows reproduced\n";
      emit_report(out, g);
      return ok == checks.size() ? 0 : 1;
    }

    if (c_suite->parsed()) {
      auto results = run_acceptance(ctx, &std::cerr);
      bool all = true;
      json rows = json::array();
      for (const auto& res : results) {
        all = all && res.pass;
        rows.push_back(
            {{"id", res.id}, {"name", res.name}, {"pass", res.pass}, {"detail", res.detail}});
      }
      out["criteria"] = rows;
      out["all_passed"] = all;
      emit_report(out, g);
      return all ? 0 : 1;
    }

    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const CLI::Error&) {
    return 2;
  } catch (const std::exception& e) {
    json err;
    err["schema"] = "parry-lab/1";
    err["error"] = e.what();
    std::cout << err.dump(2) << std::endl;
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
