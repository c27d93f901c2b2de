#include "parrylab/betadynamics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace parrylab {

size_t OrbitState::hash() const {
  // FNV over coefficient residues; collisions resolved by exact compare
  size_t h = 1469598103934665603ull;
  for (const auto& v : vec) {
    unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), 2305843009213693951ull);
    h ^= r + (v < 0 ? 0x9e3779b97f4a7c15ull : 0);
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<int> ParryExpansion::digits(size_t n) const {
  std::vector<int> out;
  out.reserve(n);
  for (size_t i = 1; i <= n; i++) out.push_back(digit(i));
  return out;
}

int ParryExpansion::digit(size_t i) const {
  if (i == 0) throw Error("digits are 1-based");
  if (i <= preperiod.size()) return preperiod[i - 1];
  if (period.empty()) {
    if (kind == ExpansionKind::undetermined)
      throw Error("digit index beyond computed budget");
    return 0;  // simple expansion, zero tail
  }
  return period[(i - preperiod.size() - 1) % period.size()];
}

namespace {

void print_digit_run(std::ostream& os, const std::vector<int>& w) {
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    if (!first) os << " ";
    first = false;
    if (w[i] == 0) {
      size_t j = i;
      while (j < w.size() && w[j] == 0) j++;
      if (j - i == 1) os << "0";
      else os << "0^" << (j - i);
      i = j;
    } else {
      os << w[i];
      i++;
    }
  }
}

}  // namespace

std::string ParryExpansion::str() const {
  std::ostringstream os;
  os << "0.";
  print_digit_run(os, preperiod);
  if (!period.empty()) {
    os << (preperiod.empty() ? "(" : " (");
    print_digit_run(os, period);
    os << ")^w";
  } else if (kind == ExpansionKind::undetermined) {
    os << " ...";
  }
  return os.str();
}

ParryExpansion ParryExpansion::parse(const std::string& text) {
  ParryExpansion e;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++;
  };
  skip();
  if (i + 1 < text.size() && text[i] == '0' && text[i + 1] == '.') i += 2;
  std::vector<int>* cur = &e.preperiod;
  bool saw_period = false;
  for (;;) {
    skip();
    if (i >= text.size()) break;
    char c = text[i];
    if (c == '(') {
      if (saw_period) throw Error("expansion: second period group");
      cur = &e.period;
      saw_period = true;
      i++;
    } else if (c == ')') {
      i++;
      skip();
      // accept ')^w', ')^omega', ')^\omega' or a bare ')'
      if (i < text.size() && text[i] == '^') {
        i++;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '(' && text[i] != ')')
          i++;
      }
      cur = &e.preperiod;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      int d = c - '0';
      i++;
      long rep = 1;
      if (i < text.size() && text[i] == '^') {
        i++;
        skip();
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
        if (j == i) throw Error("expansion: bad run length");
        rep = std::stol(text.substr(i, j - i));
        i = j;
      }
      for (long k = 0; k < rep; k++) cur->push_back(d);
    } else {
      throw Error(std::string("expansion: unexpected character '") + c + "'");
    }
  }
  e.kind = e.period.empty() ? ExpansionKind::simple : ExpansionKind::eventually_periodic;
  for (int d : e.preperiod) e.alphabet_max = std::max(e.alphabet_max, d);
  for (int d : e.period) e.alphabet_max = std::max(e.alphabet_max, d);
  return e;
}

namespace {

// beta * state, reduced modulo the monic minimal polynomial
std::vector<mpz_class> mul_by_beta(const IntPolynomial& minpoly, const std::vector<mpz_class>& v) {
  size_t d = v.size();
  std::vector<mpz_class> w(d, 0);
  for (size_t i = 0; i + 1 < d; i++) w[i + 1] = v[i];
  const mpz_class& top = v[d - 1];
  if (top != 0) {
    // beta^d = -(c_0 + c_1 beta + ... + c_(d-1) beta^(d-1))
    for (size_t i = 0; i < d; i++) w[i] -= top * minpoly[i];
  }
  return w;
}

Interval value_of(const AlgebraicReal& beta, const std::vector<mpz_class>& v, mpfr_prec_t bits) {
  Interval b = beta.enclosure(bits);
  Interval acc = Interval::of(mpz_class(0), bits);
  for (size_t i = v.size(); i-- > 0;) acc = acc * b + Interval::of(v[i], bits);
  return acc;
}

bool equals_integer(const std::vector<mpz_class>& v, const mpz_class& k) {
  if (v.empty() || v[0] != k) return false;
  for (size_t i = 1; i < v.size(); i++)
    if (v[i] != 0) return false;
  return true;
}

}  // namespace

std::pair<long, OrbitState> orbit_step(const AlgebraicReal& beta, const OrbitState& s) {
  const IntPolynomial& mp = beta.minpoly();
  if (!mp.is_monic())
    throw Error("orbit_step: exact orbits need a monic minimal polynomial");
  if (s.vec.size() != mp.degree()) throw Error("orbit_step: state size mismatch");

  std::vector<mpz_class> y = mul_by_beta(mp, s.vec);
  for (mpfr_prec_t bits = 64; bits <= (1 << 16); bits *= 2) {
    Interval enc = value_of(beta, y, bits);
    mpz_class fl = enc.lo.floor_z(), fh = enc.hi.floor_z();
    if (fl == fh) {
      OrbitState next;
      next.vec = y;
      next.vec[0] -= fl;
      return {fl.get_si(), next};
    }
    if (fh == fl + 1 && equals_integer(y, fh)) {
      // beta * value(s) is exactly the integer fh: fractional part 0
      OrbitState next;
      next.vec.assign(y.size(), 0);
      return {fh.get_si(), next};
    }
  }
  throw Error("floor uncertain");
}

ParryExpansion renyi_expansion(const AlgebraicReal& beta, long budget) {
  if (budget < 1) throw Error("renyi_expansion: budget must be >= 1");
  if (beta.cmp(mpq_class(1)) <= 0) throw Error("renyi_expansion: beta must be > 1");
  const size_t d = beta.minpoly().degree();

  std::vector<int> digits;  // t_1, t_2, ...
  digits.reserve(static_cast<size_t>(std::min<long>(budget, 1 << 20)));

  ParryExpansion e;
  e.exact = true;

  // advance one step, recording the digit; returns the next state
  auto step = [&](const OrbitState& s) {
    auto [digit, next] = orbit_step(beta, s);
    digits.push_back(static_cast<int>(digit));
    return next;
  };

  // Brent: find cycle length lam, then the cycle start mu
  OrbitState x0 = OrbitState::initial(d);
  long power = 1, lam = 1;
  OrbitState tortoise = x0;
  OrbitState hare = step(x0);
  long steps = 1;  // states visited after x0
  size_t tortoise_hash = tortoise.hash(), hare_hash = hare.hash();
  bool found = false;
  while (steps <= budget) {
    if (hare.is_zero()) {
      // simple Parry number: T^m(1) = 0 at m = steps
      e.kind = ExpansionKind::simple;
      e.preperiod = digits;
      e.budget_used = steps;
      e.alphabet_max = digits.empty() ? 1 : *std::max_element(digits.begin(), digits.end());
      return e;
    }
    if (hare_hash == tortoise_hash && hare == tortoise) {
      found = true;
      break;
    }
    if (power == lam) {
      tortoise = hare;
      tortoise_hash = hare_hash;
      power *= 2;
      lam = 0;
    }
    hare = step(hare);
    hare_hash = hare.hash();
    steps++;
    lam++;
  }
  if (!found) {
    e.kind = ExpansionKind::undetermined;
    e.preperiod = digits;
    e.budget_used = steps;
    e.alphabet_max = digits.empty() ? 1 : *std::max_element(digits.begin(), digits.end());
    return e;
  }

  // mu: advance two cursors lam apart from the start; first meeting is the
  // cycle entry. All digits up to mu+lam are already recorded.
  long mu = 0;
  {
    OrbitState a = x0;
    OrbitState b = x0;
    for (long i = 0; i < lam; i++) b = orbit_step(beta, b).second;
    while (!(a == b)) {
      a = orbit_step(beta, a).second;
      b = orbit_step(beta, b).second;
      mu++;
    }
  }
  if (static_cast<long>(digits.size()) < mu + lam) {
    // regenerate the digit window covering the preperiod + one period
    OrbitState s = x0;
    digits.clear();
    for (long i = 0; i < mu + lam; i++) s = step(s);
  }
  e.kind = ExpansionKind::eventually_periodic;
  e.preperiod.assign(digits.begin(), digits.begin() + mu);
  e.period.assign(digits.begin() + mu, digits.begin() + mu + lam);
  e.budget_used = steps;
  e.alphabet_max = 1;
  for (int t : digits) e.alphabet_max = std::max(e.alphabet_max, t);
  return e;
}

ParryExpansion renyi_expansion_float(const BigFloat& beta, long n_digits) {
  if (!(beta > 1.0)) throw Error("renyi_expansion_float: beta must be > 1");
  ParryExpansion e;
  e.exact = false;
  e.kind = ExpansionKind::undetermined;
  mpfr_prec_t prec = beta.prec();
  BigFloat x = BigFloat::of(1L, prec);
  for (long i = 0; i < n_digits; i++) {
    BigFloat y = beta * x;
    BigFloat f = floor(y);
    e.preperiod.push_back(static_cast<int>(f.to_double()));
    x = y - f;
  }
  e.budget_used = n_digits;
  for (int t : e.preperiod) e.alphabet_max = std::max(e.alphabet_max, t);
  return e;
}

namespace {

// strict lexicographic comparison of zero-extended finite words
bool shift_strictly_smaller(const std::vector<int>& y, size_t j, const std::vector<int>& c) {
  size_t n = std::max(y.size() > j ? y.size() - j : 0, c.size()) + 1;
  for (size_t i = 0; i < n; i++) {
    int a = (j + i < y.size()) ? y[j + i] : 0;
    int b = (i < c.size()) ? c[i] : 0;
    if (a != b) return a < b;
  }
  return false;  // equal as infinite words
}

}  // namespace

bool admissible(const std::vector<int>& y, const std::vector<int>& c) {
  for (size_t j = 0; j < y.size(); j++)
    if (!shift_strictly_smaller(y, j, c)) return false;
  return true;
}

bool self_admissible(const std::vector<int>& y) {
  for (size_t j = 1; j < y.size(); j++)
    if (!shift_strictly_smaller(y, j, y)) return false;
  return true;
}

bool self_admissible(const ParryExpansion& e) {
  size_t m = e.preperiod.size(), L = e.period.size();
  if (L == 0) return self_admissible(e.preperiod);
  // compare the infinite word against its shifts; a tie over
  // preperiod + 2 periods means genuine equality
  size_t horizon = m + 3 * L + 4;
  size_t shifts = m + L;
  for (size_t j = 1; j <= shifts; j++) {
    bool decided = false;
    for (size_t i = 1; i <= horizon; i++) {
      int a = e.digit(j + i);
      int b = e.digit(i);
      if (a != b) {
        if (a > b) return false;
        decided = true;
        break;
      }
    }
    if (!decided) return false;  // shift equals the word itself
  }
  return true;
}

long dyg(const AlgebraicReal& beta) {
  if (beta.cmp(mpq_class(1)) <= 0) throw Error("dyg: beta must be > 1");
  int vs_golden = beta.sign_of(IntPolynomial({-1, -1, 1}));  // sign of beta^2-beta-1
  if (vs_golden > 0) throw Error("dyg: beta must be <= the golden mean");
  if (vs_golden == 0) return 2;

  double x = beta.approx(96).to_double();
  double r = x / (x - 1.0);
  long est = static_cast<long>(std::floor(r * std::log(r)));
  long k = std::max<long>(3, est);

  auto gstar_sign = [&](long n) { return beta.sign_of(IntPolynomial::trinomial_gn_star(n)); };

  // dyg = n iff G_n*(beta) <= 0 < G_(n-1)*(beta)
  while (gstar_sign(k) > 0) k++;
  while (k > 3 && gstar_sign(k - 1) <= 0) k--;
  return k;
}

long dyg(const BigFloat& beta) {
  mpfr_prec_t prec = beta.prec();
  BigFloat one = BigFloat::of(1L, prec);
  BigFloat golden = (sqrt(BigFloat::of(5L, prec)) + 1L) / 2L;
  if (!(beta > one) || beta > golden) throw Error("dyg: beta must lie in (1, golden]");
  if (beta == golden) return 2;
  auto gstar_sign = [&](long n) {
    // 1 + beta^(n-1) - beta^n = 1 - beta^(n-1)(beta - 1)
    BigFloat v = one - pow(beta, n - 1) * (beta - one);
    return v.sign();
  };
  BigFloat r = beta / (beta - one);
  long est = static_cast<long>(std::floor((r * log(r)).to_double()));
  long k = std::max<long>(3, est);
  while (gstar_sign(k) > 0) k++;
  while (k > 3 && gstar_sign(k - 1) <= 0) k--;
  return k;
}

ParryPolynomials parry_polynomial(const ParryExpansion& e, const IntPolynomial* minpoly) {
  if (e.kind == ExpansionKind::undetermined) throw Error("expansion undetermined");
  ParryPolynomials out;
  if (e.kind == ExpansionKind::simple) {
    size_t m = e.preperiod.size();
    if (m == 0 || e.preperiod.back() == 0) throw Error("simple expansion must end in a nonzero digit");
    std::vector<mpz_class> c(m + 1, 0);
    c[m] = 1;
    for (size_t i = 1; i <= m; i++) c[m - i] -= e.preperiod[i - 1];
    out.parry = IntPolynomial(std::move(c));
  } else {
    size_t m = e.preperiod.size(), L = e.period.size();
    size_t D = m + L;
    std::vector<mpz_class> c(D + 1, 0);
    c[D] = 1;
    for (size_t i = 1; i <= D; i++) c[D - i] -= e.digit(i);
    if (m > 0) {
      c[m] -= 1;
      for (size_t i = 1; i <= m; i++) c[m - i] += e.preperiod[i - 1];
    } else {
      c[0] -= 1;  // purely periodic: constant term -(1 + t_(p+1))
    }
    out.parry = IntPolynomial(std::move(c));
  }
  if (minpoly != nullptr) out.complementary = exact_divide(out.parry, *minpoly);
  return out;
}

AlgebraicReal theta_perron(long n) {
  if (n < 2) throw Error("theta_perron: n must be >= 2");
  IntPolynomial p = -IntPolynomial::trinomial_gn_star(n);  // X^n - X^(n-1) - 1, monic
  if (n % 6 == 5) p = exact_divide(p, IntPolynomial({1, -1, 1}));
  return AlgebraicReal(std::move(p), mpq_class(1), mpq_class(2));
}

BlanchardResult classify_blanchard(const AlgebraicReal& beta, long budget) {
  BlanchardResult r;
  r.expansion = renyi_expansion(beta, budget);
  switch (r.expansion.kind) {
    case ExpansionKind::simple:
      r.cls = BlanchardClass::C1;
      break;
    case ExpansionKind::eventually_periodic:
      r.cls = BlanchardClass::C2;
      break;
    default: {
      r.cls = BlanchardClass::undetermined;
      long run = 0, best = 0;
      for (int t : r.expansion.preperiod) {
        if (t == 0) best = std::max(best, ++run);
        else run = 0;
      }
      r.longest_zero_run = best;
    }
  }
  return r;
}

}  // namespace parrylab
