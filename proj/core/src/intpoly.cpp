#include "parrylab/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace parrylab {

IntPolynomial IntPolynomial::trinomial_gn(long n) {
  if (n < 2) throw Error("G_n needs n >= 2");
  std::vector<mpz_class> c(static_cast<size_t>(n) + 1, 0);
  c[0] = -1;
  c[1] += 1;
  c[static_cast<size_t>(n)] += 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::trinomial_gn_star(long n) {
  if (n < 2) throw Error("G_n* needs n >= 2");
  std::vector<mpz_class> c(static_cast<size_t>(n) + 1, 0);
  c[0] = 1;
  c[static_cast<size_t>(n) - 1] += 1;
  c[static_cast<size_t>(n)] -= 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::lehmer() {
  return IntPolynomial({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); i++) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) c[i] += b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); i++) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) c[i] -= b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); i++)
    for (size_t j = 0; j < b.c_.size(); j++) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const mpz_class& s) {
  std::vector<mpz_class> c = a.c_;
  for (auto& v : c) v *= s;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a) {
  std::vector<mpz_class> c = a.c_;
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<mpz_class> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); i++) c[i - 1] = c_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reciprocal() const {
  std::vector<mpz_class> c(c_.rbegin(), c_.rend());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shift_argument(const mpz_class& a) const {
  // Horner: P(X+a) built from the top coefficient down
  IntPolynomial res;
  IntPolynomial xa({a, 1});
  for (size_t i = c_.size(); i-- > 0;) {
    res = res * xa + IntPolynomial::monomial(c_[i], 0);
  }
  return res;
}

IntPolynomial IntPolynomial::negate_argument() const {
  std::vector<mpz_class> c = c_;
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> c = c_;
  for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + mpq_class(c_[i]);
  return acc;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

BigFloat IntPolynomial::eval(const BigFloat& x) const {
  BigFloat acc = BigFloat::of(0L, x.prec());
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + BigFloat::of(c_[i], x.prec());
  return acc;
}

BigComplex IntPolynomial::eval(const BigComplex& x) const {
  BigComplex acc(x.prec());
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * x;
    acc.re += BigFloat::of(c_[i], x.prec());
  }
  return acc;
}

Interval IntPolynomial::eval(const Interval& x) const {
  mpfr_prec_t p = x.prec();
  Interval acc = Interval::of(mpz_class(0), p);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Interval::of(c_[i], p);
  return acc;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  // Horner over exact rationals; cheap enough at desk scale
  mpq_class v = eval(x);
  return sgn(v);
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); i++) {
    if (c_[i] == 0) continue;
    mpz_class a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    mpz_class mag = abs(a);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

namespace {

bool is_var(char ch) { return ch == 'x' || ch == 'X' || ch == 'z' || ch == 'Z'; }

struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& str) : s(str) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) { i++; return true; }
    return false;
  }
  bool number(mpz_class& out) {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) j++;
    if (j == i) return false;
    out = mpz_class(s.substr(i, j - i));
    i = j;
    return true;
  }
};

IntPolynomial parse_array(const std::string& text) {
  Parser p(text);
  if (!p.eat('[')) throw Error("polynomial: expected '['");
  std::vector<mpz_class> c;
  p.skip();
  if (!p.eat(']')) {
    for (;;) {
      bool neg = p.eat('-');
      if (!neg) p.eat('+');
      mpz_class v;
      if (!p.number(v)) throw Error("polynomial: bad integer in array");
      c.push_back(neg ? mpz_class(-v) : v);
      if (p.eat(']')) break;
      if (!p.eat(',')) throw Error("polynomial: expected ',' or ']'");
    }
  }
  p.skip();
  if (p.i != text.size()) throw Error("polynomial: trailing input");
  return IntPolynomial(std::move(c));
}

IntPolynomial parse_terms(const std::string& text) {
  Parser p(text);
  std::vector<mpz_class> c;
  auto add = [&](const mpz_class& a, size_t k) {
    if (c.size() <= k) c.resize(k + 1, 0);
    c[k] += a;
  };
  bool any = false;
  for (;;) {
    p.skip();
    if (p.i == text.size()) break;
    bool neg = false;
    if (any) {
      if (p.eat('+')) {
      } else if (p.eat('-')) {
        neg = true;
      } else {
        throw Error("polynomial: expected '+' or '-'");
      }
    } else {
      if (p.eat('-')) neg = true;
      else p.eat('+');
    }
    mpz_class coef = 1;
    bool have_num = p.number(coef);
    size_t expo = 0;
    p.skip();
    bool have_var = false;
    if (have_num) {
      if (p.eat('*')) {
        have_var = true;
      } else {
        p.skip();
        if (p.i < text.size() && is_var(text[p.i])) have_var = true;
      }
    } else {
      have_var = true;
    }
    if (have_var) {
      p.skip();
      if (p.i >= text.size() || !is_var(text[p.i]))
        throw Error("polynomial: expected variable");
      p.i++;
      expo = 1;
      if (p.eat('^')) {
        mpz_class e;
        if (!p.number(e) || e < 1) throw Error("polynomial: bad exponent");
        if (e > 100000) throw Error("polynomial: exponent too large");
        expo = e.get_ui();
      }
    }
    add(neg ? mpz_class(-coef) : coef, expo);
    any = true;
  }
  if (!any) throw Error("polynomial: empty input");
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial IntPolynomial::parse(const std::string& text) {
  size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) k++;
  if (k < text.size() && text[k] == '[') return parse_array(text);
  return parse_terms(text);
}

StructureFlags structure_flags(const IntPolynomial& p) {
  if (p.is_zero()) throw Error("zero polynomial");
  StructureFlags f;
  f.monic = p.is_monic();
  const auto& c = p.coeffs();
  f.reciprocal = std::equal(c.begin(), c.end(), c.rbegin());
  f.height = 0;
  int prev = 0;
  for (const auto& v : c) {
    mpz_class m = abs(v);
    if (m > f.height) f.height = m;
    int s = sgn(v);
    if (s != 0) {
      if (prev != 0 && s != prev) f.sign_changes++;
      prev = s;
    }
  }
  return f;
}

bool try_divide(const IntPolynomial& p, const IntPolynomial& q,
                IntPolynomial& quotient, IntPolynomial& remainder) {
  if (q.is_zero()) throw Error("division by the zero polynomial");
  std::vector<mpz_class> r(p.coeffs());
  size_t dq = q.degree();
  if (p.is_zero() || p.degree() < dq) {
    quotient = IntPolynomial();
    remainder = p;
    return true;
  }
  std::vector<mpz_class> qq(p.degree() - dq + 1, 0);
  const mpz_class& lead = q.leading();
  for (size_t k = p.degree() + 1; k-- > dq;) {
    if (r[k] == 0) continue;
    mpz_class t, rem;
    mpz_tdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), lead.get_mpz_t());
    if (rem != 0) return false;
    qq[k - dq] = t;
    for (size_t j = 0; j <= dq; j++) r[k - dq + j] -= t * q[j];
  }
  quotient = IntPolynomial(std::move(qq));
  remainder = IntPolynomial(std::move(r));
  return true;
}

IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial quo, rem;
  if (!try_divide(p, q, quo, rem) || !rem.is_zero()) throw Error("not divisible");
  return quo;
}

}  // namespace parrylab
