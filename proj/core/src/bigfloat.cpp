#include "parrylab/bigfloat.hpp"

#include <cstdlib>
#include <vector>

namespace parrylab {

std::string BigFloat::str(size_t digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (digits == 0) digits = static_cast<size_t>(mpfr_get_prec(v_) * 0.30103) + 1;
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  bool neg = !m.empty() && m[0] == '-';
  std::string mag = neg ? m.substr(1) : m;
  std::string out;
  if (mpfr_zero_p(v_)) {
    out = "0";
  } else if (e <= 0) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + mag;
  } else if (static_cast<size_t>(e) >= mag.size()) {
    out = mag + std::string(static_cast<size_t>(e) - mag.size(), '0');
  } else {
    out = mag.substr(0, static_cast<size_t>(e)) + "." + mag.substr(static_cast<size_t>(e));
  }
  // trim trailing zeros of a fraction, keep at least one digit
  if (out.find('.') != std::string::npos) {
    size_t last = out.find_last_not_of('0');
    if (out[last] == '.') last--;
    out.erase(last + 1);
  }
  return neg ? "-" + out : out;
}

}  // namespace parrylab
