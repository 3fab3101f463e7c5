#include "zetakit/precision.hpp"

#include <cstdlib>
#include <cstring>
#include <vector>

namespace zk {

std::string Real::to_string(long digits) const {
  if (digits < 1) digits = 1;
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (is_zero()) return "0";

  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);

  bool neg = !m.empty() && m[0] == '-';
  std::string mag = neg ? m.substr(1) : m;

  // strip trailing zeros but keep at least one digit
  size_t last = mag.find_last_not_of('0');
  if (last != std::string::npos) mag = mag.substr(0, last + 1);
  if (mag.empty()) mag = "0";

  std::string out;
  long exp10 = static_cast<long>(e);  // value = 0.mag * 10^exp10
  if (exp10 >= 1 && exp10 <= digits + 4) {
    if (static_cast<size_t>(exp10) >= mag.size()) {
      out = mag + std::string(static_cast<size_t>(exp10) - mag.size(), '0');
    } else {
      out = mag.substr(0, static_cast<size_t>(exp10)) + "." + mag.substr(static_cast<size_t>(exp10));
    }
  } else if (exp10 <= 0 && exp10 > -6) {
    out = "0." + std::string(static_cast<size_t>(-exp10), '0') + mag;
  } else {
    out = mag.substr(0, 1);
    if (mag.size() > 1) out += "." + mag.substr(1);
    out += "e" + std::to_string(exp10 - 1);
  }
  return neg ? "-" + out : out;
}

}  // namespace zk
