#include "dapx/bigint.hpp"

#include <cctype>
#include <sstream>

namespace dapx {

std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    try {
      Int n(num), d(den);
      if (d == 0) return std::nullopt;
      Rat r(n, d);
      r.canonicalize();
      return r;
    } catch (...) {
      return std::nullopt;
    }
  }
  auto dot = s.find('.');
  std::string digits = s;
  size_t frac_len = 0;
  if (dot != std::string::npos) {
    frac_len = s.size() - dot - 1;
    digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
  }
  for (size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (i == 0 && (c == '-' || c == '+')) continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  try {
    Int n(digits);
    Rat r(n, pow_int(10, frac_len));
    r.canonicalize();
    return r;
  } catch (...) {
    return std::nullopt;
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_to_decimal(const Rat& r, int sig_digits) {
  if (sig_digits < 1) sig_digits = 1;
  if (r == 0) return "0";
  Rat a = abs_rat(r);
  // decimal exponent e: 10^(e-1) <= a < 10^e
  int e = 0;
  Rat t = a;
  while (t >= 1) {
    t /= 10;
    ++e;
  }
  while (t < Rat(1, 10)) {
    t *= 10;
    --e;
  }
  // digits = round(a * 10^(sig - e)), then render with the decimal point at e
  int shift = sig_digits - e;
  Rat scaled = a;
  if (shift >= 0)
    scaled *= pow_rat(Rat(10), shift);
  else
    scaled /= pow_rat(Rat(10), -shift);
  Int digits = round_rat(scaled);
  std::string ds = digits.get_str();
  if ((int)ds.size() > sig_digits) {  // rounding overflowed, e.g. 999.9 -> 1000
    ds.pop_back();
    ++e;
  }
  std::string out;
  if (sgn(r) < 0) out += "-";
  if (e <= 0) {
    out += "0.";
    out += std::string(-e, '0');
    out += ds;
  } else if (e >= (int)ds.size()) {
    out += ds;
    out += std::string(e - ds.size(), '0');
  } else {
    out += ds.substr(0, e) + "." + ds.substr(e);
  }
  // trim trailing zeros in the fractional part
  if (out.find('.') != std::string::npos) {
    size_t last = out.find_last_not_of('0');
    if (out[last] == '.') --last;
    out.erase(last + 1);
  }
  return out;
}

}  // namespace dapx
