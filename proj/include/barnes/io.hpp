#pragma once

// Decimal/complex literal parsing and the machine-readable output record.

#include "barnes/context.hpp"
#include "barnes/mpreal.hpp"

#include <string>

namespace barnes {

// "a+bi" decimal literals; plain reals are the special case b = 0.
// Accepted forms: "1.5", "-2e3", "0.5+1.5i", "1-2i", "2i", "i", "-i".
inline MPComplex parse_complex(const std::string& text, mpfr_prec_t bits) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("parse_complex: empty literal");
  if (s.back() == 'i' || s.back() == 'I' || s.back() == 'j') {
    s.pop_back();
    // split at the last +/- that is not an exponent sign and not leading
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    std::string re_part = (split == std::string::npos) ? "0" : s.substr(0, split);
    std::string im_part = (split == std::string::npos) ? s : s.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return {MPReal(re_part.c_str(), bits), MPReal(im_part.c_str(), bits)};
  }
  return MPComplex(MPReal(s.c_str(), bits));
}

struct OutputRecord {
  std::string value;  // decimal string, >= digits significant figures
  double err_log10 = -400;
  std::string method;
  long digits = 0;
  double elapsed_ms = 0;
};

inline std::string format_value(const MPComplex& v, long digits) {
  if (v.im.is_zero()) return v.re.to_string(digits);
  std::string im = v.im.to_string(digits);
  return "{re: " + v.re.to_string(digits) + ", im: " + im + "}";
}

}  // namespace barnes
