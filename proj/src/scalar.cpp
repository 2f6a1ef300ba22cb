#include "cyclolie/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace cyclolie {

Scalar parse_scalar(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool seen_digit = false;
  bool seen_slash = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '-' || c == '+') {
      if (i != 0 && s[i - 1] != '/') throw std::invalid_argument("bad rational: " + s);
    } else if (c == '/') {
      if (seen_slash || !seen_digit) throw std::invalid_argument("bad rational: " + s);
      seen_slash = true;
    } else {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (!seen_digit || s.back() == '/') throw std::invalid_argument("bad rational: " + s);
  Scalar value;
  if (mpq_set_str(value.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("bad rational: " + s);
  }
  if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0) {
    throw std::invalid_argument("zero denominator: " + s);
  }
  value.canonicalize();
  return value;
}

std::string render_scalar(const Scalar& value) { return value.get_str(); }

Scalar scalar_pow(const Scalar& value, unsigned exponent) {
  Scalar acc(1);
  Scalar base = value;
  while (exponent) {
    if (exponent & 1u) acc *= base;
    base *= base;
    exponent >>= 1u;
  }
  return acc;
}

}  // namespace cyclolie
