#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cyclolie/scalar.hpp"

namespace cyclolie {

/// Monomial in named parameters: variable name -> positive exponent.
using Monomial = std::map<std::string, int>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored; the zero polynomial has no terms.
struct Polynomial {
  std::map<Monomial, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Polynomial& other) const = default;
};

Polynomial poly_constant(const Scalar& value);
Polynomial poly_variable(const std::string& name, int exponent = 1);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Scalar& s);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Evaluate at a rational point; throws std::out_of_range for an unbound variable.
Scalar poly_eval(const Polynomial& p, const std::map<std::string, Scalar>& point);

/// Parse expressions like "2*t4*t6 - t3*t6^2 + 1" or "1+t1". Supported syntax:
/// terms joined by +/-, factors joined by '*', each factor a rational literal
/// or a variable with optional '^k' power. No parentheses.
Polynomial parse_poly(std::string_view text);

/// Canonical text form, inverse of parse_poly up to term ordering.
std::string render_poly(const Polynomial& p);

}  // namespace cyclolie
