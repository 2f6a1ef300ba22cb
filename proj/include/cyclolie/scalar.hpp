#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cyclolie {

/// Exact rational scalar; the single coefficient domain for all computation.
/// Always kept in lowest terms with positive denominator (canonical form).
using Scalar = mpq_class;

/// Parse "p", "-p", or "p/q" (q > 0 after canonicalization).
/// Throws std::invalid_argument on malformed input or zero denominator.
Scalar parse_scalar(std::string_view text);

/// Render in lowest terms: "p" when the denominator is 1, else "p/q".
std::string render_scalar(const Scalar& value);

inline int scalar_sign(const Scalar& value) { return mpq_sgn(value.get_mpq_t()); }

/// value^exponent for a non-negative integer exponent (0^0 = 1).
Scalar scalar_pow(const Scalar& value, unsigned exponent);

}  // namespace cyclolie
