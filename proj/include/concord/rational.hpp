#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace concord {

// Parses "p", "p/q", decimals ("0.25") and scientific notation ("1e-9")
// into an exact rational.  Throws validation_error on malformed input.
mpq_class parse_rational(std::string_view text);

// Canonical text: "p/q", or just "p" when the denominator is 1.
std::string rational_str(const mpq_class& q);

std::string integer_str(const mpz_class& z);

} // namespace concord
