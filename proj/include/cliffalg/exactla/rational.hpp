#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cliffalg::exactla {

// GMP keeps mpq_class values canonical: lowest terms, positive denominator,
// zero stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with q != 0. Surrounding whitespace is ignored.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace cliffalg::exactla
