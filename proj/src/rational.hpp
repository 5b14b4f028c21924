#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chromagraph {

// Parses "17/4", "-3", "4.25", "-1e-6" into an exact rational. Decimal
// literals are taken at face value, so "6.66" is exactly 333/50.
mpq_class parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const mpq_class& q);
std::string to_string(const mpz_class& z);

int sign(const mpz_class& z);
int sign(const mpq_class& q);

mpz_class factorial(unsigned long k);

// Exact integer power for small exponents.
mpq_class pow(const mpq_class& base, unsigned long exponent);

}  // namespace chromagraph
