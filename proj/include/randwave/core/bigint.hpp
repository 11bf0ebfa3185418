#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace randwave {

/// Arbitrary-precision integer used by all exact combinatorial routines.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow(const BigInt& base, unsigned long exponent);

}  // namespace randwave
