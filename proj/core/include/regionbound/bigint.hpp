#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace regionbound {

/// Arbitrary-precision integer used for every count in the library.
using BigInt = mpz_class;

/// Exact rational used by the geometric oracles.
using Rational = mpq_class;

/// binomial(n, k), zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// 2^exponent.
BigInt power_of_two(std::uint64_t exponent);

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed base-10 integer. Throws std::invalid_argument.
BigInt parse_decimal(std::string_view text);

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& value);

/// Accepts "num/den", "num" or a plain decimal fraction such as "-1.25".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace regionbound
