#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cfhom {

/// Arbitrary-precision integer used for every matrix entry, group order and
/// cardinality in the library.
using Integer = mpz_class;

/// Parses a decimal integer with optional leading sign. Throws cfhom::Error.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// Largest e with p^e | x. Requires x != 0 and p >= 2.
unsigned valuation(const Integer& x, const Integer& p);

bool is_prime(const Integer& n);

Integer power(const Integer& base, unsigned exponent);

/// Returns (p, r) when q = p^r with p prime and r >= 1.
std::optional<std::pair<Integer, unsigned>> as_prime_power(const Integer& q);

/// Prime factorization by trial division; factors in increasing order.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

Integer binomial(unsigned n, unsigned k);

/// Reduces x into [0, q).
Integer mod_floor(const Integer& x, const Integer& q);

}  // namespace cfhom
