#include "cfhom/integer.hpp"

#include <cctype>

#include "cfhom/error.hpp"

namespace cfhom {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty())
    throw Error("invalid integer literal '" + std::string(text) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error("invalid integer literal '" + std::string(text) + "'");
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  return Integer(normalized, 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

unsigned valuation(const Integer& x, const Integer& p) {
  if (x == 0) throw Error("valuation of zero is undefined");
  if (p < 2) throw Error("valuation base must be at least 2");
  Integer rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer power(const Integer& base, unsigned exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::optional<std::pair<Integer, unsigned>> as_prime_power(const Integer& q) {
  if (q < 2) return std::nullopt;
  auto factors = factorize(q);
  if (factors.size() != 1) return std::nullopt;
  return factors.front();
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  std::vector<std::pair<Integer, unsigned>> out;
  Integer rest = abs(n);
  if (rest < 2) return out;
  for (Integer d = 2; d * d <= rest; ++d) {
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (rest > 1) out.emplace_back(rest, 1U);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer mod_floor(const Integer& x, const Integer& q) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
  return r;
}

}  // namespace cfhom
