#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ordstat {

// Unbounded exact arithmetic. All statistics, cardinalities and inequality
// decisions in this library go through these types; no floating point.
using BigInt = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Trial-division factorization, primes strictly increasing. Requires n >= 1;
// factorize(1) is the empty list.
std::vector<PrimePower> factorize(const BigInt& n);

// Number of positive divisors d(n). Requires n >= 1. Multiplicative over
// coprime factors.
BigInt divisor_count(const BigInt& n);

// Exact ordering of x versus y^c for positive rationals x, y and a positive
// rational exponent c = a/b in lowest terms: decided by comparing x^b
// against y^a with integer cross-multiplication.
std::strong_ordering cmp_rational_power(const Rational& x, const Rational& y,
                                        const Rational& c);

// num/den in canonical form (lowest terms, positive denominator).
Rational make_rational(const BigInt& num, const BigInt& den);

// Accepts "a/b" or a bare integer "a".
Rational parse_rational(const std::string& text);

// Always renders with an explicit denominator: "numerator/denominator".
std::string rational_str(const Rational& q);

// base^exp for exp >= 0, by squaring.
Rational rational_pow(const Rational& base, const BigInt& exp);
BigInt int_pow(const BigInt& base, uint64_t exp);

// Narrowing with a range check; DomainError when n does not fit.
uint64_t to_u64(const BigInt& n);

}  // namespace ordstat
