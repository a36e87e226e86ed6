#include "ordstat/arith.hpp"

#include <stdexcept>

#include "ordstat/error.hpp"

namespace ordstat {

std::vector<PrimePower> factorize(const BigInt& n) {
  if (n <= 0) throw DomainError("factorize: argument must be >= 1, got " + n.get_str());
  std::vector<PrimePower> out;
  BigInt m = n;
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  BigInt d = 5;
  // 6k +/- 1 wheel; the integers factored here are group orders or smooth
  // prime powers, well within trial-division range.
  while (d * d <= m) {
    strip(d);
    strip(d + 2);
    d += 6;
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

BigInt divisor_count(const BigInt& n) {
  if (n <= 0) throw DomainError("divisor_count: argument must be >= 1, got " + n.get_str());
  BigInt count = 1;
  for (const auto& [p, e] : factorize(n)) count *= BigInt(e + 1);
  return count;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_rational(BigInt(text), 1);
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

std::string rational_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_pow(const Rational& base, const BigInt& exp) {
  if (exp < 0) throw DomainError("rational_pow: negative exponent");
  Rational result(1);
  Rational sq = base;
  size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  if (exp == 0) return result;
  for (size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(exp.get_mpz_t(), i)) result *= sq;
    if (i + 1 < bits) sq *= sq;
  }
  return result;
}

BigInt int_pow(const BigInt& base, uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

std::strong_ordering cmp_rational_power(const Rational& x, const Rational& y,
                                        const Rational& c) {
  if (x <= 0 || y <= 0 || c <= 0)
    throw DomainError("cmp_rational_power: x, y and c must all be positive");
  // x ? y^(a/b)  <=>  x^b ? y^a for positive values. mpq_class keeps c in
  // lowest terms, so a = num(c), b = den(c).
  Rational lhs = rational_pow(x, c.get_den());
  Rational rhs = rational_pow(y, c.get_num());
  int cmp = mpq_cmp(lhs.get_mpq_t(), rhs.get_mpq_t());
  if (cmp < 0) return std::strong_ordering::less;
  if (cmp > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

uint64_t to_u64(const BigInt& n) {
  if (n < 0 || !n.fits_ulong_p())
    throw DomainError("value out of uint64 range: " + n.get_str());
  return static_cast<uint64_t>(n.get_ui());
}

}  // namespace ordstat
