#include "ordstat/order_stats.hpp"

#include <numeric>
#include <sstream>

#include "ordstat/error.hpp"

namespace ordstat {

uint64_t OrderSpectrum::total_count() const {
  uint64_t total = 0;
  for (const auto& [o, c] : histogram) total += c;
  return total;
}

std::string OrderSpectrum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [o, c] : histogram) {
    if (!first) os << " ";
    os << o << ":" << c;
    first = false;
  }
  return os.str();
}

OrderSpectrum order_spectrum(const FiniteGroup& ambient,
                             std::span<const GroupElement> elems) {
  uint64_t n = group_order_hint(ambient);
  auto factors = factorize(BigInt(static_cast<unsigned long>(n)));
  OrderSpectrum spec;
  for (const auto& x : elems) ++spec.histogram[element_order_with(ambient, x, n, factors)];
  return spec;
}

OrderSpectrum order_spectrum(const FiniteGroup& g) {
  return order_spectrum(g, g.elements());
}

OrderSpectrum order_spectrum(const Subgroup& h) {
  return order_spectrum(h.ambient(), h.elements());
}

BigInt psi(const OrderSpectrum& s) {
  BigInt total = 0;
  for (const auto& [o, c] : s.histogram)
    total += BigInt(static_cast<unsigned long>(o)) * BigInt(static_cast<unsigned long>(c));
  return total;
}

BigInt psi(const FiniteGroup& g) { return psi(order_spectrum(g)); }
BigInt psi(const Subgroup& h) { return psi(order_spectrum(h)); }

Rational average_order(const OrderSpectrum& s) {
  return make_rational(psi(s), BigInt(static_cast<unsigned long>(s.total_count())));
}

Rational average_order(const FiniteGroup& g) { return average_order(order_spectrum(g)); }
Rational average_order(const Subgroup& h) { return average_order(order_spectrum(h)); }

uint64_t exponent(const OrderSpectrum& s) {
  uint64_t e = 1;
  for (const auto& [o, c] : s.histogram) e = std::lcm(e, o);
  return e;
}

uint64_t exponent(const FiniteGroup& g) { return exponent(order_spectrum(g)); }
uint64_t exponent(const Subgroup& h) { return exponent(order_spectrum(h)); }

uint64_t max_order(const OrderSpectrum& s) {
  if (s.histogram.empty()) throw DomainError("max_order of empty spectrum");
  return s.histogram.rbegin()->first;
}

uint64_t max_order(const FiniteGroup& g) { return max_order(order_spectrum(g)); }
uint64_t max_order(const Subgroup& h) { return max_order(order_spectrum(h)); }

BigInt psi_cyclic(const BigInt& n) {
  if (n <= 0) throw DomainError("psi_cyclic: argument must be >= 1");
  auto factors = factorize(n);
  // Walk all divisors d of n together with phi(d), multiplicatively.
  BigInt total = 0;
  std::vector<std::pair<BigInt, BigInt>> divisors{{BigInt(1), BigInt(1)}};  // (d, phi(d))
  for (const auto& [p, e] : factors) {
    std::vector<std::pair<BigInt, BigInt>> extended;
    extended.reserve(divisors.size() * (e + 1));
    for (const auto& [d, phi] : divisors) {
      BigInt pk = 1;
      for (unsigned k = 0; k <= e; ++k) {
        BigInt phik;
        if (k == 0)
          phik = 1;
        else if (k == 1)
          phik = p - 1;
        else
          phik = (p - 1) * pk / p;
        extended.emplace_back(d * pk, phi * phik);
        pk *= p;
      }
    }
    divisors = std::move(extended);
  }
  for (const auto& [d, phi] : divisors) total += d * phi;
  return total;
}

Rational homocyclic_average_order(uint64_t p, uint64_t s, uint64_t r) {
  if (s == 0 || r == 0) throw DomainError("homocyclic_average_order: s and r must be >= 1");
  if (p < 2) throw DomainError("homocyclic_average_order: p must be a prime >= 2");
  BigInt bp(static_cast<unsigned long>(p));
  BigInt num = 1;
  for (uint64_t j = 1; j <= s; ++j)
    num += int_pow(bp, j) * (int_pow(bp, j * r) - int_pow(bp, (j - 1) * r));
  return make_rational(num, int_pow(bp, s * r));
}

}  // namespace ordstat
