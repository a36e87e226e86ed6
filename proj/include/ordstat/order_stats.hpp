#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "ordstat/arith.hpp"
#include "ordstat/group.hpp"

namespace ordstat {

// Exact multiset of element orders. Single source of truth for the derived
// statistics below; counts sum to the number of elements, order 1 appears
// exactly once, and every key divides the group order.
struct OrderSpectrum {
  std::map<uint64_t, uint64_t> histogram;

  uint64_t total_count() const;
  std::string to_string() const;  // "1:1 2:15 3:20 5:24"
  bool operator==(const OrderSpectrum&) const = default;
};

OrderSpectrum order_spectrum(const FiniteGroup& g);
// Orders taken within the ambient group; works without enumerating the
// ambient when its order is known a priori.
OrderSpectrum order_spectrum(const FiniteGroup& ambient, std::span<const GroupElement> elems);
OrderSpectrum order_spectrum(const Subgroup& h);

// Sum of all element orders.
BigInt psi(const OrderSpectrum& s);
BigInt psi(const FiniteGroup& g);
BigInt psi(const Subgroup& h);

// psi / cardinality, in lowest terms.
Rational average_order(const OrderSpectrum& s);
Rational average_order(const FiniteGroup& g);
Rational average_order(const Subgroup& h);

// Least common multiple of all element orders.
uint64_t exponent(const OrderSpectrum& s);
uint64_t exponent(const FiniteGroup& g);
uint64_t exponent(const Subgroup& h);

uint64_t max_order(const OrderSpectrum& s);
uint64_t max_order(const FiniteGroup& g);
uint64_t max_order(const Subgroup& h);

// Closed forms, independent of enumeration so each side can serve as the
// other's test oracle.

// psi of the cyclic group: sum over divisors d of n of d * phi(d).
BigInt psi_cyclic(const BigInt& n);

// Exact average order of a homocyclic group of exponent p^s and rank r,
// from the counting identity |{x : x^(p^j) = 1}| = p^{j r}.
Rational homocyclic_average_order(uint64_t p, uint64_t s, uint64_t r);

}  // namespace ordstat
