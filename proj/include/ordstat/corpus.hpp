#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordstat/group.hpp"

namespace ordstat {

struct NamedParams {
  std::optional<uint64_t> n;
  std::optional<uint64_t> p;
  std::optional<uint64_t> s;
  std::optional<uint64_t> r;
  std::optional<uint64_t> order;
};

// Built-in groups, all constructed from first principles:
//   cyclic(n), dihedral(n) of order 2n, generalized-quaternion(order),
//   elementary-abelian(p, r), homocyclic(p, s, r), heisenberg-mod-p(p),
//   modular-p-group(p), symmetric(n), alternating(n), Q8, A5.
FiniteGroup make_named_group(std::string_view name, const NamedParams& params);

// Wall-property verification of a p-group:
//   (a) the Frattini subgroup has exponent p (or is trivial),
//   (b) |P / Phi(P)| = p^p, reported as the rank with a separate flag,
//   (c) every element outside Phi(P) has order exactly p^2 and the p-th
//       powers fill one central cyclic subgroup of order p equal to the
//       subgroup generated by all p-th powers.
struct SecretiveReport {
  uint64_t p = 0;
  uint64_t group_order = 0;
  uint64_t frattini_order = 0;
  bool frattini_exponent_ok = false;   // (a)
  uint64_t rank = 0;                   // log_p |P / Phi(P)|
  bool rank_equals_p = false;          // (b)
  bool outside_orders_ok = false;      // (c), order part
  bool powers_central_cyclic_ok = false;  // (c), p-th power part
  std::optional<GroupElement> z;       // present iff the power part holds

  bool all_clauses() const {
    return frattini_exponent_ok && rank_equals_p && outside_orders_ok &&
           powers_central_cyclic_ok;
  }
};

SecretiveReport secretive_report(const FiniteGroup& P, uint64_t p);

struct CorpusEntry {
  std::string label;
  FiniteGroup group;
};

// Deterministic list of every built-in family member of order <= max_order.
std::vector<CorpusEntry> scan_corpus(uint64_t max_order);
// The prime-power-order members, with their primes.
struct PGroupEntry {
  std::string label;
  FiniteGroup group;
  uint64_t p;
};
std::vector<PGroupEntry> scan_corpus_p_groups(uint64_t max_order);

}  // namespace ordstat
