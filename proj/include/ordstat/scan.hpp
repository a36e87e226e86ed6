#pragma once

#include <cstdint>
#include <optional>

#include "ordstat/corpus.hpp"
#include "ordstat/lattice.hpp"
#include "ordstat/order_stats.hpp"
#include "ordstat/report.hpp"

namespace ordstat {

// Order statistics of a built semidirect group without enumerating it.
// Elements outside W = U_s Phi(P) are counted as order p^2 only after the
// algebraic criterion establishes that; W itself is walked fully.
struct ShellStats {
  uint64_t group_order = 0;
  uint64_t shell_order = 0;
  bool outside_established = false;
  OrderSpectrum spectrum;  // valid only when outside_established
};

ShellStats shell_order_statistics(const SemidirectGroup& sd);

// Order-structure check of a built group: every element outside the shell
// W = U_s Phi(P) has order exactly p^2, every element inside W has order at
// most p^(s+1). Exhaustive by default; shell mode replaces the outside walk
// with the algebraic criterion.
Report verify_lemma43(const SemidirectGroup& sd, bool shell_mode = false);

// The average-order inequality chain on a built instance: the order
// structure, o(G) < 2 p^2 when s = p+1, o(N) >= p^s - p^(s-1), and the
// headline o(G) < o(N)^c by exact cross-multiplication.
Report verify_theorem(uint64_t p, const Rational& c, const SemidirectGroup& G,
                      const Subgroup& N);

// The same chain on exact symbolic bounds only, for parameters whose groups
// are far beyond enumeration scale.
Report verify_theorem_symbolic(uint64_t p, const Rational& c, uint64_t s);

// Exact value of the anti-Hughes average-order bound, 2p - 1/p, with both
// inequalities (bound < 2p and 2p < p^(3/2)) decided by exact comparison.
Report anti_hughes_bound(uint64_t p, uint64_t n);

// Every corpus group with average order below o(A5) must be solvable.
Report scan_conjecture_a5(uint64_t max_order);

// psi(G) <= psi(C_n) over the corpus, equality only with the cyclic
// spectrum, plus the psi(G)/psi(C_n) ratio against 211/1617 per group.
Report scan_psi_max(uint64_t max_order);

// Class-count and average-order versus exponent over the p-group corpus:
// k(P) >= exp(P)^(1/2), o(P) >= exp(P)^(1/2), and the abelianization
// witness k(G)^2 >= p^e - p^(e-1).
Report scan_k_exp(uint64_t max_order, std::optional<uint64_t> class_cap = std::nullopt);

// Exact (o(G_s), mo(G_s)) along the built family at p = 2; asserts the
// squared ratio o^2 / mo strictly decreases across the requested range.
Report family_ratio_report(uint64_t p, uint64_t s_from, uint64_t s_to,
                           uint64_t shell_from = 4);

Rational kd_ratio(const FiniteGroup& g, std::optional<uint64_t> class_cap = std::nullopt);
Report kd_report(const FiniteGroup& g, std::optional<uint64_t> class_cap = std::nullopt);

}  // namespace ordstat
