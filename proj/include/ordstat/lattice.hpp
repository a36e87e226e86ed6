#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordstat/group.hpp"
#include "ordstat/intmatrix.hpp"
#include "ordstat/report.hpp"

namespace ordstat {

// Exact checks on the distinguished central element's matrix: order p,
// fixed-point-freeness, and the vanishing power sum that forces p-th powers
// of translation-twisted elements to collapse.
struct CentralValidation {
  uint64_t p = 0;
  bool power_p_is_identity = false;  // z^p = I
  bool fixed_point_free = false;     // det(z - I) != 0
  bool power_sum_is_zero = false;    // I + z + ... + z^{p-1} = 0

  bool ok() const { return power_p_is_identity && fixed_point_free && power_sum_is_zero; }
  std::string failure_summary() const;
  std::vector<Check> as_checks() const;
};

CentralValidation validate_central_action(const IntMatrix& z, uint64_t p);

// Full orbit of `start` under the group generated by the matrices, then the
// Hermite-normal-form basis of the integer span of the orbit. The returned
// basis is verified invariant under every generator by exact linear solves.
IntMatrix orbit_lattice(std::span<const IntMatrix> generators,
                        const std::vector<BigInt>& start,
                        uint64_t orbit_cap = uint64_t{1} << 16);

// Rewrites each generator's action in lattice coordinates (exact over Z).
// The returned matrices form a genuine homomorphism under matrix product.
std::vector<IntMatrix> restrict_to_basis(std::span<const IntMatrix> generators,
                                         const IntMatrix& basis);

// Entrywise reduction mod p^s; every reduced matrix must be invertible
// mod p^s (determinant a unit mod p).
std::vector<std::vector<uint64_t>> reduce_action_mod(std::span<const IntMatrix> restricted,
                                                     uint64_t p, uint64_t s);

// The assembled group (Z/p^s)^rank x| P with its distinguished subgroups.
struct SemidirectGroup {
  FiniteGroup group;
  std::shared_ptr<const SemidirectContext> context;
  std::vector<uint32_t> actor_frattini;  // sorted P-indices of the Frattini subgroup
  std::vector<bool> actor_in_frattini;

  uint64_t p() const { return context->p; }
  uint64_t s() const { return context->s; }
  uint64_t modulus() const { return context->modulus; }
  uint32_t rank() const { return context->rank; }
  uint64_t order() const { return context->pair_group_order(); }

  GroupElement make_pair(std::vector<uint64_t> translation, uint32_t actor) const;
  // All pairs (u, actor) for one fixed actor, in lexicographic u order.
  std::vector<GroupElement> translation_coset(uint32_t actor) const;
  // W = U_s Phi(P): every translation paired with every Frattini actor.
  std::vector<GroupElement> shell_elements() const;
  // N = U_s as a subgroup of the built group.
  Subgroup translation_subgroup() const;
  // W as a subgroup of the built group.
  Subgroup shell_subgroup() const;
  bool in_shell(const GroupElement& g) const;
};

// Assembles the group of pairs (u, h) with product
// (u1, h1)(u2, h2) = (u1 + A(h1) u2, h1 h2), extending the generator action
// matrices over the enumerated acting group and verifying the extension is
// well-defined (the matrix of each element is independent of the generator
// word used to reach it). Each action matrix is rank x rank mod p^s.
SemidirectGroup build_semidirect(const FiniteGroup& actor, uint32_t rank,
                                 const std::vector<std::vector<uint64_t>>& generator_action,
                                 uint64_t p, uint64_t s,
                                 std::span<const uint32_t> z_word = {});

// Confirms (u, z^k)^p = identity for every translation u and k = 1..p-1,
// by the additive matrix criterion and, at small scale, exhaustively.
Report verify_power_identity(const SemidirectGroup& sd);

// Representation input document.
struct RepresentationDoc {
  uint64_t p = 0;
  uint32_t dim = 0;
  std::vector<IntMatrix> generators;
  std::vector<uint32_t> z_word;
  std::vector<BigInt> start_vector;
};

RepresentationDoc parse_representation_doc(const nlohmann::json& j);
RepresentationDoc load_representation_doc(const std::string& path);
const char* builtin_q8_representation_json();
RepresentationDoc builtin_q8_representation();

struct ConstructionResult {
  RepresentationDoc doc;
  CentralValidation central;
  IntMatrix z_matrix;
  IntMatrix basis;                      // HNF lattice basis, rank x dim
  std::vector<IntMatrix> restricted;    // generator action in lattice coordinates
  SemidirectGroup semidirect;
};

// The whole pipeline: validate the central action, enumerate the integer
// matrix group, compute the orbit lattice, restrict and reduce the action,
// realize the acting group by left-regular permutations, and assemble the
// semidirect product.
ConstructionResult construct_semidirect(const RepresentationDoc& doc, uint64_t s);

// Small helpers for rank x rank matrices mod m, used by the additive
// power-sum criterion and its tests.
std::vector<uint64_t> mod_mat_identity(uint32_t n, uint64_t m);
std::vector<uint64_t> mod_mat_mult(uint32_t n, std::span<const uint64_t> a,
                                   std::span<const uint64_t> b, uint64_t m);

}  // namespace ordstat
