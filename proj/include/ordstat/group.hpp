#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ordstat/arith.hpp"
#include "ordstat/element.hpp"

namespace ordstat {

struct Caps {
  uint64_t enumeration = uint64_t{1} << 20;
  uint64_t class_count = uint64_t{1} << 14;
};

Caps& default_caps();

struct PermutationRealization {
  uint32_t degree = 0;
};

struct ModMatrixRealization {
  uint32_t dim = 0;
  uint64_t modulus = 0;
};

class FiniteGroup;

// Shared data of a semidirect product (Z/p^s)^rank x| P: the enumerated
// acting group P, its multiplication tables, and the action matrix of every
// P-element (column convention, a homomorphism into GL_rank(Z/p^s)).
struct SemidirectContext {
  uint64_t p = 0;
  uint64_t s = 0;
  uint64_t modulus = 0;  // p^s
  uint32_t rank = 0;
  std::shared_ptr<const FiniteGroup> actor;
  std::vector<uint32_t> mult;     // |P| x |P| multiplication table
  std::vector<uint32_t> inverse;  // per P-element
  std::vector<std::vector<uint64_t>> action;  // per P-element, rank x rank mod p^s
  uint32_t identity_index = 0;
  std::optional<uint32_t> z_index;  // designated central element of P

  uint32_t actor_count() const { return static_cast<uint32_t>(inverse.size()); }
  uint32_t actor_mult(uint32_t a, uint32_t b) const {
    return mult[static_cast<size_t>(a) * actor_count() + b];
  }
  // out = action[h] * in  (mod p^s)
  void apply_action(uint32_t h, const uint64_t* in, uint64_t* out) const;
  uint64_t pair_group_order() const;
};

struct SemidirectRealization {
  std::shared_ptr<const SemidirectContext> ctx;
};

using Realization =
    std::variant<PermutationRealization, ModMatrixRealization, SemidirectRealization>;

// Generator-based finite group in one of three realizations. All group
// algorithms below are realization-agnostic through multiply / inverse /
// identity / equality. The element list is computed once, by breadth-first
// closure of the generators, and stored sorted by canonical encoding.
class FiniteGroup {
 public:
  FiniteGroup(Realization realization, std::vector<GroupElement> generators,
              std::string name = {});

  const std::string& name() const { return name_; }
  const Realization& realization() const { return realization_; }
  const std::vector<GroupElement>& generators() const { return generators_; }

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  // g^-1 x g
  GroupElement conjugate(const GroupElement& x, const GroupElement& g) const;
  GroupElement power(const GroupElement& a, uint64_t k) const;

  const std::vector<GroupElement>& elements() const;
  uint64_t order() const { return elements().size(); }
  bool enumerated() const { return cache_ != nullptr; }
  // Known without enumeration for semidirect pairs: p^{s*rank} * |P|.
  std::optional<uint64_t> known_order() const;

  bool contains(const GroupElement& g) const;
  uint32_t index_of(const GroupElement& g) const;  // MembershipError if absent
  uint32_t inverse_index(uint32_t i) const;

  uint64_t enumeration_cap() const { return enumeration_cap_; }
  void set_enumeration_cap(uint64_t cap) { enumeration_cap_ = cap; }

  const std::vector<PrimePower>& order_factorization() const;

 private:
  struct Cache {
    std::vector<GroupElement> elements;  // sorted
    std::unordered_map<GroupElement, uint32_t> index;
    std::vector<uint32_t> inverse;
    std::vector<PrimePower> order_factors;
  };

  void enumerate() const;
  void validate_generators() const;

  Realization realization_;
  std::vector<GroupElement> generators_;
  std::string name_;
  uint64_t enumeration_cap_;
  mutable std::shared_ptr<Cache> cache_;
};

// Element subset of an ambient group, closed under product and inverse.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& ambient, std::vector<GroupElement> elements);

  const FiniteGroup& ambient() const { return *ambient_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  uint64_t order() const { return elements_.size(); }
  bool contains(const GroupElement& g) const;

 private:
  const FiniteGroup* ambient_;
  std::vector<GroupElement> elements_;  // sorted, deduplicated
};

// Minimal k >= 1 with g^k = identity, computed as the minimal divisor of the
// group order with that property (square-and-multiply per prime factor).
uint64_t element_order(const FiniteGroup& g, const GroupElement& x);
// Same, with the ambient order supplied (any multiple of the true order
// works); usable without enumerating the group.
uint64_t element_order_with(const FiniteGroup& g, const GroupElement& x,
                            uint64_t order_multiple,
                            std::span<const PrimePower> factors);

// Order of the group, preferring the a-priori order of semidirect pairs so
// statistics over subgroups do not force enumeration of the ambient group.
uint64_t group_order_hint(const FiniteGroup& g);

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const GroupElement> s);
// Subgroup generated by all commutators of pairs from `s`.
Subgroup derived_subgroup(const FiniteGroup& g, std::span<const GroupElement> s);
Subgroup commutator_subgroup(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
// Frattini subgroup of a p-group: generated by commutators and p-th powers.
Subgroup frattini_subgroup_p(const FiniteGroup& g, uint64_t p);
// Generated by all elements whose order does not divide p.
Subgroup hughes_subgroup(const FiniteGroup& g, uint64_t p);

std::vector<std::vector<uint32_t>> conjugacy_classes(
    const FiniteGroup& g, std::optional<uint64_t> cap = std::nullopt);
uint64_t conjugacy_class_count(const FiniteGroup& g,
                               std::optional<uint64_t> cap = std::nullopt);

bool is_solvable(const FiniteGroup& g);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Left-regular permutation realization of an enumerated group; generator
// list parallels g's generators.
FiniteGroup regular_permutation_group(const FiniteGroup& g, std::string name = {});

// Exponent of G/[G,G], i.e. the largest coset order in the abelianization.
uint64_t abelianization_exponent(const FiniteGroup& g);

// The prime p when |G| is a nontrivial power of p.
std::optional<uint64_t> p_group_prime(const FiniteGroup& g);
bool is_p_group(const FiniteGroup& g, uint64_t p);

}  // namespace ordstat
