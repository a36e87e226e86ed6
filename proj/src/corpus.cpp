#include "ordstat/corpus.hpp"

#include <unordered_set>

#include "ordstat/error.hpp"
#include "ordstat/order_stats.hpp"

namespace ordstat {

namespace {

uint64_t require(const std::optional<uint64_t>& v, const char* what) {
  if (!v) throw ParameterError(std::string("missing parameter: ") + what);
  return *v;
}

bool is_prime_u64(uint64_t p) {
  BigInt b(static_cast<unsigned long>(p));
  return p >= 2 && mpz_probab_prime_p(b.get_mpz_t(), 30) != 0;
}

uint64_t require_prime(const std::optional<uint64_t>& v, const char* what) {
  uint64_t p = require(v, what);
  if (!is_prime_u64(p)) throw ParameterError(std::string(what) + " must be prime");
  return p;
}

GroupElement perm(std::vector<uint32_t> image) {
  return GroupElement(PermutationData{std::move(image)});
}

// Disjoint cycles of length `cycle_len` on `blocks` blocks; generator t
// rotates block t.
std::vector<GroupElement> block_cycle_generators(uint64_t cycle_len, uint64_t blocks) {
  std::vector<GroupElement> gens;
  uint32_t degree = static_cast<uint32_t>(cycle_len * blocks);
  for (uint64_t b = 0; b < blocks; ++b) {
    std::vector<uint32_t> img(degree);
    for (uint32_t x = 0; x < degree; ++x) img[x] = x;
    uint32_t base = static_cast<uint32_t>(b * cycle_len);
    for (uint32_t k = 0; k < cycle_len; ++k)
      img[base + k] = base + static_cast<uint32_t>((k + 1) % cycle_len);
    gens.push_back(perm(std::move(img)));
  }
  return gens;
}

FiniteGroup make_cyclic(uint64_t n) {
  if (n == 0) throw ParameterError("cyclic: n must be >= 1");
  uint32_t deg = static_cast<uint32_t>(std::max<uint64_t>(n, 1));
  std::vector<GroupElement> gens;
  if (n > 1) gens = block_cycle_generators(n, 1);
  return FiniteGroup(PermutationRealization{deg}, std::move(gens),
                     "cyclic(" + std::to_string(n) + ")");
}

FiniteGroup make_dihedral(uint64_t n) {
  if (n < 3) throw ParameterError("dihedral: n must be >= 3 (order 2n)");
  uint32_t deg = static_cast<uint32_t>(n);
  std::vector<uint32_t> rot(deg), ref(deg);
  for (uint32_t x = 0; x < deg; ++x) {
    rot[x] = (x + 1) % deg;
    ref[x] = (deg - x) % deg;
  }
  return FiniteGroup(PermutationRealization{deg}, {perm(rot), perm(ref)},
                     "dihedral(" + std::to_string(n) + ")");
}

// Left multiplication on the normal forms a^i b^j (i < order/2, j < 2).
FiniteGroup make_generalized_quaternion(uint64_t order) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw ParameterError("generalized-quaternion: order must be a power of 2, >= 8");
  uint32_t half = static_cast<uint32_t>(order / 2);
  uint32_t quarter = half / 2;
  uint32_t deg = static_cast<uint32_t>(order);
  std::vector<uint32_t> a(deg), b(deg);
  for (uint32_t i = 0; i < half; ++i) {
    a[i] = (i + 1) % half;               // a * a^i = a^(i+1)
    a[half + i] = half + (i + 1) % half; // a * a^i b = a^(i+1) b
    b[i] = half + (half - i) % half;     // b * a^i = a^(-i) b
    b[half + i] = (quarter + half - i) % half;  // b * a^i b = a^(quarter - i)
  }
  return FiniteGroup(PermutationRealization{deg}, {perm(a), perm(b)},
                     "generalized-quaternion(" + std::to_string(order) + ")");
}

FiniteGroup make_homocyclic(uint64_t p, uint64_t s, uint64_t r, const char* label) {
  if (s == 0 || r == 0) throw ParameterError("homocyclic: s and r must be >= 1");
  uint64_t cycle = to_u64(int_pow(BigInt(static_cast<unsigned long>(p)), s));
  uint32_t deg = static_cast<uint32_t>(cycle * r);
  std::string name = std::string(label) + "(" + std::to_string(p);
  if (std::string(label) == "homocyclic") name += "," + std::to_string(s);
  name += "," + std::to_string(r) + ")";
  return FiniteGroup(PermutationRealization{deg}, block_cycle_generators(cycle, r),
                     std::move(name));
}

GroupElement matrix(uint32_t dim, uint64_t modulus, std::vector<uint64_t> entries) {
  return GroupElement(MatrixData{dim, modulus, std::move(entries)});
}

FiniteGroup make_heisenberg(uint64_t p) {
  // Upper unitriangular 3x3 matrices mod p.
  return FiniteGroup(ModMatrixRealization{3, p},
                     {matrix(3, p, {1, 1, 0, 0, 1, 0, 0, 0, 1}),
                      matrix(3, p, {1, 0, 0, 0, 1, 1, 0, 0, 1})},
                     "heisenberg-mod-p(" + std::to_string(p) + ")");
}

FiniteGroup make_modular_p(uint64_t p) {
  // <a, b | a^(p^2) = b^p = 1, b a b^-1 = a^(1+p)> as 2x2 matrices mod p^2.
  uint64_t m = p * p;
  return FiniteGroup(ModMatrixRealization{2, m},
                     {matrix(2, m, {1, 1, 0, 1}), matrix(2, m, {1 + p, 0, 0, 1})},
                     "modular-p-group(" + std::to_string(p) + ")");
}

FiniteGroup make_symmetric(uint64_t n) {
  if (n == 0) throw ParameterError("symmetric: n must be >= 1");
  uint32_t deg = static_cast<uint32_t>(n);
  std::vector<GroupElement> gens;
  if (n >= 2) {
    std::vector<uint32_t> t(deg);
    for (uint32_t x = 0; x < deg; ++x) t[x] = x;
    t[0] = 1;
    t[1] = 0;
    gens.push_back(perm(std::move(t)));
  }
  if (n >= 3) {
    std::vector<uint32_t> c(deg);
    for (uint32_t x = 0; x < deg; ++x) c[x] = (x + 1) % deg;
    gens.push_back(perm(std::move(c)));
  }
  return FiniteGroup(PermutationRealization{deg}, std::move(gens),
                     "symmetric(" + std::to_string(n) + ")");
}

FiniteGroup make_alternating(uint64_t n) {
  if (n == 0) throw ParameterError("alternating: n must be >= 1");
  uint32_t deg = static_cast<uint32_t>(n);
  std::vector<GroupElement> gens;
  if (n >= 3) {
    std::vector<uint32_t> c3(deg);
    for (uint32_t x = 0; x < deg; ++x) c3[x] = x;
    c3[0] = 1;
    c3[1] = 2;
    c3[2] = 0;
    gens.push_back(perm(std::move(c3)));
  }
  if (n >= 4) {
    std::vector<uint32_t> c(deg);
    if (n % 2 == 1) {
      for (uint32_t x = 0; x < deg; ++x) c[x] = (x + 1) % deg;  // n-cycle, even
    } else {
      c[0] = 0;
      for (uint32_t x = 1; x < deg; ++x) c[x] = 1 + (x % (deg - 1));  // (n-1)-cycle
    }
    gens.push_back(perm(std::move(c)));
  }
  return FiniteGroup(PermutationRealization{deg}, std::move(gens),
                     "alternating(" + std::to_string(n) + ")");
}

FiniteGroup make_q8_matrices() {
  // Left multiplication by the quaternion units i and j on the basis
  // 1, i, j, k, with entries reduced mod 4 (so -1 stays distinct from 1).
  return FiniteGroup(ModMatrixRealization{4, 4},
                     {matrix(4, 4, {0, 3, 0, 0, 1, 0, 0, 0, 0, 0, 0, 3, 0, 0, 1, 0}),
                      matrix(4, 4, {0, 0, 3, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 3, 0, 0})},
                     "Q8");
}

}  // namespace

FiniteGroup make_named_group(std::string_view name, const NamedParams& params) {
  if (name == "cyclic") return make_cyclic(require(params.n, "n"));
  if (name == "dihedral") return make_dihedral(require(params.n, "n"));
  if (name == "generalized-quaternion")
    return make_generalized_quaternion(
        params.order ? *params.order : require(params.n, "order"));
  if (name == "elementary-abelian")
    return make_homocyclic(require_prime(params.p, "p"), 1, require(params.r, "r"),
                           "elementary-abelian");
  if (name == "homocyclic")
    return make_homocyclic(require_prime(params.p, "p"), require(params.s, "s"),
                           require(params.r, "r"), "homocyclic");
  if (name == "heisenberg-mod-p") return make_heisenberg(require_prime(params.p, "p"));
  if (name == "modular-p-group") return make_modular_p(require_prime(params.p, "p"));
  if (name == "symmetric") return make_symmetric(require(params.n, "n"));
  if (name == "alternating") return make_alternating(require(params.n, "n"));
  if (name == "Q8") return make_q8_matrices();
  if (name == "A5") return make_alternating(5);
  throw ParameterError("unknown named group: " + std::string(name));
}

SecretiveReport secretive_report(const FiniteGroup& P, uint64_t p) {
  if (!is_prime_u64(p)) throw ParameterError("secretive check: p must be prime");
  if (!is_p_group(P, p))
    throw DomainError("secretive check: group order " + std::to_string(P.order()) +
                      " is not a power of " + std::to_string(p));
  SecretiveReport rep;
  rep.p = p;
  rep.group_order = P.order();

  Subgroup phi = frattini_subgroup_p(P, p);
  rep.frattini_order = phi.order();
  rep.frattini_exponent_ok = phi.order() == 1 || exponent(phi) == p;

  uint64_t quotient = P.order() / phi.order();
  uint64_t rank = 0;
  while (quotient > 1) {
    quotient /= p;
    ++rank;
  }
  rep.rank = rank;
  rep.rank_equals_p = (rank == p);

  // Clause (c): outside orders and the p-th power subgroup.
  std::vector<GroupElement> outside_powers;
  std::vector<GroupElement> all_powers;
  std::unordered_set<GroupElement> seen_out, seen_all;
  rep.outside_orders_ok = true;
  for (const auto& x : P.elements()) {
    GroupElement xp = P.power(x, p);
    if (seen_all.insert(xp).second) all_powers.push_back(xp);
    if (phi.contains(x)) continue;
    if (element_order_with(P, x, P.order(), P.order_factorization()) != p * p)
      rep.outside_orders_ok = false;
    if (seen_out.insert(xp).second) outside_powers.push_back(xp);
  }

  Subgroup from_outside = generated_subgroup(P, outside_powers);
  Subgroup power_subgroup = generated_subgroup(P, all_powers);
  Subgroup zcenter = center(P);
  bool nontrivial_powers = true;
  for (const auto& t : outside_powers)
    if (t == P.identity()) nontrivial_powers = false;
  bool central = true;
  for (const auto& t : from_outside.elements())
    if (!zcenter.contains(t)) central = false;
  rep.powers_central_cyclic_ok = !outside_powers.empty() && nontrivial_powers && central &&
                                 from_outside.order() == p &&
                                 from_outside.elements() == power_subgroup.elements();
  if (rep.powers_central_cyclic_ok) {
    // Deterministic witness: the smallest nontrivial element of <z>.
    for (const auto& t : from_outside.elements())
      if (t != P.identity()) {
        rep.z = t;
        break;
      }
  }
  return rep;
}

std::vector<CorpusEntry> scan_corpus(uint64_t max_order) {
  std::vector<CorpusEntry> out;
  auto add = [&](FiniteGroup g) {
    std::string label = g.name();
    out.push_back({std::move(label), std::move(g)});
  };
  for (uint64_t n = 1; n <= max_order; ++n) add(make_cyclic(n));
  for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (uint64_t r = 2;; ++r) {
      BigInt order = int_pow(BigInt(static_cast<unsigned long>(p)), r);
      if (order > BigInt(static_cast<unsigned long>(max_order))) break;
      add(make_homocyclic(p, 1, r, "elementary-abelian"));
    }
  }
  for (uint64_t p : {2, 3, 5}) {
    for (uint64_t s = 2; s <= 6; ++s)
      for (uint64_t r = 2; r <= 6; ++r) {
        BigInt order = int_pow(BigInt(static_cast<unsigned long>(p)), s * r);
        if (order > BigInt(static_cast<unsigned long>(max_order))) continue;
        add(make_homocyclic(p, s, r, "homocyclic"));
      }
  }
  for (uint64_t n = 3; 2 * n <= max_order; ++n) add(make_dihedral(n));
  for (uint64_t o = 8; o <= max_order; o *= 2) add(make_generalized_quaternion(o));
  for (uint64_t n = 3, f = 6; f <= max_order; ++n, f *= (n)) add(make_symmetric(n));
  for (uint64_t n = 4; n <= 8; ++n) {
    BigInt half = 1;
    for (uint64_t k = 2; k <= n; ++k) half *= BigInt(static_cast<unsigned long>(k));
    half /= 2;
    if (half <= BigInt(static_cast<unsigned long>(max_order))) add(make_alternating(n));
  }
  for (uint64_t p : {2, 3, 5, 7}) {
    if (p * p * p <= max_order) {
      add(make_heisenberg(p));
      add(make_modular_p(p));
    }
  }
  if (max_order >= 8) add(make_q8_matrices());
  return out;
}

std::vector<PGroupEntry> scan_corpus_p_groups(uint64_t max_order) {
  std::vector<PGroupEntry> out;
  for (auto& entry : scan_corpus(max_order)) {
    if (entry.group.order() <= 1) continue;
    auto p = p_group_prime(entry.group);
    if (!p) continue;
    out.push_back({entry.label, std::move(entry.group), *p});
  }
  return out;
}

}  // namespace ordstat
