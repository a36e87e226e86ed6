#include "ordstat/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "ordstat/error.hpp"
#include "ordstat/intmatrix.hpp"

namespace ordstat {

Caps& default_caps() {
  static Caps caps;
  return caps;
}

namespace {

IntMatrix to_int_matrix(const MatrixData& m) {
  IntMatrix r(m.dim, m.dim);
  for (uint32_t i = 0; i < m.dim; ++i)
    for (uint32_t j = 0; j < m.dim; ++j) r.at(i, j) = BigInt(m.entry[i * m.dim + j]);
  return r;
}

uint64_t mod_reduce(const BigInt& v, uint64_t m) {
  BigInt r;
  BigInt mod(m);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  return to_u64(r);
}

bool invertible_mod(const MatrixData& m) {
  BigInt det = to_int_matrix(m).determinant();
  BigInt g;
  BigInt mod(m.modulus);
  BigInt d(mod_reduce(det, m.modulus));
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
  return g == 1;
}

MatrixData matrix_inverse(const MatrixData& m) {
  IntMatrix M = to_int_matrix(m);
  BigInt det = M.determinant();
  BigInt mod(m.modulus);
  BigInt detmod(mod_reduce(det, m.modulus));
  BigInt detinv;
  if (mpz_invert(detinv.get_mpz_t(), detmod.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw InvalidGroupError("matrix is not invertible mod " + std::to_string(m.modulus));
  IntMatrix adj = M.adjugate();
  MatrixData out{m.dim, m.modulus, std::vector<uint64_t>(m.entry.size())};
  for (uint32_t i = 0; i < m.dim; ++i)
    for (uint32_t j = 0; j < m.dim; ++j)
      out.entry[i * m.dim + j] = mod_reduce(adj.at(i, j) * detinv, m.modulus);
  return out;
}

}  // namespace

void SemidirectContext::apply_action(uint32_t h, const uint64_t* in, uint64_t* out) const {
  const uint64_t* a = action[h].data();
  for (uint32_t i = 0; i < rank; ++i) {
    unsigned __int128 acc = 0;
    for (uint32_t j = 0; j < rank; ++j)
      acc += static_cast<unsigned __int128>(a[i * rank + j]) * in[j];
    out[i] = static_cast<uint64_t>(acc % modulus);
  }
}

uint64_t SemidirectContext::pair_group_order() const {
  BigInt total = int_pow(BigInt(modulus), rank) * BigInt(actor_count());
  return to_u64(total);
}

FiniteGroup::FiniteGroup(Realization realization, std::vector<GroupElement> generators,
                         std::string name)
    : realization_(std::move(realization)),
      generators_(std::move(generators)),
      name_(std::move(name)),
      enumeration_cap_(default_caps().enumeration) {}

GroupElement FiniteGroup::identity() const {
  if (const auto* p = std::get_if<PermutationRealization>(&realization_)) {
    PermutationData d;
    d.image.resize(p->degree);
    std::iota(d.image.begin(), d.image.end(), 0u);
    return GroupElement(std::move(d));
  }
  if (const auto* m = std::get_if<ModMatrixRealization>(&realization_)) {
    MatrixData d{m->dim, m->modulus, std::vector<uint64_t>(size_t{m->dim} * m->dim, 0)};
    for (uint32_t i = 0; i < m->dim; ++i) d.entry[i * m->dim + i] = 1 % m->modulus;
    return GroupElement(std::move(d));
  }
  const auto& ctx = *std::get<SemidirectRealization>(realization_).ctx;
  SemidirectPairData d;
  d.translation.assign(ctx.rank, 0);
  d.actor = ctx.identity_index;
  return GroupElement(std::move(d));
}

GroupElement FiniteGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  if (a.is<PermutationData>()) {
    const auto& pa = a.as<PermutationData>();
    const auto& pb = b.as<PermutationData>();
    PermutationData r;
    r.image.resize(pa.image.size());
    for (size_t x = 0; x < r.image.size(); ++x) r.image[x] = pa.image[pb.image[x]];
    return GroupElement(std::move(r));
  }
  if (a.is<MatrixData>()) {
    const auto& ma = a.as<MatrixData>();
    const auto& mb = b.as<MatrixData>();
    uint32_t n = ma.dim;
    MatrixData r{n, ma.modulus, std::vector<uint64_t>(size_t{n} * n)};
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) {
        unsigned __int128 acc = 0;
        for (uint32_t k = 0; k < n; ++k)
          acc += static_cast<unsigned __int128>(ma.entry[i * n + k]) * mb.entry[k * n + j];
        r.entry[i * n + j] = static_cast<uint64_t>(acc % ma.modulus);
      }
    return GroupElement(std::move(r));
  }
  const auto& ctx = *std::get<SemidirectRealization>(realization_).ctx;
  const auto& sa = a.as<SemidirectPairData>();
  const auto& sb = b.as<SemidirectPairData>();
  SemidirectPairData r;
  r.translation.resize(ctx.rank);
  ctx.apply_action(sa.actor, sb.translation.data(), r.translation.data());
  for (uint32_t i = 0; i < ctx.rank; ++i)
    r.translation[i] = (r.translation[i] + sa.translation[i]) % ctx.modulus;
  r.actor = ctx.actor_mult(sa.actor, sb.actor);
  return GroupElement(std::move(r));
}

GroupElement FiniteGroup::inverse(const GroupElement& a) const {
  if (cache_) {
    auto it = cache_->index.find(a);
    if (it != cache_->index.end())
      return cache_->elements[cache_->inverse[it->second]];
  }
  if (a.is<PermutationData>()) {
    const auto& p = a.as<PermutationData>();
    PermutationData r;
    r.image.resize(p.image.size());
    for (size_t x = 0; x < p.image.size(); ++x) r.image[p.image[x]] = static_cast<uint32_t>(x);
    return GroupElement(std::move(r));
  }
  if (a.is<MatrixData>()) return GroupElement(matrix_inverse(a.as<MatrixData>()));
  const auto& ctx = *std::get<SemidirectRealization>(realization_).ctx;
  const auto& s = a.as<SemidirectPairData>();
  SemidirectPairData r;
  r.actor = ctx.inverse[s.actor];
  r.translation.resize(ctx.rank);
  ctx.apply_action(r.actor, s.translation.data(), r.translation.data());
  for (uint32_t i = 0; i < ctx.rank; ++i)
    r.translation[i] = (ctx.modulus - r.translation[i]) % ctx.modulus;
  return GroupElement(std::move(r));
}

GroupElement FiniteGroup::conjugate(const GroupElement& x, const GroupElement& g) const {
  return multiply(multiply(inverse(g), x), g);
}

GroupElement FiniteGroup::power(const GroupElement& a, uint64_t k) const {
  GroupElement result = identity();
  GroupElement sq = a;
  while (k) {
    if (k & 1) result = multiply(result, sq);
    k >>= 1;
    if (k) sq = multiply(sq, sq);
  }
  return result;
}

std::optional<uint64_t> FiniteGroup::known_order() const {
  if (const auto* s = std::get_if<SemidirectRealization>(&realization_))
    return s->ctx->pair_group_order();
  return std::nullopt;
}

void FiniteGroup::validate_generators() const {
  for (const auto& g : generators_) {
    if (const auto* p = std::get_if<PermutationRealization>(&realization_)) {
      if (!g.is<PermutationData>()) throw InvalidGroupError("generator realization mismatch");
      const auto& d = g.as<PermutationData>();
      if (d.image.size() != p->degree)
        throw InvalidGroupError("permutation generator degree mismatch");
      std::vector<bool> seen(d.image.size(), false);
      for (uint32_t v : d.image) {
        if (v >= d.image.size() || seen[v])
          throw InvalidGroupError("generator image is not a permutation");
        seen[v] = true;
      }
    } else if (const auto* m = std::get_if<ModMatrixRealization>(&realization_)) {
      if (!g.is<MatrixData>()) throw InvalidGroupError("generator realization mismatch");
      const auto& d = g.as<MatrixData>();
      if (d.modulus < 2 || d.modulus > (uint64_t{1} << 31))
        throw InvalidGroupError("matrix modulus must lie in [2, 2^31]");
      if (d.dim != m->dim || d.modulus != m->modulus ||
          d.entry.size() != size_t{d.dim} * d.dim)
        throw InvalidGroupError("matrix generator shape mismatch");
      for (uint64_t v : d.entry)
        if (v >= d.modulus) throw InvalidGroupError("matrix entry not reduced mod modulus");
      if (!invertible_mod(d))
        throw InvalidGroupError("non-invertible matrix generator (determinant not a unit mod " +
                                std::to_string(d.modulus) + ")");
    } else {
      const auto& ctx = *std::get<SemidirectRealization>(realization_).ctx;
      if (!g.is<SemidirectPairData>()) throw InvalidGroupError("generator realization mismatch");
      const auto& d = g.as<SemidirectPairData>();
      if (d.translation.size() != ctx.rank || d.actor >= ctx.actor_count())
        throw InvalidGroupError("semidirect pair generator shape mismatch");
      for (uint64_t v : d.translation)
        if (v >= ctx.modulus) throw InvalidGroupError("translation entry not reduced");
    }
  }
}

void FiniteGroup::enumerate() const {
  if (cache_) return;
  validate_generators();
  if (auto known = known_order(); known && *known > enumeration_cap_)
    throw ResourceError("enumeration cap of " + std::to_string(enumeration_cap_) +
                        " elements exceeded (group order " + std::to_string(*known) + ")");
  std::vector<GroupElement> bfs;
  std::unordered_set<GroupElement> seen;
  GroupElement e = identity();
  bfs.push_back(e);
  seen.insert(std::move(e));
  for (size_t i = 0; i < bfs.size(); ++i) {
    for (const auto& g : generators_) {
      GroupElement y = multiply(bfs[i], g);
      if (seen.contains(y)) continue;
      if (bfs.size() + 1 > enumeration_cap_)
        throw ResourceError("enumeration cap of " + std::to_string(enumeration_cap_) +
                            " elements exceeded");
      seen.insert(y);
      bfs.push_back(std::move(y));
    }
  }
  auto cache = std::make_shared<Cache>();
  cache->elements = std::move(bfs);
  std::sort(cache->elements.begin(), cache->elements.end());
  cache->index.reserve(cache->elements.size());
  for (uint32_t i = 0; i < cache->elements.size(); ++i)
    cache->index.emplace(cache->elements[i], i);
  cache->order_factors = factorize(BigInt(static_cast<unsigned long>(cache->elements.size())));
  cache_ = cache;  // element_order_with below needs index lookups
  cache->inverse.resize(cache->elements.size());
  for (uint32_t i = 0; i < cache->elements.size(); ++i) {
    uint64_t ord = element_order_with(*this, cache->elements[i], cache->elements.size(),
                                      cache->order_factors);
    GroupElement inv = power(cache->elements[i], ord - 1);
    cache->inverse[i] = cache->index.at(inv);
  }
}

const std::vector<GroupElement>& FiniteGroup::elements() const {
  enumerate();
  return cache_->elements;
}

bool FiniteGroup::contains(const GroupElement& g) const {
  enumerate();
  return cache_->index.contains(g);
}

uint32_t FiniteGroup::index_of(const GroupElement& g) const {
  enumerate();
  auto it = cache_->index.find(g);
  if (it == cache_->index.end())
    throw MembershipError("element " + g.to_string() + " is not in group " +
                          (name_.empty() ? "<anonymous>" : name_));
  return it->second;
}

uint32_t FiniteGroup::inverse_index(uint32_t i) const {
  enumerate();
  return cache_->inverse[i];
}

const std::vector<PrimePower>& FiniteGroup::order_factorization() const {
  enumerate();
  return cache_->order_factors;
}

Subgroup::Subgroup(const FiniteGroup& ambient, std::vector<GroupElement> elements)
    : ambient_(&ambient), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

uint64_t element_order_with(const FiniteGroup& g, const GroupElement& x,
                            uint64_t order_multiple, std::span<const PrimePower> factors) {
  uint64_t e = order_multiple;
  for (const auto& pp : factors) {
    uint64_t p = to_u64(pp.prime);
    while (e % p == 0 && g.power(x, e / p) == g.identity()) e /= p;
  }
  return e;
}

uint64_t element_order(const FiniteGroup& g, const GroupElement& x) {
  g.index_of(x);  // membership check
  return element_order_with(g, x, g.order(), g.order_factorization());
}

uint64_t group_order_hint(const FiniteGroup& g) {
  if (auto known = g.known_order()) return *known;
  return g.order();
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const GroupElement> s) {
  for (const auto& x : s) g.index_of(x);
  std::vector<GroupElement> bfs;
  std::unordered_set<GroupElement> seen;
  GroupElement e = g.identity();
  bfs.push_back(e);
  seen.insert(std::move(e));
  for (size_t i = 0; i < bfs.size(); ++i)
    for (const auto& x : s) {
      GroupElement y = g.multiply(bfs[i], x);
      if (seen.insert(y).second) bfs.push_back(std::move(y));
    }
  return Subgroup(g, std::move(bfs));
}

Subgroup derived_subgroup(const FiniteGroup& g, std::span<const GroupElement> s) {
  std::unordered_set<GroupElement> commutators;
  std::vector<GroupElement> seeds;
  for (const auto& a : s) {
    GroupElement ia = g.inverse(a);
    for (const auto& b : s) {
      GroupElement c = g.multiply(g.multiply(g.multiply(ia, g.inverse(b)), a), b);
      if (commutators.insert(c).second) seeds.push_back(std::move(c));
    }
  }
  return generated_subgroup(g, seeds);
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  return derived_subgroup(g, g.elements());
}

Subgroup center(const FiniteGroup& g) {
  std::vector<GroupElement> central;
  for (const auto& z : g.elements()) {
    bool commutes = true;
    for (const auto& gen : g.generators())
      if (g.multiply(z, gen) != g.multiply(gen, z)) {
        commutes = false;
        break;
      }
    if (commutes) central.push_back(z);
  }
  return Subgroup(g, std::move(central));
}

std::optional<uint64_t> p_group_prime(const FiniteGroup& g) {
  auto factors = g.order_factorization();
  if (factors.size() != 1) return std::nullopt;
  return to_u64(factors[0].prime);
}

bool is_p_group(const FiniteGroup& g, uint64_t p) {
  if (g.order() == 1) return true;
  auto prime = p_group_prime(g);
  return prime && *prime == p;
}

Subgroup frattini_subgroup_p(const FiniteGroup& g, uint64_t p) {
  if (!is_p_group(g, p))
    throw DomainError("frattini_subgroup_p: group order " + std::to_string(g.order()) +
                      " is not a power of " + std::to_string(p));
  std::unordered_set<GroupElement> seen;
  std::vector<GroupElement> seeds;
  auto add = [&](GroupElement x) {
    if (seen.insert(x).second) seeds.push_back(std::move(x));
  };
  const auto& elems = g.elements();
  for (const auto& a : elems) {
    GroupElement ia = g.inverse(a);
    for (const auto& b : elems)
      add(g.multiply(g.multiply(g.multiply(ia, g.inverse(b)), a), b));
  }
  for (const auto& a : elems) add(g.power(a, p));
  return generated_subgroup(g, seeds);
}

Subgroup hughes_subgroup(const FiniteGroup& g, uint64_t p) {
  std::vector<GroupElement> seeds;
  for (const auto& x : g.elements())
    if (g.power(x, p) != g.identity()) seeds.push_back(x);
  return generated_subgroup(g, seeds);
}

std::vector<std::vector<uint32_t>> conjugacy_classes(const FiniteGroup& g,
                                                     std::optional<uint64_t> cap) {
  uint64_t limit = cap.value_or(default_caps().class_count);
  uint64_t n = g.order();
  if (n > limit)
    throw ResourceError("class-count cap of " + std::to_string(limit) +
                        " exceeded (group order " + std::to_string(n) + ")");
  std::vector<GroupElement> gens(g.generators());
  std::vector<GroupElement> geninv;
  geninv.reserve(gens.size());
  for (const auto& x : gens) geninv.push_back(g.inverse(x));
  std::vector<bool> visited(n, false);
  std::vector<std::vector<uint32_t>> classes;
  for (uint32_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    std::vector<uint32_t> orbit{i};
    visited[i] = true;
    for (size_t k = 0; k < orbit.size(); ++k)
      for (size_t t = 0; t < gens.size(); ++t) {
        GroupElement y =
            g.multiply(g.multiply(geninv[t], g.elements()[orbit[k]]), gens[t]);
        uint32_t idx = g.index_of(y);
        if (!visited[idx]) {
          visited[idx] = true;
          orbit.push_back(idx);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

uint64_t conjugacy_class_count(const FiniteGroup& g, std::optional<uint64_t> cap) {
  return conjugacy_classes(g, cap).size();
}

bool is_solvable(const FiniteGroup& g) {
  std::vector<GroupElement> current(g.elements());
  for (;;) {
    Subgroup der = derived_subgroup(g, current);
    if (der.order() == 1) return true;
    if (der.order() == current.size()) return false;
    current = der.elements();
  }
}

FiniteGroup regular_permutation_group(const FiniteGroup& g, std::string name) {
  const auto& elems = g.elements();
  uint32_t n = static_cast<uint32_t>(elems.size());
  std::vector<GroupElement> gens;
  gens.reserve(g.generators().size());
  for (const auto& gen : g.generators()) {
    PermutationData d;
    d.image.resize(n);
    for (uint32_t x = 0; x < n; ++x) d.image[x] = g.index_of(g.multiply(gen, elems[x]));
    gens.emplace_back(std::move(d));
  }
  return FiniteGroup(PermutationRealization{n}, std::move(gens),
                     name.empty() ? g.name() + "-reg" : std::move(name));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  // Factors are realized as permutation groups (regular representation when
  // needed), then joined on a disjoint point set.
  std::optional<FiniteGroup> ra, rb;
  const FiniteGroup* pa = &a;
  const FiniteGroup* pb = &b;
  if (!std::holds_alternative<PermutationRealization>(a.realization())) {
    ra = regular_permutation_group(a);
    pa = &*ra;
  }
  if (!std::holds_alternative<PermutationRealization>(b.realization())) {
    rb = regular_permutation_group(b);
    pb = &*rb;
  }
  uint64_t product_order = pa->order() * pb->order();
  uint64_t cap = default_caps().enumeration;
  if (product_order > cap)
    throw ResourceError("enumeration cap of " + std::to_string(cap) +
                        " elements exceeded (direct product order " +
                        std::to_string(product_order) + ")");
  uint32_t da = std::get<PermutationRealization>(pa->realization()).degree;
  uint32_t db = std::get<PermutationRealization>(pb->realization()).degree;
  std::vector<GroupElement> gens;
  for (const auto& gen : pa->generators()) {
    PermutationData d;
    d.image.resize(da + db);
    const auto& img = gen.as<PermutationData>().image;
    for (uint32_t x = 0; x < da; ++x) d.image[x] = img[x];
    for (uint32_t x = 0; x < db; ++x) d.image[da + x] = da + x;
    gens.emplace_back(std::move(d));
  }
  for (const auto& gen : pb->generators()) {
    PermutationData d;
    d.image.resize(da + db);
    for (uint32_t x = 0; x < da; ++x) d.image[x] = x;
    const auto& img = gen.as<PermutationData>().image;
    for (uint32_t x = 0; x < db; ++x) d.image[da + x] = da + img[x];
    gens.emplace_back(std::move(d));
  }
  return FiniteGroup(PermutationRealization{da + db}, std::move(gens),
                     a.name() + "x" + b.name());
}

uint64_t abelianization_exponent(const FiniteGroup& g) {
  Subgroup derived = commutator_subgroup(g);
  uint64_t e = 1;
  for (const auto& x : g.elements()) {
    uint64_t ox = element_order_with(g, x, g.order(), g.order_factorization());
    uint64_t coset_order = ox;
    for (uint64_t d = 1; d <= ox; ++d) {
      if (ox % d != 0) continue;
      if (derived.contains(g.power(x, d))) {
        coset_order = d;
        break;
      }
    }
    e = std::lcm(e, coset_order);
  }
  return e;
}

}  // namespace ordstat
