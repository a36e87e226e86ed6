#include "ordstat/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ordstat/error.hpp"

namespace ordstat {

std::string CentralValidation::failure_summary() const {
  std::vector<std::string> failed;
  if (!power_p_is_identity) failed.push_back("z^p = identity");
  if (!fixed_point_free) failed.push_back("det(z - identity) != 0");
  if (!power_sum_is_zero) failed.push_back("sum of z^k for k=0..p-1 equals zero");
  if (failed.empty()) return "all checks passed";
  std::string s = "violated: ";
  for (size_t i = 0; i < failed.size(); ++i) s += (i ? "; " : "") + failed[i];
  return s;
}

std::vector<Check> CentralValidation::as_checks() const {
  return {
      {"z-power-p-identity", power_p_is_identity, "z^p = identity"},
      {"z-fixed-point-free", fixed_point_free, "det(z - identity) != 0"},
      {"z-power-sum-zero", power_sum_is_zero, "identity + z + ... + z^(p-1) = 0"},
  };
}

CentralValidation validate_central_action(const IntMatrix& z, uint64_t p) {
  if (!z.is_square()) throw DomainError("central action matrix must be square");
  if (p < 2) throw DomainError("p must be a prime >= 2");
  CentralValidation v;
  v.p = p;
  IntMatrix id = IntMatrix::identity(z.rows());
  v.power_p_is_identity = (z.pow(p) == id);
  v.fixed_point_free = ((z - id).determinant() != 0);
  IntMatrix sum(z.rows(), z.cols());
  IntMatrix zk = id;
  for (uint64_t k = 0; k < p; ++k) {
    sum = sum + zk;
    if (k + 1 < p) zk = zk * z;
  }
  v.power_sum_is_zero = sum.is_zero();
  return v;
}

IntMatrix orbit_lattice(std::span<const IntMatrix> generators,
                        const std::vector<BigInt>& start, uint64_t orbit_cap) {
  bool nonzero = false;
  for (const auto& v : start)
    if (v != 0) nonzero = true;
  if (!nonzero) throw DomainError("orbit_lattice: start vector must be nonzero");
  for (const auto& m : generators)
    if (!m.is_square() || m.rows() != start.size())
      throw DomainError("orbit_lattice: generator shape mismatch");

  std::vector<std::vector<BigInt>> orbit{start};
  std::set<std::vector<BigInt>> seen{start};
  for (size_t i = 0; i < orbit.size(); ++i)
    for (const auto& m : generators) {
      std::vector<BigInt> next = m.apply(orbit[i]);
      if (seen.insert(next).second) {
        if (orbit.size() + 1 > orbit_cap)
          throw ResourceError("orbit cap of " + std::to_string(orbit_cap) +
                              " vectors exceeded (matrix group not finite?)");
        orbit.push_back(std::move(next));
      }
    }

  IntMatrix stacked(orbit.size(), start.size());
  for (size_t i = 0; i < orbit.size(); ++i)
    for (size_t j = 0; j < start.size(); ++j) stacked.at(i, j) = orbit[i][j];
  IntMatrix basis = hermite_normal_form(stacked);

  for (const auto& m : generators)
    for (size_t j = 0; j < basis.rows(); ++j)
      if (!hnf_coordinates(basis, m.apply(basis.row(j))))
        throw ValidationError(
            "orbit lattice basis is not invariant under a generator (internal "
            "consistency failure)");
  return basis;
}

std::vector<IntMatrix> restrict_to_basis(std::span<const IntMatrix> generators,
                                         const IntMatrix& basis) {
  std::vector<IntMatrix> out;
  out.reserve(generators.size());
  size_t r = basis.rows();
  for (const auto& m : generators) {
    IntMatrix coords(r, r);
    for (size_t j = 0; j < r; ++j) {
      auto x = hnf_coordinates(basis, m.apply(basis.row(j)));
      if (!x)
        throw ValidationError(
            "change of basis is not integral: basis row leaves the lattice under "
            "the generator action");
      for (size_t k = 0; k < r; ++k) coords.at(j, k) = (*x)[k];
    }
    // coords is an antihomomorphism of the generator matrices; transposing
    // turns it into the homomorphism acting on coordinate columns.
    out.push_back(coords.transpose());
  }
  return out;
}

std::vector<std::vector<uint64_t>> reduce_action_mod(std::span<const IntMatrix> restricted,
                                                     uint64_t p, uint64_t s) {
  if (p < 2 || s == 0) throw DomainError("reduce_action_mod: need p >= 2 and s >= 1");
  BigInt modulus = int_pow(BigInt(static_cast<unsigned long>(p)), s);
  std::vector<std::vector<uint64_t>> out;
  for (const auto& mat : restricted) {
    BigInt det = mat.determinant();
    BigInt dp;
    BigInt bp(static_cast<unsigned long>(p));
    mpz_fdiv_r(dp.get_mpz_t(), det.get_mpz_t(), bp.get_mpz_t());
    if (dp == 0)
      throw ValidationError("restricted action matrix is not invertible mod " +
                            modulus.get_str() + " (determinant divisible by " +
                            std::to_string(p) + ")");
    size_t n = mat.rows();
    std::vector<uint64_t> red(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        BigInt e;
        mpz_fdiv_r(e.get_mpz_t(), mat.at(i, j).get_mpz_t(), modulus.get_mpz_t());
        red[i * n + j] = to_u64(e);
      }
    out.push_back(std::move(red));
  }
  return out;
}

std::vector<uint64_t> mod_mat_identity(uint32_t n, uint64_t m) {
  std::vector<uint64_t> id(size_t{n} * n, 0);
  for (uint32_t i = 0; i < n; ++i) id[i * n + i] = 1 % m;
  return id;
}

std::vector<uint64_t> mod_mat_mult(uint32_t n, std::span<const uint64_t> a,
                                   std::span<const uint64_t> b, uint64_t m) {
  std::vector<uint64_t> r(size_t{n} * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      unsigned __int128 acc = 0;
      for (uint32_t k = 0; k < n; ++k)
        acc += static_cast<unsigned __int128>(a[i * n + k]) * b[k * n + j];
      r[i * n + j] = static_cast<uint64_t>(acc % m);
    }
  return r;
}

GroupElement SemidirectGroup::make_pair(std::vector<uint64_t> translation,
                                        uint32_t actor) const {
  SemidirectPairData d;
  d.translation = std::move(translation);
  d.actor = actor;
  return GroupElement(std::move(d));
}

std::vector<GroupElement> SemidirectGroup::translation_coset(uint32_t actor) const {
  std::vector<GroupElement> out;
  uint64_t m = modulus();
  uint32_t r = rank();
  std::vector<uint64_t> u(r, 0);
  for (;;) {
    out.push_back(make_pair(u, actor));
    uint32_t i = r;
    while (i > 0) {
      --i;
      if (++u[i] < m) break;
      u[i] = 0;
      if (i == 0) return out;
    }
    if (r == 0) return out;
  }
}

std::vector<GroupElement> SemidirectGroup::shell_elements() const {
  std::vector<GroupElement> out;
  for (uint32_t idx : actor_frattini) {
    auto coset = translation_coset(idx);
    out.insert(out.end(), std::make_move_iterator(coset.begin()),
               std::make_move_iterator(coset.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup SemidirectGroup::translation_subgroup() const {
  return Subgroup(group, translation_coset(context->identity_index));
}

Subgroup SemidirectGroup::shell_subgroup() const {
  return Subgroup(group, shell_elements());
}

bool SemidirectGroup::in_shell(const GroupElement& g) const {
  return actor_in_frattini[g.as<SemidirectPairData>().actor];
}

SemidirectGroup build_semidirect(const FiniteGroup& actor, uint32_t rank,
                                 const std::vector<std::vector<uint64_t>>& generator_action,
                                 uint64_t p, uint64_t s, std::span<const uint32_t> z_word) {
  if (p < 2 || s == 0) throw DomainError("build_semidirect: need p >= 2 and s >= 1");
  if (generator_action.size() != actor.generators().size())
    throw ConstructionError("one action matrix per acting-group generator required");

  uint64_t n = actor.order();
  constexpr uint64_t kActorTableCap = 4096;
  if (n > kActorTableCap)
    throw ResourceError("acting-group table cap of " + std::to_string(kActorTableCap) +
                        " exceeded (|P| = " + std::to_string(n) + ")");

  uint64_t m = to_u64(int_pow(BigInt(static_cast<unsigned long>(p)), s));
  if (m > (uint64_t{1} << 31))
    throw ResourceError("translation modulus p^s = " + std::to_string(m) +
                        " exceeds the supported 2^31");
  for (const auto& mat : generator_action) {
    if (mat.size() != size_t{rank} * rank)
      throw ConstructionError("action matrix is not rank x rank");
    for (uint64_t v : mat)
      if (v >= m) throw ConstructionError("action matrix entry not reduced mod p^s");
  }

  auto ctx = std::make_shared<SemidirectContext>();
  ctx->p = p;
  ctx->s = s;
  ctx->modulus = m;
  ctx->rank = rank;
  ctx->actor = std::make_shared<FiniteGroup>(actor);
  const FiniteGroup& P = *ctx->actor;
  const auto& pelems = P.elements();
  uint32_t nn = static_cast<uint32_t>(pelems.size());

  ctx->mult.resize(size_t{nn} * nn);
  for (uint32_t a = 0; a < nn; ++a)
    for (uint32_t b = 0; b < nn; ++b)
      ctx->mult[size_t{a} * nn + b] = P.index_of(P.multiply(pelems[a], pelems[b]));
  ctx->inverse.resize(nn);
  for (uint32_t a = 0; a < nn; ++a) ctx->inverse[a] = P.inverse_index(a);
  ctx->identity_index = P.index_of(P.identity());

  // Extend the generator action over all of P along breadth-first words,
  // then verify the assignment is independent of the word used.
  std::vector<uint32_t> genidx;
  genidx.reserve(P.generators().size());
  for (const auto& g : P.generators()) genidx.push_back(P.index_of(g));

  std::vector<std::vector<uint64_t>> table(nn);
  std::vector<bool> have(nn, false);
  table[ctx->identity_index] = mod_mat_identity(rank, m);
  have[ctx->identity_index] = true;
  std::vector<uint32_t> queue{ctx->identity_index};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint32_t x = queue[qi];
    for (size_t gi = 0; gi < genidx.size(); ++gi) {
      uint32_t y = ctx->mult[size_t{x} * nn + genidx[gi]];
      if (have[y]) continue;
      table[y] = mod_mat_mult(rank, table[x], generator_action[gi], m);
      have[y] = true;
      queue.push_back(y);
    }
  }
  for (uint32_t x = 0; x < nn; ++x)
    if (!have[x])
      throw ConstructionError("acting group is not generated by its generator list");
  for (uint32_t x = 0; x < nn; ++x)
    for (size_t gi = 0; gi < genidx.size(); ++gi) {
      uint32_t y = ctx->mult[size_t{x} * nn + genidx[gi]];
      if (table[y] != mod_mat_mult(rank, table[x], generator_action[gi], m))
        throw ConstructionError(
            "inconsistent action homomorphism: element " + pelems[y].to_string() +
            " receives different matrices from different generator words");
    }
  ctx->action = std::move(table);

  if (!z_word.empty()) {
    uint32_t z = ctx->identity_index;
    for (uint32_t w : z_word) {
      if (w >= genidx.size()) throw ConstructionError("z_word index out of range");
      z = ctx->mult[size_t{z} * nn + genidx[w]];
    }
    ctx->z_index = z;
  }

  // Generators of the pair group: unit translations, then the actor's own
  // generators with zero translation.
  std::vector<GroupElement> gens;
  for (uint32_t i = 0; i < rank; ++i) {
    SemidirectPairData d;
    d.translation.assign(rank, 0);
    d.translation[i] = 1 % m;
    d.actor = ctx->identity_index;
    gens.emplace_back(std::move(d));
  }
  for (uint32_t gi : genidx) {
    SemidirectPairData d;
    d.translation.assign(rank, 0);
    d.actor = gi;
    gens.emplace_back(std::move(d));
  }

  std::ostringstream nm;
  nm << "U" << s << "r" << rank << ":" << (P.name().empty() ? "P" : P.name());
  SemidirectGroup sd{FiniteGroup(SemidirectRealization{ctx}, std::move(gens), nm.str()),
                     ctx,
                     {},
                     {}};

  Subgroup frat = frattini_subgroup_p(P, p);
  sd.actor_in_frattini.assign(nn, false);
  for (const auto& f : frat.elements()) {
    uint32_t idx = P.index_of(f);
    sd.actor_frattini.push_back(idx);
    sd.actor_in_frattini[idx] = true;
  }
  std::sort(sd.actor_frattini.begin(), sd.actor_frattini.end());
  return sd;
}

Report verify_power_identity(const SemidirectGroup& sd) {
  const auto& ctx = *sd.context;
  if (!ctx.z_index)
    throw ParameterError("no designated central element: build with a z_word");
  Report r;
  r.claim = "power-identity";
  r.params["p"] = std::to_string(sd.p());
  r.params["s"] = std::to_string(sd.s());
  r.params["rank"] = std::to_string(sd.rank());
  uint64_t p = sd.p();
  uint64_t m = sd.modulus();
  uint32_t rank = sd.rank();

  uint32_t zk = *ctx.z_index;
  for (uint64_t k = 1; k < p; ++k, zk = ctx.actor_mult(zk, *ctx.z_index)) {
    // additive criterion: sum of action(z^k)^j over j = 0..p-1 vanishes mod p^s
    std::vector<uint64_t> sum(size_t{rank} * rank, 0);
    std::vector<uint64_t> pw = mod_mat_identity(rank, m);
    for (uint64_t j = 0; j < p; ++j) {
      for (size_t i = 0; i < sum.size(); ++i) sum[i] = (sum[i] + pw[i]) % m;
      if (j + 1 < p) pw = mod_mat_mult(rank, pw, ctx.action[zk], m);
    }
    bool zero = std::all_of(sum.begin(), sum.end(), [](uint64_t v) { return v == 0; });
    r.add_check("power-sum-criterion-k" + std::to_string(k), zero,
                "sum of action(z^" + std::to_string(k) + ")^j vanishes mod p^s");
  }

  BigInt translations = int_pow(BigInt(static_cast<unsigned long>(m)), rank);
  bool exhaustive = translations <= BigInt(1 << 16);
  r.quantities["translation_count"] = translations.get_str();
  if (exhaustive) {
    uint64_t checked = 0;
    bool all_ok = true;
    auto coset_u = sd.translation_coset(ctx.identity_index);
    uint32_t zpow = *ctx.z_index;
    for (uint64_t k = 1; k < p; ++k, zpow = ctx.actor_mult(zpow, *ctx.z_index)) {
      for (const auto& u : coset_u) {
        GroupElement g = sd.make_pair(u.as<SemidirectPairData>().translation, zpow);
        if (sd.group.power(g, p) != sd.group.identity()) {
          all_ok = false;
          r.witnesses.push_back("(u,k) = (" + g.to_string() + ", " + std::to_string(k) + ")");
        }
        ++checked;
      }
    }
    r.quantities["pairs_checked"] = std::to_string(checked);
    r.add_check("exhaustive-pth-power", all_ok,
                "(u, z^k)^p = identity for every u and k = 1.." + std::to_string(p - 1));
  } else {
    r.notes.push_back("translation space too large for the exhaustive loop; "
                      "the additive criterion above is equivalent");
  }
  return r;
}

namespace {

IntMatrix parse_matrix(const nlohmann::json& j, uint32_t dim) {
  if (!j.is_array()) throw ParseError("matrix must be an array");
  IntMatrix m(dim, dim);
  if (j.size() == dim && j[0].is_array()) {
    for (uint32_t i = 0; i < dim; ++i) {
      if (j[i].size() != dim) throw ParseError("matrix row length mismatch");
      for (uint32_t k = 0; k < dim; ++k)
        m.at(i, k) = BigInt(static_cast<long>(j[i][k].get<long long>()));
    }
  } else if (j.size() == size_t{dim} * dim && !j.empty() && j[0].is_number()) {
    for (uint32_t i = 0; i < dim; ++i)
      for (uint32_t k = 0; k < dim; ++k)
        m.at(i, k) = BigInt(static_cast<long>(j[i * dim + k].get<long long>()));
  } else {
    throw ParseError("matrix must be dim rows of dim integers (or flat row-major)");
  }
  return m;
}

}  // namespace

RepresentationDoc parse_representation_doc(const nlohmann::json& j) {
  RepresentationDoc doc;
  if (!j.is_object()) throw ParseError("representation document must be a JSON object");
  if (!j.contains("p") || !j.contains("dim") || !j.contains("generators"))
    throw ParseError("representation document requires fields p, dim, generators");
  doc.p = j.at("p").get<uint64_t>();
  BigInt bp(static_cast<unsigned long>(doc.p));
  if (doc.p < 2 || mpz_probab_prime_p(bp.get_mpz_t(), 30) == 0)
    throw ParseError("p must be prime, got " + std::to_string(doc.p));
  doc.dim = j.at("dim").get<uint32_t>();
  if (doc.dim == 0) throw ParseError("dim must be >= 1");
  for (const auto& g : j.at("generators")) doc.generators.push_back(parse_matrix(g, doc.dim));
  if (doc.generators.empty()) throw ParseError("at least one generator matrix required");
  if (j.contains("z_word"))
    for (const auto& w : j.at("z_word")) {
      uint32_t idx = w.get<uint32_t>();
      if (idx >= doc.generators.size()) throw ParseError("z_word index out of range");
      doc.z_word.push_back(idx);
    }
  if (j.contains("a")) {
    for (const auto& v : j.at("a")) doc.start_vector.push_back(BigInt(static_cast<long>(v.get<long long>())));
    if (doc.start_vector.size() != doc.dim) throw ParseError("start vector length mismatch");
  } else {
    doc.start_vector.assign(doc.dim, 0);
    doc.start_vector[0] = 1;
  }
  return doc;
}

RepresentationDoc load_representation_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open representation document: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("representation document " + path + ": " + e.what());
  }
  return parse_representation_doc(j);
}

const char* builtin_q8_representation_json() {
  // Left multiplication by the quaternion units i and j on the basis
  // 1, i, j, k; the central element of order 2 is the word i*i.
  return R"({
  "p": 2,
  "dim": 4,
  "generators": [
    [[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]],
    [[0,0,-1,0],[0,0,0,1],[1,0,0,0],[0,-1,0,0]]
  ],
  "z_word": [0, 0],
  "a": [1, 0, 0, 0]
})";
}

RepresentationDoc builtin_q8_representation() {
  return parse_representation_doc(nlohmann::json::parse(builtin_q8_representation_json()));
}

ConstructionResult construct_semidirect(const RepresentationDoc& doc, uint64_t s) {
  if (s == 0) throw DomainError("construct_semidirect: s must be >= 1");

  IntMatrix zmat = IntMatrix::identity(doc.dim);
  for (uint32_t w : doc.z_word) zmat = zmat * doc.generators[w];
  CentralValidation central = validate_central_action(zmat, doc.p);
  if (!central.ok())
    throw ConstructionError("central action validation failed: " + central.failure_summary());

  // Enumerate the integer matrix group; its sorted element list gives the
  // point set of the left-regular permutation realization of P.
  std::vector<IntMatrix> closure{IntMatrix::identity(doc.dim)};
  std::set<IntMatrix> seen{closure[0]};
  uint64_t cap = default_caps().enumeration;
  for (size_t i = 0; i < closure.size(); ++i)
    for (const auto& g : doc.generators) {
      IntMatrix next = closure[i] * g;
      if (seen.insert(next).second) {
        if (closure.size() + 1 > cap)
          throw ResourceError("enumeration cap of " + std::to_string(cap) +
                              " elements exceeded while closing the matrix group");
        closure.push_back(std::move(next));
      }
    }
  std::vector<IntMatrix> sorted(seen.begin(), seen.end());
  std::map<IntMatrix, uint32_t> index;
  for (uint32_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], i);

  std::vector<GroupElement> perm_gens;
  for (const auto& g : doc.generators) {
    PermutationData d;
    d.image.resize(sorted.size());
    for (uint32_t x = 0; x < sorted.size(); ++x) d.image[x] = index.at(g * sorted[x]);
    perm_gens.emplace_back(std::move(d));
  }
  FiniteGroup actor(PermutationRealization{static_cast<uint32_t>(sorted.size())},
                    std::move(perm_gens), "rep-p" + std::to_string(doc.p));

  IntMatrix basis = orbit_lattice(doc.generators, doc.start_vector);
  std::vector<IntMatrix> restricted = restrict_to_basis(doc.generators, basis);
  std::vector<std::vector<uint64_t>> reduced = reduce_action_mod(restricted, doc.p, s);

  SemidirectGroup sd = build_semidirect(actor, static_cast<uint32_t>(basis.rows()),
                                        reduced, doc.p, s, doc.z_word);
  return ConstructionResult{doc, central, std::move(zmat), std::move(basis),
                            std::move(restricted), std::move(sd)};
}

}  // namespace ordstat
