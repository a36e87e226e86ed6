#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "ordstat/corpus.hpp"
#include "ordstat/error.hpp"
#include "ordstat/lattice.hpp"
#include "ordstat/order_stats.hpp"

using namespace ordstat;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntMatrix rotation3() { return from_rows({{0, -1}, {1, -1}}); }

}  // namespace

TEST_CASE("hermite normal form basics") {
  // rows (2,0),(3,0) span the lattice generated by gcd = 1
  IntMatrix h = hermite_normal_form(from_rows({{2, 0}, {3, 0}}));
  CHECK(h == from_rows({{1, 0}}));

  IntMatrix h2 = hermite_normal_form(from_rows({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(h2 == from_rows({{1, 0}, {0, 1}}));

  // entries above the pivot are reduced into [0, pivot)
  IntMatrix h3 = hermite_normal_form(from_rows({{2, 7}, {0, 3}}));
  CHECK(h3 == from_rows({{2, 1}, {0, 3}}));
}

TEST_CASE("hnf coordinates solve exactly or report failure") {
  IntMatrix basis = from_rows({{2, 0}, {0, 3}});
  auto c = hnf_coordinates(basis, {4, -3});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == -1);
  CHECK_FALSE(hnf_coordinates(basis, {1, 0}).has_value());
  CHECK_FALSE(hnf_coordinates(basis, {2, 1}).has_value());
}

TEST_CASE("determinant and adjugate") {
  IntMatrix m = from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  BigInt det = m.determinant();
  CHECK(det == 18);
  IntMatrix prod = m * m.adjugate();
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(prod.at(i, j) == (i == j ? det : BigInt(0)));
}

TEST_CASE("central action validation") {
  IntMatrix minus_i = from_rows({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
  CentralValidation v = validate_central_action(minus_i, 2);
  CHECK(v.ok());

  CentralValidation degenerate = validate_central_action(IntMatrix::identity(4), 2);
  CHECK_FALSE(degenerate.fixed_point_free);
  CHECK_FALSE(degenerate.ok());
  CHECK(degenerate.failure_summary().find("det") != std::string::npos);

  CentralValidation rot = validate_central_action(rotation3(), 3);
  CHECK(rot.ok());
}

TEST_CASE("orbit lattice of the quaternion representation is Z^4") {
  RepresentationDoc doc = builtin_q8_representation();
  IntMatrix basis = orbit_lattice(doc.generators, doc.start_vector);
  CHECK(basis == IntMatrix::identity(4));
}

TEST_CASE("orbit lattice of the trivial group is the start vector") {
  std::vector<IntMatrix> gens;
  IntMatrix basis = orbit_lattice(gens, {BigInt(1), BigInt(0), BigInt(0)});
  CHECK(basis == from_rows({{1, 0, 0}}));
  CHECK_THROWS_AS(orbit_lattice(gens, {BigInt(0), BigInt(0), BigInt(0)}), DomainError);
}

TEST_CASE("orbit lattice of the order-3 rotation has rank 2") {
  std::vector<IntMatrix> gens{rotation3()};
  IntMatrix basis = orbit_lattice(gens, {BigInt(1), BigInt(0)});
  CHECK(basis == IntMatrix::identity(2));
}

TEST_CASE("orbit cap fires for an infinite matrix group") {
  std::vector<IntMatrix> gens{from_rows({{1, 1}, {0, 1}})};
  CHECK_THROWS_AS(orbit_lattice(gens, {BigInt(1), BigInt(1)}, 64), ResourceError);
}

TEST_CASE("hnf basis is independent of generator order") {
  RepresentationDoc doc = builtin_q8_representation();
  std::vector<IntMatrix> swapped{doc.generators[1], doc.generators[0]};
  CHECK(orbit_lattice(doc.generators, doc.start_vector) ==
        orbit_lattice(swapped, doc.start_vector));

  std::vector<IntMatrix> c3{rotation3()};
  std::vector<IntMatrix> c3sq{rotation3() * rotation3(), rotation3()};
  CHECK(orbit_lattice(c3, {BigInt(1), BigInt(0)}) ==
        orbit_lattice(c3sq, {BigInt(1), BigInt(0)}));
}

TEST_CASE("restriction to the identity basis reproduces the generators mod p^s") {
  RepresentationDoc doc = builtin_q8_representation();
  IntMatrix basis = orbit_lattice(doc.generators, doc.start_vector);
  auto restricted = restrict_to_basis(doc.generators, basis);
  REQUIRE(restricted.size() == 2);
  CHECK(restricted[0] == doc.generators[0]);
  CHECK(restricted[1] == doc.generators[1]);
  auto reduced = reduce_action_mod(restricted, 2, 3);
  for (const auto& mat : reduced)
    for (uint64_t v : mat) CHECK((v == 0 || v == 1 || v == 7));
}

TEST_CASE("restriction in a rank-deficient lattice gives matrices of the rank size") {
  std::vector<IntMatrix> gens{rotation3()};
  IntMatrix basis = orbit_lattice(gens, {BigInt(1), BigInt(0)});
  auto restricted = restrict_to_basis(gens, basis);
  REQUIRE(restricted.size() == 1);
  CHECK(restricted[0].rows() == 2);
  auto reduced = reduce_action_mod(restricted, 3, 2);
  for (uint64_t v : reduced[0]) CHECK(v < 9);
}

TEST_CASE("restricted matrices multiply contravariantly to a homomorphism") {
  // action(g h) = action(g) action(h) after the transpose convention
  RepresentationDoc doc = builtin_q8_representation();
  IntMatrix basis = orbit_lattice(doc.generators, doc.start_vector);
  auto r = restrict_to_basis(doc.generators, basis);
  std::vector<IntMatrix> prod{doc.generators[0] * doc.generators[1]};
  auto rp = restrict_to_basis(prod, basis);
  CHECK(rp[0] == r[0] * r[1]);
}

TEST_CASE("reduce_action_mod rejects matrices singular mod p") {
  std::vector<IntMatrix> gens{from_rows({{2, 0}, {0, 1}})};
  CHECK_THROWS_AS(reduce_action_mod(gens, 2, 3), ValidationError);
}

TEST_CASE("trivial acting group gives the homocyclic group itself") {
  FiniteGroup trivial(PermutationRealization{1}, {}, "trivial");
  SemidirectGroup sd = build_semidirect(trivial, 3, {}, 2, 2);
  CHECK(sd.order() == 64);
  CHECK(average_order(sd.group) == homocyclic_average_order(2, 2, 3));
}

TEST_CASE("built groups have the expected orders") {
  RepresentationDoc doc = builtin_q8_representation();
  CHECK(construct_semidirect(doc, 1).semidirect.order() == 128);
  CHECK(construct_semidirect(doc, 3).semidirect.order() == 32768);
}

TEST_CASE("pair closure matches the a-priori order and N is normal") {
  ConstructionResult cr = construct_semidirect(builtin_q8_representation(), 1);
  const SemidirectGroup& sd = cr.semidirect;
  CHECK(sd.group.order() == sd.order());
  Subgroup n = sd.translation_subgroup();
  CHECK(n.order() == 16);
  for (const auto& x : n.elements())
    for (const auto& gen : sd.group.generators())
      CHECK(n.contains(sd.group.conjugate(x, gen)));
  Subgroup w = sd.shell_subgroup();
  CHECK(w.order() == 32);
  for (const auto& x : w.elements()) CHECK(sd.in_shell(x));
}

TEST_CASE("the pipeline's acting group passes the Wall checks") {
  ConstructionResult cr = construct_semidirect(builtin_q8_representation(), 1);
  SecretiveReport r = secretive_report(*cr.semidirect.context->actor, 2);
  CHECK(r.all_clauses());
  CHECK(r.rank == 2);
  REQUIRE(cr.semidirect.context->z_index.has_value());
  // the designated z is the p-th power subgroup's generator
  REQUIRE(r.z.has_value());
  CHECK(cr.semidirect.context->actor->elements()[*cr.semidirect.context->z_index] == *r.z);
}

TEST_CASE("inconsistent action homomorphism is rejected") {
  // C_2 acting through a matrix of multiplicative order 3 mod 7 cannot
  // extend to a homomorphism.
  FiniteGroup c2 = make_named_group("cyclic", {.n = 2});
  std::vector<std::vector<uint64_t>> action{{2}};  // 2^2 = 4 != 1 mod 7
  CHECK_THROWS_AS(build_semidirect(c2, 1, action, 7, 1), ConstructionError);
}

TEST_CASE("non-faithful actions are supported") {
  // Q8 acting trivially on Z/4: the pair group is the direct product.
  FiniteGroup q8 = make_named_group("Q8", {});
  std::vector<std::vector<uint64_t>> trivial_action{{1}, {1}};
  SemidirectGroup sd = build_semidirect(q8, 1, trivial_action, 2, 2);
  CHECK(sd.order() == 32);
  FiniteGroup c4 = make_named_group("cyclic", {.n = 4});
  CHECK(order_spectrum(sd.group) == order_spectrum(direct_product(c4, q8)));
}

TEST_CASE("power identity verifier") {
  for (uint64_t s : {1, 2, 3}) {
    ConstructionResult cr = construct_semidirect(builtin_q8_representation(), s);
    Report r = verify_power_identity(cr.semidirect);
    CHECK(r.passed());
  }
}

TEST_CASE("reduction compatibility between consecutive exponents") {
  RepresentationDoc doc = builtin_q8_representation();
  for (uint64_t s : {1, 2}) {
    SemidirectGroup big = construct_semidirect(doc, s + 1).semidirect;
    SemidirectGroup small = construct_semidirect(doc, s).semidirect;
    uint64_t small_mod = small.modulus();
    auto project = [&](const GroupElement& g) {
      const auto& d = g.as<SemidirectPairData>();
      std::vector<uint64_t> u(d.translation.size());
      for (size_t i = 0; i < u.size(); ++i) u[i] = d.translation[i] % small_mod;
      return small.make_pair(u, d.actor);
    };
    // deterministic sample: generators and their pairwise products
    std::vector<GroupElement> sample = big.group.generators();
    size_t base = sample.size();
    for (size_t i = 0; i < base; ++i)
      for (size_t j = 0; j < base; ++j)
        sample.push_back(big.group.multiply(sample[i], sample[j]));
    for (const auto& a : sample)
      for (const auto& b : sample)
        CHECK(project(big.group.multiply(a, b)) ==
              small.group.multiply(project(a), project(b)));
    uint64_t big_order_count = big.order();
    auto factors_big = factorize(BigInt(static_cast<unsigned long>(big_order_count)));
    auto factors_small = factorize(BigInt(static_cast<unsigned long>(small.order())));
    for (const auto& a : sample) {
      uint64_t ord_big = element_order_with(big.group, a, big_order_count, factors_big);
      uint64_t ord_small =
          element_order_with(small.group, project(a), small.order(), factors_small);
      CHECK(ord_big % ord_small == 0);
    }
  }
}

TEST_CASE("representation document parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_representation_doc(nlohmann::json::parse("{}")), ParseError);
  CHECK_THROWS_AS(parse_representation_doc(nlohmann::json::parse(
                      R"({"p": 4, "dim": 1, "generators": [[[1]]]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_representation_doc(nlohmann::json::parse(
                      R"({"p": 2, "dim": 2, "generators": [[[1, 0], [0, 1]]],
                          "z_word": [3]})")),
                  ParseError);
  RepresentationDoc doc = parse_representation_doc(nlohmann::json::parse(
      R"({"p": 3, "dim": 2, "generators": [[[0, -1], [1, -1]]]})"));
  CHECK(doc.start_vector == std::vector<BigInt>{BigInt(1), BigInt(0)});
}

TEST_CASE("central validation failure aborts the construction pipeline") {
  // identity z matrix: z_word empty means z = identity, which is not
  // fixed-point free
  RepresentationDoc doc = builtin_q8_representation();
  doc.z_word.clear();
  CHECK_THROWS_AS(construct_semidirect(doc, 1), ConstructionError);
}
