#include "doctest.h"
#include "ordstat/corpus.hpp"
#include "ordstat/error.hpp"
#include "ordstat/order_stats.hpp"

using namespace ordstat;

TEST_CASE("Q8 passes every clause with z = -1 and rank 2") {
  FiniteGroup q8 = make_named_group("Q8", {});
  SecretiveReport r = secretive_report(q8, 2);
  CHECK(r.frattini_exponent_ok);
  CHECK(r.rank == 2);
  CHECK(r.rank_equals_p);
  CHECK(r.outside_orders_ok);
  CHECK(r.powers_central_cyclic_ok);
  CHECK(r.all_clauses());
  REQUIRE(r.z.has_value());
  // -identity mod 4
  CHECK(*r.z == GroupElement(MatrixData{4, 4, {3, 0, 0, 0, 0, 3, 0, 0,
                                               0, 0, 3, 0, 0, 0, 0, 3}}));
}

TEST_CASE("C_4 passes clauses a and c but has rank 1") {
  FiniteGroup c4 = make_named_group("cyclic", {.n = 4});
  SecretiveReport r = secretive_report(c4, 2);
  CHECK(r.frattini_exponent_ok);
  CHECK(r.outside_orders_ok);
  CHECK(r.powers_central_cyclic_ok);
  CHECK(r.rank == 1);
  CHECK_FALSE(r.rank_equals_p);
  CHECK_FALSE(r.all_clauses());
}

TEST_CASE("elementary abelian rank 2 fails the outside-order clause") {
  FiniteGroup e4 = make_named_group("elementary-abelian", {.p = 2, .r = 2});
  SecretiveReport r = secretive_report(e4, 2);
  CHECK_FALSE(r.outside_orders_ok);
  CHECK_FALSE(r.powers_central_cyclic_ok);
  CHECK_FALSE(r.z.has_value());  // z present only when the power clause holds
}

TEST_CASE("C_9 is weakly secretive at p = 3") {
  FiniteGroup c9 = make_named_group("cyclic", {.n = 9});
  SecretiveReport r = secretive_report(c9, 3);
  CHECK(r.frattini_exponent_ok);
  CHECK(r.outside_orders_ok);
  CHECK(r.powers_central_cyclic_ok);
  CHECK(r.rank == 1);
  CHECK_FALSE(r.rank_equals_p);
}

TEST_CASE("non-p-groups are rejected") {
  FiniteGroup c6 = make_named_group("cyclic", {.n = 6});
  CHECK_THROWS_AS(secretive_report(c6, 2), DomainError);
  CHECK_THROWS_AS(secretive_report(make_named_group("Q8", {}), 4), ParameterError);
}

TEST_CASE("outside elements contribute exactly p^2 to psi when a and c hold") {
  struct Case {
    const char* name;
    NamedParams params;
    uint64_t p;
  };
  for (const Case& tc : std::vector<Case>{
           {"Q8", {}, 2}, {"cyclic", {.n = 4}, 2}, {"cyclic", {.n = 9}, 3}}) {
    const auto& [name, params, p] = tc;
    FiniteGroup g = make_named_group(name, params);
    SecretiveReport r = secretive_report(g, p);
    REQUIRE(r.frattini_exponent_ok);
    REQUIRE(r.outside_orders_ok);
    Subgroup phi = frattini_subgroup_p(g, p);
    BigInt expected = BigInt(static_cast<unsigned long>(p * p)) *
                          BigInt(static_cast<unsigned long>(g.order() - phi.order())) +
                      psi(phi);
    CHECK(psi(g) == expected);
  }
}

TEST_CASE("corpus pinned facts") {
  CHECK(psi(make_named_group("cyclic", {.n = 60})) == 1617);
  CHECK(average_order(make_named_group("alternating", {.n = 5})) == make_rational(211, 60));
  FiniteGroup h = make_named_group("heisenberg-mod-p", {.p = 3});
  CHECK(h.order() == 27);
  CHECK(exponent(h) == 3);
  FiniteGroup m27 = make_named_group("modular-p-group", {.p = 3});
  CHECK(m27.order() == 27);
  CHECK(exponent(m27) == 9);
  FiniteGroup d6 = make_named_group("dihedral", {.n = 6});
  CHECK(d6.order() == 12);
  FiniteGroup s5 = make_named_group("symmetric", {.n = 5});
  CHECK(s5.order() == 120);
  CHECK_FALSE(is_solvable(make_named_group("A5", {})));
}

TEST_CASE("generalized quaternion of order 8 matches the matrix realization") {
  FiniteGroup gq8 = make_named_group("generalized-quaternion", {.order = 8});
  FiniteGroup q8 = make_named_group("Q8", {});
  CHECK(order_spectrum(gq8) == order_spectrum(q8));
  FiniteGroup gq16 = make_named_group("generalized-quaternion", {.order = 16});
  CHECK(gq16.order() == 16);
  // generalized quaternion groups have a unique involution
  CHECK(order_spectrum(gq16).histogram.at(2) == 1);
  SecretiveReport r16 = secretive_report(gq16, 2);
  CHECK_FALSE(r16.all_clauses());
}

TEST_CASE("corpus p-group structure invariants") {
  for (const auto& entry : scan_corpus_p_groups(128)) {
    Subgroup phi = frattini_subgroup_p(entry.group, entry.p);
    if (phi.order() > 1) CHECK(exponent(entry.group) % exponent(phi) == 0);
    uint64_t quotient = entry.group.order() / phi.order();
    while (quotient > 1) {
      CHECK(quotient % entry.p == 0);
      quotient /= entry.p;
    }
  }
}

TEST_CASE("unknown names and invalid parameters are rejected") {
  CHECK_THROWS_AS(make_named_group("sporadic", {}), ParameterError);
  CHECK_THROWS_AS(make_named_group("cyclic", {}), ParameterError);
  CHECK_THROWS_AS(make_named_group("dihedral", {.n = 2}), ParameterError);
  CHECK_THROWS_AS(make_named_group("generalized-quaternion", {.order = 12}),
                  ParameterError);
  CHECK_THROWS_AS(make_named_group("heisenberg-mod-p", {.p = 4}), ParameterError);
}
