#include "doctest.h"
#include "oracle_util.hpp"
#include "pisub/pimax.hpp"

using namespace pisub;

TEST_CASE("prime sets") {
  CHECK_THROWS(PrimeSet({4}));
  CHECK_THROWS(PrimeSet({1}));
  PrimeSet pi({3, 2, 2});
  CHECK(pi.primes == std::vector<int>{2, 3});
  CHECK(pi.contains(2));
  CHECK_FALSE(pi.contains(7));
}

TEST_CASE("pi arithmetic") {
  PrimeSet pi({2, 3});
  CHECK(pi_part(1344, pi) == 192);
  CHECK(pi_part(168, pi) == 24);
  CHECK(pi_part(35, pi) == 1);
  CHECK(is_pi_number(1, pi));
  CHECK(is_pi_number(24, pi));
  CHECK_FALSE(is_pi_number(168, pi));
}

TEST_CASE("pi elements and pi groups") {
  PrimeSet pi({2, 3});
  CHECK(is_pi_element(Permutation::identity(3), pi));
  CHECK(is_pi_element(Permutation({1, 2, 0, 4, 3}), pi));   // order 6
  CHECK_FALSE(is_pi_element(Permutation({1, 2, 3, 4, 5, 6, 0}), pi));  // 7

  PermGroup s4 = oracle::s4();
  CHECK(is_pi_group(s4, pi));
  CHECK(is_pi_group(PermGroup::trivial(4), pi));
  CHECK_FALSE(is_pi_group(oracle::a5(), pi));
}

TEST_CASE("pre-condition violations") {
  PrimeSet pi({2});
  PermGroup s4 = oracle::s4();
  CHECK_THROWS(is_pi_maximal(s4, derived_subgroup(s4), pi));  // A4 not 2-group
  PermGroup v4 = PermGroup::from_generators(
      {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})});
  PermGroup outside = PermGroup::from_generators({Permutation({1, 0, 2, 3})});
  CHECK_THROWS(is_pi_maximal(v4, outside, pi));  // not a subgroup
}

TEST_CASE("Sylow subgroups are p-maximal") {
  PermGroup s4 = oracle::s4();
  CHECK(is_pi_maximal(s4, sylow(s4, 2), PrimeSet({2})).maximal);
  CHECK(is_pi_maximal(s4, sylow(s4, 3), PrimeSet({3})).maximal);
  PermGroup a5 = oracle::a5();
  CHECK(is_pi_maximal(a5, sylow(a5, 5), PrimeSet({5})).maximal);
}

TEST_CASE("witness overgroup when not maximal") {
  PrimeSet pi({2, 3});
  PermGroup s4 = oracle::s4();
  PermGroup c2 = PermGroup::from_generators({Permutation({1, 0, 2, 3})});
  PiMaximalResult r = is_pi_maximal(s4, c2, pi);
  CHECK_FALSE(r.maximal);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->order() > 2);
  CHECK(r.witness->contains_group(c2));
  CHECK(is_pi_group(*r.witness, pi));
}

TEST_CASE("ascent from an already maximal seed returns the seed") {
  PrimeSet pi({2});
  PermGroup s4 = oracle::s4();
  PermGroup d8 = sylow(s4, 2);
  auto over = maximal_pi_overgroups(s4, d8, pi);
  REQUIRE(over.size() == 1);
  CHECK(over[0].same_group(d8));
}

TEST_CASE("ascent from the trivial group finds the three Sylow-2s of S4") {
  auto over = maximal_pi_overgroups(oracle::s4(), PermGroup::trivial(4),
                                    PrimeSet({2}));
  CHECK(over.size() == 3);
  for (const PermGroup& k : over) CHECK(k.order() == 8);
}

TEST_CASE("overgroup lists are canonical and pairwise distinct") {
  auto over = maximal_pi_overgroups(oracle::a5(), PermGroup::trivial(5),
                                    PrimeSet({2, 3}));
  for (std::size_t i = 0; i < over.size(); ++i)
    for (std::size_t j = i + 1; j < over.size(); ++j)
      CHECK_FALSE(over[i].same_group(over[j]));
  for (const PermGroup& k : over)
    CHECK(is_pi_maximal(oracle::a5(), k, PrimeSet({2, 3})).maximal);
}

TEST_CASE("Wielandt-Hartley check") {
  PrimeSet pi({2, 3});
  PermGroup s4 = oracle::s4();
  CHECK(wielandt_hartley_check(s4, s4, pi));  // index 1
  // A4 in S4 has normalizer S4, index 2 -- fails for pi containing 2
  CHECK_FALSE(wielandt_hartley_check(s4, derived_subgroup(s4), pi));
  // a Sylow-2 of S4 is self-normalizing
  CHECK(wielandt_hartley_check(s4, sylow(s4, 2), pi));
}

TEST_CASE("submaximality witness certification") {
  PrimeSet pi({2});
  PermGroup s4 = oracle::s4();
  PermGroup d8 = sylow(s4, 2);
  // Gstar = Gimg: a pi-maximal subgroup certifies itself
  PermGroup h = verify_submaximality_witness(s4, s4, d8, pi);
  CHECK(h.same_group(d8));
  // K not pi-maximal must be rejected
  PermGroup c2 = PermGroup::from_generators({Permutation({1, 0, 3, 2})});
  CHECK_THROWS(verify_submaximality_witness(s4, s4, c2, pi));
}
