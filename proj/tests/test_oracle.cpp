#include "doctest.h"
#include "oracle_util.hpp"

using namespace pisub;

// Exhaustive agreement between the pi-machinery and a subgroup-lattice
// oracle built from pair closures.

TEST_CASE("subgroup lattice sizes match known counts") {
  CHECK(oracle::all_subgroups(oracle::s4()).size() == 30);
  CHECK(oracle::all_subgroups(oracle::d12()).size() == 16);
  CHECK(oracle::all_subgroups(oracle::a5()).size() == 59);
}

TEST_CASE("pi machinery agrees with the lattice oracle on S4") {
  PermGroup g = oracle::s4();
  for (auto primes : {std::vector<int>{2}, {3}, {2, 3}})
    CHECK(oracle::check_pi_machinery(g, PrimeSet(primes)));
}

TEST_CASE("pi machinery agrees with the lattice oracle on D12") {
  PermGroup g = oracle::d12();
  for (auto primes : {std::vector<int>{2}, {3}, {2, 3}})
    CHECK(oracle::check_pi_machinery(g, PrimeSet(primes)));
}

TEST_CASE("pi machinery agrees with the lattice oracle on A5") {
  PermGroup g = oracle::a5();
  for (auto primes : {std::vector<int>{2}, {3}, {2, 3}})
    CHECK(oracle::check_pi_machinery(g, PrimeSet(primes)));
}

TEST_CASE("Lagrange holds across the oracle lattices") {
  for (const PermGroup& g : {oracle::s4(), oracle::d12(), oracle::a5()})
    for (const PermGroup& h : oracle::all_subgroups(g))
      CHECK(g.order() % h.order() == 0);
}
