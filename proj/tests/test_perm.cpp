#include "doctest.h"
#include "pisub/perm.hpp"

using namespace pisub;

TEST_CASE("composition applies the left factor first") {
  Permutation p({1, 0, 2});  // (0 1)
  Permutation q({0, 2, 1});  // (1 2)
  Permutation r = p * q;
  CHECK(r(0) == 2);
  CHECK(r(1) == 0);
  CHECK(r(2) == 1);
  CHECK(r.cycle_string() == "(0 2 1)");
}

TEST_CASE("identity and inverse") {
  Permutation id = Permutation::identity(4);
  CHECK(id.is_identity());
  Permutation p({1, 2, 3, 0});
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
  CHECK_FALSE(p.is_identity());
}

TEST_CASE("order is the lcm of cycle lengths") {
  CHECK(Permutation::identity(3).order() == 1);
  CHECK(Permutation({1, 2, 0, 4, 3}).order() == 6);  // (0 1 2)(3 4)
  CHECK(Permutation({1, 0, 2}).order() == 2);
  CHECK(Permutation({1, 2, 3, 4, 5, 6, 0}).order() == 7);
}

TEST_CASE("invalid images are rejected") {
  CHECK_THROWS(Permutation({0, 0, 1}));
  CHECK_THROWS(Permutation(std::vector<Point>{}));
}

TEST_CASE("conjugation and commutators") {
  Permutation p({1, 0, 2});       // (0 1)
  Permutation g({1, 2, 0});       // (0 1 2)
  Permutation c = conjugate(p, g);  // g^-1 p g = (1 2)
  CHECK(c == Permutation({0, 2, 1}));
  CHECK(commutator(p, p).is_identity());
  Permutation q({0, 2, 1});
  CHECK(commutator(p, q) == p * q * p.inverse() * q.inverse());
}

TEST_CASE("hash agrees on equal permutations") {
  Permutation a({2, 0, 1});
  Permutation b({2, 0, 1});
  CHECK(a.hash() == b.hash());
  CHECK(a == b);
}
