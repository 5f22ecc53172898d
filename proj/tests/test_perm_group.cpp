#include <algorithm>

#include "doctest.h"
#include "oracle_util.hpp"
#include "pisub/perm_group.hpp"

using namespace pisub;

static PermGroup symmetric(int n) {
  std::vector<Point> swap01(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    swap01[i] = static_cast<Point>(i);
    cycle[i] = static_cast<Point>((i + 1) % n);
  }
  std::swap(swap01[0], swap01[1]);
  return PermGroup::from_generators(
      {Permutation(swap01), Permutation(cycle)});
}

TEST_CASE("S3 basics") {
  PermGroup s3 = symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.elements().size() == 6);
  CHECK(s3.contains(Permutation({2, 0, 1})));
  CHECK(s3.contains(Permutation::identity(3)));
}

TEST_CASE("membership rejects outsiders") {
  PermGroup a5 = oracle::a5();
  CHECK(a5.order() == 60);
  CHECK_FALSE(a5.contains(Permutation({1, 0, 2, 3, 4})));  // odd
  CHECK(a5.contains(Permutation({1, 0, 3, 2, 4})));
}

TEST_CASE("construction errors") {
  CHECK_THROWS(PermGroup::from_generators({}));
  CHECK_THROWS(PermGroup::from_generators(
      {Permutation({1, 0}), Permutation({1, 0, 2})}));
}

TEST_CASE("trivial group") {
  PermGroup t = PermGroup::trivial(5);
  CHECK(t.order() == 1);
  CHECK(t.degree() == 5);
  CHECK(t.elements().size() == 1);
}

TEST_CASE("element cap") {
  PermGroup s4 = oracle::s4();
  CHECK_THROWS_AS(s4.elements(10), CapExceeded);
  CHECK(s4.elements(24).size() == 24);
}

TEST_CASE("closure_elements respects its cap") {
  PermGroup s4 = oracle::s4();
  auto full = closure_elements(s4.generators(), 24);
  REQUIRE(full.has_value());
  CHECK(full->size() == 24);
  CHECK_FALSE(closure_elements(s4.generators(), 23).has_value());
}

TEST_CASE("from_element_set reconstructs the group") {
  PermGroup d12 = oracle::d12();
  PermGroup back = PermGroup::from_element_set(d12.elements(), d12.degree());
  CHECK(back.order() == 12);
  CHECK(back.same_group(d12));
  CHECK(back.generators().size() <= d12.elements().size());
}

TEST_CASE("fingerprints identify element sets, not generator lists") {
  PermGroup a = PermGroup::from_generators(
      {Permutation({1, 0, 2}), Permutation({1, 2, 0})});
  PermGroup b = PermGroup::from_generators(
      {Permutation({0, 2, 1}), Permutation({2, 0, 1})});
  CHECK(a.same_group(b));
  CHECK(a.fingerprint() == b.fingerprint());
  PermGroup c = PermGroup::from_generators({Permutation({1, 2, 0})});
  CHECK_FALSE(a.same_group(c));
  CHECK(a.fingerprint() != c.fingerprint());
}

TEST_CASE("sorted element order is canonical") {
  PermGroup s3 = symmetric(3);
  auto sorted = s3.sorted_elements();
  CHECK(std::is_sorted(sorted.begin(), sorted.end()));
}

TEST_CASE("BSGS order equals exhaustive closure count") {
  std::vector<PermGroup> groups = {oracle::s4(), oracle::d12(), oracle::a5(),
                                   symmetric(5), symmetric(6), symmetric(7)};
  for (const PermGroup& g : groups) {
    auto closure = closure_elements(g.generators(), 10000);
    REQUIRE(closure.has_value());
    CHECK(g.order() == closure->size());
  }
}
