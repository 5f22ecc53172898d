#include "doctest.h"
#include "oracle_util.hpp"
#include "pisub/extensions.hpp"
#include "pisub/group_ops.hpp"

using namespace pisub;

TEST_CASE("normal closure in S4") {
  PermGroup s4 = oracle::s4();
  PermGroup c2 = PermGroup::from_generators({Permutation({1, 0, 3, 2})});
  PermGroup v4 = normal_closure(s4, c2);
  CHECK(v4.order() == 4);
  CHECK(is_normal(s4, v4));

  PermGroup transposition = PermGroup::from_generators({Permutation({1, 0, 2, 3})});
  CHECK(normal_closure(s4, transposition).order() == 24);
}

TEST_CASE("subnormality") {
  PermGroup s4 = oracle::s4();
  // <(01)(23)> sits in the chain C2 < V4 < S4
  PermGroup c2 = PermGroup::from_generators({Permutation({1, 0, 3, 2})});
  CHECK(is_subnormal(s4, c2));
  // a transposition generates a non-subnormal C2
  PermGroup t = PermGroup::from_generators({Permutation({1, 0, 2, 3})});
  CHECK_FALSE(is_subnormal(s4, t));
  CHECK(is_subnormal(s4, s4));
}

TEST_CASE("centralizer and normalizer match brute force") {
  PermGroup s4 = oracle::s4();
  PermGroup c3 = PermGroup::from_generators({Permutation({1, 2, 0, 3})});
  PermGroup cent = centralizer(s4, c3);
  PermGroup norm = normalizer(s4, c3);
  std::size_t cent_count = 0, norm_count = 0;
  for (const Permutation& g : s4.elements()) {
    bool centralizes = true, normalizes = true;
    for (const Permutation& h : c3.elements()) {
      if (conjugate(h, g) != h) centralizes = false;
      if (!c3.contains(conjugate(h, g))) normalizes = false;
    }
    if (centralizes) ++cent_count;
    if (normalizes) ++norm_count;
  }
  CHECK(cent.order() == cent_count);  // 3
  CHECK(norm.order() == norm_count);  // 6
  CHECK(cent.order() == 3);
  CHECK(norm.order() == 6);
}

TEST_CASE("center") {
  CHECK(center(oracle::s4()).order() == 1);
  PermGroup v4 = PermGroup::from_generators(
      {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})});
  CHECK(center(v4).order() == 4);
  CHECK(is_abelian(v4));
  CHECK_FALSE(is_abelian(oracle::s4()));
}

TEST_CASE("minimal normal subgroups") {
  auto mins = minimal_normal_subgroups(oracle::s4());
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 4);  // the Klein subgroup

  ExtensionGroup split = split_affine_extension();
  auto vl = minimal_normal_subgroups(split.group);
  REQUIRE(vl.size() == 1);
  CHECK(vl[0].order() == 8);
  CHECK(vl[0].same_group(split.module_subgroup()));
}

TEST_CASE("simplicity") {
  CHECK(is_simple(oracle::a5()));
  CHECK_FALSE(is_simple(oracle::s4()));
  CHECK_FALSE(is_simple(oracle::d12()));
}

TEST_CASE("derived subgroup of S4 is A4") {
  PermGroup a4 = derived_subgroup(oracle::s4());
  CHECK(a4.order() == 12);
  CHECK(is_normal(oracle::s4(), a4));
}

TEST_CASE("sylow subgroups") {
  PermGroup s4 = oracle::s4();
  CHECK(sylow(s4, 2).order() == 8);
  CHECK(sylow(s4, 3).order() == 3);
  CHECK(sylow(s4, 5).order() == 1);
  PermGroup a5 = oracle::a5();
  CHECK(sylow(a5, 2).order() == 4);
  CHECK(sylow(a5, 5).order() == 5);
}

TEST_CASE("intersection of two Sylow-2s of S4 is the Klein subgroup") {
  PermGroup s4 = oracle::s4();
  PermGroup p = sylow(s4, 2);
  // find a second, different Sylow-2 as a conjugate
  for (const Permutation& g : s4.elements()) {
    PermGroup q = conjugate_subgroup(p, g);
    if (!q.same_group(p)) {
      PermGroup meet = intersection(s4, p, q);
      CHECK(meet.order() == 4);
      return;
    }
  }
  FAIL("no second Sylow-2 found");
}

TEST_CASE("block quotient falls back to coset action when blocks collapse") {
  PermGroup s4 = oracle::s4();
  PermGroup v4 = PermGroup::from_generators(
      {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})});
  Quotient q = block_quotient(s4, v4);
  CHECK(q.used_coset_action);  // V4 is transitive on the 4 points
  CHECK(q.group.order() == 6);
  // map is a homomorphism with kernel V4
  for (const Permutation& a : s4.generators())
    for (const Permutation& b : s4.generators())
      CHECK(q.map(a * b) == q.map(a) * q.map(b));
  for (const Permutation& k : v4.elements()) CHECK(q.map(k).is_identity());
}

TEST_CASE("block quotient uses orbit blocks when faithful beyond the kernel") {
  // S3 x C2 acting on 3 + 2 points
  PermGroup g = PermGroup::from_generators({Permutation({1, 2, 0, 3, 4}),
                                            Permutation({1, 0, 2, 3, 4}),
                                            Permutation({0, 1, 2, 4, 3})});
  PermGroup n = PermGroup::from_generators({Permutation({0, 1, 2, 4, 3})});
  Quotient q = block_quotient(g, n);
  CHECK_FALSE(q.used_coset_action);
  CHECK(q.group.order() == 6);
  CHECK(q.group.degree() == 4);  // three singleton blocks + one pair
}

TEST_CASE("regular action") {
  PermGroup s3 = PermGroup::from_generators(
      {Permutation({1, 0, 2}), Permutation({1, 2, 0})});
  RegularAction reg = regular_action(s3);
  CHECK(reg.group.degree() == 6);
  CHECK(reg.group.order() == 6);
  for (const Permutation& a : s3.elements())
    for (const Permutation& b : s3.elements())
      CHECK(reg.embed(a * b) == reg.embed(a) * reg.embed(b));
}
