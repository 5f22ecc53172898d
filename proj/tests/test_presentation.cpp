#include "doctest.h"
#include "pisub/f2lin.hpp"
#include "pisub/perm_group.hpp"
#include "pisub/presentation.hpp"

using namespace pisub;

TEST_CASE("word arithmetic") {
  Word a = Word::gen(0);
  Word b = Word::gen(1);
  CHECK(a.pow(3).size() == 3);
  CHECK(Word::gen(0, -2).size() == 2);
  CHECK((a * b).inverse().letters == std::vector<int>{3, 1});
  Word c = commutator_word(a, b);
  CHECK(c.letters == std::vector<int>{1, 3, 0, 2});
}

TEST_CASE("word evaluation in permutations") {
  Permutation x({1, 0, 2});
  Permutation y({1, 2, 0});
  CHECK(evaluate_word(Word::gen(0) * Word::gen(1), {x, y}) == x * y);
  CHECK(evaluate_word(Word::gen(1, -1), {x, y}) == y.inverse());
  CHECK(evaluate_word(Word{}, {x, y}).is_identity());
  CHECK_THROWS(evaluate_word(Word::gen(2), {x, y}));
}

TEST_CASE("defining presentation has a generating pair in GL3(2)") {
  Presentation p = gl32_presentation();
  CHECK(p.ngens == 2);
  CHECK(p.relators.size() == 4);
  auto [a, b] = find_presentation_pair(p.relators);
  for (const Word& r : p.relators)
    CHECK(evaluate_word_matrix(r, {a, b}) == BitMatrix::identity(3));
  PermGroup g = PermGroup::from_generators({gl32_perm(a), gl32_perm(b)});
  CHECK(g.order() == 168);
}

TEST_CASE("pair search fails on a candidate set that cannot generate") {
  // 3x3 permutation matrices form an S3: relators can hold but the order
  // target 168 is unreachable
  std::vector<BitMatrix> perm_mats;
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& pr : perms) {
    BitMatrix m(3, 3);
    for (int i = 0; i < 3; ++i) m.set(i, pr[i], true);
    perm_mats.push_back(m);
  }
  auto r = find_presentation_pair(gl32_presentation().relators, perm_mats, 168);
  CHECK_FALSE(r.has_value());
}
