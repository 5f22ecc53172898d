#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pisub/f2lin.hpp"
#include "pisub/perm.hpp"

namespace pisub {

// Word in a free group: sequence of letters, letter 2g = generator g,
// letter 2g+1 = its inverse.
struct Word {
  std::vector<int> letters;

  static Word gen(int g, int exponent = 1);
  Word operator*(const Word& o) const;
  Word inverse() const;
  Word pow(int n) const;
  std::size_t size() const { return letters.size(); }
};

Word commutator_word(const Word& a, const Word& b);

struct Presentation {
  int ngens = 0;
  std::vector<Word> relators;
};

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images);
BitMatrix evaluate_word_matrix(const Word& w, const std::vector<BitMatrix>& images);

// <a,b | a^2, b^3, (ab)^7, [a,b]^4>, a presentation of GL3(2).
Presentation gl32_presentation();

// First pair (a,b) drawn from `candidates` (in order) with all relators
// trivial and |<a,b>| == target_order under the action on nonzero vectors.
std::optional<std::pair<BitMatrix, BitMatrix>> find_presentation_pair(
    const std::vector<Word>& relators, const std::vector<BitMatrix>& candidates,
    std::uint64_t target_order);

// Same over all of GL3(2) with target order 168; throws if none exists.
std::pair<BitMatrix, BitMatrix> find_presentation_pair(
    const std::vector<Word>& relators);

}  // namespace pisub
