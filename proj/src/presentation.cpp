#include "pisub/presentation.hpp"

#include <stdexcept>

#include "pisub/perm_group.hpp"

namespace pisub {

Word Word::gen(int g, int exponent) {
  Word w;
  int letter = exponent >= 0 ? 2 * g : 2 * g + 1;
  for (int i = 0; i < std::abs(exponent); ++i) w.letters.push_back(letter);
  return w;
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(*it ^ 1);
  return w;
}

Word Word::pow(int n) const {
  Word base = n >= 0 ? *this : inverse();
  Word w;
  for (int i = 0; i < std::abs(n); ++i) w = w * base;
  return w;
}

Word commutator_word(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation evaluate_word(const Word& w,
                          const std::vector<Permutation>& images) {
  if (images.empty()) throw std::invalid_argument("no generator images");
  Permutation acc = Permutation::identity(images[0].degree());
  for (int letter : w.letters) {
    int g = letter >> 1;
    if (g >= static_cast<int>(images.size()))
      throw std::invalid_argument("word references missing generator");
    acc = (letter & 1) ? acc * images[g].inverse() : acc * images[g];
  }
  return acc;
}

BitMatrix evaluate_word_matrix(const Word& w,
                               const std::vector<BitMatrix>& images) {
  if (images.empty()) throw std::invalid_argument("no generator images");
  BitMatrix acc = BitMatrix::identity(images[0].rows());
  for (int letter : w.letters) {
    int g = letter >> 1;
    if (g >= static_cast<int>(images.size()))
      throw std::invalid_argument("word references missing generator");
    acc = (letter & 1) ? acc * images[g].inverse() : acc * images[g];
  }
  return acc;
}

Presentation gl32_presentation() {
  Word a = Word::gen(0), b = Word::gen(1);
  Presentation p;
  p.ngens = 2;
  p.relators = {a.pow(2), b.pow(3), (a * b).pow(7), commutator_word(a, b).pow(4)};
  return p;
}

std::optional<std::pair<BitMatrix, BitMatrix>> find_presentation_pair(
    const std::vector<Word>& relators, const std::vector<BitMatrix>& candidates,
    std::uint64_t target_order) {
  for (const BitMatrix& a : candidates) {
    for (const BitMatrix& b : candidates) {
      bool ok = true;
      for (const Word& r : relators)
        if (!(evaluate_word_matrix(r, {a, b}) == BitMatrix::identity(a.rows()))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      PermGroup gen = PermGroup::from_generators({gl32_perm(a), gl32_perm(b)});
      if (gen.order() == target_order) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

std::pair<BitMatrix, BitMatrix> find_presentation_pair(
    const std::vector<Word>& relators) {
  auto r = find_presentation_pair(relators, enumerate_gl32(), 168);
  if (!r) throw std::runtime_error("no generating pair satisfies the relators");
  return *r;
}

}  // namespace pisub
