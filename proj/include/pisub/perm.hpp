#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pisub {

using Point = std::uint16_t;

// Bijection on {0,...,degree-1}. Composition convention is fixed globally:
// (p*q)(x) = q(p(x)), i.e. p acts first.
class Permutation {
public:
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(imgs_.size()); }
  Point operator()(Point x) const { return imgs_[x]; }
  const std::vector<Point>& images() const { return imgs_; }

  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;

  // least n >= 1 with p^n = id, as lcm of cycle lengths
  std::uint64_t order() const;

  bool operator==(const Permutation& o) const { return imgs_ == o.imgs_; }
  bool operator!=(const Permutation& o) const { return imgs_ != o.imgs_; }
  bool operator<(const Permutation& o) const { return imgs_ < o.imgs_; }

  std::size_t hash() const;
  std::string cycle_string() const;

private:
  Permutation() = default;
  std::vector<Point> imgs_;
};

// g^{-1} * p * g
Permutation conjugate(const Permutation& p, const Permutation& g);

// p * q * p^{-1} * q^{-1}
Permutation commutator(const Permutation& p, const Permutation& q);

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace pisub
