#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pisub/perm.hpp"

namespace pisub {

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Permutation group given by generators, with a deterministically constructed
// base and strong generating set. Immutable after construction; copies share
// state.
class PermGroup {
public:
  static PermGroup from_generators(std::vector<Permutation> gens);
  static PermGroup trivial(int degree);
  // Group generated by the given elements; greedily drops redundant
  // generators, so the result has a short generating list.
  static PermGroup from_element_set(const std::vector<Permutation>& elems,
                                    int degree);

  int degree() const;
  const std::vector<Permutation>& generators() const;
  std::uint64_t order() const;
  const std::vector<Point>& base() const;

  bool contains(const Permutation& p) const;
  bool contains_group(const PermGroup& h) const;

  // All elements in a deterministic order (transversal products, level-major).
  // Cached after the first call; throws CapExceeded if order > cap.
  const std::vector<Permutation>& elements(
      std::uint64_t cap = kDefaultElementCap) const;

  // All elements sorted by image array; cached.
  const std::vector<Permutation>& sorted_elements(
      std::uint64_t cap = kDefaultElementCap) const;

  // Canonical fingerprint: hash over the sorted element list.
  std::uint64_t fingerprint(std::uint64_t cap = kDefaultElementCap) const;

  bool same_group(const PermGroup& o) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Closure of <gens> as a plain element list (deterministic order). Returns
// nullopt as soon as the closure exceeds `cap` elements.
std::optional<std::vector<Permutation>> closure_elements(
    const std::vector<Permutation>& gens, std::uint64_t cap);

}  // namespace pisub
