#pragma once

#include <functional>
#include <vector>

#include "pisub/perm_group.hpp"

namespace pisub {

// Subgroup of g generated by elems (all must lie in g). Empty list gives the
// trivial group.
PermGroup subgroup_generated(const PermGroup& g,
                             const std::vector<Permutation>& elems);

// Smallest normal subgroup of g containing h.
PermGroup normal_closure(const PermGroup& g, const PermGroup& h);

bool is_normal(const PermGroup& g, const PermGroup& h);

// True iff the chain g |> ncl(g,h) |> ncl(ncl(g,h),h) |> ... reaches h.
bool is_subnormal(const PermGroup& g, const PermGroup& h);

PermGroup centralizer(const PermGroup& g, const PermGroup& h,
                      std::uint64_t cap = kDefaultElementCap);

PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     std::uint64_t cap = kDefaultElementCap);

PermGroup center(const PermGroup& g, std::uint64_t cap = kDefaultElementCap);

bool is_abelian(const PermGroup& g);

// Minimal elements among normal closures of prime-order elements.
std::vector<PermGroup> minimal_normal_subgroups(
    const PermGroup& g, std::uint64_t cap = kDefaultElementCap);

// |g| > 1 required. Prime-order (abelian) groups count as simple; use
// is_abelian to distinguish.
bool is_simple(const PermGroup& g, std::uint64_t cap = kDefaultElementCap);

PermGroup derived_subgroup(const PermGroup& g);

// Subgroup whose order is the full p-part of |g|, grown through normalizers.
PermGroup sylow(const PermGroup& g, int p, std::uint64_t cap = kDefaultElementCap);

// h, k <= g; enumerates the smaller of the two.
PermGroup intersection(const PermGroup& g, const PermGroup& h,
                       const PermGroup& k, std::uint64_t cap = kDefaultElementCap);

PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& x);

// Action of g on the orbits of a normal subgroup n, or (when that action is
// unfaithful beyond n) on the right cosets of n. map() pushes elements of g
// to the quotient.
struct Quotient {
  PermGroup group;
  std::function<Permutation(const Permutation&)> map;
  bool used_coset_action = false;
};

Quotient block_quotient(const PermGroup& g, const PermGroup& n,
                        std::uint64_t cap = kDefaultElementCap);

// Right-regular action of g on its own elements (sorted order); point i
// corresponds to sorted_elements()[i]. embed() maps an element of g to its
// right-translation permutation.
struct RegularAction {
  PermGroup group;
  std::function<Permutation(const Permutation&)> embed;
};

RegularAction regular_action(const PermGroup& g,
                             std::uint64_t cap = kDefaultElementCap);

}  // namespace pisub
