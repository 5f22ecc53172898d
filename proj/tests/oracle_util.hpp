#pragma once

// Brute-force oracles shared by the unit tests and the acceptance runner.

#include <vector>

#include "pisub/group_ops.hpp"
#include "pisub/perm_group.hpp"
#include "pisub/pimax.hpp"

namespace oracle {

// Every subgroup of the ambient group, found as closures of element pairs.
// Valid for groups all of whose subgroups are 2-generated (true for S4, D12,
// A5 and everything else this suite feeds it).
inline std::vector<pisub::PermGroup> all_subgroups(const pisub::PermGroup& g) {
  const auto& elems = g.elements();
  std::vector<pisub::PermGroup> subs;
  auto add = [&](const pisub::PermGroup& h) {
    for (const pisub::PermGroup& s : subs)
      if (s.order() == h.order() && s.same_group(h)) return;
    subs.push_back(h);
  };
  add(pisub::PermGroup::trivial(g.degree()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      add(pisub::PermGroup::from_generators({elems[i], elems[j]}));
  return subs;
}

// pi-maximal subgroups straight from the definition, given the full lattice.
inline std::vector<pisub::PermGroup> pi_maximal_subgroups(
    const std::vector<pisub::PermGroup>& subs, const pisub::PrimeSet& pi) {
  std::vector<pisub::PermGroup> out;
  for (const pisub::PermGroup& h : subs) {
    if (!pisub::is_pi_group(h, pi)) continue;
    bool maximal = true;
    for (const pisub::PermGroup& k : subs) {
      if (k.order() <= h.order() || !pisub::is_pi_group(k, pi)) continue;
      if (k.contains_group(h)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

inline bool same_set(const std::vector<pisub::PermGroup>& a,
                     const std::vector<pisub::PermGroup>& b) {
  if (a.size() != b.size()) return false;
  for (const pisub::PermGroup& x : a) {
    bool found = false;
    for (const pisub::PermGroup& y : b)
      if (x.order() == y.order() && x.same_group(y)) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

// Exhaustive cross-check of is_pi_maximal and maximal_pi_overgroups against
// the subgroup lattice. Returns true when everything agrees.
inline bool check_pi_machinery(const pisub::PermGroup& g,
                               const pisub::PrimeSet& pi) {
  auto subs = all_subgroups(g);
  auto maximals = pi_maximal_subgroups(subs, pi);
  for (const pisub::PermGroup& h : subs) {
    if (!pisub::is_pi_group(h, pi)) continue;
    bool expect_maximal = false;
    for (const pisub::PermGroup& m : maximals)
      if (m.order() == h.order() && m.same_group(h)) expect_maximal = true;
    if (pisub::is_pi_maximal(g, h, pi).maximal != expect_maximal) return false;

    std::vector<pisub::PermGroup> expected_over;
    for (const pisub::PermGroup& m : maximals)
      if (m.contains_group(h)) expected_over.push_back(m);
    if (!same_set(pisub::maximal_pi_overgroups(g, h, pi), expected_over))
      return false;
  }
  return true;
}

inline pisub::PermGroup s4() {
  return pisub::PermGroup::from_generators(
      {pisub::Permutation({1, 0, 2, 3}), pisub::Permutation({1, 2, 3, 0})});
}

inline pisub::PermGroup d12() {
  // dihedral group of order 12 on a hexagon
  return pisub::PermGroup::from_generators(
      {pisub::Permutation({1, 2, 3, 4, 5, 0}),
       pisub::Permutation({0, 5, 4, 3, 2, 1})});
}

inline pisub::PermGroup a5() {
  return pisub::PermGroup::from_generators(
      {pisub::Permutation({1, 2, 0, 3, 4}), pisub::Permutation({0, 1, 3, 4, 2})});
}

}  // namespace oracle
