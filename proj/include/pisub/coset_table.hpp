#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pisub/perm_group.hpp"
#include "pisub/presentation.hpp"

namespace pisub {

struct EnumerationOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Completed, compacted, standardized coset table. Cosets are numbered in
// breadth-first order from coset 0 (the subgroup itself).
class CosetTable {
public:
  int ncosets() const { return ncosets_; }
  int ngens() const { return ngens_; }
  // action of generator column c (2g or 2g+1) on coset x
  int entry(int x, int c) const { return table_[x][c]; }

  // one permutation of the cosets per abstract generator
  std::vector<Permutation> permutation_rep() const;

  int trace(int coset, const Word& w) const;

  friend CosetTable todd_coxeter(const Presentation& p,
                                 const std::vector<Word>& subgroup_gens,
                                 int max_cosets);

private:
  int ngens_ = 0;
  int ncosets_ = 0;
  std::vector<std::vector<int>> table_;
};

// HLT coset enumeration over <subgroup_gens>, deterministic definition order,
// with a final breadth-first standardization pass. Throws
// EnumerationOverflow if more than max_cosets live cosets are ever needed.
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_gens,
                        int max_cosets);

}  // namespace pisub
