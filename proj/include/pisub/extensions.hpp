#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pisub/coset_table.hpp"
#include "pisub/f2lin.hpp"
#include "pisub/group_ops.hpp"
#include "pisub/perm_group.hpp"
#include "pisub/presentation.hpp"

namespace pisub {

// Action of the presented group's generators on a GF(2) module; relators must
// act as the identity (checked on construction).
struct ModuleAction {
  int dim = 0;
  std::vector<BitMatrix> mats;  // one invertible dim x dim matrix per generator

  ModuleAction(int d, std::vector<BitMatrix> m, const Presentation& p);
  BitMatrix word_matrix(const Word& w) const;
};

// One module element per relator of the presentation.
struct TailVector {
  std::vector<BitVector> tails;
};

// An extension of an elementary abelian module by the presented group,
// realized as a permutation group with the module generators and generator
// lifts known.
struct ExtensionGroup {
  PermGroup group;
  Presentation lpres;
  std::optional<ModuleAction> action;
  std::vector<Permutation> module_gens;  // images of the module basis
  std::vector<Permutation> lifts;        // images of the abstract generators
  TailVector tails;

  PermGroup module_subgroup() const;
  // presentation generator images, module basis first then lifts
  std::vector<Permutation> presentation_images() const;
  // permutation of the module element with the given coordinates
  Permutation module_element(const BitVector& v) const;
  // full presentation (module relations + conjugation + tailed relators)
  Presentation lifted_presentation() const;
};

struct Inconsistent {
  int cosets;  // coset count the enumeration collapsed to
};

// Group on the 2^n vectors of GF(2)^n generated by the linear maps v -> v*M
// and the basis translations.
PermGroup affine_perm_group(const std::vector<BitMatrix>& mats, int n);

// The split extension V:L on 8 points with known module/lift data, built from
// a generating pair of GL3(2) satisfying the fixed presentation.
ExtensionGroup split_affine_extension();

// Degree-64 group <translations, diag(g, g^-T), J> where J swaps the two
// 3-dimensional blocks; order 21504.
PermGroup example1_star_group();
// Its index-2 subgroup (V + V*):L of order 10752.
PermGroup example1_base_group();

// Imprimitive group on k copies of X's points: base X^k plus the k-cycle.
PermGroup wreath_regular(const PermGroup& x, int k);

// Presentation with generators {module basis} + {abstract generators},
// relations v_i^2, [v_i,v_j], conjugation by act, and r_k = t_k; enumerated
// by Todd-Coxeter over the trivial subgroup. Consistent iff the coset count
// is 2^dim * presented_order.
std::variant<ExtensionGroup, Inconsistent> extension_by_tails(
    const Presentation& p, const ModuleAction& act, const TailVector& t,
    std::uint64_t presented_order, int max_cosets = 200000);

// True iff some choice of module corrections to the lifts satisfies every
// relator of the presentation exactly (split test).
bool has_complement_lift(const ExtensionGroup& ext);

struct ExtensionCandidate {
  TailVector tails;
  ExtensionGroup group;
  bool split;
};

std::vector<ExtensionCandidate> enumerate_extensions(
    const Presentation& p, const ModuleAction& act,
    std::uint64_t presented_order);

struct CocycleSpaces {
  std::vector<BitVector> cocycle_basis;    // Z^1, dim = ngens * module dim
  std::vector<BitVector> coboundary_basis; // B^1
  // a cocycle outside the coboundary span, when one exists
  std::optional<BitVector> outer_cocycle;
};

CocycleSpaces solve_1cocycles(const Presentation& p, const ModuleAction& act);

// Value of the cocycle on generator g (a module element).
BitVector cocycle_value(const BitVector& delta, int gen, int dim);

struct AutomorphismSpec {
  // one image per generator of the lifted presentation (module gens + lifts)
  std::vector<Permutation> generator_images;
};

// Automorphism fixing the module pointwise and multiplying each lift by the
// cocycle value; verified to satisfy the lifted presentation, be bijective,
// have order 2, and be non-inner. Throws on any failed check.
AutomorphismSpec alpha_automorphism(const ExtensionGroup& ext,
                                    const BitVector& delta);

bool automorphism_is_inner(const ExtensionGroup& ext,
                           const AutomorphismSpec& spec);

// Permutation group on G's elements generated by right translations and the
// automorphism map; order 2|G|. The returned embed maps elements of G to
// their right-translation copies.
struct ExtendedGroup {
  PermGroup group;
  PermGroup inner_copy;  // the right-regular copy of G
  std::function<Permutation(const Permutation&)> embed;
};

ExtendedGroup extend_by_automorphism(const ExtensionGroup& ext,
                                     const AutomorphismSpec& alpha);

// |Aut(G)| by exhaustive search over generator-image tuples.
std::uint64_t count_automorphisms_bruteforce(const PermGroup& g,
                                             const Presentation& pres);
// Specialized count for module extensions whose module is characteristic
// (unique minimal normal subgroup; checked).
std::uint64_t count_automorphisms_bruteforce(const ExtensionGroup& ext);

}  // namespace pisub
