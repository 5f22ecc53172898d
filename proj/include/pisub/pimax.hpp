#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pisub/extensions.hpp"
#include "pisub/group_ops.hpp"
#include "pisub/perm_group.hpp"

namespace pisub {

struct PrimeSet {
  std::vector<int> primes;  // sorted, distinct

  explicit PrimeSet(std::vector<int> p);
  bool contains(int p) const;
};

// largest divisor of n all of whose prime factors lie in pi
std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi);
bool is_pi_number(std::uint64_t n, const PrimeSet& pi);
bool is_pi_element(const Permutation& g, const PrimeSet& pi);
bool is_pi_group(const PermGroup& h, const PrimeSet& pi);

struct PiMaximalResult {
  bool maximal;
  std::optional<PermGroup> witness;  // a strictly larger pi-overgroup when not
};

// Exhaustive: H is pi-maximal in G iff no g in G\H makes <H,g> a pi-group.
// One candidate per right coset of H suffices since <H,hg> = <H,g>.
PiMaximalResult is_pi_maximal(const PermGroup& g, const PermGroup& h,
                              const PrimeSet& pi,
                              std::uint64_t cap = kDefaultElementCap);

// All pi-maximal subgroups of g containing s, by breadth-first ascent with
// single-element extensions, deduplicated by element-set fingerprint.
// Deterministic order: sorted by (order, fingerprint).
std::vector<PermGroup> maximal_pi_overgroups(
    const PermGroup& g, const PermGroup& s, const PrimeSet& pi,
    std::uint64_t cap = kDefaultElementCap);

// |N_G(H) : H| has no prime factor in pi.
bool wielandt_hartley_check(const PermGroup& g, const PermGroup& h,
                            const PrimeSet& pi,
                            std::uint64_t cap = kDefaultElementCap);

// Checks gimg subnormal in gstar and k pi-maximal in gstar; returns the
// certified pi-submaximal subgroup gimg∩k. Throws on any failed check.
PermGroup verify_submaximality_witness(const PermGroup& gstar,
                                       const PermGroup& gimg,
                                       const PermGroup& k, const PrimeSet& pi);

struct AuditEntry {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SubmaximalityVerdict {
  // "refuted-in-candidates" when the pipeline completes and no candidate
  // admits a pi-maximal K meeting G exactly in S
  std::string status;
  std::vector<AuditEntry> audit;
  std::vector<std::string> consumed_facts;
  std::uint64_t sylow_order = 0;
  std::uint64_t extended_order = 0;
  std::vector<std::uint64_t> overgroup_orders_base;      // ascent inside G
  std::vector<std::uint64_t> overgroup_orders_extended;  // ascent inside G<alpha>
  // the computed groups themselves, for downstream reuse
  std::vector<PermGroup> overgroups_base;
  std::vector<PermGroup> overgroups_extended;
  std::optional<ExtendedGroup> extended;

  bool passed() const;
};

// The non-submaximality pipeline for the two order-1344 extensions: checks
// the reduction hypotheses, builds G<alpha>, and refutes S = G∩K over the
// candidate list {G, G<alpha>}.
SubmaximalityVerdict corollary_check(const ExtensionGroup& ext,
                                     const PrimeSet& pi,
                                     std::uint64_t cap = kDefaultElementCap);

}  // namespace pisub
