#include "pisub/group_ops.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pisub {

namespace {

Permutation perm_power(const Permutation& p, std::uint64_t e) {
  Permutation acc = Permutation::identity(p.degree());
  Permutation sq = p;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    sq = sq * sq;
    e >>= 1;
  }
  return acc;
}

void require_subgroup(const PermGroup& g, const PermGroup& h,
                      const char* what) {
  if (h.degree() != g.degree() || !g.contains_group(h))
    throw std::invalid_argument(what);
}

}  // namespace

PermGroup subgroup_generated(const PermGroup& g,
                             const std::vector<Permutation>& elems) {
  for (const Permutation& e : elems)
    if (!g.contains(e))
      throw std::invalid_argument("element outside the parent group");
  if (elems.empty()) return PermGroup::trivial(g.degree());
  return PermGroup::from_generators(elems);
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h, "normal_closure: not a subgroup");
  std::vector<Permutation> gens;
  for (const Permutation& x : h.generators())
    if (!x.is_identity()) gens.push_back(x);
  if (gens.empty()) return PermGroup::trivial(g.degree());
  PermGroup k = PermGroup::from_generators(gens);
  std::vector<Permutation> work = gens;
  while (!work.empty()) {
    Permutation s = work.back();
    work.pop_back();
    for (const Permutation& x : g.generators()) {
      Permutation c = conjugate(s, x);
      if (!k.contains(c)) {
        gens.push_back(c);
        work.push_back(c);
        k = PermGroup::from_generators(gens);
      }
    }
  }
  return k;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  for (const Permutation& s : h.generators())
    for (const Permutation& x : g.generators())
      if (!h.contains(conjugate(s, x))) return false;
  return true;
}

bool is_subnormal(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h, "is_subnormal: not a subgroup");
  PermGroup c = g;
  while (true) {
    if (c.order() == h.order()) return true;
    PermGroup n = normal_closure(c, h);
    if (n.order() == c.order()) return false;
    c = n;
  }
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h,
                      std::uint64_t cap) {
  std::vector<Permutation> kept;
  for (const Permutation& x : g.elements(cap)) {
    bool ok = true;
    for (const Permutation& s : h.generators())
      if (x * s != s * x) { ok = false; break; }
    if (ok) kept.push_back(x);
  }
  return PermGroup::from_element_set(kept, g.degree());
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     std::uint64_t cap) {
  std::vector<Permutation> kept;
  for (const Permutation& x : g.elements(cap)) {
    bool ok = true;
    for (const Permutation& s : h.generators())
      if (!h.contains(conjugate(s, x))) { ok = false; break; }
    if (ok) kept.push_back(x);
  }
  return PermGroup::from_element_set(kept, g.degree());
}

PermGroup center(const PermGroup& g, std::uint64_t cap) {
  return centralizer(g, g, cap);
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g,
                                                std::uint64_t cap) {
  const auto& elems = g.elements(cap);
  // Conjugate elements have equal normal closures, so one closure per
  // conjugacy class of prime-order elements suffices.
  std::unordered_map<std::size_t, std::vector<Permutation>> classified;
  auto mark = [&classified](Permutation p) {
    auto& bucket = classified[p.hash()];
    for (const Permutation& q : bucket)
      if (q == p) return;
    bucket.push_back(std::move(p));
  };
  auto marked = [&classified](const Permutation& p) {
    auto it = classified.find(p.hash());
    if (it == classified.end()) return false;
    for (const Permutation& q : it->second)
      if (q == p) return true;
    return false;
  };
  std::vector<PermGroup> closures;
  auto is_prime = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (const Permutation& e : elems) {
    if (!is_prime(e.order())) continue;
    if (marked(e)) continue;
    for (const Permutation& x : elems) mark(conjugate(e, x));
    closures.push_back(normal_closure(g, PermGroup::from_generators({e})));
  }
  // deduplicate by element set
  std::vector<PermGroup> distinct;
  for (const PermGroup& n : closures) {
    bool dup = false;
    for (const PermGroup& m : distinct)
      if (m.order() == n.order() && m.fingerprint() == n.fingerprint() &&
          m.contains_group(n)) {
        dup = true;
        break;
      }
    if (!dup) distinct.push_back(n);
  }
  std::vector<PermGroup> minimal;
  for (const PermGroup& n : distinct) {
    bool has_smaller = false;
    for (const PermGroup& m : distinct)
      if (m.order() < n.order() && n.contains_group(m)) {
        has_smaller = true;
        break;
      }
    if (!has_smaller) minimal.push_back(n);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const PermGroup& a, const PermGroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.fingerprint() < b.fingerprint();
            });
  return minimal;
}

bool is_simple(const PermGroup& g, std::uint64_t cap) {
  if (g.order() <= 1) throw std::invalid_argument("is_simple: trivial group");
  auto mins = minimal_normal_subgroups(g, cap);
  return mins.size() == 1 && mins[0].order() == g.order();
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(c);
    }
  if (comms.empty()) return PermGroup::trivial(g.degree());
  return normal_closure(g, PermGroup::from_generators(comms));
}

PermGroup sylow(const PermGroup& g, int p, std::uint64_t cap) {
  std::uint64_t p_part = 1;
  std::uint64_t n = g.order();
  while (n % p == 0) {
    p_part *= p;
    n /= p;
  }
  PermGroup s = PermGroup::trivial(g.degree());
  std::vector<Permutation> gens;
  while (s.order() < p_part) {
    PermGroup nrm = s.order() == 1 ? g : normalizer(g, s, cap);
    bool grown = false;
    for (const Permutation& y : nrm.elements(cap)) {
      if (s.contains(y)) continue;
      std::uint64_t o = y.order();
      std::uint64_t m = o;
      while (m % p == 0) m /= p;
      if (m == o) continue;  // no p-part at all
      Permutation z = perm_power(y, m);
      if (z.is_identity() || s.contains(z)) continue;
      gens.push_back(z);
      s = PermGroup::from_generators(gens);
      grown = true;
      break;
    }
    if (!grown)
      throw std::logic_error("sylow: no extending p-element found");
  }
  return s;
}

PermGroup intersection(const PermGroup& g, const PermGroup& h,
                       const PermGroup& k, std::uint64_t cap) {
  require_subgroup(g, h, "intersection: H not a subgroup of G");
  require_subgroup(g, k, "intersection: K not a subgroup of G");
  const PermGroup& small = h.order() <= k.order() ? h : k;
  const PermGroup& large = h.order() <= k.order() ? k : h;
  std::vector<Permutation> common;
  for (const Permutation& e : small.elements(cap))
    if (large.contains(e)) common.push_back(e);
  return PermGroup::from_element_set(common, g.degree());
}

PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& x) {
  if (h.order() == 1) return h;
  std::vector<Permutation> gens;
  for (const Permutation& s : h.generators()) gens.push_back(conjugate(s, x));
  return PermGroup::from_generators(gens);
}

Quotient block_quotient(const PermGroup& g, const PermGroup& n,
                        std::uint64_t cap) {
  require_subgroup(g, n, "block_quotient: N not a subgroup");
  if (!is_normal(g, n)) throw std::invalid_argument("block_quotient: N not normal");

  int deg = g.degree();
  // orbits of N on the point set
  auto blocks = std::make_shared<std::vector<std::int32_t>>(deg, -1);
  int nblocks = 0;
  for (int start = 0; start < deg; ++start) {
    if ((*blocks)[start] >= 0) continue;
    int id = nblocks++;
    std::vector<Point> stack{static_cast<Point>(start)};
    (*blocks)[start] = id;
    while (!stack.empty()) {
      Point x = stack.back();
      stack.pop_back();
      for (const Permutation& s : n.generators()) {
        Point y = s(x);
        if ((*blocks)[y] < 0) {
          (*blocks)[y] = id;
          stack.push_back(y);
        }
      }
    }
  }

  if (nblocks > 1) {
    auto block_map = [blocks, nblocks](const Permutation& x) {
      std::vector<Point> img(nblocks);
      std::vector<bool> set(nblocks, false);
      for (std::size_t pt = 0; pt < x.images().size(); ++pt) {
        int b = (*blocks)[pt];
        if (!set[b]) {
          img[b] = static_cast<Point>((*blocks)[x.images()[pt]]);
          set[b] = true;
        }
      }
      return Permutation(std::move(img));
    };
    std::vector<Permutation> qgens;
    for (const Permutation& x : g.generators()) qgens.push_back(block_map(x));
    PermGroup image = qgens.empty() ? PermGroup::trivial(nblocks)
                                    : PermGroup::from_generators(qgens);
    if (image.order() == g.order() / n.order())
      return Quotient{image, block_map, false};
  }

  // right-regular action on cosets of N
  auto reps = std::make_shared<std::vector<Permutation>>();
  for (const Permutation& e : g.elements(cap)) {
    bool found = false;
    for (const Permutation& r : *reps)
      if (n.contains(e * r.inverse())) { found = true; break; }
    if (!found) reps->push_back(e);
  }
  PermGroup ncopy = n;
  auto coset_of = [reps, ncopy](const Permutation& y) {
    for (std::size_t j = 0; j < reps->size(); ++j)
      if (ncopy.contains(y * (*reps)[j].inverse())) return j;
    throw std::logic_error("block_quotient: coset not found");
  };
  auto coset_map = [reps, coset_of](const Permutation& x) {
    std::vector<Point> img(reps->size());
    for (std::size_t i = 0; i < reps->size(); ++i)
      img[i] = static_cast<Point>(coset_of((*reps)[i] * x));
    return Permutation(std::move(img));
  };
  std::vector<Permutation> qgens;
  for (const Permutation& x : g.generators()) qgens.push_back(coset_map(x));
  PermGroup image = qgens.empty()
                        ? PermGroup::trivial(static_cast<int>(reps->size()))
                        : PermGroup::from_generators(qgens);
  return Quotient{image, coset_map, true};
}

RegularAction regular_action(const PermGroup& g, std::uint64_t cap) {
  auto elems = std::make_shared<std::vector<Permutation>>(g.sorted_elements(cap));
  auto index = std::make_shared<std::unordered_map<std::size_t, std::vector<std::size_t>>>();
  for (std::size_t i = 0; i < elems->size(); ++i)
    (*index)[(*elems)[i].hash()].push_back(i);
  auto find_index = [elems, index](const Permutation& p) -> std::size_t {
    auto it = index->find(p.hash());
    if (it != index->end())
      for (std::size_t i : it->second)
        if ((*elems)[i] == p) return i;
    throw std::logic_error("regular_action: element not in group");
  };
  auto embed = [elems, find_index](const Permutation& x) {
    std::vector<Point> img(elems->size());
    for (std::size_t i = 0; i < elems->size(); ++i)
      img[i] = static_cast<Point>(find_index((*elems)[i] * x));
    return Permutation(std::move(img));
  };
  std::vector<Permutation> rgens;
  for (const Permutation& x : g.generators()) rgens.push_back(embed(x));
  PermGroup image = rgens.empty()
                        ? PermGroup::trivial(static_cast<int>(elems->size()))
                        : PermGroup::from_generators(rgens);
  return RegularAction{image, embed};
}

}  // namespace pisub
