#include "pisub/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace pisub {

namespace {

struct Level {
  Point base_point = 0;
  std::vector<Permutation> gens;       // strong generators active at this level
  std::vector<Point> orbit;            // BFS order, orbit[0] == base_point
  std::vector<std::int32_t> orbit_index;  // point -> position in orbit, -1
  std::vector<Permutation> transversal;   // transversal[i] maps base_point -> orbit[i]
};

}  // namespace

struct PermGroup::Impl {
  int degree = 0;
  std::vector<Permutation> input_gens;
  std::vector<Permutation> strong;  // all strong generators
  std::vector<Point> base;
  std::vector<Level> levels;
  std::uint64_t order = 1;

  mutable std::mutex cache_mutex;
  mutable std::vector<Permutation> elements_cache;
  mutable std::vector<Permutation> sorted_cache;
  mutable bool has_fingerprint = false;
  mutable std::uint64_t fingerprint_cache = 0;

  bool fixes_base_prefix(const Permutation& g, std::size_t upto) const {
    for (std::size_t i = 0; i < upto; ++i)
      if (g(base[i]) != base[i]) return false;
    return true;
  }

  void ensure_base_point(const Permutation& g) {
    if (!fixes_base_prefix(g, base.size())) return;
    for (Point x = 0; x < static_cast<Point>(degree); ++x) {
      if (g(x) != x) {
        base.push_back(x);
        return;
      }
    }
  }

  void rebuild_levels() {
    levels.assign(base.size(), Level{});
    for (std::size_t i = 0; i < base.size(); ++i) {
      levels[i].base_point = base[i];
      for (const Permutation& g : strong)
        if (fixes_base_prefix(g, i)) levels[i].gens.push_back(g);
      compute_orbit(levels[i]);
    }
    order = 1;
    for (const Level& lv : levels) order *= lv.orbit.size();
  }

  void compute_orbit(Level& lv) const {
    lv.orbit.clear();
    lv.orbit_index.assign(degree, -1);
    lv.transversal.clear();
    lv.orbit.push_back(lv.base_point);
    lv.orbit_index[lv.base_point] = 0;
    lv.transversal.push_back(Permutation::identity(degree));
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      Point p = lv.orbit[i];
      for (const Permutation& s : lv.gens) {
        Point q = s(p);
        if (lv.orbit_index[q] < 0) {
          lv.orbit_index[q] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.transversal.push_back(lv.transversal[i] * s);
        }
      }
    }
  }

  // Strip p through levels [from, end). Returns residue and stop level.
  std::pair<Permutation, std::size_t> sift_from(Permutation p,
                                                std::size_t from) const {
    for (std::size_t i = from; i < levels.size(); ++i) {
      Point x = p(levels[i].base_point);
      std::int32_t idx = levels[i].orbit_index[x];
      if (idx < 0) return {std::move(p), i};
      p = p * levels[i].transversal[idx].inverse();
    }
    return {std::move(p), levels.size()};
  }

  // Deterministic Schreier-Sims: scan all Schreier generators, add any
  // nontrivial residue as a new strong generator and rescan from the level
  // where sifting stopped.
  void schreier_sims() {
    rebuild_levels();
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = 0; i < levels.size() && !dirty; ++i) {
        const Level& lv = levels[i];
        for (std::size_t oi = 0; oi < lv.orbit.size() && !dirty; ++oi) {
          for (const Permutation& s : lv.gens) {
            Point p = lv.orbit[oi];
            std::int32_t tgt = lv.orbit_index[s(p)];
            Permutation schreier =
                lv.transversal[oi] * s * lv.transversal[tgt].inverse();
            auto [res, j] = sift_from(std::move(schreier), i + 1);
            if (!res.is_identity()) {
              strong.push_back(res);
              ensure_base_point(res);
              rebuild_levels();
              dirty = true;
              break;
            }
          }
        }
      }
    }
  }

  bool contains(const Permutation& p) const {
    auto [res, lvl] = sift_from(p, 0);
    (void)lvl;
    return res.is_identity();
  }

  void build_elements() const {
    std::vector<Permutation> elems{Permutation::identity(degree)};
    for (std::size_t i = levels.size(); i-- > 0;) {
      std::vector<Permutation> next;
      next.reserve(elems.size() * levels[i].transversal.size());
      for (const Permutation& t : levels[i].transversal)
        for (const Permutation& h : elems) next.push_back(h * t);
      elems = std::move(next);
    }
    elements_cache = std::move(elems);
  }
};

PermGroup PermGroup::from_generators(std::vector<Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  int deg = gens[0].degree();
  for (const Permutation& g : gens)
    if (g.degree() != deg) throw std::invalid_argument("degree mismatch");

  auto impl = std::make_shared<Impl>();
  impl->degree = deg;
  impl->input_gens = gens;
  for (const Permutation& g : gens) {
    if (g.is_identity()) continue;
    bool dup = false;
    for (const Permutation& s : impl->strong)
      if (s == g) { dup = true; break; }
    if (!dup) impl->strong.push_back(g);
  }
  for (const Permutation& g : impl->strong) impl->ensure_base_point(g);
  impl->schreier_sims();
  PermGroup result;
  result.impl_ = std::move(impl);
  return result;
}

PermGroup PermGroup::trivial(int degree) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  PermGroup result;
  result.impl_ = std::move(impl);
  return result;
}

PermGroup PermGroup::from_element_set(const std::vector<Permutation>& elems,
                                      int degree) {
  PermGroup g = trivial(degree);
  std::vector<Permutation> gens;
  for (const Permutation& e : elems) {
    if (e.degree() != degree) throw std::invalid_argument("degree mismatch");
    if (!g.contains(e)) {
      gens.push_back(e);
      g = from_generators(gens);
    }
  }
  return g;
}

int PermGroup::degree() const { return impl_->degree; }

const std::vector<Permutation>& PermGroup::generators() const {
  return impl_->input_gens;
}

std::uint64_t PermGroup::order() const { return impl_->order; }

const std::vector<Point>& PermGroup::base() const { return impl_->base; }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != impl_->degree) throw std::invalid_argument("degree mismatch");
  return impl_->contains(p);
}

bool PermGroup::contains_group(const PermGroup& h) const {
  for (const Permutation& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

const std::vector<Permutation>& PermGroup::elements(std::uint64_t cap) const {
  if (order() > cap) throw CapExceeded("element enumeration cap exceeded");
  std::lock_guard<std::mutex> lock(impl_->cache_mutex);
  if (impl_->elements_cache.empty()) impl_->build_elements();
  return impl_->elements_cache;
}

const std::vector<Permutation>& PermGroup::sorted_elements(
    std::uint64_t cap) const {
  elements(cap);
  std::lock_guard<std::mutex> lock(impl_->cache_mutex);
  if (impl_->sorted_cache.empty()) {
    impl_->sorted_cache = impl_->elements_cache;
    std::sort(impl_->sorted_cache.begin(), impl_->sorted_cache.end());
  }
  return impl_->sorted_cache;
}

std::uint64_t PermGroup::fingerprint(std::uint64_t cap) const {
  {
    std::lock_guard<std::mutex> lock(impl_->cache_mutex);
    if (impl_->has_fingerprint) return impl_->fingerprint_cache;
  }
  const auto& sorted = sorted_elements(cap);
  std::uint64_t h = 1469598103934665603ull;
  for (const Permutation& p : sorted) {
    h ^= static_cast<std::uint64_t>(p.hash());
    h *= 1099511628211ull;
  }
  std::lock_guard<std::mutex> lock(impl_->cache_mutex);
  impl_->fingerprint_cache = h;
  impl_->has_fingerprint = true;
  return h;
}

bool PermGroup::same_group(const PermGroup& o) const {
  if (degree() != o.degree() || order() != o.order()) return false;
  return contains_group(o) && o.contains_group(*this);
}

std::optional<std::vector<Permutation>> closure_elements(
    const std::vector<Permutation>& gens, std::uint64_t cap) {
  if (gens.empty()) return std::vector<Permutation>{};
  int deg = gens[0].degree();
  std::vector<Permutation> elems{Permutation::identity(deg)};
  std::unordered_map<std::size_t, std::vector<std::size_t>> index;
  index[elems[0].hash()].push_back(0);
  auto insert_if_new = [&](Permutation p) {
    auto& bucket = index[p.hash()];
    for (std::size_t i : bucket)
      if (elems[i] == p) return false;
    bucket.push_back(elems.size());
    elems.push_back(std::move(p));
    return true;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Permutation& g : gens) {
      if (g.degree() != deg) throw std::invalid_argument("degree mismatch");
      Permutation w = elems[i] * g;
      if (insert_if_new(std::move(w)) && elems.size() > cap) return std::nullopt;
    }
  }
  return elems;
}

}  // namespace pisub
