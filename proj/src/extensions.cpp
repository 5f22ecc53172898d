#include "pisub/extensions.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace pisub {

namespace {

Word shift_word(const Word& w, int offset) {
  Word r;
  for (int letter : w.letters) r.letters.push_back(letter + 2 * offset);
  return r;
}

Word module_word(const BitVector& v) {
  Word w;
  for (int i = 0; i < v.dim; ++i)
    if (v.get(i)) w = w * Word::gen(i);
  return w;
}

}  // namespace

ModuleAction::ModuleAction(int d, std::vector<BitMatrix> m,
                           const Presentation& p)
    : dim(d), mats(std::move(m)) {
  if (static_cast<int>(mats.size()) != p.ngens)
    throw std::invalid_argument("one matrix per generator required");
  for (const BitMatrix& mat : mats)
    if (mat.rows() != dim || mat.cols() != dim || !mat.invertible())
      throw std::invalid_argument("module action matrices must be invertible dim x dim");
  for (const Word& r : p.relators)
    if (!(evaluate_word_matrix(r, mats) == BitMatrix::identity(dim)))
      throw std::invalid_argument("relator does not act as identity on module");
}

BitMatrix ModuleAction::word_matrix(const Word& w) const {
  return evaluate_word_matrix(w, mats);
}

PermGroup ExtensionGroup::module_subgroup() const {
  if (module_gens.empty()) return PermGroup::trivial(group.degree());
  return PermGroup::from_generators(module_gens);
}

std::vector<Permutation> ExtensionGroup::presentation_images() const {
  std::vector<Permutation> images = module_gens;
  images.insert(images.end(), lifts.begin(), lifts.end());
  return images;
}

Permutation ExtensionGroup::module_element(const BitVector& v) const {
  Permutation p = Permutation::identity(group.degree());
  for (int i = 0; i < v.dim; ++i)
    if (v.get(i)) p = p * module_gens[i];
  return p;
}

Presentation ExtensionGroup::lifted_presentation() const {
  int d = static_cast<int>(module_gens.size());
  int n = lpres.ngens;
  Presentation out;
  out.ngens = d + n;
  for (int i = 0; i < d; ++i) out.relators.push_back(Word::gen(i).pow(2));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      out.relators.push_back(commutator_word(Word::gen(i), Word::gen(j)));
  for (int j = 0; j < n; ++j) {
    Word x = Word::gen(d + j);
    for (int i = 0; i < d; ++i) {
      BitVector img = apply(BitVector(d, 1ull << i), action->mats[j]);
      out.relators.push_back(x.inverse() * Word::gen(i) * x *
                             module_word(img).inverse());
    }
  }
  for (std::size_t k = 0; k < lpres.relators.size(); ++k)
    out.relators.push_back(shift_word(lpres.relators[k], d) *
                           module_word(tails.tails[k]).inverse());
  return out;
}

PermGroup affine_perm_group(const std::vector<BitMatrix>& mats, int n) {
  if (n <= 0 || n > 20) throw std::invalid_argument("bad dimension");
  int deg = 1 << n;
  std::vector<Permutation> gens;
  for (const BitMatrix& m : mats) {
    if (m.rows() != n || m.cols() != n || !m.invertible())
      throw std::invalid_argument("singular or mis-shaped matrix");
    std::vector<Point> img(deg);
    for (int x = 0; x < deg; ++x)
      img[x] = static_cast<Point>(apply(BitVector(n, x), m).bits);
    gens.emplace_back(std::move(img));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Point> img(deg);
    for (int x = 0; x < deg; ++x) img[x] = static_cast<Point>(x ^ (1 << i));
    gens.emplace_back(std::move(img));
  }
  return PermGroup::from_generators(gens);
}

ExtensionGroup split_affine_extension() {
  Presentation p = gl32_presentation();
  auto [a, b] = find_presentation_pair(p.relators);
  PermGroup g = affine_perm_group({a, b}, 3);

  ExtensionGroup ext;
  ext.group = g;
  ext.lpres = p;
  ext.action.emplace(3, std::vector<BitMatrix>{a, b}, p);
  const auto& gens = g.generators();  // [lin a, lin b, t0, t1, t2]
  ext.module_gens = {gens[2], gens[3], gens[4]};
  ext.lifts = {gens[0], gens[1]};
  ext.tails.tails.assign(p.relators.size(), BitVector(3, 0));
  for (const Word& r : p.relators)
    if (!evaluate_word(r, ext.lifts).is_identity())
      throw std::logic_error("split affine lifts do not satisfy the relators");
  return ext;
}

namespace {

std::vector<BitMatrix> example1_linear_parts() {
  Presentation p = gl32_presentation();
  auto [a, b] = find_presentation_pair(p.relators);
  std::vector<BitMatrix> out;
  for (const BitMatrix& g : {a, b}) {
    BitMatrix m(6, 6);
    BitMatrix gd = inverse_transpose(g);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        m.set(i, j, g.get(i, j));
        m.set(i + 3, j + 3, gd.get(i, j));
      }
    out.push_back(m);
  }
  return out;
}

BitMatrix block_swap6() {
  BitMatrix j(6, 6);
  for (int i = 0; i < 3; ++i) {
    j.set(i, i + 3, true);
    j.set(i + 3, i, true);
  }
  return j;
}

}  // namespace

PermGroup example1_base_group() {
  return affine_perm_group(example1_linear_parts(), 6);
}

PermGroup example1_star_group() {
  auto mats = example1_linear_parts();
  mats.push_back(block_swap6());
  return affine_perm_group(mats, 6);
}

PermGroup wreath_regular(const PermGroup& x, int k) {
  if (k < 1) throw std::invalid_argument("wreath power must be >= 1");
  int d = x.degree();
  int deg = d * k;
  std::vector<Permutation> gens;
  for (int c = 0; c < k; ++c) {
    for (const Permutation& g : x.generators()) {
      std::vector<Point> img(deg);
      for (int pt = 0; pt < deg; ++pt) img[pt] = static_cast<Point>(pt);
      for (int i = 0; i < d; ++i) img[c * d + i] = static_cast<Point>(c * d + g(i));
      gens.emplace_back(std::move(img));
    }
  }
  if (k > 1) {
    std::vector<Point> img(deg);
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < d; ++i)
        img[c * d + i] = static_cast<Point>(((c + 1) % k) * d + i);
    gens.emplace_back(std::move(img));
  }
  if (gens.empty()) return PermGroup::trivial(deg);
  return PermGroup::from_generators(gens);
}

std::variant<ExtensionGroup, Inconsistent> extension_by_tails(
    const Presentation& p, const ModuleAction& act, const TailVector& t,
    std::uint64_t presented_order, int max_cosets) {
  if (t.tails.size() != p.relators.size())
    throw std::invalid_argument("one tail per relator required");
  ExtensionGroup ext;
  ext.lpres = p;
  ext.action = act;
  ext.tails = t;
  // module generator placeholders so lifted_presentation knows the dimension
  ext.module_gens.assign(act.dim, Permutation::identity(1));

  Presentation lifted = ext.lifted_presentation();
  CosetTable table = todd_coxeter(lifted, {}, max_cosets);
  std::uint64_t expected = (1ull << act.dim) * presented_order;
  if (static_cast<std::uint64_t>(table.ncosets()) != expected)
    return Inconsistent{table.ncosets()};

  std::vector<Permutation> perms = table.permutation_rep();
  ext.module_gens.assign(perms.begin(), perms.begin() + act.dim);
  ext.lifts.assign(perms.begin() + act.dim, perms.end());
  ext.group = PermGroup::from_generators(perms);
  if (ext.group.order() != expected)
    throw std::logic_error("regular representation order mismatch");
  return ext;
}

bool has_complement_lift(const ExtensionGroup& ext) {
  int d = static_cast<int>(ext.module_gens.size());
  int n = ext.lpres.ngens;
  std::uint64_t total = 1ull << (d * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Permutation> images;
    for (int j = 0; j < n; ++j) {
      BitVector v(d, (code >> (j * d)) & ((1ull << d) - 1));
      images.push_back(ext.module_element(v) * ext.lifts[j]);
    }
    bool ok = true;
    for (const Word& r : ext.lpres.relators)
      if (!evaluate_word(r, images).is_identity()) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<ExtensionCandidate> enumerate_extensions(
    const Presentation& p, const ModuleAction& act,
    std::uint64_t presented_order) {
  if (p.relators.size() > 5)
    throw std::invalid_argument("tail sweep limited to <= 5 relators");
  int d = act.dim;
  int nrel = static_cast<int>(p.relators.size());
  std::uint64_t total = 1ull << (d * nrel);
  std::vector<ExtensionCandidate> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    TailVector t;
    for (int k = 0; k < nrel; ++k)
      t.tails.emplace_back(d, (code >> (k * d)) & ((1ull << d) - 1));
    auto result = extension_by_tails(p, act, t, presented_order);
    if (auto* ext = std::get_if<ExtensionGroup>(&result))
      out.push_back(ExtensionCandidate{t, *ext, has_complement_lift(*ext)});
  }
  return out;
}

BitVector cocycle_value(const BitVector& delta, int gen, int dim) {
  return BitVector(dim, (delta.bits >> (gen * dim)) & ((1ull << dim) - 1));
}

CocycleSpaces solve_1cocycles(const Presentation& p, const ModuleAction& act) {
  int d = act.dim;
  int n = p.ngens;
  int ncols = n * d;
  std::vector<std::uint64_t> eq_rows;
  for (const Word& r : p.relators) {
    // coefficient matrix per generator block: delta(r) = sum over letters of
    // delta(letter) * act(suffix)
    std::vector<BitMatrix> coeff(n, BitMatrix(d, d));
    int m = static_cast<int>(r.letters.size());
    BitMatrix suffix = BitMatrix::identity(d);
    std::vector<BitMatrix> suffixes(m, BitMatrix::identity(d));
    for (int i = m - 1; i >= 0; --i) {
      suffixes[i] = suffix;
      int letter = r.letters[i];
      int g = letter >> 1;
      BitMatrix mg = (letter & 1) ? act.mats[g].inverse() : act.mats[g];
      suffix = mg * suffix;
    }
    for (int i = 0; i < m; ++i) {
      int letter = r.letters[i];
      int g = letter >> 1;
      BitMatrix c = (letter & 1) ? act.mats[g].inverse() * suffixes[i]
                                 : suffixes[i];
      coeff[g] = coeff[g] + c;
    }
    // d equations, one per output coordinate
    for (int t = 0; t < d; ++t) {
      std::uint64_t row = 0;
      for (int g = 0; g < n; ++g)
        for (int s = 0; s < d; ++s)
          if (coeff[g].get(s, t)) row ^= 1ull << (g * d + s);
      eq_rows.push_back(row);
    }
  }
  BitMatrix system = eq_rows.empty()
                         ? BitMatrix(1, ncols)
                         : BitMatrix::from_rows(ncols, std::move(eq_rows));
  CocycleSpaces out;
  out.cocycle_basis = nullspace(system);

  std::vector<std::uint64_t> cob_rows;
  for (int s = 0; s < d; ++s) {
    std::uint64_t u = 0;
    for (int g = 0; g < n; ++g) {
      BitVector v(d, 1ull << s);
      BitVector w = v + apply(v, act.mats[g]);
      u |= w.bits << (g * d);
    }
    cob_rows.push_back(u);
  }
  BitMatrix cob = BitMatrix::from_rows(ncols, cob_rows);
  int cob_rank = cob.rank();
  // reduce to an independent coboundary basis
  std::vector<BitVector> cob_basis;
  {
    std::vector<std::uint64_t> acc;
    for (std::uint64_t row : cob_rows) {
      acc.push_back(row);
      BitMatrix m = BitMatrix::from_rows(ncols, acc);
      if (m.rank() == static_cast<int>(acc.size()))
        cob_basis.emplace_back(ncols, row);
      else
        acc.pop_back();
    }
  }
  out.coboundary_basis = cob_basis;

  for (const BitVector& z : out.cocycle_basis) {
    std::vector<std::uint64_t> rows;
    for (const BitVector& b : cob_basis) rows.push_back(b.bits);
    rows.push_back(z.bits);
    if (BitMatrix::from_rows(ncols, rows).rank() == cob_rank + 1) {
      out.outer_cocycle = z;
      break;
    }
  }
  return out;
}

namespace {

// closure of (e, alpha(e)) pairs over the generator images
std::vector<std::pair<Permutation, Permutation>> automorphism_graph(
    const ExtensionGroup& ext, const AutomorphismSpec& spec) {
  auto gens = ext.presentation_images();
  int deg = ext.group.degree();
  std::vector<std::pair<Permutation, Permutation>> pairs{
      {Permutation::identity(deg), Permutation::identity(deg)}};
  std::unordered_map<std::size_t, std::vector<std::size_t>> index;
  index[pairs[0].first.hash()].push_back(0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Permutation e = pairs[i].first * gens[g];
      auto& bucket = index[e.hash()];
      bool known = false;
      for (std::size_t k : bucket)
        if (pairs[k].first == e) { known = true; break; }
      if (known) continue;
      bucket.push_back(pairs.size());
      pairs.emplace_back(std::move(e),
                         pairs[i].second * spec.generator_images[g]);
    }
  }
  return pairs;
}

}  // namespace

bool automorphism_is_inner(const ExtensionGroup& ext,
                           const AutomorphismSpec& spec) {
  auto gens = ext.presentation_images();
  for (const Permutation& c : ext.group.elements()) {
    bool match = true;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (spec.generator_images[i] != conjugate(gens[i], c)) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

AutomorphismSpec alpha_automorphism(const ExtensionGroup& ext,
                                    const BitVector& delta) {
  int d = static_cast<int>(ext.module_gens.size());
  AutomorphismSpec spec;
  for (const Permutation& v : ext.module_gens) spec.generator_images.push_back(v);
  for (std::size_t j = 0; j < ext.lifts.size(); ++j) {
    BitVector dj = cocycle_value(delta, static_cast<int>(j), d);
    spec.generator_images.push_back(ext.module_element(dj) * ext.lifts[j]);
  }

  Presentation lifted = ext.lifted_presentation();
  for (const Word& r : lifted.relators)
    if (!evaluate_word(r, spec.generator_images).is_identity())
      throw std::invalid_argument("alpha: images violate a defining relation");

  PermGroup image = PermGroup::from_generators(spec.generator_images);
  if (image.order() != ext.group.order() || !ext.group.contains_group(image))
    throw std::invalid_argument("alpha: induced endomorphism is not bijective");

  auto pairs = automorphism_graph(ext, spec);
  if (pairs.size() != ext.group.order())
    throw std::logic_error("alpha: element/image closure size mismatch");
  std::unordered_map<std::size_t, std::vector<std::size_t>> index;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    index[pairs[i].first.hash()].push_back(i);
  auto image_of = [&](const Permutation& e) -> const Permutation& {
    for (std::size_t i : index.at(e.hash()))
      if (pairs[i].first == e) return pairs[i].second;
    throw std::logic_error("alpha: element not found");
  };
  bool moved = false;
  for (const auto& [e, img] : pairs) {
    if (image_of(img) != e)
      throw std::invalid_argument("alpha: map does not have order 2");
    if (img != e) moved = true;
  }
  if (!moved) throw std::invalid_argument("alpha: identity map is inner");
  if (automorphism_is_inner(ext, spec))
    throw std::invalid_argument("alpha: map is inner");
  return spec;
}

ExtendedGroup extend_by_automorphism(const ExtensionGroup& ext,
                                     const AutomorphismSpec& alpha) {
  auto pairs = automorphism_graph(ext, alpha);
  const auto& sorted = ext.group.sorted_elements();
  auto index = std::make_shared<std::unordered_map<std::size_t, std::vector<std::size_t>>>();
  for (std::size_t i = 0; i < sorted.size(); ++i)
    (*index)[sorted[i].hash()].push_back(i);
  auto elems = std::make_shared<std::vector<Permutation>>(sorted);
  auto find_index = [elems, index](const Permutation& p) -> std::size_t {
    auto it = index->find(p.hash());
    if (it != index->end())
      for (std::size_t i : it->second)
        if ((*elems)[i] == p) return i;
    throw std::logic_error("extend_by_automorphism: element not in group");
  };

  std::vector<Point> alpha_img(sorted.size());
  for (const auto& [e, img] : pairs)
    alpha_img[find_index(e)] = static_cast<Point>(find_index(img));
  Permutation alpha_perm(std::move(alpha_img));

  auto embed = [elems, find_index](const Permutation& x) {
    std::vector<Point> img(elems->size());
    for (std::size_t i = 0; i < elems->size(); ++i)
      img[i] = static_cast<Point>(find_index((*elems)[i] * x));
    return Permutation(std::move(img));
  };

  std::vector<Permutation> inner_gens;
  for (const Permutation& g : ext.group.generators()) inner_gens.push_back(embed(g));
  PermGroup inner = PermGroup::from_generators(inner_gens);
  if (inner.contains(alpha_perm))
    throw std::invalid_argument("extend_by_automorphism: automorphism is inner");
  std::vector<Permutation> all_gens = inner_gens;
  all_gens.push_back(alpha_perm);
  PermGroup full = PermGroup::from_generators(all_gens);
  if (full.order() != 2 * ext.group.order())
    throw std::logic_error("extend_by_automorphism: unexpected order");
  return ExtendedGroup{full, inner, embed};
}

std::uint64_t count_automorphisms_bruteforce(const PermGroup& g,
                                             const Presentation& pres) {
  const auto& elems = g.elements();
  // candidate images restricted by pure power relators
  std::vector<std::vector<Permutation>> candidates(pres.ngens);
  std::vector<std::uint64_t> exponent(pres.ngens, 0);
  for (const Word& r : pres.relators) {
    if (r.letters.empty()) continue;
    bool pure = true;
    for (int letter : r.letters)
      if (letter != r.letters[0] || (letter & 1)) { pure = false; break; }
    if (pure) {
      int gen = r.letters[0] >> 1;
      std::uint64_t e = r.letters.size();
      exponent[gen] = exponent[gen] == 0 ? e : std::gcd(exponent[gen], e);
    }
  }
  for (int i = 0; i < pres.ngens; ++i)
    for (const Permutation& e : elems)
      if (exponent[i] == 0 || exponent[i] % e.order() == 0)
        candidates[i].push_back(e);

  std::uint64_t count = 0;
  std::vector<Permutation> tuple;
  std::uint64_t budget = 200'000'000;
  auto recurse = [&](auto&& self, int i) -> void {
    if (budget == 0)
      throw std::runtime_error("automorphism search budget exceeded");
    if (i == pres.ngens) {
      --budget;
      for (const Word& r : pres.relators)
        if (!evaluate_word(r, tuple).is_identity()) return;
      auto closure = closure_elements(tuple, g.order());
      if (closure && closure->size() == g.order()) ++count;
      return;
    }
    for (const Permutation& c : candidates[i]) {
      tuple.push_back(c);
      self(self, i + 1);
      tuple.pop_back();
    }
  };
  recurse(recurse, 0);
  return count;
}

std::uint64_t count_automorphisms_bruteforce(const ExtensionGroup& ext) {
  const PermGroup& g = ext.group;
  int d = static_cast<int>(ext.module_gens.size());
  if (d != 3) throw std::invalid_argument("specialized count needs a 3-dim module");
  PermGroup v = ext.module_subgroup();

  // the module must be characteristic: unique minimal normal subgroup
  auto mins = minimal_normal_subgroups(g);
  if (mins.size() != 1 || !mins[0].same_group(v))
    throw std::invalid_argument("module is not the unique minimal normal subgroup");

  // coordinates of module elements
  std::unordered_map<std::size_t, std::vector<std::pair<Permutation, BitVector>>> vcoord;
  for (std::uint64_t code = 0; code < (1ull << d); ++code) {
    BitVector vec(d, code);
    Permutation p = ext.module_element(vec);
    vcoord[p.hash()].push_back({p, vec});
  }
  auto coords_of = [&](const Permutation& p) -> std::optional<BitVector> {
    auto it = vcoord.find(p.hash());
    if (it == vcoord.end()) return std::nullopt;
    for (const auto& [q, vec] : it->second)
      if (q == p) return vec;
    return std::nullopt;
  };

  Quotient quot = block_quotient(g, v);
  std::uint64_t lorder = g.order() / v.order();

  int n = ext.lpres.ngens;
  // per-generator candidates: order must match, with the conjugation matrix
  // on the module precomputed
  struct Candidate {
    Permutation elem;
    BitMatrix conj;  // action on V by conjugation
    Permutation quot_image;
    Candidate(Permutation e, BitMatrix c, Permutation q)
        : elem(std::move(e)), conj(std::move(c)), quot_image(std::move(q)) {}
  };
  std::vector<std::vector<Candidate>> candidates(n);
  for (int j = 0; j < n; ++j) {
    std::uint64_t want = ext.lifts[j].order();
    for (const Permutation& e : g.elements()) {
      if (e.order() != want) continue;
      BitMatrix conj(d, d);
      bool ok = true;
      for (int i = 0; i < d; ++i) {
        auto c = coords_of(conjugate(ext.module_gens[i], e));
        if (!c) { ok = false; break; }
        for (int t = 0; t < d; ++t) conj.set(i, t, c->get(t));
      }
      if (!ok) continue;  // cannot happen for a normal module
      candidates[j].emplace_back(e, std::move(conj), quot.map(e));
    }
  }
  if (n != 2) throw std::invalid_argument("specialized count needs 2 lifts");

  const auto& gl = enumerate_gl32();
  const BitMatrix& a_act = ext.action->mats[0];
  const BitMatrix& b_act = ext.action->mats[1];
  int nrel = static_cast<int>(ext.lpres.relators.size());

  std::uint64_t count = 0;
  for (const Candidate& ca : candidates[0]) {
    for (const Candidate& cb : candidates[1]) {
      for (const BitMatrix& m : gl) {
        if (!(m * ca.conj == a_act * m)) continue;
        if (!(m * cb.conj == b_act * m)) continue;
        // tailed relators: r_k(images) must equal the mapped tail
        std::vector<Permutation> lift_imgs{ca.elem, cb.elem};
        bool ok = true;
        for (int k = 0; k < nrel; ++k) {
          Permutation lhs = evaluate_word(ext.lpres.relators[k], lift_imgs);
          BitVector mapped = apply(ext.tails.tails[k], m);
          if (lhs != ext.module_element(mapped)) { ok = false; break; }
        }
        if (!ok) continue;
        // generation: module images span V (m invertible), so the tuple
        // generates G iff the quotient images generate L
        PermGroup lq = PermGroup::from_generators({ca.quot_image, cb.quot_image});
        if (lq.order() == lorder) ++count;
      }
    }
  }
  return count;
}

}  // namespace pisub
