#include "pisub/coset_table.hpp"

#include <deque>

namespace pisub {

namespace {

// Mutable enumeration state; HLT with union-find coincidence handling.
struct Enumerator {
  int ncols;
  int max_cosets;
  std::vector<std::vector<int>> tab;
  std::vector<int> rep;
  std::deque<int> deadq;
  int live = 0;

  Enumerator(int ngens, int maxc) : ncols(2 * ngens), max_cosets(maxc) {
    new_coset();
  }

  static int inv(int c) { return c ^ 1; }

  int find(int x) {
    while (rep[x] != x) {
      rep[x] = rep[rep[x]];
      x = rep[x];
    }
    return x;
  }

  int new_coset() {
    tab.emplace_back(ncols, -1);
    rep.push_back(static_cast<int>(rep.size()));
    ++live;
    if (live > max_cosets)
      throw EnumerationOverflow("coset enumeration exceeded max_cosets");
    return static_cast<int>(tab.size()) - 1;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // smaller representative wins
    rep[b] = a;
    deadq.push_back(b);
    --live;
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!deadq.empty()) {
      int e = deadq.front();
      deadq.pop_front();
      for (int c = 0; c < ncols; ++c) {
        int f = tab[e][c];
        if (f < 0) continue;
        if (tab[f][inv(c)] == e) tab[f][inv(c)] = -1;
        int e1 = find(e), f1 = find(f);
        if (tab[e1][c] >= 0)
          merge(f1, tab[e1][c]);
        else if (tab[f1][inv(c)] >= 0)
          merge(e1, tab[f1][inv(c)]);
        else {
          tab[e1][c] = f1;
          tab[f1][inv(c)] = e1;
        }
      }
    }
  }

  void scan_and_fill(int a, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = find(a), b = find(a);
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j) {
        int t = tab[f][w[i]];
        if (t < 0) break;
        f = find(t);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        int t = tab[b][inv(w[j])];
        if (t < 0) break;
        b = find(t);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        tab[f][w[i]] = b;
        tab[b][inv(w[i])] = f;
        return;
      }
      int n = new_coset();
      tab[f][w[i]] = n;
      tab[n][inv(w[i])] = f;
      f = n;
      ++i;
    }
  }
};

}  // namespace

std::vector<Permutation> CosetTable::permutation_rep() const {
  std::vector<Permutation> perms;
  for (int g = 0; g < ngens_; ++g) {
    std::vector<Point> img(ncosets_);
    for (int x = 0; x < ncosets_; ++x)
      img[x] = static_cast<Point>(table_[x][2 * g]);
    perms.emplace_back(std::move(img));
  }
  return perms;
}

int CosetTable::trace(int coset, const Word& w) const {
  for (int letter : w.letters) coset = table_[coset][letter];
  return coset;
}

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_gens,
                        int max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
  for (const Word& r : p.relators)
    for (int letter : r.letters)
      if ((letter >> 1) >= p.ngens)
        throw std::invalid_argument("relator references missing generator");

  Enumerator en(p.ngens, max_cosets);
  for (const Word& w : subgroup_gens) en.scan_and_fill(0, w.letters);
  for (int idx = 0; idx < static_cast<int>(en.tab.size()); ++idx) {
    if (en.find(idx) != idx) continue;
    for (const Word& r : p.relators) {
      en.scan_and_fill(idx, r.letters);
      if (en.find(idx) != idx) break;
    }
    if (en.find(idx) != idx) continue;
    for (int c = 0; c < en.ncols; ++c) {
      if (en.tab[idx][c] >= 0) continue;
      int n = en.new_coset();
      en.tab[idx][c] = n;
      en.tab[n][Enumerator::inv(c)] = idx;
    }
  }

  // compact + standardize: breadth-first renumbering from the subgroup coset
  int total = static_cast<int>(en.tab.size());
  std::vector<int> number(total, -1);
  std::vector<int> order;
  int start = en.find(0);
  number[start] = 0;
  order.push_back(start);
  for (std::size_t q = 0; q < order.size(); ++q) {
    int x = order[q];
    for (int c = 0; c < en.ncols; ++c) {
      if (en.tab[x][c] < 0)
        throw std::logic_error("undefined entry in completed coset table");
      int y = en.find(en.tab[x][c]);
      if (number[y] < 0) {
        number[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  if (static_cast<int>(order.size()) != en.live)
    throw std::logic_error("coset table not connected after enumeration");

  CosetTable out;
  out.ngens_ = p.ngens;
  out.ncosets_ = en.live;
  out.table_.assign(en.live, std::vector<int>(en.ncols, -1));
  for (int x = 0; x < en.live; ++x)
    for (int c = 0; c < en.ncols; ++c)
      out.table_[x][c] = number[en.find(en.tab[order[x]][c])];

  // validity audit: columns are bijections, relators and subgroup generators
  // trace to closed cycles
  for (int c = 0; c < en.ncols; ++c) {
    std::vector<bool> hit(out.ncosets_, false);
    for (int x = 0; x < out.ncosets_; ++x) {
      int y = out.table_[x][c];
      if (y < 0 || hit[y]) throw std::logic_error("coset table column invalid");
      hit[y] = true;
    }
  }
  for (int x = 0; x < out.ncosets_; ++x)
    for (const Word& r : p.relators)
      if (out.trace(x, r) != x)
        throw std::logic_error("relator does not close in coset table");
  for (const Word& w : subgroup_gens)
    if (out.trace(0, w) != 0)
      throw std::logic_error("subgroup generator does not close at coset 0");

  return out;
}

}  // namespace pisub
