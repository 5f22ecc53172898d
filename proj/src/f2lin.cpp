#include "pisub/f2lin.hpp"

#include <bit>
#include <stdexcept>

namespace pisub {

BitVector BitVector::operator+(const BitVector& o) const {
  if (dim != o.dim) throw std::invalid_argument("dimension mismatch");
  return BitVector(dim, bits ^ o.bits);
}

BitMatrix::BitMatrix(int rows, int cols)
    : nrows_(rows), ncols_(cols), rows_(rows, 0) {
  if (rows <= 0 || cols <= 0 || cols > 64)
    throw std::invalid_argument("bad matrix shape");
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.rows_[i] = 1ull << i;
  return m;
}

BitMatrix BitMatrix::from_rows(int cols, std::vector<std::uint64_t> rows) {
  BitMatrix m(static_cast<int>(rows.size()), cols);
  m.rows_ = std::move(rows);
  return m;
}

void BitMatrix::set(int r, int c, bool v) {
  if (v)
    rows_[r] |= 1ull << c;
  else
    rows_[r] &= ~(1ull << c);
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (ncols_ != o.nrows_) throw std::invalid_argument("shape mismatch");
  BitMatrix r(nrows_, o.ncols_);
  for (int i = 0; i < nrows_; ++i) {
    std::uint64_t acc = 0;
    std::uint64_t row = rows_[i];
    while (row) {
      int k = std::countr_zero(row);
      row &= row - 1;
      acc ^= o.rows_[k];
    }
    r.rows_[i] = acc;
  }
  return r;
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const {
  if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
    throw std::invalid_argument("shape mismatch");
  BitMatrix r(nrows_, ncols_);
  for (int i = 0; i < nrows_; ++i) r.rows_[i] = rows_[i] ^ o.rows_[i];
  return r;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix r(ncols_, nrows_);
  for (int i = 0; i < nrows_; ++i)
    for (int j = 0; j < ncols_; ++j)
      if (get(i, j)) r.set(j, i, true);
  return r;
}

BitMatrix BitMatrix::inverse() const {
  if (nrows_ != ncols_) throw std::invalid_argument("not square");
  int n = nrows_;
  std::vector<std::uint64_t> a = rows_;
  std::vector<std::uint64_t> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = 1ull << i;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if ((a[r] >> col) & 1) { pivot = r; break; }
    if (pivot < 0) throw std::invalid_argument("singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < n; ++r)
      if (r != col && ((a[r] >> col) & 1)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
  }
  return from_rows(n, std::move(inv));
}

bool BitMatrix::invertible() const {
  return nrows_ == ncols_ && rank() == nrows_;
}

int BitMatrix::rank() const {
  std::vector<std::uint64_t> a = rows_;
  int r = 0;
  for (int col = 0; col < ncols_ && r < nrows_; ++col) {
    int pivot = -1;
    for (int i = r; i < nrows_; ++i)
      if ((a[i] >> col) & 1) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = 0; i < nrows_; ++i)
      if (i != r && ((a[i] >> col) & 1)) a[i] ^= a[r];
    ++r;
  }
  return r;
}

std::uint64_t BitMatrix::encode() const {
  std::uint64_t e = 0;
  for (int i = nrows_ - 1; i >= 0; --i) e = (e << ncols_) | rows_[i];
  return e;
}

BitVector apply(const BitVector& v, const BitMatrix& m) {
  if (v.dim != m.rows()) throw std::invalid_argument("dimension mismatch");
  std::uint64_t acc = 0;
  std::uint64_t bits = v.bits;
  while (bits) {
    int k = std::countr_zero(bits);
    bits &= bits - 1;
    acc ^= m.row(k);
  }
  return BitVector(m.cols(), acc);
}

BitMatrix inverse_transpose(const BitMatrix& m) {
  return m.inverse().transpose();
}

std::vector<BitVector> nullspace(const BitMatrix& m) {
  int nr = m.rows(), nc = m.cols();
  std::vector<std::uint64_t> a(nr);
  for (int i = 0; i < nr; ++i) a[i] = m.row(i);
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < nc && r < nr; ++col) {
    int pivot = -1;
    for (int i = r; i < nr; ++i)
      if ((a[i] >> col) & 1) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = 0; i < nr; ++i)
      if (i != r && ((a[i] >> col) & 1)) a[i] ^= a[r];
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(nc, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (int freec = 0; freec < nc; ++freec) {
    if (is_pivot[freec]) continue;
    std::uint64_t x = 1ull << freec;
    for (std::size_t pr = 0; pr < pivot_col.size(); ++pr)
      if ((a[pr] >> freec) & 1) x |= 1ull << pivot_col[pr];
    basis.emplace_back(nc, x);
  }
  return basis;
}

const std::vector<BitMatrix>& enumerate_gl32() {
  static const std::vector<BitMatrix> all = [] {
    std::vector<BitMatrix> v;
    for (std::uint64_t code = 0; code < 512; ++code) {
      BitMatrix m = BitMatrix::from_rows(
          3, {code & 7, (code >> 3) & 7, (code >> 6) & 7});
      if (m.invertible()) v.push_back(m);
    }
    return v;
  }();
  return all;
}

Permutation gl32_perm(const BitMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3 || !m.invertible())
    throw std::invalid_argument("gl32_perm: need invertible 3x3");
  std::vector<Point> img(7);
  for (std::uint64_t v = 1; v < 8; ++v) {
    BitVector w = apply(BitVector(3, v), m);
    img[v - 1] = static_cast<Point>(w.bits - 1);
  }
  return Permutation(std::move(img));
}

}  // namespace pisub
