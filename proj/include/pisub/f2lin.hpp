#pragma once

#include <cstdint>
#include <vector>

#include "pisub/perm.hpp"

namespace pisub {

// Vector over GF(2), dim <= 64, bit i = coordinate i.
struct BitVector {
  int dim = 0;
  std::uint64_t bits = 0;

  BitVector() = default;
  BitVector(int d, std::uint64_t b) : dim(d), bits(b) {}
  bool get(int i) const { return (bits >> i) & 1; }
  BitVector operator+(const BitVector& o) const;
  bool operator==(const BitVector& o) const = default;
  bool is_zero() const { return bits == 0; }
};

// Matrix over GF(2); rows stored as bit masks. Row-vector convention: vectors
// multiply on the left, v * M.
class BitMatrix {
public:
  BitMatrix(int rows, int cols);
  static BitMatrix identity(int n);
  static BitMatrix from_rows(int cols, std::vector<std::uint64_t> rows);

  int rows() const { return nrows_; }
  int cols() const { return ncols_; }
  bool get(int r, int c) const { return (rows_[r] >> c) & 1; }
  void set(int r, int c, bool v);
  std::uint64_t row(int r) const { return rows_[r]; }

  BitMatrix operator*(const BitMatrix& o) const;
  BitMatrix operator+(const BitMatrix& o) const;
  BitMatrix transpose() const;
  BitMatrix inverse() const;  // throws on singular
  bool invertible() const;
  int rank() const;
  bool operator==(const BitMatrix& o) const = default;

  // integer encoding: row-major, row 0 in the least significant bits
  std::uint64_t encode() const;

private:
  int nrows_, ncols_;
  std::vector<std::uint64_t> rows_;
};

BitVector apply(const BitVector& v, const BitMatrix& m);  // v * M
BitMatrix inverse_transpose(const BitMatrix& m);

// Basis of {x : M x = 0} (x as column vector), returned as BitVectors of
// dimension cols(). Deterministic leftmost pivot order.
std::vector<BitVector> nullspace(const BitMatrix& m);

// All invertible 3x3 matrices over GF(2), ordered by integer encoding.
const std::vector<BitMatrix>& enumerate_gl32();

// Permutation of the 7 nonzero vectors of GF(2)^3 (point v-1 for vector v)
// induced by v |-> v * M.
Permutation gl32_perm(const BitMatrix& m);

}  // namespace pisub
