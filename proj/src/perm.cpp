#include "pisub/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pisub {

Permutation::Permutation(std::vector<Point> images) : imgs_(std::move(images)) {
  if (imgs_.empty()) throw std::invalid_argument("permutation of degree 0");
  std::vector<bool> seen(imgs_.size(), false);
  for (Point v : imgs_) {
    if (v >= imgs_.size() || seen[v])
      throw std::invalid_argument("images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree <= 0) throw std::invalid_argument("degree must be positive");
  Permutation p;
  p.imgs_.resize(degree);
  std::iota(p.imgs_.begin(), p.imgs_.end(), Point{0});
  return p;
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  Permutation r;
  r.imgs_.resize(imgs_.size());
  for (std::size_t x = 0; x < imgs_.size(); ++x) r.imgs_[x] = q.imgs_[imgs_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.imgs_.resize(imgs_.size());
  for (std::size_t x = 0; x < imgs_.size(); ++x)
    r.imgs_[imgs_[x]] = static_cast<Point>(x);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < imgs_.size(); ++x)
    if (imgs_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(imgs_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t x = 0; x < imgs_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    std::size_t y = x;
    while (!seen[y]) {
      seen[y] = true;
      y = imgs_[y];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the image array
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : imgs_) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(imgs_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (std::size_t x = 0; x < imgs_.size(); ++x) {
    if (seen[x] || imgs_[x] == x) continue;
    any = true;
    os << '(' << x;
    seen[x] = true;
    std::size_t y = imgs_[x];
    while (y != x) {
      os << ' ' << y;
      seen[y] = true;
      y = imgs_[y];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  return g.inverse() * p * g;
}

Permutation commutator(const Permutation& p, const Permutation& q) {
  return p * q * p.inverse() * q.inverse();
}

}  // namespace pisub
