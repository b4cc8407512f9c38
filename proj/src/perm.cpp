#include "ksg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ksg/error.hpp"

namespace ksg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw SpecError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > 65535) throw CapExceeded("permutation degree above 65535");
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= degree || used[c[k]]) throw SpecError("invalid cycle notation");
      used[c[k]] = true;
      p.images_[c[k]] = static_cast<Point>(c[(k + 1) % c.size()]);
    }
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::size_t Permutation::order() const {
  std::size_t o = 1;
  for (std::size_t len : cycle_type()) o = std::lcm(o, len);
  return o;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i) os << ' ';
      seen[j] = true;
      os << j;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw SpecError("permutation degrees differ");
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace ksg
