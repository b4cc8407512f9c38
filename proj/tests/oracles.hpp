#pragma once
// Brute-force reference computations for the unit tests. Everything here
// works from the element table alone (mul, inv, element orders), so it shares
// no code path with the algorithms under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "ksg/group.hpp"
#include "ksg/smith.hpp"

namespace oracle {

using ksg::FiniteGroup;

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

inline std::vector<std::uint64_t> primes_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::size_t power(const FiniteGroup& g, std::size_t x, std::uint64_t e) {
  std::size_t r = 0;
  for (std::uint64_t i = 0; i < e; ++i) r = g.mul(r, x);
  return r;
}

// Number of conjugacy classes as (number of commuting pairs) / |G|.
inline std::size_t class_count(const FiniteGroup& g) {
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) pairs += g.mul(a, b) == g.mul(b, a);
  return pairs / g.order();
}

// Classes by direct orbit sweeps.
inline std::vector<std::vector<std::size_t>> classes(const FiniteGroup& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t y = 0; y < g.order(); ++y) orbit.insert(g.mul(g.mul(y, x), g.inv(y)));
    for (auto z : orbit) seen[z] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

// No element has order divisible by p and by another prime.
inline bool isolated(const FiniteGroup& g, std::uint64_t p) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto o = g.element_order(x);
    if (o % p == 0 && o != p_part(o, p)) return false;
  }
  return true;
}

inline std::set<std::pair<std::uint64_t, std::uint64_t>> prime_graph_edges(const FiniteGroup& g) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto ps = primes_of(g.element_order(x));
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) out.insert({ps[i], ps[j]});
  }
  return out;
}

inline std::vector<int> mask(const FiniteGroup& g, const std::vector<std::size_t>& members) {
  std::vector<int> m(g.order(), 0);
  for (auto x : members) m[x] = 1;
  return m;
}

// S meets each of its conjugates in S or in e.
inline bool trivial_intersection(const FiniteGroup& g, const std::vector<std::size_t>& s) {
  auto in = mask(g, s);
  for (std::size_t y = 0; y < g.order(); ++y) {
    std::size_t common = 0;
    for (auto x : s) common += in[g.mul(g.mul(y, x), g.inv(y))];
    if (common != 1 && common != s.size()) return false;
  }
  return true;
}

// |{g : g H g^-1 <= K}| / |K|.
inline std::size_t hom_count(const FiniteGroup& g, const std::vector<std::size_t>& h,
                             const std::vector<std::size_t>& k) {
  auto in = mask(g, k);
  std::size_t count = 0;
  for (std::size_t y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (auto x : h) ok = ok && in[g.mul(g.mul(y, x), g.inv(y))];
    count += ok;
  }
  return count / k.size();
}

inline std::size_t normalizer_order(const FiniteGroup& g, const std::vector<std::size_t>& h) {
  return hom_count(g, h, h) * h.size();
}

// Orbits of x -> x^q on the p-regular conjugacy classes: the number of simple
// F_q G-modules.
inline std::size_t galois_regular_classes(const FiniteGroup& g, std::uint64_t p, std::uint64_t q) {
  auto cls = classes(g);
  std::vector<std::size_t> class_of(g.order());
  for (std::size_t c = 0; c < cls.size(); ++c)
    for (auto x : cls[c]) class_of[x] = c;
  std::vector<int> seen(cls.size(), 0);
  std::size_t orbits = 0;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const std::size_t x = cls[c][0];
    if (seen[c] || g.element_order(x) % p == 0) continue;
    ++orbits;
    std::size_t y = x;
    do {
      seen[class_of[y]] = 1;
      y = power(g, y, q % g.element_order(y) + g.element_order(y));
    } while (class_of[y] != c);
  }
  return orbits;
}

inline ksg::BigInt gcd(ksg::BigInt a, ksg::BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Laplace expansion along the first row.
inline ksg::BigInt laplace_det(const std::vector<std::vector<ksg::BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  ksg::BigInt out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<ksg::BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<ksg::BigInt> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(row);
    }
    ksg::BigInt t = a[0][j] * laplace_det(minor);
    out += j % 2 ? -t : t;
  }
  return out;
}

// d_k = gcd of the k x k minors; invariant factors are d_k / d_{k-1}.
inline std::vector<ksg::BigInt> determinantal_factors(const ksg::IntMatrix& a) {
  const std::size_t n = a.rows(), m = a.cols();
  std::vector<ksg::BigInt> d;
  for (std::size_t k = 1; k <= std::min(n, m); ++k) {
    ksg::BigInt acc = 0;
    std::vector<int> rs(n, 0), cs(m, 0);
    std::fill(rs.end() - k, rs.end(), 1);
    do {
      std::fill(cs.begin(), cs.end(), 0);
      std::fill(cs.end() - k, cs.end(), 1);
      do {
        std::vector<std::vector<ksg::BigInt>> sub;
        for (std::size_t i = 0; i < n; ++i) {
          if (!rs[i]) continue;
          sub.emplace_back();
          for (std::size_t j = 0; j < m; ++j)
            if (cs[j]) sub.back().push_back(a.at(i, j));
        }
        acc = gcd(acc, laplace_det(sub));
      } while (std::next_permutation(cs.begin(), cs.end()));
    } while (std::next_permutation(rs.begin(), rs.end()));
    d.push_back(acc);
  }
  return d;
}

}  // namespace oracle
