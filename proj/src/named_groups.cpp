#include "ksg/named_groups.hpp"

#include <json.hpp>

#include "ksg/error.hpp"
#include "ksg/numtheory.hpp"

namespace ksg {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t from, std::size_t to) {
  std::vector<std::size_t> c;
  for (std::size_t i = from; i < to; ++i) c.push_back(i);
  return Permutation::from_cycles(degree, {c});
}

std::string num(std::uint64_t n) { return std::to_string(n); }

}  // namespace

GroupPtr trivial_group() { return FiniteGroup::enumerate(1, {}, "1"); }

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw SpecError("cyclic group needs n >= 1");
  if (n == 1) return FiniteGroup::enumerate(1, {}, "C1");
  return FiniteGroup::enumerate(n, {cycle_on(n, 0, n)}, "C" + num(n));
}

GroupPtr dihedral(std::size_t n) {
  if (n == 0) throw SpecError("dihedral group needs n >= 1");
  const std::string label = "D" + num(n);
  if (n == 1) return FiniteGroup::enumerate(2, {cycle_on(2, 0, 2)}, label);
  if (n == 2)
    return FiniteGroup::enumerate(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                      Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
                                  label);
  std::vector<Permutation::Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Permutation::Point>((n - i) % n);
  return FiniteGroup::enumerate(n, {cycle_on(n, 0, n), Permutation(refl)}, label);
}

GroupPtr symmetric(std::size_t n) {
  if (n == 0) throw SpecError("symmetric group needs n >= 1");
  const std::string label = "S" + num(n);
  if (n == 1) return FiniteGroup::enumerate(1, {}, label);
  if (n == 2) return FiniteGroup::enumerate(2, {cycle_on(2, 0, 2)}, label);
  return FiniteGroup::enumerate(n, {cycle_on(n, 0, 2), cycle_on(n, 0, n)}, label);
}

GroupPtr alternating(std::size_t n) {
  if (n == 0) throw SpecError("alternating group needs n >= 1");
  const std::string label = "A" + num(n);
  if (n <= 2) return FiniteGroup::enumerate(n, {}, label);
  if (n == 3) return FiniteGroup::enumerate(3, {cycle_on(3, 0, 3)}, label);
  Permutation second = n % 2 ? cycle_on(n, 0, n) : cycle_on(n, 1, n);
  return FiniteGroup::enumerate(n, {cycle_on(n, 0, 3), second}, label);
}

GroupPtr quaternion8() {
  // Units 1, i, j, k, -1, -i, -j, -k as 0..7; right regular representation.
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto mul = [&](int a, int b) {
    int sign = (a >= 4) != (b >= 4) ? -1 : 1;
    sign *= unit_sign[a % 4][b % 4];
    int u = unit_prod[a % 4][b % 4];
    return sign > 0 ? u : u + 4;
  };
  auto right = [&](int x) {
    std::vector<Permutation::Point> im(8);
    for (int y = 0; y < 8; ++y) im[y] = static_cast<Permutation::Point>(mul(y, x));
    return Permutation(im);
  };
  return FiniteGroup::enumerate(8, {right(1), right(2)}, "Q8");
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw SpecError("primitive root needs a prime, got " + num(p));
  if (p == 2) return 1;
  auto qs = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : qs) {
      std::uint64_t e = (p - 1) / q, r = 1, b = g;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root found");
}

GroupPtr agl1(std::uint64_t p) {
  if (!is_prime(p)) throw SpecError("agl1 needs a prime, got " + num(p));
  const std::string label = "AGL1(" + num(p) + ")";
  std::vector<Permutation> gens{cycle_on(p, 0, p)};
  std::uint64_t g = primitive_root(p);
  if (g != 1) {
    std::vector<Permutation::Point> im(p);
    for (std::uint64_t x = 0; x < p; ++x) im[x] = static_cast<Permutation::Point>(g * x % p);
    gens.emplace_back(im);
  }
  return FiniteGroup::enumerate(p, gens, label);
}

GroupPtr psl2(std::uint64_t p) {
  if (!is_prime(p)) throw SpecError("psl2 needs a prime, got " + num(p));
  const std::size_t inf = p;
  std::vector<Permutation::Point> shift(p + 1), inv(p + 1);
  for (std::uint64_t x = 0; x < p; ++x) shift[x] = static_cast<Permutation::Point>((x + 1) % p);
  shift[inf] = static_cast<Permutation::Point>(inf);
  inv[0] = static_cast<Permutation::Point>(inf);
  inv[inf] = 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    std::uint64_t y = 1;
    while (y * x % p != 1) ++y;
    inv[x] = static_cast<Permutation::Point>((p - y) % p);
  }
  return FiniteGroup::enumerate(p + 1, {Permutation(shift), Permutation(inv)},
                                "PSL2(" + num(p) + ")");
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t da = a->degree(), db = b->degree();
  std::vector<Permutation> gens;
  for (const auto& g : a->generators()) {
    std::vector<Permutation::Point> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = g[i];
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<Permutation::Point>(da + i);
    gens.emplace_back(im);
  }
  for (const auto& g : b->generators()) {
    std::vector<Permutation::Point> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = static_cast<Permutation::Point>(i);
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<Permutation::Point>(da + g[i]);
    gens.emplace_back(im);
  }
  return FiniteGroup::enumerate(da + db, gens, a->label() + "x" + b->label());
}

std::vector<Permutation> SemidirectAction::extend() const {
  if (generator_images.size() != h->generator_count())
    throw SpecError("action needs one permutation per generator of H");
  const std::size_t nk = k->order();
  for (const auto& a : generator_images) {
    if (a.degree() != nk) throw SpecError("action permutation must act on K's element list");
    if (a[0] != 0) throw SpecError("action does not fix the identity of K");
    for (std::size_t x = 0; x < nk; ++x)
      for (std::size_t t = 0; t < k->generator_count(); ++t) {
        std::size_t s = k->generator_index(t);
        if (a[k->mul(x, s)] != k->mul(a[x], a[s]))
          throw SpecError("action generator is not an automorphism of K");
      }
  }
  std::vector<Permutation> img(h->order());
  img[0] = Permutation::identity(nk);
  for (std::size_t i = 1; i < h->order(); ++i)
    img[i] = img[h->word_parent(i)] * generator_images[h->word_generator(i)];
  for (std::size_t i = 0; i < h->order(); ++i)
    for (std::size_t t = 0; t < h->generator_count(); ++t)
      if (img[h->mul(i, h->generator_index(t))] != img[i] * generator_images[t])
        throw SpecError("action is not a homomorphism H -> Aut(K)");
  return img;
}

GroupPtr semidirect_product(const SemidirectAction& action, std::string label) {
  const auto& K = *action.k;
  const auto& H = *action.h;
  const auto img = action.extend();
  const std::size_t nk = K.order(), nh = H.order();
  if (nk * nh > 65535) throw CapExceeded("semidirect product too large for its regular representation");
  auto mul = [&](std::size_t h1, std::size_t k1, std::size_t h2, std::size_t k2) {
    return H.mul(h1, h2) * nk + K.mul(img[h2][k1], k2);
  };
  auto right = [&](std::size_t hx, std::size_t kx) {
    std::vector<Permutation::Point> im(nk * nh);
    for (std::size_t hy = 0; hy < nh; ++hy)
      for (std::size_t ky = 0; ky < nk; ++ky)
        im[hy * nk + ky] = static_cast<Permutation::Point>(mul(hy, ky, hx, kx));
    return Permutation(im);
  };
  std::vector<Permutation> gens;
  for (std::size_t t = 0; t < K.generator_count(); ++t) gens.push_back(right(0, K.generator_index(t)));
  for (std::size_t t = 0; t < H.generator_count(); ++t) gens.push_back(right(H.generator_index(t), 0));
  if (label.empty()) label = K.label() + ":" + H.label();
  return FiniteGroup::enumerate(nk * nh, gens, label);
}

SemidirectAction inversion_action(std::size_t n) {
  auto k = cyclic(n);
  auto h = cyclic(2);
  std::vector<Permutation::Point> im(k->order());
  for (std::size_t x = 0; x < k->order(); ++x) im[x] = static_cast<Permutation::Point>(k->inv(x));
  return {k, h, {Permutation(im)}};
}

SemidirectAction full_automorphism_action(std::uint64_t p) {
  if (!is_prime(p)) throw SpecError("need a prime, got " + num(p));
  auto k = cyclic(p);
  auto h = cyclic(p - 1);
  if (p == 2) return {k, h, {}};
  // element x of C_p is some power c^e of the generator; send it to c^(g e).
  std::vector<std::size_t> exponent(p);
  std::size_t c = k->generator_index(0), cur = 0;
  for (std::size_t e = 0; e < p; ++e) {
    exponent[cur] = e;
    cur = k->mul(cur, c);
  }
  std::vector<std::size_t> power(p);
  cur = 0;
  for (std::size_t e = 0; e < p; ++e) {
    power[e] = cur;
    cur = k->mul(cur, c);
  }
  const std::uint64_t g = primitive_root(p);
  std::vector<Permutation::Point> im(p);
  for (std::size_t x = 0; x < p; ++x) im[x] = static_cast<Permutation::Point>(power[g * exponent[x] % p]);
  return {k, h, {Permutation(im)}};
}

SemidirectAction m9_action() {
  // K = C_3^2 as the regular representation of F_3^2, elements indexed via
  // their coordinates; Q_8 acts on row vectors v -> v M.
  auto k = direct_product(cyclic(3), cyclic(3));
  auto h = quaternion8();
  auto coords = [&](std::size_t idx) {
    const auto& e = k->element(idx);
    return std::pair<int, int>{e[0] % 3, (e[3] - 3) % 3};
  };
  std::vector<std::size_t> from_coords(9);
  for (std::size_t i = 0; i < 9; ++i) {
    auto [a, b] = coords(i);
    from_coords[a * 3 + b] = i;
  }
  auto act = [&](int m00, int m01, int m10, int m11) {
    std::vector<Permutation::Point> im(9);
    for (std::size_t i = 0; i < 9; ++i) {
      auto [a, b] = coords(i);
      int x = ((a * m00 + b * m10) % 3 + 3) % 3;
      int y = ((a * m01 + b * m11) % 3 + 3) % 3;
      im[i] = static_cast<Permutation::Point>(from_coords[x * 3 + y]);
    }
    return Permutation(im);
  };
  // Generators of Q8 are right multiplication by i and j.
  return {k, h, {act(0, -1, 1, 0), act(1, 1, 1, -1)}};
}

GroupPtr m9() { return semidirect_product(m9_action(), "M9"); }

namespace {

GroupPtr parse_factor(const std::string& s) {
  auto colon = s.find(':');
  std::string name = s.substr(0, colon);
  std::uint64_t n = 0;
  bool has_n = colon != std::string::npos;
  if (has_n) {
    try {
      std::size_t used = 0;
      n = std::stoull(s.substr(colon + 1), &used);
      if (used != s.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw SpecError("bad parameter in group spec '" + s + "'");
    }
  }
  auto need = [&]() {
    if (!has_n) throw SpecError("group spec '" + s + "' needs a parameter");
    return n;
  };
  if (name == "trivial") return trivial_group();
  if (name == "cyclic") return cyclic(need());
  if (name == "dihedral") return dihedral(need());
  if (name == "symmetric") return symmetric(need());
  if (name == "alternating") return alternating(need());
  if (name == "quaternion8") return quaternion8();
  if (name == "agl1") return agl1(need());
  if (name == "psl2") return psl2(need());
  if (name == "m9") return m9();
  throw SpecError("unknown group name '" + name + "'");
}

}  // namespace

GroupPtr parse_group_spec(const std::string& spec) {
  if (spec.empty()) throw SpecError("empty group spec");
  GroupPtr g;
  std::size_t start = 0;
  while (true) {
    auto star = spec.find('*', start);
    auto f = parse_factor(spec.substr(start, star == std::string::npos ? std::string::npos : star - start));
    g = g ? direct_product(g, f) : f;
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return g;
}

GroupPtr parse_group_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("group file must hold a JSON object");
  try {
    if (j.contains("named")) {
      std::string name = j.at("named").get<std::string>();
      for (const char* key : {"n", "p"})
        if (j.contains(key)) name += ":" + std::to_string(j.at(key).get<std::uint64_t>());
      return parse_group_spec(name);
    }
    if (j.contains("degree") && j.contains("generators")) {
      auto degree = j.at("degree").get<std::size_t>();
      std::vector<Permutation> gens;
      for (const auto& g : j.at("generators")) {
        auto im = g.get<std::vector<std::size_t>>();
        if (im.size() != degree) throw SpecError("generator length differs from degree");
        std::vector<Permutation::Point> pts;
        for (auto x : im) {
          if (x >= degree) throw SpecError("generator image out of range");
          pts.push_back(static_cast<Permutation::Point>(x));
        }
        gens.emplace_back(pts);
      }
      return FiniteGroup::enumerate(degree, gens, j.value("label", std::string("G")));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("bad group file: ") + e.what());
  }
  throw SpecError("group file needs either 'named' or 'degree' and 'generators'");
}

}  // namespace ksg
