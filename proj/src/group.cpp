#include "ksg/group.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <set>

#include "ksg/error.hpp"
#include "ksg/numtheory.hpp"

namespace ksg {

namespace {

std::string fnv_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

GroupPtr FiniteGroup::enumerate(std::size_t degree, std::vector<Permutation> generators,
                                std::string label, std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw SpecError("generator degree does not match group degree");

  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  FiniteGroup& G = *grp;
  G.degree_ = degree;
  G.label_ = std::move(label);
  G.generators_ = std::move(generators);

  G.elements_.push_back(Permutation::identity(degree));
  G.index_[G.elements_[0]] = 0;
  G.parent_.push_back(0);
  G.parent_gen_.push_back(0);

  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    struct Candidate {
      Permutation perm;
      std::uint32_t parent;
      std::uint32_t gen;
    };
    std::vector<Candidate> layer;
    std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
    for (std::uint32_t x : frontier) {
      for (std::uint32_t k = 0; k < G.generators_.size(); ++k) {
        Permutation y = G.elements_[x] * G.generators_[k];
        if (G.index_.count(y) || seen.count(y)) continue;
        seen.emplace(y, layer.size());
        layer.push_back({std::move(y), x, k});
      }
    }
    if (G.elements_.size() + layer.size() > cap)
      throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
    std::sort(layer.begin(), layer.end(),
              [](const Candidate& a, const Candidate& b) { return a.perm < b.perm; });
    frontier.clear();
    for (auto& c : layer) {
      auto idx = static_cast<std::uint32_t>(G.elements_.size());
      G.index_.emplace(c.perm, idx);
      G.elements_.push_back(std::move(c.perm));
      G.parent_.push_back(c.parent);
      G.parent_gen_.push_back(c.gen);
      frontier.push_back(idx);
    }
  }

  const std::size_t n = G.elements_.size();
  G.gen_index_.reserve(G.generators_.size());
  for (const auto& g : G.generators_) G.gen_index_.push_back(G.index_.at(g));
  G.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) G.inverse_[i] = G.index_.at(G.elements_[i].inverse());
  if (n <= kTableLimit) {
    G.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        G.table_[a * n + b] = G.index_.at(G.elements_[a] * G.elements_[b]);
  }

  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int s = 0; s < 2; ++s) {
      h ^= (v >> (8 * s)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(degree);
  for (const auto& e : G.elements_)
    for (auto x : e.images()) mix(x);
  G.hash_ = fnv_hex(h);
  return grp;
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_checked(const Permutation& g) const {
  auto i = index_of(g);
  if (!i) throw SpecError("permutation " + g.to_string() + " is not an element of " + label_);
  return *i;
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

std::vector<std::size_t> FiniteGroup::word(std::size_t i) const {
  std::vector<std::size_t> w;
  while (i != 0) {
    w.push_back(parent_gen_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a)
    for (std::size_t b = a + 1; b < generators_.size(); ++b)
      if (generators_[a] * generators_[b] != generators_[b] * generators_[a]) return false;
  return true;
}

std::vector<std::size_t> closure(const FiniteGroup& g, const std::vector<std::size_t>& generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> out{0};
  in[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t s : generators) {
      std::size_t y = g.mul(out[head], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<std::size_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  const FiniteGroup& G = *parent_;
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != 0) throw SpecError("subgroup must contain the identity");
  mask_.assign(G.order(), false);
  for (std::size_t m : members_) {
    if (m >= G.order()) throw SpecError("subgroup member out of range");
    mask_[m] = true;
  }

  if (members_.size() == G.order()) {
    for (std::size_t k = 0; k < G.generator_count(); ++k)
      if (G.generator_index(k) != 0) gens_.push_back(G.generator_index(k));
    group_ = parent_;
    own_to_parent_.resize(G.order());
    for (std::size_t i = 0; i < G.order(); ++i) own_to_parent_[i] = i;
    return;
  }

  // Greedy generating set, growing the closure incrementally.
  std::vector<bool> cl(G.order(), false);
  std::vector<std::size_t> cl_list{0};
  cl[0] = true;
  for (std::size_t m : members_) {
    if (cl[m]) continue;
    gens_.push_back(m);
    for (std::size_t head = 0; head < cl_list.size(); ++head) {
      for (std::size_t s : gens_) {
        std::size_t y = G.mul(cl_list[head], s);
        if (cl[y]) continue;
        if (!mask_[y]) throw SpecError("member list is not closed under multiplication");
        cl[y] = true;
        cl_list.push_back(y);
      }
    }
  }
  std::vector<Permutation> perms;
  for (std::size_t s : gens_) perms.push_back(G.element(s));
  group_ = FiniteGroup::enumerate(G.degree(), std::move(perms), G.label() + "-sub");
  own_to_parent_.resize(group_->order());
  for (std::size_t i = 0; i < group_->order(); ++i)
    own_to_parent_[i] = G.index_checked(group_->element(i));
}

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<std::size_t>& generators) {
  auto members = closure(*parent, generators);
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<std::size_t> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

std::size_t Subgroup::to_own(std::size_t parent_index) const {
  return group_->index_checked(parent_->element(parent_index));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  for (std::size_t m : members_)
    if (!other.contains(m)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> gens;
  for (std::size_t k = 0; k < g.generator_count(); ++k) gens.push_back(g.generator_index(k));
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> cls{x};
    done[x] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (std::size_t s : gens) {
        std::size_t y = g.conj(s, cls[head]);
        if (!done[y]) {
          done[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<std::size_t>& set) {
  for (std::size_t s : set)
    if (s >= g->order()) throw SpecError("generator index out of range");
  return Subgroup::generated(g, set);
}

Subgroup centralizer(const GroupPtr& g, std::size_t x) {
  std::vector<std::size_t> members;
  for (std::size_t y = 0; y < g->order(); ++y)
    if (g->mul(x, y) == g->mul(y, x)) members.push_back(y);
  return Subgroup(g, std::move(members));
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
  std::vector<std::size_t> members;
  const auto& hg = h.generator_indices();
  for (std::size_t y = 0; y < g->order(); ++y) {
    bool ok = true;
    for (std::size_t s : hg)
      if (!h.contains(g->conj(y, s))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(y);
  }
  return Subgroup(g, std::move(members));
}

Subgroup conjugate(const Subgroup& h, std::size_t g) {
  const FiniteGroup& G = *h.parent();
  std::vector<std::size_t> members;
  members.reserve(h.order());
  for (std::size_t m : h.members()) members.push_back(G.conj(g, m));
  return Subgroup(h.parent(), std::move(members));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<std::size_t> members;
  for (std::size_t m : a.members())
    if (b.contains(m)) members.push_back(m);
  return Subgroup(a.parent(), std::move(members));
}

ConjugacyWitness is_conjugate_subgroups(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
  if (h.order() != k.order()) return {};
  for (std::size_t y = 0; y < g->order(); ++y) {
    bool ok = true;
    for (std::size_t s : h.generator_indices())
      if (!k.contains(g->conj(y, s))) {
        ok = false;
        break;
      }
    if (ok) return {true, y};
  }
  return {};
}

std::vector<std::size_t> right_transversal(const Subgroup& h) {
  const FiniteGroup& G = *h.parent();
  std::vector<bool> done(G.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (done[g]) continue;
    reps.push_back(g);
    for (std::size_t m : h.members()) done[G.mul(m, g)] = true;
  }
  return reps;
}

std::vector<std::size_t> double_coset_reps(const Subgroup& k, const Subgroup& h) {
  const FiniteGroup& G = *h.parent();
  std::vector<bool> done(G.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (done[g]) continue;
    reps.push_back(g);
    for (std::size_t a : k.members()) {
      std::size_t ag = G.mul(a, g);
      for (std::size_t b : h.members()) done[G.mul(ag, b)] = true;
    }
  }
  return reps;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::uint64_t p) {
  const FiniteGroup& G = *g;
  // Every subgroup is generated by its elements of prime power order, so
  // joins with cyclic subgroups of prime power order reach all of them.
  std::vector<std::vector<std::size_t>> cyclic;
  std::set<std::vector<std::size_t>> cyclic_seen;
  for (std::size_t x = 1; x < G.order(); ++x) {
    std::uint64_t o = G.element_order(x);
    bool ok = p ? is_power_of(o, p) : prime_divisors(o).size() == 1;
    if (!ok) continue;
    auto c = closure(G, {x});
    if (cyclic_seen.insert(c).second) cyclic.push_back(c);
  }
  std::vector<std::size_t> cyclic_gen;
  for (const auto& c : cyclic) {
    // any element of the cyclic group generating it
    for (std::size_t x : c)
      if (G.element_order(x) == c.size()) {
        cyclic_gen.push_back(x);
        break;
      }
  }

  std::map<std::vector<std::size_t>, std::vector<std::size_t>> found;  // members -> generators
  found.emplace(std::vector<std::size_t>{0}, std::vector<std::size_t>{});
  std::deque<std::vector<std::size_t>> queue;
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    found.emplace(cyclic[i], std::vector<std::size_t>{cyclic_gen[i]});
    queue.push_back(cyclic[i]);
  }
  while (!queue.empty()) {
    auto h = std::move(queue.front());
    queue.pop_front();
    const auto hgens = found.at(h);
    std::vector<bool> in(G.order(), false);
    for (std::size_t m : h) in[m] = true;
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
      if (in[cyclic_gen[i]]) continue;
      auto gens = hgens;
      gens.push_back(cyclic_gen[i]);
      auto k = closure(G, gens);
      if (p && !is_power_of(k.size(), p)) continue;
      if (found.count(k)) continue;
      found.emplace(k, gens);
      queue.push_back(std::move(k));
    }
  }

  std::vector<std::vector<std::size_t>> lists;
  for (auto& [members, gens] : found) lists.push_back(members);
  std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(lists.size());
  for (auto& l : lists) out.emplace_back(g, std::move(l));
  return out;
}

std::vector<SubgroupClass> subgroup_classes(const GroupPtr& g, std::uint64_t p) {
  const FiniteGroup& G = *g;
  auto subs = all_subgroups(g, p);
  std::map<std::vector<std::size_t>, std::size_t> where;
  for (std::size_t i = 0; i < subs.size(); ++i) where.emplace(subs[i].members(), i);
  std::vector<bool> done(subs.size(), false);
  std::vector<SubgroupClass> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (done[i]) continue;
    std::size_t count = 0;
    for (std::size_t y = 0; y < G.order(); ++y) {
      std::vector<std::size_t> c;
      c.reserve(subs[i].order());
      for (std::size_t m : subs[i].members()) c.push_back(G.conj(y, m));
      std::sort(c.begin(), c.end());
      std::size_t j = where.at(c);
      if (!done[j]) {
        done[j] = true;
        ++count;
      }
    }
    out.push_back({subs[i], count});
  }
  return out;
}

}  // namespace ksg
