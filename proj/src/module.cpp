#include "ksg/module.hpp"

#include "ksg/error.hpp"

namespace ksg {

using Elem = FiniteField::Elem;

GModule::GModule(GroupPtr g, FieldPtr f, std::size_t d, std::vector<FqMatrix> act)
    : group(std::move(g)), field(std::move(f)), dim(d), action(std::move(act)) {
  if (action.size() != group->generator_count())
    throw SpecError("module needs one matrix per generator");
  for (const auto& a : action) {
    if (a.rows() != dim || a.cols() != dim) throw SpecError("module action matrix has the wrong shape");
    if (a.field() != field) throw SpecError("module action matrix over the wrong field");
    if (dim && a.rank() != dim) throw SpecError("module action matrix is not invertible");
  }
}

std::vector<FqMatrix> element_matrices(const GModule& m) {
  const auto& G = *m.group;
  std::vector<FqMatrix> out(G.order());
  out[0] = FqMatrix::identity(m.field, m.dim);
  for (std::size_t i = 1; i < G.order(); ++i) out[i] = out[G.word_parent(i)] * m.action[G.word_generator(i)];
  return out;
}

void check_homomorphism(const GModule& m, Rng& rng, int samples) {
  const auto& G = *m.group;
  auto mats = element_matrices(m);
  for (std::size_t k = 0; k < G.generator_count(); ++k)
    if (!(mats[G.generator_index(k)] == m.action[k]))
      throw SpecError("generator matrix disagrees with its word evaluation");
  for (int s = 0; s < samples; ++s) {
    std::size_t a = rng.below(G.order()), b = rng.below(G.order());
    if (!(mats[a] * mats[b] == mats[G.mul(a, b)]))
      throw SpecError("module action is not a homomorphism on " + G.label());
  }
}

GModule regular_module(const GroupPtr& g, const FieldPtr& f, std::size_t cap) {
  const std::size_t n = g->order();
  if (n > cap) throw CapExceeded("|G| = " + std::to_string(n) + " above the representation cap " + std::to_string(cap));
  std::vector<FqMatrix> act;
  for (std::size_t k = 0; k < g->generator_count(); ++k) {
    FqMatrix a(f, n, n);
    const std::size_t s = g->generator_index(k);
    for (std::size_t x = 0; x < n; ++x) a.at(x, g->mul(x, s)) = 1;
    act.push_back(std::move(a));
  }
  return GModule(g, f, n, std::move(act));
}

GModule trivial_module(const GroupPtr& g, const FieldPtr& f) {
  return GModule(g, f, 1, std::vector<FqMatrix>(g->generator_count(), FqMatrix::identity(f, 1)));
}

GModule tensor(const GModule& a, const GModule& b) {
  if (a.group != b.group || a.field != b.field) throw InternalError("tensor of modules over different groups");
  const FiniteField& F = *a.field;
  const std::size_t n = a.dim * b.dim;
  std::vector<FqMatrix> act;
  for (std::size_t k = 0; k < a.action.size(); ++k) {
    FqMatrix m(a.field, n, n);
    const auto& x = a.action[k];
    const auto& y = b.action[k];
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) {
        Elem c = x.at(i, j);
        if (!c) continue;
        for (std::size_t r = 0; r < b.dim; ++r)
          for (std::size_t s = 0; s < b.dim; ++s) m.at(i * b.dim + r, j * b.dim + s) = F.mul(c, y.at(r, s));
      }
    act.push_back(std::move(m));
  }
  return GModule(a.group, a.field, n, std::move(act));
}

GModule dual(const GModule& m) {
  std::vector<FqMatrix> act;
  for (const auto& a : m.action) act.push_back(a.inverse()->transpose());
  return GModule(m.group, m.field, m.dim, std::move(act));
}

GModule direct_sum(const GModule& a, const GModule& b) {
  if (a.group != b.group || a.field != b.field) throw InternalError("direct sum of modules over different groups");
  const std::size_t n = a.dim + b.dim;
  std::vector<FqMatrix> act;
  for (std::size_t k = 0; k < a.action.size(); ++k) {
    FqMatrix m(a.field, n, n);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.action[k].at(i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = b.action[k].at(i, j);
    act.push_back(std::move(m));
  }
  return GModule(a.group, a.field, n, std::move(act));
}

GModule base_change(const GModule& m, const FqMatrix& p) {
  auto pinv = p.inverse();
  if (!pinv) throw SpecError("base change matrix is singular");
  std::vector<FqMatrix> act;
  for (const auto& a : m.action) act.push_back(p * a * *pinv);
  return GModule(m.group, m.field, m.dim, std::move(act));
}

GModule pullback(const GModule& m, const GroupPtr& target, const std::vector<std::size_t>& gen_images) {
  if (gen_images.size() != target->generator_count()) throw InternalError("pullback needs one image per generator");
  // Evaluate each image along its word in the source group.
  std::vector<FqMatrix> act;
  const auto& G = *m.group;
  for (std::size_t x : gen_images) {
    FqMatrix a = FqMatrix::identity(m.field, m.dim);
    for (std::size_t k : G.word(x)) a = a * m.action[k];
    act.push_back(std::move(a));
  }
  return GModule(target, m.field, m.dim, std::move(act));
}

GModule restrict(const Subgroup& h, const GModule& m) {
  if (m.group != h.parent()) throw InternalError("restriction from the wrong group");
  const auto& own = *h.group();
  std::vector<std::size_t> images;
  for (std::size_t k = 0; k < own.generator_count(); ++k) images.push_back(h.to_parent(own.generator_index(k)));
  return pullback(m, h.group(), images);
}

GModule induce(const Subgroup& h, const GModule& m) {
  if (m.group != h.group()) throw InternalError("induction from a module over the wrong group");
  const auto& G = *h.parent();
  const auto reps = right_transversal(h);
  const std::size_t t = reps.size(), d = m.dim, n = t * d;
  std::vector<std::size_t> coset_of(G.order());
  for (std::size_t c = 0; c < t; ++c)
    for (std::size_t x : h.members()) coset_of[G.mul(x, reps[c])] = c;
  auto mats = element_matrices(m);
  std::vector<FqMatrix> act;
  for (std::size_t k = 0; k < G.generator_count(); ++k) {
    const std::size_t s = G.generator_index(k);
    FqMatrix a(m.field, n, n);
    for (std::size_t c = 0; c < t; ++c) {
      const std::size_t ts = G.mul(reps[c], s);
      const std::size_t c2 = coset_of[ts];
      const std::size_t hx = G.mul(ts, G.inv(reps[c2]));  // t s = h t'
      const FqMatrix& block = mats[h.to_own(hx)];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a.at(c * d + i, c2 * d + j) = block.at(i, j);
    }
    act.push_back(std::move(a));
  }
  return GModule(h.parent(), m.field, n, std::move(act));
}

std::pair<Subgroup, GModule> conjugate_module(const Subgroup& h, std::size_t g, const GModule& m) {
  if (m.group != h.group()) throw InternalError("conjugating a module over the wrong group");
  const auto& G = *h.parent();
  Subgroup k = conjugate(h, g);
  const auto& own = *k.group();
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < own.generator_count(); ++i) {
    std::size_t x = k.to_parent(own.generator_index(i));
    images.push_back(h.to_own(G.conj(G.inv(g), x)));
  }
  GModule out = pullback(m, k.group(), images);
  return {std::move(k), std::move(out)};
}

GModule submodule(const GModule& m, const EchelonSpace& w) {
  const std::size_t d = w.dim();
  std::vector<FqMatrix> act;
  for (const auto& a : m.action) {
    FqMatrix s(m.field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      auto img = a.left_apply(w.basis().row(i));
      auto c = w.coordinates(img.data());
      if (!c) throw InternalError("subspace is not invariant");
      std::copy(c->begin(), c->end(), s.row(i));
    }
    act.push_back(std::move(s));
  }
  return GModule(m.group, m.field, d, std::move(act));
}

GModule quotient_module(const GModule& m, const EchelonSpace& w) {
  std::vector<bool> pivot(m.dim, false);
  for (auto c : w.pivots()) pivot[c] = true;
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < m.dim; ++j)
    if (!pivot[j]) rest.push_back(j);
  const std::size_t d = rest.size();
  std::vector<FqMatrix> act;
  for (const auto& a : m.action) {
    FqMatrix s(m.field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Elem> img(a.row(rest[i]), a.row(rest[i]) + m.dim);
      w.reduce(img.data());
      for (std::size_t j = 0; j < d; ++j) s.at(i, j) = img[rest[j]];
    }
    act.push_back(std::move(s));
  }
  return GModule(m.group, m.field, d, std::move(act));
}

namespace {

EchelonSpace spin_with(const std::vector<FqMatrix>& gens, const FieldPtr& f, std::size_t dim, const FqMatrix& seeds) {
  EchelonSpace s(f, dim);
  std::vector<std::vector<Elem>> queue;
  for (std::size_t i = 0; i < seeds.rows(); ++i)
    if (s.add(seeds.row(i))) queue.push_back(seeds.row_vector(i));
  for (std::size_t head = 0; head < queue.size() && s.dim() < dim; ++head)
    for (const auto& a : gens) {
      auto img = a.left_apply(queue[head].data());
      if (s.add(img.data())) queue.push_back(std::move(img));
    }
  return s;
}

}  // namespace

EchelonSpace spin(const GModule& m, const FqMatrix& seeds) { return spin_with(m.action, m.field, m.dim, seeds); }

EchelonSpace spin_transposed(const GModule& m, const FqMatrix& seeds) {
  std::vector<FqMatrix> t;
  for (const auto& a : m.action) t.push_back(a.transpose());
  return spin_with(t, m.field, m.dim, seeds);
}

}  // namespace ksg
