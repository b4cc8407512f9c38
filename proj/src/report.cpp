#include "ksg/report.hpp"

#include <algorithm>
#include <sstream>

namespace ksg {

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json to_json(const FgAbelianGroup& a) {
  json factors = json::array();
  for (const auto& d : a.invariant_factors()) factors.push_back(big_json(d));
  json torsion = json::array();
  for (const auto& d : a.torsion) torsion.push_back(big_json(d));
  return {{"free_rank", a.free_rank}, {"torsion", torsion}, {"invariant_factors", factors}, {"text", a.to_string()}};
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(big_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const KTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"n", r.n}, {"group", to_json(r.group)}, {"formula", r.formula}, {"provenance", r.provenance}});
  return {{"subject", t.subject}, {"group", t.group_label}, {"p", t.p}, {"r", t.r},
          {"n_max", t.n_max},     {"notes", t.notes},        {"rows", rows}};
}

json to_json(const PrimeGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
  return {{"vertices", g.vertices}, {"edges", edges}};
}

json to_json(const ReductionReport& r) {
  json j{{"group", r.group_label},
         {"order", r.order},
         {"p", r.p},
         {"r", r.r},
         {"isolated", r.isolated},
         {"applicable", r.applicable},
         {"sylow", r.sylow},
         {"sylow_order", r.sylow_order},
         {"trivial_intersection", r.trivial_intersection},
         {"weyl_order", r.weyl_order},
         {"shape", r.shape},
         {"statement", r.statement}};
  if (r.applicable) {
    json edges = json::array();
    for (const auto& e : r.edges)
      edges.push_back({{"source", r.objects[e.source]}, {"target", r.objects[e.target]}, {"morphisms", e.count}});
    j["reduced_category"] = {{"objects", r.objects}, {"values", r.node_values}, {"edges", edges}};
  }
  json evidence = json::object();
  if (r.sk_group) evidence["sk_group"] = to_json(*r.sk_group);
  if (r.sk_colimit) evidence["colimit"] = to_json(*r.sk_colimit);
  if (r.sk_reduced_colimit) evidence["reduced_colimit"] = to_json(*r.sk_reduced_colimit);
  if (r.sk_coinvariants) evidence["weyl_coinvariants"] = to_json(*r.sk_coinvariants);
  if (r.sk_group && r.sk_colimit) evidence["match"] = *r.sk_group == *r.sk_colimit;
  j["sk_evidence"] = evidence;
  if (r.table) j["table"] = to_json(*r.table);
  if (!r.applicable && !r.hyperelementary_classes.empty()) {
    j["hyperelementary_classes"] = r.hyperelementary_classes;
    if (r.hyperelementary_surjective) j["hyperelementary_surjective"] = *r.hyperelementary_surjective;
  }
  return j;
}

json cartan_json(const CartanData& cd) {
  json simples = json::array();
  for (const auto& s : cd.simples)
    simples.push_back({{"id", s.id}, {"dim", s.module.dim}, {"endo_degree", s.endo_degree}, {"trivial", s.is_trivial}});
  return {{"group", cd.group->label()},
          {"order", cd.group->order()},
          {"group_hash", cd.group->hash()},
          {"p", cd.field->p()},
          {"r", cd.field->r()},
          {"modulus", cd.field->modulus_string()},
          {"seed", cd.seed},
          {"simples", simples},
          {"radical_dim", cd.radical.rows()},
          {"nilpotency_index", cd.nilpotency},
          {"projective_dims", cd.projective_dims},
          {"cartan", to_json(cd.cartan)},
          {"determinant", big_json(determinant(cd.cartan))},
          {"sk", to_json(cokernel(cd.cartan.transpose()))}};
}

json diagram_json(const OrbitCategoryP& cat, const AbDiagram& d, const FgAbelianGroup& colim) {
  json nodes = json::array();
  for (const auto& n : d.nodes) nodes.push_back({{"label", n.label}, {"order", n.members.size()}, {"sk", to_json(n.group)}});
  const std::size_t k = cat.objects.size();
  json counts = json::array();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t c = cat.offsets[i * k + j + 1] - cat.offsets[i * k + j];
      if (c) counts.push_back({{"source", d.nodes[i].label}, {"target", d.nodes[j].label}, {"morphisms", c}});
    }
  return {{"objects", nodes}, {"hom_counts", counts}, {"morphisms", cat.morphisms.size()}, {"colimit", to_json(colim)}};
}

std::string ktable_csv(const KTable& t) {
  std::string out = "n,invariant_factors,provenance\n";
  for (const auto& r : t.rows) {
    std::string f;
    for (const auto& d : r.group.invariant_factors()) {
      if (!f.empty()) f += ' ';
      f += d.str();
    }
    out += std::to_string(r.n) + "," + f + "," + r.provenance + "\n";
  }
  return out;
}

std::string ktable_text(const KTable& t) {
  std::size_t wn = 1, wg = 5, wf = 7;
  for (const auto& r : t.rows) {
    wn = std::max(wn, std::to_string(r.n).size());
    wg = std::max(wg, r.group.to_string().size());
    wf = std::max(wf, r.formula.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  std::string out = t.subject + "\n";
  for (const auto& n : t.notes) out += "  " + n + "\n";
  out += pad("n", wn) + "  " + pad("group", wg) + "  " + pad("formula", wf) + "  provenance\n";
  for (const auto& r : t.rows)
    out += pad(std::to_string(r.n), wn) + "  " + pad(r.group.to_string(), wg) + "  " + pad(r.formula, wf) + "  " +
           r.provenance + "\n";
  return out;
}

std::string reduction_text(const ReductionReport& r) {
  std::ostringstream os;
  os << r.group_label << " (order " << r.order << "), p = " << r.p << ", k = F_" << r.p;
  if (r.r > 1) os << "^" << r.r;
  os << "\n";
  os << "  " << r.p << "-isolated: " << (r.isolated ? "yes" : "no") << "\n";
  os << "  Sylow: " << r.sylow << " (order " << r.sylow_order << "), trivial intersection: "
     << (r.trivial_intersection ? "yes" : "no") << ", |W| = " << r.weyl_order << "\n";
  os << "  shape: " << r.shape << "\n  " << r.statement << "\n";
  if (r.applicable) {
    os << "  reduced category:";
    for (std::size_t i = 0; i < r.objects.size(); ++i) os << (i ? ", " : " ") << r.objects[i];
    os << "\n";
    for (const auto& e : r.edges)
      os << "    " << r.objects[e.source] << " -> " << r.objects[e.target] << ": " << e.count << "\n";
  }
  if (r.sk_group) os << "  S_k(G) = " << r.sk_group->to_string() << "\n";
  if (r.sk_colimit) os << "  colim S_k over O_p(G) = " << r.sk_colimit->to_string() << "\n";
  if (r.sk_reduced_colimit) os << "  colim over the reduction = " << r.sk_reduced_colimit->to_string() << "\n";
  if (r.sk_coinvariants) os << "  Weyl coinvariants = " << r.sk_coinvariants->to_string() << "\n";
  if (!r.hyperelementary_classes.empty()) {
    os << "  hyperelementary classes:";
    for (const auto& h : r.hyperelementary_classes) os << " " << h;
    os << "\n";
    if (r.hyperelementary_surjective)
      os << "  induction from hyperelementary subgroups surjective on S_k: "
         << (*r.hyperelementary_surjective ? "yes" : "no") << "\n";
  }
  if (r.table) os << ktable_text(*r.table);
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ksg
