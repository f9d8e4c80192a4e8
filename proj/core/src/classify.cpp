#include "schur/classify.hpp"

#include "schur/eta.hpp"

namespace schur {

double ClassResult::eta_value() const { return eta(eta_index); }

std::string ClassResult::label() const {
  if (at_least_eta6) return "at-least-eta6";
  return "eta" + std::to_string(eta_index);
}

ClassResult classify(const BiGraph& g, const BoundsOptions& numeric_opts) {
  ClassResult res;
  std::vector<BiGraph> unmatched;
  for (const BiGraph& comp : components(g)) {
    if (comp.edgeless()) continue;  // isolated vertices carry norm 0
    ComponentClass cc;
    cc.component = comp;
    cc.reduced = twin_reduce(comp);
    for (int j = 1; j <= 6; ++j) {
      if (is_induced_subgraph(cc.reduced, catalog(GraphName::Tag::F, j))) {
        cc.matched_f = j;
        cc.contains_e =
            is_induced_subgraph(catalog(GraphName::Tag::E, j), cc.reduced);
        break;
      }
    }
    if (cc.matched_f == 0) {
      res.at_least_eta6 = true;
      unmatched.push_back(cc.reduced);
    } else {
      res.eta_index = std::max(res.eta_index, cc.matched_f);
    }
    res.per_component.push_back(std::move(cc));
  }
  if (res.at_least_eta6) {
    res.eta_index = 6;
    NormBounds best;
    for (const BiGraph& comp : unmatched) {
      NormBounds nb = norm_bounds(comp.to_matrix(), numeric_opts);
      if (nb.lower > best.lower) best = std::move(nb);
    }
    res.numeric = std::move(best);
  }
  return res;
}

ObstructionReport forbidden_structure_report(const BiGraph& g) {
  if (components(g).size() != 1) {
    throw InputError("forbidden_structure_report: graph must be connected");
  }
  if (!is_twin_free(g)) {
    throw InputError("forbidden_structure_report: graph must be twin-free");
  }
  using Tag = GraphName::Tag;
  const BiGraph quad_witness =
      BiGraph::from_bits(2, 3, {"110", "111"});  // twin columns under a hub

  ObstructionReport rep;
  rep.degree = max_degree(g);
  rep.has_e4 = is_induced_subgraph(catalog(Tag::E, 4), g);
  rep.has_trie = is_induced_subgraph(catalog(Tag::Trie), g);
  rep.has_gee7 = is_induced_subgraph(catalog(Tag::Gee7), g);
  rep.has_quad_witness = is_induced_subgraph(quad_witness, g);
  rep.has_obstruction53 = is_induced_subgraph(catalog(Tag::Obstruction53), g);
  rep.has_obstruction54 = is_induced_subgraph(catalog(Tag::Obstruction54), g);
  rep.has_obstruction55 = is_induced_subgraph(catalog(Tag::Obstruction55), g);
  rep.has_obstruction56 = is_induced_subgraph(catalog(Tag::Obstruction56), g);
  rep.has_six_cycle = is_induced_subgraph(catalog(Tag::Gee6Cycle), g);
  return rep;
}

}  // namespace schur
