#pragma once

#include "schur/bigraph.hpp"
#include "schur/bounds.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schur {

/// Outcome of the gap-theorem classifier for one graph.
struct ComponentClass {
  BiGraph component;
  BiGraph reduced;        // twin-free reduction
  int matched_f = 0;      // least j with reduced <= F_j, or 0 when none
  bool contains_e = false;  // E_{matched_f} <= reduced (when matched)
};

struct ClassResult {
  int eta_index = 0;          // k when the label is eta_k
  bool at_least_eta6 = false; // marks the "norm >= eta_6" escape label
  std::vector<ComponentClass> per_component;
  std::optional<NormBounds> numeric;  // attached when at_least_eta6

  double eta_value() const;  // eta_k; meaningless when at_least_eta6
  std::string label() const;
};

/// Classifies G per the characterisation theorem: drop edgeless components;
/// twin-reduce each remaining component and find the least j in 1..6 with an
/// induced embedding into F_j; the label is eta of the max matched j, or
/// at-least-eta_6 when some component matches nothing, with numeric bounds
/// for an unmatched component of maximal lower bound attached.
ClassResult classify(const BiGraph& g,
                     const BoundsOptions& numeric_opts = {});

/// Diagnostic for connected twin-free graphs: which small obstructions occur
/// as induced subgraphs. Throws InputError otherwise.
struct ObstructionReport {
  std::size_t degree = 0;
  bool has_e4 = false;          // degree-3 triggers
  bool has_trie = false;
  bool has_gee7 = false;
  bool has_quad_witness = false;  // the 2x3 double-square pattern
  bool has_obstruction53 = false;
  bool has_obstruction54 = false;
  bool has_obstruction55 = false;
  bool has_obstruction56 = false;
  bool has_six_cycle = false;   // induced Lambda(3)

  bool any() const {
    return has_e4 || has_trie || has_gee7 || has_quad_witness ||
           has_obstruction53 || has_obstruction54 || has_obstruction55 ||
           has_obstruction56 || has_six_cycle;
  }
};

ObstructionReport forbidden_structure_report(const BiGraph& g);

}  // namespace schur
