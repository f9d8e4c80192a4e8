#include "schur/classify.hpp"

#include "schur/enumerate.hpp"
#include "schur/bounds.hpp"
#include "schur/eta.hpp"

#include "doctest.h"

using namespace schur;
using Tag = GraphName::Tag;

namespace {

BiGraph graph_of(std::uint32_t bits, std::size_t m, std::size_t n) {
  BiGraph g(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (bits & (1u << (i * n + j))) g.set(i, j, true);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("classify pins the named examples") {
  CHECK(classify(BiGraph::from_bits(1, 1, {"1"})).eta_index == 1);
  CHECK(classify(BiGraph(2, 3)).eta_index == 0);

  const ClassResult sum = classify(direct_sum(
      catalog(Tag::SigmaSquare, 3), BiGraph::from_bits(1, 1, {"1"})));
  CHECK(sum.eta_index == 3);
  CHECK_FALSE(sum.at_least_eta6);

  const ClassResult trie = classify(catalog(Tag::Trie));
  CHECK(trie.at_least_eta6);
  REQUIRE(trie.numeric.has_value());
  CHECK(trie.numeric->lower >= (9.0 + 4.0 * std::sqrt(6.0)) / 15.0 - 1e-6);
}

TEST_CASE("classify maps every E_k and F_k to eta_k") {
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(classify(catalog(Tag::E, k)).eta_index == k);
    CHECK(classify(catalog(Tag::F, k)).eta_index == k);
    CHECK_FALSE(classify(catalog(Tag::E, k)).at_least_eta6);
  }
  CHECK(classify(catalog(Tag::SigmaWide, 2)).eta_index == 2);
  CHECK(classify(catalog(Tag::Lambda, 4)).eta_index == 3);
  CHECK(classify(catalog(Tag::Gee6Cycle)).at_least_eta6);
}

TEST_CASE("classification labels carry the containment structure") {
  const ClassResult r = classify(catalog(Tag::F, 4));
  REQUIRE(r.per_component.size() == 1);
  CHECK(r.per_component[0].matched_f == 4);
  CHECK(r.per_component[0].contains_e);
}

TEST_CASE("classify is invariant under relabeling up to 3x4") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::uint32_t bits = 0; bits < (1u << (m * n)); ++bits) {
        const BiGraph g = graph_of(bits, m, n);
        const ClassResult base = classify(g);
        const int label = base.at_least_eta6 ? 7 : base.eta_index;

        const ClassResult t = classify(g.transposed());
        CHECK((t.at_least_eta6 ? 7 : t.eta_index) == label);

        // Reverse rows and columns (a permutation).
        BiGraph perm(m, n);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            perm.set(m - 1 - i, n - 1 - j, g.bit(i, j));
          }
        }
        const ClassResult p = classify(perm);
        CHECK((p.at_least_eta6 ? 7 : p.eta_index) == label);

        // Duplicate the first row.
        BiGraph dup(m + 1, n);
        for (std::size_t j = 0; j < n; ++j) dup.set(0, j, g.bit(0, j));
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < n; ++j) dup.set(i + 1, j, g.bit(i, j));
        }
        const ClassResult d = classify(dup);
        CHECK((d.at_least_eta6 ? 7 : d.eta_index) == label);
      }
    }
  }
}

TEST_CASE("forbidden structure report") {
  const ObstructionReport clean =
      forbidden_structure_report(catalog(Tag::SigmaSquare, 5));
  CHECK(clean.degree == 2);
  CHECK_FALSE(clean.any());

  const ObstructionReport f4 = forbidden_structure_report(catalog(Tag::F, 4));
  CHECK(f4.has_e4);
  CHECK_FALSE(f4.has_quad_witness);
  CHECK_FALSE(f4.has_obstruction53);

  // All-ones reduces to a single edge before the report applies.
  const BiGraph ones = BiGraph::from_bits(4, 4, {"1111", "1111", "1111", "1111"});
  CHECK_THROWS_AS(forbidden_structure_report(ones), InputError);
  const ObstructionReport reduced =
      forbidden_structure_report(twin_reduce(ones));
  CHECK_FALSE(reduced.any());

  CHECK_THROWS_AS(
      forbidden_structure_report(direct_sum(catalog(Tag::SingleEdge),
                                            catalog(Tag::SingleEdge))),
      InputError);
}

TEST_CASE("norms above eta_6 escape to the numeric label") {
  // [1 I_4] has norm sqrt(8/5) > eta_6, so no F_j can contain it.
  const ClassResult res = classify(catalog(Tag::BracketOnes, 4));
  CHECK(res.at_least_eta6);
  REQUIRE(res.numeric.has_value());
  CHECK(res.numeric->lower ==
        doctest::Approx(std::sqrt(8.0 / 5.0)).epsilon(1e-6));
}

TEST_CASE("canonical keys identify isomorphic graphs") {
  CHECK(canonical_key(catalog(Tag::Lambda, 3)) ==
        canonical_key(catalog(Tag::Gee6Cycle)));
  CHECK(canonical_key(catalog(Tag::SigmaSquare, 3)) ==
        canonical_key(catalog(Tag::SigmaSquare, 3).transposed()));
  CHECK(canonical_key(catalog(Tag::Trie)) != canonical_key(catalog(Tag::Gee7)));
  CHECK(canonical_key(catalog(Tag::F, 3)) ==
        canonical_key(catalog(Tag::Lambda, 4)));
}

TEST_CASE("class enumeration counts") {
  // Hand count of the 2x2 isomorphism classes carrying an edge: one edge,
  // two edges in a line, two disjoint edges, three edges, four edges.
  const auto classes = enumerate_classes(2, 2);
  std::size_t count22 = 0;
  for (const auto& g : classes) {
    if (g.rows() == 2 && g.cols() == 2) ++count22;
  }
  CHECK(count22 == 5);
  for (const auto& g : classes) {
    CHECK(g.edge_count() > 0);
  }
}

TEST_CASE("strictly-between-1-and-eta4 forces degree 2") {
  // Certified norm inside (1, eta_4) on a twin-free connected graph means
  // the graph is a path or a cycle.
  for (const BiGraph& g : enumerate_classes(4, 4)) {
    if (components(g).size() != 1 || !is_twin_free(g)) continue;
    const NormBounds nb = norm_bounds(g.to_matrix());
    if (!nb.converged) continue;
    if (nb.lower > 1.0 + 1e-4 && nb.upper < eta(4) - 1e-4) {
      CAPTURE(g.to_text());
      CHECK(max_degree(g) == 2);
    }
  }
}

TEST_CASE("exact labels carry their E_k witness") {
  for (const BiGraph& g : enumerate_classes(3, 4)) {
    const ClassResult res = classify(g);
    if (res.at_least_eta6 || res.eta_index == 0) continue;
    bool witnessed = false;
    for (const auto& cc : res.per_component) {
      if (cc.matched_f == res.eta_index && cc.contains_e) witnessed = true;
    }
    CAPTURE(g.to_text());
    CHECK(witnessed);
  }
}

TEST_CASE("small sweep agrees with the oracle") {
  SweepOptions opts;
  opts.max_m = 3;
  opts.max_n = 3;
  const SweepResult res = enumerate_sweep(opts);
  CHECK(res.oracle_mismatches.empty());
  CHECK(res.gap_violations.empty());
  CHECK(res.label_counts[0] == 1);
  CHECK(res.label_counts[1] > 0);
  CHECK(res.label_counts[2] > 0);
  CHECK(res.label_counts[3] > 0);
  CHECK(res.label_counts[4] > 0);  // E_4 is 3x3
  CHECK(res.label_counts[7] > 0);  // trie, gee7, lambda(3)
}
