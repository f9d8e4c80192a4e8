#pragma once

#include "schur/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schur {

/// Finite bipartite graph stored as an m x n 0-1 biadjacency matrix: entry
/// (i,j) = 1 iff row vertex r_i is joined to column vertex c_j. Either side
/// may be empty. Equality is label-sensitive; isomorphism is a separate
/// operation.
class BiGraph {
 public:
  BiGraph() = default;
  BiGraph(std::size_t m, std::size_t n) : m_(m), n_(n), bits_(m * n, 0) {}

  /// Parses rows of '0'/'1' characters. Throws InputError naming the first
  /// offending row on ragged input or foreign symbols.
  static BiGraph from_bits(std::size_t m, std::size_t n,
                           const std::vector<std::string>& rows);

  /// Text format: one row per line, e.g. "110\n011". Empty text is the 0x0
  /// graph.
  static BiGraph from_text(std::string_view text);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::size_t edge_count() const;
  bool empty() const { return m_ == 0 || n_ == 0; }
  bool edgeless() const { return edge_count() == 0; }

  bool bit(std::size_t i, std::size_t j) const { return bits_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, bool v) {
    bits_[i * n_ + j] = v ? 1 : 0;
  }

  std::size_t row_degree(std::size_t i) const;
  std::size_t col_degree(std::size_t j) const;

  BiGraph transposed() const;
  BiGraph induced(const std::vector<std::size_t>& row_sel,
                  const std::vector<std::size_t>& col_sel) const;

  Matrix to_matrix() const;
  std::string to_text() const;

  friend bool operator==(const BiGraph&, const BiGraph&) = default;

 private:
  std::size_t m_ = 0, n_ = 0;
  std::vector<std::uint8_t> bits_;
};

BiGraph direct_sum(const BiGraph& a, const BiGraph& b);

/// deg(G): maximum vertex degree over both sides; 0 for edgeless graphs.
std::size_t max_degree(const BiGraph& g);

/// Connected components in deterministic order (least row index first, then
/// leftover isolated column vertices by index). Isolated vertices come out
/// as 1x0 / 0x1 graphs.
std::vector<BiGraph> components(const BiGraph& g);

/// Maximal twin-free induced subgraph: collapses duplicate rows, then
/// duplicate columns, iterating to a fixed point. Keeps the least-index
/// representative of each twin class.
BiGraph twin_reduce(const BiGraph& g);

bool is_twin_free(const BiGraph& g);

/// True iff H embeds into G as an induced subgraph, allowing the bipartition
/// swap (H^T embedding counts). Exact backtracking search.
bool is_induced_subgraph(const BiGraph& h, const BiGraph& g);

/// Induced-subgraph containment both ways with matching sizes (up to
/// transpose).
bool is_isomorphic(const BiGraph& a, const BiGraph& b);

/// Named graphs from the catalog.
struct GraphName {
  enum class Tag {
    SingleEdge,
    SigmaSquare,   // Sigma(n,n), param = n
    SigmaWide,     // Sigma(n,n+1), param = n
    Lambda,        // Lambda(n), param = n
    E,             // E_k, param = k in 1..6
    F,             // F_k, param = k in 1..6
    Trie,
    Gee7,
    Gee6Cycle,
    Obstruction53,
    Obstruction54,
    Obstruction55,
    Obstruction56,
    BracketOnes,   // [1 I_n], param = n
  };

  Tag tag = Tag::SingleEdge;
  int param = 0;

  /// Accepts the CLI spellings: "single-edge", "sigma:3,3", "sigma:3,4",
  /// "lambda:4", "E4".."F6", "trie", "gee7", "gee6cycle",
  /// "obstruction:5.3".."5.6", "bracket-ones:3".
  static std::optional<GraphName> parse(std::string_view s);

  std::string str() const;

  friend bool operator==(const GraphName&, const GraphName&) = default;
};

/// Biadjacency matrix for a catalog name. Throws InputError when the
/// parameter is out of range (n = 0, E_7, ...).
BiGraph catalog(const GraphName& name);

inline BiGraph catalog(GraphName::Tag tag, int param = 0) {
  return catalog(GraphName{tag, param});
}

}  // namespace schur
