#include "schur/bigraph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace schur {

BiGraph BiGraph::from_bits(std::size_t m, std::size_t n,
                           const std::vector<std::string>& rows) {
  if (rows.size() != m) {
    throw InputError("from_bits: expected " + std::to_string(m) +
                     " rows, got " + std::to_string(rows.size()));
  }
  BiGraph g(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) {
      throw InputError("from_bits: row " + std::to_string(i) + " has length " +
                       std::to_string(rows[i].size()) + ", expected " +
                       std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') {
        throw InputError("from_bits: row " + std::to_string(i) +
                         " contains symbol '" + std::string(1, c) +
                         "', expected 0/1");
      }
      g.set(i, j, c == '1');
    }
  }
  return g;
}

BiGraph BiGraph::from_text(std::string_view text) {
  std::vector<std::string> rows;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) rows.push_back(line);
  }
  if (rows.empty()) return BiGraph();
  return from_bits(rows.size(), rows.front().size(), rows);
}

std::size_t BiGraph::edge_count() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::size_t BiGraph::row_degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += bit(i, j);
  return d;
}

std::size_t BiGraph::col_degree(std::size_t j) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < m_; ++i) d += bit(i, j);
  return d;
}

BiGraph BiGraph::transposed() const {
  BiGraph t(n_, m_);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t.set(j, i, bit(i, j));
  }
  return t;
}

BiGraph BiGraph::induced(const std::vector<std::size_t>& row_sel,
                         const std::vector<std::size_t>& col_sel) const {
  BiGraph h(row_sel.size(), col_sel.size());
  for (std::size_t a = 0; a < row_sel.size(); ++a) {
    for (std::size_t b = 0; b < col_sel.size(); ++b) {
      h.set(a, b, bit(row_sel[a], col_sel[b]));
    }
  }
  return h;
}

Matrix BiGraph::to_matrix() const {
  Matrix a = Matrix::Zero(static_cast<Eigen::Index>(m_),
                          static_cast<Eigen::Index>(n_));
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (bit(i, j)) a(static_cast<Eigen::Index>(i),
                       static_cast<Eigen::Index>(j)) = 1.0;
    }
  }
  return a;
}

std::string BiGraph::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out += bit(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

BiGraph direct_sum(const BiGraph& a, const BiGraph& b) {
  BiGraph g(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) g.set(i, j, a.bit(i, j));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      g.set(a.rows() + i, a.cols() + j, b.bit(i, j));
    }
  }
  return g;
}

std::size_t max_degree(const BiGraph& g) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) d = std::max(d, g.row_degree(i));
  for (std::size_t j = 0; j < g.cols(); ++j) d = std::max(d, g.col_degree(j));
  return d;
}

std::vector<BiGraph> components(const BiGraph& g) {
  const std::size_t m = g.rows(), n = g.cols();
  std::vector<char> seen_row(m, 0), seen_col(n, 0);
  std::vector<BiGraph> out;

  for (std::size_t s = 0; s < m; ++s) {
    if (seen_row[s]) continue;
    seen_row[s] = 1;
    std::vector<std::size_t> rows{s}, cols;
    std::vector<std::pair<char, std::size_t>> stack{{'r', s}};
    while (!stack.empty()) {
      auto [kind, idx] = stack.back();
      stack.pop_back();
      if (kind == 'r') {
        for (std::size_t j = 0; j < n; ++j) {
          if (g.bit(idx, j) && !seen_col[j]) {
            seen_col[j] = 1;
            cols.push_back(j);
            stack.emplace_back('c', j);
          }
        }
      } else {
        for (std::size_t i = 0; i < m; ++i) {
          if (g.bit(i, idx) && !seen_row[i]) {
            seen_row[i] = 1;
            rows.push_back(i);
            stack.emplace_back('r', i);
          }
        }
      }
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    out.push_back(g.induced(rows, cols));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!seen_col[j]) out.push_back(BiGraph(0, 1));
  }
  return out;
}

namespace {

// One pass of duplicate-row removal, keeping least indices. Returns true if
// anything was removed.
bool dedupe_rows(BiGraph& g) {
  std::vector<std::size_t> keep;
  std::vector<std::string> seen;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::string key(g.cols(), '0');
    for (std::size_t j = 0; j < g.cols(); ++j) key[j] = g.bit(i, j) ? '1' : '0';
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      keep.push_back(i);
    }
  }
  if (keep.size() == g.rows()) return false;
  std::vector<std::size_t> all_cols(g.cols());
  std::iota(all_cols.begin(), all_cols.end(), 0);
  g = g.induced(keep, all_cols);
  return true;
}

}  // namespace

BiGraph twin_reduce(const BiGraph& g) {
  BiGraph d = g;
  bool changed = true;
  while (changed) {
    changed = dedupe_rows(d);
    BiGraph t = d.transposed();
    if (dedupe_rows(t)) changed = true;
    d = t.transposed();
  }
  return d;
}

bool is_twin_free(const BiGraph& g) {
  return twin_reduce(g) == g;
}

namespace {

// Backtracking injection of H's rows into G's rows and H's columns into G's
// columns, bit-exact. Rows of H are matched in decreasing-degree order so
// high-degree rows prune first.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const BiGraph& h, const BiGraph& g) : h_(h), g_(g) {
    row_order_.resize(h.rows());
    std::iota(row_order_.begin(), row_order_.end(), 0);
    std::sort(row_order_.begin(), row_order_.end(),
              [&](std::size_t a, std::size_t b) {
                return h.row_degree(a) > h.row_degree(b);
              });
    row_image_.assign(h.rows(), kUnset);
    col_image_.assign(h.cols(), kUnset);
    row_used_.assign(g.rows(), 0);
    col_used_.assign(g.cols(), 0);
  }

  bool run() {
    if (h_.rows() > g_.rows() || h_.cols() > g_.cols()) return false;
    return place_row(0);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Consistency of mapping h-row a -> g-row i against already-placed columns.
  bool row_consistent(std::size_t a, std::size_t i) const {
    for (std::size_t b = 0; b < h_.cols(); ++b) {
      if (col_image_[b] != kUnset && h_.bit(a, b) != g_.bit(i, col_image_[b]))
        return false;
    }
    return true;
  }

  bool col_consistent(std::size_t b, std::size_t j) const {
    for (std::size_t a = 0; a < h_.rows(); ++a) {
      if (row_image_[a] != kUnset && h_.bit(a, b) != g_.bit(row_image_[a], j))
        return false;
    }
    return true;
  }

  bool place_row(std::size_t k) {
    if (k == h_.rows()) return place_col(0);
    const std::size_t a = row_order_[k];
    for (std::size_t i = 0; i < g_.rows(); ++i) {
      if (row_used_[i] || g_.row_degree(i) < h_.row_degree(a)) continue;
      if (!row_consistent(a, i)) continue;
      row_used_[i] = 1;
      row_image_[a] = i;
      if (place_row(k + 1)) return true;
      row_used_[i] = 0;
      row_image_[a] = kUnset;
    }
    return false;
  }

  bool place_col(std::size_t b) {
    if (b == h_.cols()) return true;
    for (std::size_t j = 0; j < g_.cols(); ++j) {
      if (col_used_[j] || g_.col_degree(j) < h_.col_degree(b)) continue;
      if (!col_consistent(b, j)) continue;
      col_used_[j] = 1;
      col_image_[b] = j;
      if (place_col(b + 1)) return true;
      col_used_[j] = 0;
      col_image_[b] = kUnset;
    }
    return false;
  }

  const BiGraph& h_;
  const BiGraph& g_;
  std::vector<std::size_t> row_order_;
  std::vector<std::size_t> row_image_, col_image_;
  std::vector<char> row_used_, col_used_;
};

bool embeds_one_way(const BiGraph& h, const BiGraph& g) {
  return EmbeddingSearch(h, g).run();
}

}  // namespace

bool is_induced_subgraph(const BiGraph& h, const BiGraph& g) {
  if (h.rows() == 0 && h.cols() == 0) return true;
  if (embeds_one_way(h, g)) return true;
  const BiGraph ht = h.transposed();
  return !(ht == h) && embeds_one_way(ht, g);
}

bool is_isomorphic(const BiGraph& a, const BiGraph& b) {
  const bool same_shape = a.rows() == b.rows() && a.cols() == b.cols();
  const bool swap_shape = a.rows() == b.cols() && a.cols() == b.rows();
  if (!same_shape && !swap_shape) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return is_induced_subgraph(a, b) && is_induced_subgraph(b, a);
}

namespace {

BiGraph sigma_square(int n) {
  BiGraph g(n, n);
  for (int i = 0; i < n; ++i) {
    g.set(i, i, true);
    if (i + 1 < n) g.set(i, i + 1, true);
  }
  return g;
}

BiGraph sigma_wide(int n) {
  BiGraph g(n, n + 1);
  for (int i = 0; i < n; ++i) {
    g.set(i, i, true);
    g.set(i, i + 1, true);
  }
  return g;
}

BiGraph lambda_cycle(int n) {
  BiGraph g(n, n);
  for (int i = 0; i < n; ++i) {
    g.set(i, i, true);
    g.set(i, (i + 1) % n, true);
  }
  return g;
}

BiGraph fixed(std::initializer_list<const char*> rows) {
  std::vector<std::string> v(rows.begin(), rows.end());
  return BiGraph::from_bits(v.size(), v.front().size(), v);
}

BiGraph bracket_ones(int n) {
  BiGraph g(n, n + 1);
  for (int i = 0; i < n; ++i) {
    g.set(i, 0, true);
    g.set(i, i + 1, true);
  }
  return g;
}

}  // namespace

BiGraph catalog(const GraphName& name) {
  using Tag = GraphName::Tag;
  const int n = name.param;
  auto need = [&](bool ok, const char* what) {
    if (!ok) {
      throw InputError("catalog: parameter " + std::to_string(n) +
                       " out of range for " + what);
    }
  };
  switch (name.tag) {
    case Tag::SingleEdge:
      return fixed({"1"});
    case Tag::SigmaSquare:
      need(n >= 1, "sigma(n,n)");
      return sigma_square(n);
    case Tag::SigmaWide:
      need(n >= 1, "sigma(n,n+1)");
      return sigma_wide(n);
    case Tag::Lambda:
      need(n >= 1, "lambda(n)");
      return lambda_cycle(n);
    case Tag::E:
      need(n >= 1 && n <= 6, "E_k");
      switch (n) {
        case 1: return fixed({"1"});
        case 2: return fixed({"11", "01"});
        case 3: return sigma_square(3);
        case 4: return fixed({"100", "111", "001"});
        case 5: return fixed({"1100", "1010", "1001"});
        default: return sigma_square(4);
      }
    case Tag::F:
      need(n >= 1 && n <= 6, "F_k");
      switch (n) {
        case 1: return fixed({"1"});
        case 2: return fixed({"110", "011"});
        case 3: return lambda_cycle(4);
        case 4: return fixed({"10010", "11100", "00101"});
        case 5: return fixed({"1100", "1010", "1001"});
        default: return sigma_wide(4);
      }
    case Tag::Trie:
      return fixed({"111", "110", "100"});
    case Tag::Gee7:
      return fixed({"110", "111", "011"});
    case Tag::Gee6Cycle:
      return fixed({"110", "101", "011"});
    case Tag::Obstruction53:
      return fixed({"1111", "0100", "0010", "0001"});
    case Tag::Obstruction54:
      return fixed({"1100", "0110", "0011", "0010"});
    case Tag::Obstruction55:
      return fixed({"1100", "1010", "1001", "0001"});
    case Tag::Obstruction56:
      return fixed({"0001", "0111", "0100", "1100"});
    case Tag::BracketOnes:
      need(n >= 1, "bracket-ones");
      return bracket_ones(n);
  }
  throw InputError("catalog: unknown tag");
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
    if (v > 1000000) return std::nullopt;
  }
  return v;
}

}  // namespace

std::optional<GraphName> GraphName::parse(std::string_view raw) {
  using Tag = GraphName::Tag;
  const std::string s = lower(raw);
  if (s == "single-edge" || s == "single_edge" || s == "edge") {
    return GraphName{Tag::SingleEdge, 0};
  }
  if (s == "trie") return GraphName{Tag::Trie, 0};
  if (s == "gee7") return GraphName{Tag::Gee7, 0};
  if (s == "gee6cycle" || s == "gee6-cycle" || s == "loopee") {
    return GraphName{Tag::Gee6Cycle, 0};
  }
  if (s.size() == 2 && (s[0] == 'e' || s[0] == 'f')) {
    auto k = parse_int(s.substr(1));
    if (k && *k >= 1 && *k <= 6) {
      return GraphName{s[0] == 'e' ? Tag::E : Tag::F, *k};
    }
    return std::nullopt;
  }
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    const std::string head = s.substr(0, colon);
    const std::string tail = s.substr(colon + 1);
    if (head == "sigma") {
      const auto comma = tail.find(',');
      if (comma == std::string::npos) return std::nullopt;
      auto a = parse_int(tail.substr(0, comma));
      auto b = parse_int(tail.substr(comma + 1));
      if (!a || !b) return std::nullopt;
      if (*b == *a) return GraphName{Tag::SigmaSquare, *a};
      if (*b == *a + 1) return GraphName{Tag::SigmaWide, *a};
      return std::nullopt;
    }
    if (head == "lambda") {
      auto a = parse_int(tail);
      if (!a) return std::nullopt;
      return GraphName{Tag::Lambda, *a};
    }
    if (head == "bracket-ones" || head == "bracket_ones") {
      auto a = parse_int(tail);
      if (!a) return std::nullopt;
      return GraphName{Tag::BracketOnes, *a};
    }
    if (head == "obstruction") {
      if (tail == "5.3") return GraphName{Tag::Obstruction53, 0};
      if (tail == "5.4") return GraphName{Tag::Obstruction54, 0};
      if (tail == "5.5") return GraphName{Tag::Obstruction55, 0};
      if (tail == "5.6") return GraphName{Tag::Obstruction56, 0};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string GraphName::str() const {
  using Tag = GraphName::Tag;
  switch (tag) {
    case Tag::SingleEdge: return "single-edge";
    case Tag::SigmaSquare:
      return "sigma:" + std::to_string(param) + "," + std::to_string(param);
    case Tag::SigmaWide:
      return "sigma:" + std::to_string(param) + "," + std::to_string(param + 1);
    case Tag::Lambda: return "lambda:" + std::to_string(param);
    case Tag::E: return "E" + std::to_string(param);
    case Tag::F: return "F" + std::to_string(param);
    case Tag::Trie: return "trie";
    case Tag::Gee7: return "gee7";
    case Tag::Gee6Cycle: return "gee6cycle";
    case Tag::Obstruction53: return "obstruction:5.3";
    case Tag::Obstruction54: return "obstruction:5.4";
    case Tag::Obstruction55: return "obstruction:5.5";
    case Tag::Obstruction56: return "obstruction:5.6";
    case Tag::BracketOnes: return "bracket-ones:" + std::to_string(param);
  }
  return "?";
}

}  // namespace schur
