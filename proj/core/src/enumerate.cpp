#include "schur/enumerate.hpp"

#include "schur/classify.hpp"
#include "schur/eta.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace schur {

namespace {

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

// Bit-position remap tables for every (row perm, col perm) pair of an
// m x n pattern, so a whole orbit reduces to table lookups.
struct PermTables {
  int m = 0, n = 0;
  std::vector<std::array<std::uint8_t, 64>> maps;

  PermTables() = default;
  PermTables(int m_, int n_) : m(m_), n(n_) {
    const auto rp = permutations(m);
    const auto cp = permutations(n);
    maps.reserve(rp.size() * cp.size());
    for (const auto& r : rp) {
      for (const auto& c : cp) {
        std::array<std::uint8_t, 64> t{};
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < n; ++j) {
            t[static_cast<std::size_t>(i * n + j)] =
                static_cast<std::uint8_t>(r[i] * n + c[j]);
          }
        }
        maps.push_back(t);
      }
    }
  }

  std::uint64_t min_orbit(std::uint64_t bits) const {
    std::uint64_t best = ~0ULL;
    for (const auto& t : maps) {
      std::uint64_t img = 0;
      std::uint64_t rest = bits;
      while (rest != 0) {
        const int pos = __builtin_ctzll(rest);
        rest &= rest - 1;
        img |= 1ULL << t[static_cast<std::size_t>(pos)];
      }
      if (img < best) best = img;
    }
    return best;
  }
};

std::uint64_t transpose_bits(std::uint64_t bits, int m, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (bits & (1ULL << (i * n + j))) out |= 1ULL << (j * m + i);
    }
  }
  return out;
}

std::uint64_t pack_key(int m, int n, std::uint64_t bits) {
  return (static_cast<std::uint64_t>(m) << 56) |
         (static_cast<std::uint64_t>(n) << 48) | bits;
}

const PermTables& tables_for(int m, int n) {
  static PermTables cache[9][9];
  PermTables& t = cache[m][n];
  if (t.maps.empty()) t = PermTables(m, n);
  return t;
}

std::uint64_t canonical_bits(std::uint64_t bits, int m, int n) {
  if (m > n) {
    return canonical_bits(transpose_bits(bits, m, n), n, m);
  }
  std::uint64_t best = tables_for(m, n).min_orbit(bits);
  if (m == n) {
    best = std::min(best, tables_for(m, n).min_orbit(transpose_bits(bits, m, n)));
  }
  return pack_key(m, n, best);
}

BiGraph graph_from_bits(std::uint64_t bits, int m, int n) {
  BiGraph g(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (bits & (1ULL << (i * n + j))) {
        g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
      }
    }
  }
  return g;
}

std::uint64_t bits_of(const BiGraph& g) {
  std::uint64_t bits = 0;
  const int m = static_cast<int>(g.rows()), n = static_cast<int>(g.cols());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.bit(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
        bits |= 1ULL << (i * n + j);
      }
    }
  }
  return bits;
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::uint64_t canonical_key(const BiGraph& g) {
  if (g.rows() > 8 || g.cols() > 8) {
    throw InputError("canonical_key: supports at most 8x8 graphs");
  }
  return canonical_bits(bits_of(g), static_cast<int>(g.rows()),
                        static_cast<int>(g.cols()));
}

std::vector<BiGraph> enumerate_classes(int max_m, int max_n, int threads) {
  if (max_m < 1 || max_n < 1 || max_m > 4 || max_n > 5) {
    throw InputError("enumerate_classes: dimensions must be within 1..4 x 1..5");
  }
  const int nthreads = thread_count(threads);
  std::vector<std::uint64_t> keys;
  for (int m = 1; m <= max_m; ++m) {
    for (int n = m; n <= max_n; ++n) {  // m <= n; transposes are identified
      const std::uint64_t count = 1ULL << (m * n);
      std::vector<std::vector<std::uint64_t>> shards(
          static_cast<std::size_t>(nthreads));
      std::vector<std::thread> pool;
      for (int tid = 0; tid < nthreads; ++tid) {
        pool.emplace_back([&, tid]() {
          std::unordered_set<std::uint64_t> local;
          for (std::uint64_t b = static_cast<std::uint64_t>(tid); b < count;
               b += static_cast<std::uint64_t>(nthreads)) {
            local.insert(canonical_bits(b, m, n));
          }
          shards[static_cast<std::size_t>(tid)].assign(local.begin(),
                                                       local.end());
        });
      }
      for (auto& th : pool) th.join();
      std::unordered_set<std::uint64_t> merged;
      for (const auto& shard : shards) merged.insert(shard.begin(), shard.end());
      keys.insert(keys.end(), merged.begin(), merged.end());
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::vector<BiGraph> out;
  out.reserve(keys.size());
  for (std::uint64_t key : keys) {
    const int m = static_cast<int>(key >> 56);
    const int n = static_cast<int>((key >> 48) & 0xFF);
    const std::uint64_t bits = key & ((1ULL << 48) - 1);
    if (bits == 0) continue;  // edgeless patterns all classify to eta_0
    out.push_back(graph_from_bits(bits, m, n));
  }
  return out;
}

SweepResult enumerate_sweep(const SweepOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepResult res;
  res.max_m = opts.max_m;
  res.max_n = opts.max_n;
  for (int m = 1; m <= opts.max_m; ++m) {
    for (int n = 1; n <= opts.max_n; ++n) {
      res.total_matrices += 1ULL << (m * n);
    }
  }
  const std::vector<BiGraph> classes =
      enumerate_classes(opts.max_m, opts.max_n, opts.threads);
  res.classes = classes.size() + 1;  // plus the edgeless class
  res.label_counts[0] = 1;           // the edgeless class is eta_0

  const std::uint64_t key_e4 = canonical_key(catalog(GraphName::Tag::E, 4));
  const std::uint64_t key_e5 = canonical_key(catalog(GraphName::Tag::E, 5));
  const std::uint64_t key_s44 =
      canonical_key(catalog(GraphName::Tag::SigmaSquare, 4));

  const int nthreads = thread_count(opts.threads);
  struct Shard {
    std::array<std::size_t, 8> counts{};
    std::vector<SweepAnomaly> mism, gaps;
    std::size_t non_converged = 0;
    bool e4 = false, e5 = false, s44 = false;
  };
  std::vector<Shard> shards(static_cast<std::size_t>(nthreads));
  std::vector<std::thread> pool;
  for (int tid = 0; tid < nthreads; ++tid) {
    pool.emplace_back([&, tid]() {
      Shard& sh = shards[static_cast<std::size_t>(tid)];
      for (std::size_t idx = static_cast<std::size_t>(tid);
           idx < classes.size(); idx += static_cast<std::size_t>(nthreads)) {
        const BiGraph& g = classes[idx];
        const ClassResult cls = classify(g, opts.bounds);
        const int label = cls.at_least_eta6 ? 7 : cls.eta_index;
        ++sh.counts[static_cast<std::size_t>(label)];
        const std::uint64_t key = canonical_key(g);
        if (key == key_e4 && label == 4) sh.e4 = true;
        if (key == key_e5 && label == 5) sh.e5 = true;
        if (key == key_s44 && label == 6) sh.s44 = true;
        if (!opts.check) continue;

        const NormBounds nb = norm_bounds(g.to_matrix(), opts.bounds);
        if (!nb.converged) ++sh.non_converged;
        if (label <= 6) {
          // The exact label must be bracketed: lower - tol <= eta_k <=
          // upper + tol. Convergence is not required here; only converged
          // intervals participate in the gap-emptiness check below.
          const double target = eta(label);
          const bool ok = nb.lower <= target + opts.agree_tol &&
                          nb.upper >= target - opts.agree_tol;
          if (!ok) {
            sh.mism.push_back(
                {g, "label eta" + std::to_string(label) +
                        " outside the certified bounds",
                 label, nb.lower, nb.upper});
          }
        } else if (nb.lower < eta(6) - opts.agree_tol) {
          sh.mism.push_back(
              {g, "at-least-eta6 label but lower bound below eta_6", label,
               nb.lower, nb.upper});
        }
        if (nb.converged) {
          for (int j = 1; j <= 6; ++j) {
            if (nb.lower > eta(j - 1) + 1e-4 && nb.upper < eta(j) - 1e-4) {
              sh.gaps.push_back({g,
                                 "certified interval inside the (eta" +
                                     std::to_string(j - 1) + ", eta" +
                                     std::to_string(j) + ") gap",
                                 label, nb.lower, nb.upper});
            }
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const Shard& sh : shards) {
    for (std::size_t k = 0; k < 8; ++k) res.label_counts[k] += sh.counts[k];
    res.oracle_mismatches.insert(res.oracle_mismatches.end(), sh.mism.begin(),
                                 sh.mism.end());
    res.gap_violations.insert(res.gap_violations.end(), sh.gaps.begin(),
                              sh.gaps.end());
    res.non_converged += sh.non_converged;
    res.e4_realized = res.e4_realized || sh.e4;
    res.e5_realized = res.e5_realized || sh.e5;
    res.sigma44_realized = res.sigma44_realized || sh.s44;
  }
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

}  // namespace schur
