#include "schur/bounds.hpp"

#include "schur/rng.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace schur {

namespace {

Matrix hadamard_power(int n) {
  Matrix h(1, 1);
  h(0, 0) = 1.0;
  while (h.rows() < n) {
    Matrix next(2 * h.rows(), 2 * h.cols());
    const double inv = 1.0 / std::sqrt(2.0);
    next << h * inv, h * inv, h * inv, -h * inv;
    h = next;
  }
  return h;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Matrix pad_square(const Matrix& a) {
  const Eigen::Index n = std::max(a.rows(), a.cols());
  Matrix p = Matrix::Zero(n, n);
  p.topLeftCorner(a.rows(), a.cols()) = a;
  return p;
}

// Support components of an arbitrary real matrix: row/column index sets
// joined through nonzero entries. Rows and columns with no nonzero entry
// belong to no component.
struct Component {
  std::vector<Eigen::Index> rows, cols;
};

std::vector<Component> support_components(const Matrix& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  std::vector<char> seen_row(m, 0), seen_col(n, 0);
  std::vector<Component> out;
  for (Eigen::Index s = 0; s < m; ++s) {
    if (seen_row[s] || a.row(s).isZero(0.0)) continue;
    seen_row[s] = 1;
    Component c;
    c.rows.push_back(s);
    std::vector<std::pair<char, Eigen::Index>> stack{{'r', s}};
    while (!stack.empty()) {
      auto [kind, idx] = stack.back();
      stack.pop_back();
      if (kind == 'r') {
        for (Eigen::Index j = 0; j < n; ++j) {
          if (a(idx, j) != 0.0 && !seen_col[j]) {
            seen_col[j] = 1;
            c.cols.push_back(j);
            stack.emplace_back('c', j);
          }
        }
      } else {
        for (Eigen::Index i = 0; i < m; ++i) {
          if (a(i, idx) != 0.0 && !seen_row[i]) {
            seen_row[i] = 1;
            c.rows.push_back(i);
            stack.emplace_back('r', i);
          }
        }
      }
    }
    std::sort(c.rows.begin(), c.rows.end());
    std::sort(c.cols.begin(), c.cols.end());
    out.push_back(std::move(c));
  }
  return out;
}

Matrix random_orthogonal(int n, std::uint64_t seed) {
  SplitMix64 rng = SplitMix64::forked(seed, 0x5eedULL);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix gauss(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) gauss(i, j) = rng.next_gaussian();
    }
    Eigen::HouseholderQR<Matrix> qr(gauss);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (r(j, j) < 0) q.col(j) = -q.col(j);
    }
    if (q.cwiseAbs().minCoeff() >= 1e-3) return q;
  }
  throw std::runtime_error("random_orthogonal: failed to draw a zero-free seed");
}

Matrix submatrix(const Matrix& a, const std::vector<Eigen::Index>& rows,
                 const std::vector<Eigen::Index>& cols) {
  Matrix b(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          a(rows[i], cols[j]);
    }
  }
  return b;
}

// Shapes a factorization of b out of a candidate Gram matrix for the columns
// of R. The row space of b is built exactly (orthonormal basis from the SVD),
// so S^T R = b holds at machine precision whatever the Gram's quality; only
// the column bounds depend on it.
std::optional<Factorization> shape_from_gram(const Matrix& b,
                                             const Matrix& gram) {
  const Eigen::Index m = b.rows(), n = b.cols();
  Eigen::JacobiSVD<Matrix> dec(b, Eigen::ComputeThinV);
  const Vector sv = dec.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return std::nullopt;
  Eigen::Index rho = 0;
  const double rank_tol = static_cast<double>(std::max(m, n)) * sv(0) * 1e-14;
  while (rho < sv.size() && sv(rho) > rank_tol) ++rho;
  const Matrix q = dec.matrixV().leftCols(rho).transpose();  // rho x n

  Matrix gq = q * gram * q.transpose();
  gq = 0.5 * (gq + gq.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(gq);
  Vector w = es.eigenvalues().cwiseMax(1e-14);
  const Matrix shaping = w.cwiseSqrt().asDiagonal() *
                         es.eigenvectors().transpose();  // M, M^T M = gq
  const Matrix shaping_inv =
      es.eigenvectors() * w.cwiseSqrt().cwiseInverse().asDiagonal();

  Factorization f;
  f.target = b;
  f.R = shaping * q;
  f.S = (b * q.transpose() * shaping_inv).transpose();
  const Eigen::Index k = std::min(m, n);
  if (rho < k) {
    Matrix rpad = Matrix::Zero(k, n), spad = Matrix::Zero(k, m);
    rpad.topRows(rho) = f.R;
    spad.topRows(rho) = f.S;
    f.R = std::move(rpad);
    f.S = std::move(spad);
  }
  return f;
}

// Factorization of a connected block from a converged witness. B must have
// m <= n and no zero rows or columns; (omega, x, y) live on the n x n padded
// square. The attainment identities give the column Gram of the optimal R as
// sym(X^{-1} Omega^T Y B).
std::optional<Factorization> factor_from_witness(const Matrix& b,
                                                 const Matrix& omega,
                                                 const Vector& x,
                                                 const Vector& y) {
  const double xmax = x.cwiseAbs().maxCoeff();
  if (xmax <= 0.0 || x.cwiseAbs().minCoeff() < 1e-8 * xmax) {
    return std::nullopt;  // witness did not see every column
  }
  const Matrix bp = pad_square(b);
  Matrix g = x.cwiseInverse().asDiagonal() * omega.transpose() *
             y.asDiagonal() * bp;
  g = 0.5 * (g + g.transpose());
  return shape_from_gram(b, g);
}

// Interior-point polish for blocks the witness route leaves open (the top
// singular pair of A . U can vanish on "slack" vertices, and then the Gram
// construction cannot cover the whole block). Solves
//     min t  s.t.  C = [[P, B], [B^T, Q]] psd,  diag(C) <= t
// by a primal log-barrier Newton method over (P, Q, t); the optimum value is
// the Schur norm and the Q block is the Gram the shaping step needs.
class CompletionBarrier {
 public:
  explicit CompletionBarrier(const Matrix& b) : b_(b), m_(b.rows()), n_(b.cols()) {
    dim_ = m_ + n_;
    params_.clear();
    for (Eigen::Index i = 0; i < m_; ++i) {
      for (Eigen::Index j = i; j < m_; ++j) params_.push_back({i, j});
    }
    for (Eigen::Index i = 0; i < n_; ++i) {
      for (Eigen::Index j = i; j < n_; ++j) params_.push_back({m_ + i, m_ + j});
    }
    np_ = static_cast<int>(params_.size()) + 1;  // + t
  }

  std::optional<Matrix> solve() {
    // Strictly feasible start: P = Q = s I with s above the spectral norm.
    const double s0 = spectral_norm(b_) * 1.05 + 1e-2;
    Vector x = Vector::Zero(np_);
    for (std::size_t a = 0; a < params_.size(); ++a) {
      if (params_[a].first == params_[a].second) x(a) = s0;
    }
    x(np_ - 1) = 1.5 * s0;

    double mu = 0.25 * s0;
    const double mu_min = 1e-12;
    int newton_budget = 600;
    while (mu > mu_min && newton_budget > 0) {
      for (int step = 0; step < 10 && newton_budget > 0; ++step, --newton_budget) {
        if (!newton_step(x, mu)) return std::nullopt;
        if (last_decrement_ < 1e-15 * std::max(1.0, std::abs(x(np_ - 1)))) break;
      }
      mu *= 0.2;
    }
    const Matrix c = assemble(x);
    return c.bottomRightCorner(n_, n_);
  }

 private:
  Matrix assemble(const Vector& x) const {
    Matrix c = Matrix::Zero(dim_, dim_);
    c.topRightCorner(m_, n_) = b_;
    c.bottomLeftCorner(n_, m_) = b_.transpose();
    for (std::size_t a = 0; a < params_.size(); ++a) {
      const auto [r, col] = params_[a];
      c(r, col) = x(a);
      c(col, r) = x(a);
    }
    return c;
  }

  // Barrier value t - mu(logdet + box), kept at O(1) scale so Armijo
  // comparisons stay meaningful down to mu ~ 1e-12; +inf when infeasible.
  double value(const Vector& x, double mu) const {
    const double t = x(np_ - 1);
    const Matrix c = assemble(x);
    Eigen::LLT<Matrix> llt(c);
    if (llt.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < dim_; ++i) {
      logdet += 2.0 * std::log(llt.matrixL()(i, i));
    }
    double box = 0.0;
    for (Eigen::Index i = 0; i < dim_; ++i) {
      const double slack = t - c(i, i);
      if (slack <= 0.0) return std::numeric_limits<double>::infinity();
      box += std::log(slack);
    }
    return t - mu * (logdet + box);
  }

  bool newton_step(Vector& x, double mu) {
    const double t = x(np_ - 1);
    const Matrix c = assemble(x);
    Eigen::LLT<Matrix> llt(c);
    if (llt.info() != Eigen::Success) return false;
    const Matrix minv = llt.solve(Matrix::Identity(dim_, dim_));

    Vector grad = Vector::Zero(np_);
    Matrix hess = Matrix::Zero(np_, np_);
    const int na = static_cast<int>(params_.size());
    // mu * (-logdet) part: grad_a = -mu (2-d_rc) M_rc,
    // hess_ab = mu tr(M E_a M E_b).
    for (int a = 0; a < na; ++a) {
      const auto [r, cc] = params_[a];
      grad(a) = (r == cc) ? -minv(r, r) : -2.0 * minv(r, cc);
      for (int bix = a; bix < na; ++bix) {
        const auto [p, q] = params_[bix];
        double h;
        if (r == cc && p == q) {
          h = minv(r, p) * minv(p, r);
        } else if (r == cc) {
          h = 2.0 * minv(r, p) * minv(q, r);
        } else if (p == q) {
          h = 2.0 * minv(cc, p) * minv(p, r);
        } else {
          h = 2.0 * (minv(cc, p) * minv(q, r) + minv(cc, q) * minv(p, r));
        }
        hess(a, bix) = h;
        hess(bix, a) = h;
      }
    }
    // Box part: only diagonal params and t appear.
    for (int a = 0; a < na; ++a) {
      const auto [r, cc] = params_[a];
      if (r != cc) continue;
      const double slack = t - c(r, r);
      if (slack <= 0.0) return false;
      const double inv = 1.0 / slack;
      grad(a) += inv;
      grad(np_ - 1) -= inv;
      hess(a, a) += inv * inv;
      hess(a, np_ - 1) -= inv * inv;
      hess(np_ - 1, a) -= inv * inv;
      hess(np_ - 1, np_ - 1) += inv * inv;
    }
    grad *= mu;
    hess *= mu;
    grad(np_ - 1) += 1.0;
    hess.diagonal().array() += 1e-14;

    Eigen::LDLT<Matrix> hsolve(hess);
    if (hsolve.info() != Eigen::Success) return false;
    const Vector delta = hsolve.solve(-grad);
    const double base = value(x, mu);
    double alpha = 1.0;
    for (int bt = 0; bt < 50; ++bt, alpha *= 0.5) {
      const Vector trial = x + alpha * delta;
      const double v = value(trial, mu);
      if (v < base) {
        x = trial;
        last_decrement_ = base - v;
        return true;
      }
    }
    last_decrement_ = 0.0;
    return true;  // stuck at this mu; let the path move on
  }

  Matrix b_;
  Eigen::Index m_, n_, dim_;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> params_;
  int np_ = 0;
  double last_decrement_ = 0.0;
};



void balance(Factorization& f) {
  const double cs = col_bound(f.S), cr = col_bound(f.R);
  if (cs > 0.0 && cr > 0.0) {
    f.S *= std::sqrt(cr / cs);
    f.R *= std::sqrt(cs / cr);
  }
}

// Exact duplicate rows and columns are collapsed before estimating:
// duplication leaves the Schur norm unchanged, and duplicates make the top
// singular pair of A . U degenerate, which starves the witness
// factorization. Maps send original indices to reduced ones.
struct Reduction {
  Matrix reduced;
  std::vector<Eigen::Index> row_map, col_map;
};

void collapse_rows_once(Matrix& cur, std::vector<Eigen::Index>& map,
                        bool& changed) {
  const Eigen::Index rows = cur.rows();
  std::vector<Eigen::Index> rep;       // kept rows
  std::vector<Eigen::Index> to_new(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    bool dup = false;
    for (std::size_t k = 0; k < rep.size() && !dup; ++k) {
      if (cur.row(i) == cur.row(rep[k])) {
        to_new[i] = static_cast<Eigen::Index>(k);
        dup = true;
      }
    }
    if (!dup) {
      to_new[i] = static_cast<Eigen::Index>(rep.size());
      rep.push_back(i);
    }
  }
  if (rep.size() == static_cast<std::size_t>(rows)) return;
  changed = true;
  Matrix next(rep.size(), cur.cols());
  for (std::size_t k = 0; k < rep.size(); ++k) next.row(k) = cur.row(rep[k]);
  cur = std::move(next);
  for (auto& idx : map) idx = to_new[idx];
}

Reduction collapse_duplicates(const Matrix& a) {
  Reduction red;
  red.reduced = a;
  red.row_map.resize(a.rows());
  red.col_map.resize(a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) red.row_map[i] = i;
  for (Eigen::Index j = 0; j < a.cols(); ++j) red.col_map[j] = j;
  bool changed = true;
  while (changed) {
    changed = false;
    collapse_rows_once(red.reduced, red.row_map, changed);
    Matrix t = red.reduced.transpose();
    collapse_rows_once(t, red.col_map, changed);
    red.reduced = t.transpose();
  }
  return red;
}

struct BlockEstimate {
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
  bool flipped = false;     // estimate ran on B^T
  Matrix witness;           // on the (possibly flipped) padded square
  Factorization fact;       // for the original orientation
  bool converged = false;
};

// Restarted ascent plus witness factorization for one connected block.
BlockEstimate estimate_block(const Matrix& block, const BoundsOptions& opts) {
  BlockEstimate est;
  est.flipped = block.rows() > block.cols();
  const Matrix b = est.flipped ? Matrix(block.transpose()) : block;
  const int n = static_cast<int>(b.cols());
  const Matrix bp = pad_square(b);
  const double inner_tol = std::min(1e-14, opts.tol * 1e-6);

  std::optional<Factorization> best_fact;
  double best_upper = col_bound(b);  // trivial S=I, R=B start
  for (int rs = 0; rs < std::max(1, opts.restarts); ++rs) {
    // First restart takes the Hadamard seed when available; later restarts
    // need genuinely distinct random seeds to escape local maxima.
    Matrix u0 =
        (rs == 0 && is_power_of_two(n))
            ? hadamard_power(n)
            : random_orthogonal(n, opts.seed + static_cast<std::uint64_t>(rs));
    AscentResult asc = lower_bound_ascend(b, u0, opts.max_iters, inner_tol);
    est.iterations += asc.iterations;
    if (asc.lower > est.lower) {
      est.lower = asc.lower;
      est.witness = asc.U;
    }
    if (auto f = factor_from_witness(b, asc.U, asc.x, asc.y)) {
      if (f->residual() < 1e-9) {
        const double up = f->product();
        if (up < best_upper) {
          best_upper = up;
          best_fact = std::move(*f);
        }
      }
    }
    if (best_upper - est.lower <= opts.tol) break;
  }
  if (best_upper - est.lower > opts.tol &&
      b.rows() + b.cols() <= opts.polish_max_dim) {
    if (auto f = completion_upper_bound(b)) {
      if (f->residual() < 1e-9 && f->product() < best_upper) {
        best_upper = f->product();
        best_fact = std::move(*f);
      }
    }
  }
  if (!best_fact) {
    Factorization f;
    f.target = b;
    f.S = Matrix::Identity(b.rows(), b.rows());
    f.R = b;
    best_fact = std::move(f);
    best_upper = best_fact->product();
  }
  balance(*best_fact);
  est.upper = std::max(best_upper, est.lower);
  if (est.witness.size() == 0) est.witness = Matrix::Identity(n, n);

  if (est.flipped) {
    // S^T R = B  <=>  R^T S = B^T: swap factors back to the original shape.
    std::swap(best_fact->S, best_fact->R);
    best_fact->target = block;
  }
  est.fact = std::move(*best_fact);
  est.converged = est.upper - est.lower <= opts.tol;
  return est;
}

}  // namespace

namespace {

// Extraction from a strictly positive definite column Gram (the central-path
// Q block): R = gram^(1/2) has column norms bounded by the diagonal, S is
// the exact solve, and rotating by S's orthogonal factor compresses the pair
// to k = min(m,n) rows without touching S^T R or the column bounds.
std::optional<Factorization> extract_from_pd_gram(const Matrix& b,
                                                  const Matrix& gram) {
  const Eigen::Index m = b.rows(), n = b.cols();
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  if (es.eigenvalues()(0) <= 0.0) return std::nullopt;
  const Vector w = es.eigenvalues();
  const Matrix rfull =
      w.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();  // n x n
  const Matrix sfull = w.cwiseSqrt().cwiseInverse().asDiagonal() *
                       es.eigenvectors().transpose() * b.transpose();  // n x m

  Eigen::HouseholderQR<Matrix> qr(sfull);
  const Matrix q = qr.householderQ();
  Factorization f;
  f.target = b;
  f.S = (q.transpose() * sfull).topRows(std::min(m, n));
  f.R = (q.transpose() * rfull).topRows(std::min(m, n));
  if (f.residual() > 1e-9) return std::nullopt;
  return f;
}

}  // namespace

std::optional<Factorization> completion_upper_bound(const Matrix& a) {
  if (a.size() == 0 || a.isZero(0.0)) return std::nullopt;
  const bool flip = a.rows() > a.cols();
  const Matrix b = flip ? Matrix(a.transpose()) : a;
  CompletionBarrier barrier(b);
  const auto gram = barrier.solve();
  if (!gram) return std::nullopt;
  auto f = extract_from_pd_gram(b, *gram);
  if (!f) return std::nullopt;
  if (flip) {
    std::swap(f->S, f->R);
    f->target = a;
  }
  return f;
}

Matrix seed_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("seed_orthogonal: n must be >= 1");
  if (is_power_of_two(n)) return hadamard_power(n);
  return random_orthogonal(n, seed);
}

AscentResult lower_bound_ascend(const Matrix& a, const Matrix& u0,
                                int max_iters, double tol) {
  const Eigen::Index n = std::max(a.rows(), a.cols());
  if (u0.rows() != n || u0.cols() != n) {
    throw InputError("lower_bound_ascend: seed must be max(m,n) square");
  }
  const Matrix ap = pad_square(a);
  AscentResult res;
  res.U = u0;
  if (ap.size() == 0) return res;

  double prev = -1.0;
  for (int it = 0; it < std::max(1, max_iters); ++it) {
    Eigen::JacobiSVD<Matrix> dec(ap.cwiseProduct(res.U),
                                 Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Vector y = dec.matrixU().col(0);
    const Vector x = dec.matrixV().col(0);
    res.U = polar_orthogonal(ap.cwiseProduct(y * x.transpose()));
    const double obj = y.dot(ap.cwiseProduct(res.U) * x);
    res.objective_history.push_back(obj);
    ++res.iterations;
    if (obj - prev < tol) break;
    prev = obj;
  }
  // Exact top pair for the final U; the factorization construction needs the
  // pair and U to be consistent.
  Eigen::JacobiSVD<Matrix> fin(ap.cwiseProduct(res.U),
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  res.y = fin.matrixU().col(0);
  res.x = fin.matrixV().col(0);
  res.lower = fin.singularValues()(0);
  res.objective = res.y.dot(ap.cwiseProduct(res.U) * res.x);
  return res;
}

std::pair<Factorization, double> upper_bound_factorize(const Matrix& a,
                                                       const Factorization* warm,
                                                       int max_iters,
                                                       double tol,
                                                       std::uint64_t seed) {
  BoundsOptions opts;
  opts.max_iters = max_iters;
  opts.tol = std::max(tol, 1e-12);
  opts.seed = seed;
  NormBounds nb = norm_bounds(a, opts);
  Factorization best = std::move(nb.factorization);
  double upper = best.product();
  if (warm != nullptr && warm->residual() < 1e-9 && warm->product() < upper) {
    best = *warm;
    upper = best.product();
  }
  return {std::move(best), upper};
}

NormBounds norm_bounds(const Matrix& a, const BoundsOptions& opts) {
  NormBounds nb;
  const Eigen::Index m = a.rows(), n = a.cols();
  const Eigen::Index big = std::max(m, n);
  nb.witness_U = Matrix::Identity(big, big);
  nb.factorization.target = a;
  nb.factorization.S = Matrix::Zero(0, m);
  nb.factorization.R = Matrix::Zero(0, n);
  if (a.size() == 0 || a.isZero(0.0)) {
    nb.converged = true;
    if (big > 0) {
      Eigen::JacobiSVD<Matrix> fin(pad_square(a).cwiseProduct(nb.witness_U),
                                   Eigen::ComputeFullU | Eigen::ComputeFullV);
      nb.witness_y = fin.matrixU().col(0);
      nb.witness_x = fin.matrixV().col(0);
    }
    return nb;
  }

  const Reduction red = collapse_duplicates(a);
  const Matrix& ar = red.reduced;
  const Eigen::Index mr = ar.rows(), nr = ar.cols();

  const auto comps = support_components(ar);
  std::vector<BlockEstimate> ests;
  ests.reserve(comps.size());
  Eigen::Index total_k = 0;
  double lower_reduced = 0.0;
  nb.converged = true;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Matrix block = submatrix(ar, comps[c].rows, comps[c].cols);
    BlockEstimate est = estimate_block(block, opts);
    nb.iterations += est.iterations;
    lower_reduced = std::max(lower_reduced, est.lower);
    nb.upper = std::max(nb.upper, est.upper);
    nb.converged = nb.converged && est.converged;
    total_k += est.fact.S.rows();
    ests.push_back(std::move(est));
  }
  std::size_t best_comp = 0;
  for (std::size_t c = 1; c < ests.size(); ++c) {
    if (ests[c].lower > ests[best_comp].lower) best_comp = c;
  }

  // Block-diagonal factorization on the reduced matrix; component factors
  // are balanced, so the combined product equals the max of the parts.
  Matrix s_red = Matrix::Zero(total_k, mr);
  Matrix r_red = Matrix::Zero(total_k, nr);
  Eigen::Index k_off = 0;
  for (std::size_t c = 0; c < ests.size(); ++c) {
    const auto& f = ests[c].fact;
    const auto& cp = comps[c];
    for (Eigen::Index kr = 0; kr < f.S.rows(); ++kr) {
      for (std::size_t i = 0; i < cp.rows.size(); ++i) {
        s_red(k_off + kr, cp.rows[i]) = f.S(kr, static_cast<Eigen::Index>(i));
      }
      for (std::size_t j = 0; j < cp.cols.size(); ++j) {
        r_red(k_off + kr, cp.cols[j]) = f.R(kr, static_cast<Eigen::Index>(j));
      }
    }
    k_off += f.S.rows();
  }
  // Duplicated rows and columns reuse their representative's factor column;
  // S^T R then reproduces the full matrix entry for entry.
  nb.factorization.S = Matrix::Zero(total_k, m);
  nb.factorization.R = Matrix::Zero(total_k, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    nb.factorization.S.col(i) = s_red.col(red.row_map[i]);
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    nb.factorization.R.col(j) = r_red.col(red.col_map[j]);
  }

  // Global witness: embed the best component's witness on the representative
  // rows/columns of that component plus borrowed indices, identity pairing
  // elsewhere. Whatever the borrowed lines carry, zeroing rows or columns of
  // a matrix never increases the spectral norm, so the recomputed lower
  // bound stays at or above the component's certified one.
  {
    const auto& est = ests[best_comp];
    const auto& cp = comps[best_comp];
    std::vector<Eigen::Index> rep_row(mr, -1), rep_col(nr, -1);
    for (Eigen::Index i = m - 1; i >= 0; --i) rep_row[red.row_map[i]] = i;
    for (Eigen::Index j = n - 1; j >= 0; --j) rep_col[red.col_map[j]] = j;
    std::vector<Eigen::Index> rsel, csel;
    for (Eigen::Index cr : cp.rows) rsel.push_back(rep_row[cr]);
    for (Eigen::Index cc : cp.cols) csel.push_back(rep_col[cc]);
    const Eigen::Index nc = est.witness.rows();
    std::vector<char> row_taken(big, 0), col_taken(big, 0);
    for (auto i : rsel) row_taken[i] = 1;
    for (auto j : csel) col_taken[j] = 1;
    for (Eigen::Index i = big - 1;
         i >= 0 && static_cast<Eigen::Index>(rsel.size()) < nc; --i) {
      if (!row_taken[i]) {  // prefer padding rows (largest indices) first
        row_taken[i] = 1;
        rsel.push_back(i);
      }
    }
    for (Eigen::Index j = big - 1;
         j >= 0 && static_cast<Eigen::Index>(csel.size()) < nc; --j) {
      if (!col_taken[j]) {
        col_taken[j] = 1;
        csel.push_back(j);
      }
    }
    Matrix u = Matrix::Zero(big, big);
    const Matrix w =
        est.flipped ? Matrix(est.witness.transpose()) : est.witness;
    for (Eigen::Index i = 0; i < nc; ++i) {
      for (Eigen::Index j = 0; j < nc; ++j) u(rsel[i], csel[j]) = w(i, j);
    }
    std::vector<Eigen::Index> rfree, cfree;
    for (Eigen::Index i = 0; i < big; ++i) {
      if (!row_taken[i]) rfree.push_back(i);
    }
    for (Eigen::Index j = 0; j < big; ++j) {
      if (!col_taken[j]) cfree.push_back(j);
    }
    for (std::size_t i = 0; i < rfree.size(); ++i) u(rfree[i], cfree[i]) = 1.0;
    nb.witness_U = std::move(u);
  }
  Eigen::JacobiSVD<Matrix> fin(pad_square(a).cwiseProduct(nb.witness_U),
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  nb.lower = std::max(lower_reduced, fin.singularValues()(0));
  nb.witness_y = fin.matrixU().col(0);
  nb.witness_x = fin.matrixV().col(0);
  nb.upper = std::max(nb.upper, nb.lower);
  nb.converged = nb.converged && (nb.upper - nb.lower <= opts.tol);
  return nb;
}

}  // namespace schur
