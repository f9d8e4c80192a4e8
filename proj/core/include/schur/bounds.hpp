#pragma once

#include "schur/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace schur {

/// Haagerup factorization A = S^T R with S (k x m), R (k x n) and
/// k <= min(m,n); c(S)c(R) upper-bounds the Schur norm of the target.
struct Factorization {
  Matrix S;
  Matrix R;
  Matrix target;

  double product() const { return col_bound(S) * col_bound(R); }
  double residual() const {
    if (target.size() == 0) return 0.0;
    return (S.transpose() * R - target).cwiseAbs().maxCoeff();
  }
};

/// Orthogonal-witness ascent output. `objective_history` records
/// y^T (A . U) x after each step; the sequence is non-decreasing.
struct AscentResult {
  Matrix U;          // N x N orthogonal (N = max(m,n); A zero-padded)
  Vector x, y;       // top singular pair of A . U, exact for the final U
  double objective = 0.0;
  double lower = 0.0;  // spectral_norm(A . U), valid for any orthogonal U
  int iterations = 0;
  std::vector<double> objective_history;
};

struct BoundsOptions {
  double tol = 1e-6;
  int restarts = 8;
  int max_iters = 500;
  std::uint64_t seed = 0x5eed5eed5eedULL;
  // When the witness factorization leaves a gap above tol, blocks with
  // rows+cols up to this size get an interior-point solve of the completion
  // program min{max diag : [[P,A],[A^T,Q]] psd}. 0 disables.
  int polish_max_dim = 16;
};

/// Certified two-sided estimate of the Schur multiplier norm.
struct NormBounds {
  double lower = 0.0;
  double upper = 0.0;
  Matrix witness_U;   // orthogonal; spectral_norm(pad(A) . U) reproduces lower
  Vector witness_x, witness_y;
  Factorization factorization;  // S^T R = A; product reproduces upper
  int iterations = 0;
  bool converged = false;

  double midpoint() const { return 0.5 * (lower + upper); }
  double gap() const { return upper - lower; }
};

/// Hadamard tensor power H_2^{(x) k} when n = 2^k; otherwise the QR factor of
/// a seeded Gaussian matrix, resampled until no entry is smaller than 1e-3 in
/// magnitude. Deterministic in (n, seed).
Matrix seed_orthogonal(int n, std::uint64_t seed = 0);

/// Alternating ascent of y^T (A . U) x over orthogonal U and unit x, y:
/// (a) (x,y) <- top singular pair of A . U; (b) U <- polar factor of
/// A . (y x^T). Stops when the objective improves by less than tol. A is
/// zero-padded to square; u0 must be max(m,n) square orthogonal.
AscentResult lower_bound_ascend(const Matrix& a, const Matrix& u0,
                                int max_iters, double tol);

/// Factorization upper bound. Runs witness ascents (or reuses `warm` when
/// given) and converts each converged witness into a factorization through
/// the attainment identities; keeps the best product found, so the reported
/// product sequence is non-increasing. The result always satisfies
/// S^T R = A to 1e-9.
std::pair<Factorization, double> upper_bound_factorize(
    const Matrix& a, const Factorization* warm = nullptr, int max_iters = 500,
    double tol = 1e-9, std::uint64_t seed = 0x5eed5eed5eedULL);

/// Upper bound through the psd completion program
/// min{ max diag C : C = [[P, A], [A^T, Q]] psd }, solved by a primal
/// log-barrier Newton method; the optimum equals the Schur norm. Returns an
/// exact factorization shaped from the Q block, or nothing when the solve
/// fails. Intended for blocks the witness route leaves open.
std::optional<Factorization> completion_upper_bound(const Matrix& a);

/// Two-sided bounds: support components are estimated independently
/// (restarted ascent + witness factorization, with a completion-program
/// polish for stubborn blocks) and combined by the direct-sum law.
/// `converged` means upper - lower <= tol.
NormBounds norm_bounds(const Matrix& a, const BoundsOptions& opts = {});

}  // namespace schur
