#pragma once

#include "schur/linalg.hpp"

#include <utility>

namespace schur {

/// Exact norm of the 2n-cycle Lambda(n): (2/n)cot(pi/2n) for even n,
/// (2/n)csc(pi/2n) for odd n. Throws InputError for n < 2.
double cycle_norm(int n);

/// Exact norm of the paths Sigma(n,n) and Sigma(n,n+1):
/// (2/(n+1))cot(pi/(2(n+1))).
double path_norm(int n);

/// Popa's (lower, upper) bracket for ||Sigma(n,n)||; the upper bound equals
/// path_norm(n).
std::pair<double, double> popa_bounds(int n);

/// Everything the extremal path construction produces for one n: the
/// rotation-block orthogonal W, the generating vector r, factor matrices
/// R, S (square) and Rt, St (extended by one column), the path matrix B and
/// its bordered extension Bt, the attaining orthogonal U with unit vectors
/// x, y and weights a, b.
///
/// Contracts, all at 1e-9 or better:
///   W^T W = I,  S^T R = B,  St^T Rt = Bt,
///   col_bound(R) = col_bound(S) = sqrt(path_norm(n)),
///   sum_j a_j R_j R_j^T = sum_j b_j S_j S_j^T,
///   <(B . U^t) x, y> = path_norm(n).
struct PathWitness {
  int n = 0;
  Matrix W;        // n x n orthogonal
  Vector r;        // n
  Matrix R, S;     // n x n
  Matrix Rt, St;   // n x (n+1)
  Matrix B;        // n x n path matrix
  Matrix Bt;       // (n+1) x (n+1); 0-1 cycle matrix when n is odd
  Matrix U;        // n x n orthogonal
  Vector x, y;     // unit vectors
  Vector a, b;     // positive weights summing to 1

  /// The value <(B . U^t) x, y>, equal to path_norm(n) at 1e-9.
  double attained() const;
};

PathWitness build_path_witness(int n);

/// Trig shorthands used throughout the construction: kappa(j) = cos(j*theta)
/// and lambda(j) = sin(j*theta) with theta = pi/(2(n+1)).
enum class TrigForm { Cos, Sin };

/// One of +/-kappa, +/-lambda.
struct TrigFun {
  TrigForm form = TrigForm::Cos;
  int sign = 1;
};

/// Checks sum_{j=0}^{N} f(a+2dj) = (lambda((N+1)d)/lambda(d)) f(a+Nd) at
/// 1e-10. Throws InputError when lambda(d) = 0, i.e. d in 2(n+1)Z.
bool verify_bigstar(int N, TrigForm f, int a, int d, int n);

/// Alternating-sum identities behind the weight construction.
/// Part 1: sum_{j=0}^{2n+1} (-1)^j f(a+mj) = 0 for even m with |m| <= 2n.
/// Part 2: sum_{j=0}^{2n+1} (-1)^j f(a+2j) g(sj) h(tj) = 0 and
///         sum_{j=0}^{2n+1} (-1)^j g(sj) h(tj) = 0
/// for |s|,|t| <= n-1 with s = t (mod 2). Out-of-range parameters throw
/// InputError.
bool verify_altzero_part1(int n, TrigFun f, int a, int m);
bool verify_altzero_part2(int n, TrigFun f, TrigFun g, TrigFun h, int a, int s,
                          int t);

}  // namespace schur
