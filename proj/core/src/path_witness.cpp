#include "schur/path_witness.hpp"

#include <cmath>

namespace schur {

double cycle_norm(int n) {
  if (n < 2) throw InputError("cycle_norm: n must be >= 2");
  const double theta = M_PI / (2.0 * n);
  if (n % 2 == 0) return 2.0 / n / std::tan(theta);
  return 2.0 / n / std::sin(theta);
}

double path_norm(int n) {
  if (n < 1) throw InputError("path_norm: n must be >= 1");
  const double theta = M_PI / (2.0 * (n + 1));
  return 2.0 / (n + 1) / std::tan(theta);
}

std::pair<double, double> popa_bounds(int n) {
  if (n < 1) throw InputError("popa_bounds: n must be >= 1");
  const double lower = (1.0 / std::sin(M_PI / (4.0 * n + 2.0)) - 1.0) / n;
  return {lower, path_norm(n)};
}

namespace {

struct Trig {
  double theta;
  double kappa(int j) const { return std::cos(j * theta); }
  double lambda(int j) const { return std::sin(j * theta); }
  double eval(TrigForm f, int j) const {
    return f == TrigForm::Cos ? kappa(j) : lambda(j);
  }
  double eval(TrigFun f, int j) const { return f.sign * eval(f.form, j); }
};

Matrix rotation_power(const Trig& t, int s) {
  Matrix rho(2, 2);
  rho << t.kappa(s), -t.lambda(s), t.lambda(s), t.kappa(s);
  return rho;
}

}  // namespace

double PathWitness::attained() const {
  return y.dot(hadamard(B, U.transpose()) * x);
}

PathWitness build_path_witness(int n) {
  if (n < 1) throw InputError("build_path_witness: n must be >= 1");
  PathWitness w;
  w.n = n;
  const Trig trig{M_PI / (2.0 * (n + 1))};

  // W = rho + rho^3 + ... (n even) or [1] + rho^2 + rho^4 + ... (n odd),
  // block-diagonal; r interleaves the nonzero weights with zeros to match.
  w.W = Matrix::Zero(n, n);
  w.r = Vector::Zero(n);
  auto r_entry = [&](int j) {  // r_j for 1 <= j <= n-1, plus r_1 odd case
    if (j == 1 && n % 2 == 1) return std::sqrt(2.0 / (n + 1));
    return std::sqrt(4.0 * trig.kappa(j) / (n + 1));
  };
  if (n % 2 == 0) {
    for (int b = 0; b < n / 2; ++b) {
      w.W.block(2 * b, 2 * b, 2, 2) = rotation_power(trig, 2 * b + 1);
      w.r(2 * b) = r_entry(2 * b + 1);
    }
  } else {
    w.W(0, 0) = 1.0;
    w.r(0) = r_entry(1);
    for (int b = 0; b < (n - 1) / 2; ++b) {
      w.W.block(1 + 2 * b, 1 + 2 * b, 2, 2) = rotation_power(trig, 2 * b + 2);
      w.r(1 + 2 * b) = r_entry(2 * b + 2);
    }
  }

  const Matrix W2 = w.W * w.W;
  w.Rt = Matrix::Zero(n, n + 1);
  Vector col = w.r;
  for (int j = 0; j <= n; ++j) {
    w.Rt.col(j) = col;
    col = W2 * col;
  }
  w.R = w.Rt.leftCols(n);
  w.St = w.W * w.Rt;
  w.S = w.St.leftCols(n);

  w.B = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    w.B(i, i) = 1.0;
    if (i + 1 < n) w.B(i, i + 1) = 1.0;
  }
  w.Bt = Matrix::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    w.Bt(i, i) = 1.0;
    if (i + 1 <= n) w.Bt(i, i + 1) = 1.0;
  }
  w.Bt(n, 0) = (n % 2 == 1) ? 1.0 : -1.0;

  // Weights: a_j = t_{j-1}/T and b_j = t_{n-j}/T with
  // t_j = kappa(1) - kappa(3+4j), matching R_j <-> Q_{2(j-1)} and
  // S_j <-> Q_{2j-1} in the convex-hull identity.
  Vector t(n);
  for (int j = 0; j < n; ++j) {
    t(j) = trig.kappa(1) - trig.kappa(3 + 4 * j);
  }
  const double total = t.sum();
  w.a = Vector(n);
  w.b = Vector(n);
  for (int j = 0; j < n; ++j) {
    w.a(j) = t(j) / total;
    w.b(j) = t(n - 1 - j) / total;
  }
  w.x = w.a.cwiseSqrt();
  w.y = w.b.cwiseSqrt();

  // RX U = SY fixes the orthogonal U = (RX)^T (SY)^{-T}; drift is removed by
  // projecting back to the polar factor when it exceeds 1e-10.
  const Matrix RX = w.R * w.x.asDiagonal();
  const Matrix SY = w.S * w.y.asDiagonal();
  const Matrix omega = SY.partialPivLu().solve(RX);  // (SY)^{-1} RX
  w.U = omega.transpose();
  if (orthogonality_error(w.U) > 1e-10) {
    w.U = polar_orthogonal(w.U);
  }
  return w;
}

bool verify_bigstar(int N, TrigForm f, int a, int d, int n) {
  if (N < 0) throw InputError("verify_bigstar: N must be >= 0");
  const Trig trig{M_PI / (2.0 * (n + 1))};
  if (std::abs(d) % (2 * (n + 1)) == 0) {
    throw InputError("verify_bigstar: lambda(d) = 0 for d in 2(n+1)Z");
  }
  double lhs = 0.0;
  for (int j = 0; j <= N; ++j) lhs += trig.eval(f, a + 2 * d * j);
  const double rhs =
      trig.lambda((N + 1) * d) / trig.lambda(d) * trig.eval(f, a + N * d);
  return std::abs(lhs - rhs) <= 1e-10;
}

bool verify_altzero_part1(int n, TrigFun f, int a, int m) {
  if (m % 2 != 0 || std::abs(m) > 2 * n) {
    throw InputError("verify_altzero: part 1 needs even m with |m| <= 2n");
  }
  const Trig trig{M_PI / (2.0 * (n + 1))};
  double sum = 0.0;
  for (int j = 0; j <= 2 * n + 1; ++j) {
    sum += (j % 2 == 0 ? 1.0 : -1.0) * trig.eval(f, a + m * j);
  }
  return std::abs(sum) <= 1e-10;
}

bool verify_altzero_part2(int n, TrigFun f, TrigFun g, TrigFun h, int a, int s,
                          int t) {
  if (std::max(std::abs(s), std::abs(t)) > n - 1 ||
      ((s - t) % 2 + 2) % 2 != 0) {
    throw InputError(
        "verify_altzero: part 2 needs |s|,|t| <= n-1 and s = t (mod 2)");
  }
  const Trig trig{M_PI / (2.0 * (n + 1))};
  double sum3 = 0.0, sum2 = 0.0;
  for (int j = 0; j <= 2 * n + 1; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum3 += sign * trig.eval(f, a + 2 * j) * trig.eval(g, s * j) *
            trig.eval(h, t * j);
    sum2 += sign * trig.eval(g, s * j) * trig.eval(h, t * j);
  }
  return std::abs(sum3) <= 1e-10 && std::abs(sum2) <= 1e-10;
}

}  // namespace schur
