#include "schur/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace schur {

Matrix make_matrix(Eigen::Index rows, Eigen::Index cols,
                   const std::vector<double>& entries) {
  if (static_cast<std::size_t>(rows * cols) != entries.size()) {
    throw InputError("make_matrix: expected " + std::to_string(rows * cols) +
                     " entries, got " + std::to_string(entries.size()));
  }
  Matrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double v = entries[static_cast<std::size_t>(i * cols + j)];
      if (!std::isfinite(v)) {
        throw InputError("make_matrix: non-finite entry at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
      }
      a(i, j) = v;
    }
  }
  return a;
}

SvdResult svd(const Matrix& a) {
  // Jacobi SVD: slow asymptotically but the most accurate option, and all
  // matrices here are tiny (<= ~32x32).
  Eigen::JacobiSVD<Matrix> dec(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SvdResult{dec.singularValues(), dec.matrixU(), dec.matrixV()};
}

double SvdResult::reconstruction_error(const Matrix& a) const {
  const Eigen::Index k = singular_values.size();
  Matrix sigma = Matrix::Zero(a.rows(), a.cols());
  sigma.topLeftCorner(k, k) = singular_values.asDiagonal();
  return (a - left * sigma * right.transpose()).cwiseAbs().maxCoeff();
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> dec(a);
  return dec.singularValues()(0);
}

double trace_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> dec(a);
  return dec.singularValues().sum();
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("hadamard: dimension mismatch");
  }
  return a.cwiseProduct(b);
}

double col_bound(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return std::sqrt(a.colwise().squaredNorm().maxCoeff());
}

Matrix polar_orthogonal(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw InputError("polar_orthogonal: matrix must be square");
  }
  if (m.size() == 0) return m;
  Eigen::JacobiSVD<Matrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return dec.matrixU() * dec.matrixV().transpose();
}

bool psd_rank_check(const Matrix& c, Eigen::Index rank, double tol) {
  if (c.rows() != c.cols()) {
    throw InputError("psd_rank_check: matrix must be square");
  }
  if (c.size() == 0) return true;
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  if ((c - c.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw InputError("psd_rank_check: matrix not symmetric within tolerance");
  }
  const Vector ev = symmetric_eigenvalues(0.5 * (c + c.transpose()));
  const double bound = tol * std::max(1.0, ev.cwiseAbs().maxCoeff());
  if (ev(0) < -bound) return false;
  Eigen::Index significant = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) > bound) ++significant;
  }
  return significant <= rank;
}

double orthogonality_error(const Matrix& u) {
  if (u.size() == 0) return 0.0;
  if (u.rows() >= u.cols()) {
    const Matrix g = u.transpose() * u;
    return (g - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
  }
  const Matrix g = u * u.transpose();
  return (g - Matrix::Identity(u.rows(), u.rows())).cwiseAbs().maxCoeff();
}

Vector symmetric_eigenvalues(const Matrix& c) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(c);
  return es.eigenvalues();
}

}  // namespace schur
