#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thrown on malformed user input (bad dimensions, non-finite entries,
/// unparseable matrices, unknown catalog names). The CLI maps it to exit
/// code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds a rows x cols matrix from row-major entries, rejecting NaN/Inf.
Matrix make_matrix(Eigen::Index rows, Eigen::Index cols,
                   const std::vector<double>& entries);

/// Full singular value decomposition A = U diag(sigma) V^T.
struct SvdResult {
  Vector singular_values;  // descending, size min(m,n)
  Matrix left;             // m x m orthogonal
  Matrix right;            // n x n orthogonal

  double reconstruction_error(const Matrix& a) const;
};

SvdResult svd(const Matrix& a);

/// Largest singular value; 0 for empty matrices.
double spectral_norm(const Matrix& a);

/// Sum of singular values.
double trace_norm(const Matrix& a);

/// Entrywise product. Dimensions must agree.
Matrix hadamard(const Matrix& a, const Matrix& b);

/// Maximum Euclidean column norm c(A); 0 for empty matrices.
double col_bound(const Matrix& a);

/// Orthogonal polar factor U = P Q^T of a square M = P Sigma Q^T. Maximizes
/// <U, M>_F over orthogonal U, with the maximum equal to trace_norm(M).
Matrix polar_orthogonal(const Matrix& m);

/// True iff the symmetric C has min eigenvalue >= -tol*||C|| and at most
/// `rank` eigenvalues of magnitude above tol*||C||. Throws InputError when C
/// is not symmetric within tol.
bool psd_rank_check(const Matrix& c, Eigen::Index rank, double tol);

/// max |U^T U - I| for square or tall U; max |U U^T - I| for wide U, so that
/// isometries and coisometries both measure as 0.
double orthogonality_error(const Matrix& u);

/// Eigenvalues of a symmetric matrix, ascending.
Vector symmetric_eigenvalues(const Matrix& c);

}  // namespace schur
