#include "schur/linalg.hpp"

#include "schur/rng.hpp"

#include "doctest.h"

#include <cmath>

using namespace schur;

namespace {

Matrix random_matrix(SplitMix64& rng, int m, int n) {
  Matrix a(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = rng.next_gaussian();
  }
  return a;
}

}  // namespace

TEST_CASE("make_matrix validates shape and finiteness") {
  CHECK_THROWS_AS(make_matrix(2, 2, {1.0, 2.0, 3.0}), InputError);
  CHECK_THROWS_AS(make_matrix(1, 2, {1.0, std::nan("")}), InputError);
  const Matrix a = make_matrix(2, 2, {1, 2, 3, 4});
  CHECK(a(1, 0) == 3.0);
}

TEST_CASE("spectral norm basics") {
  CHECK(spectral_norm(Matrix::Identity(3, 3)) == doctest::Approx(1.0));
  CHECK(spectral_norm(Matrix()) == 0.0);

  // Rank one x y^T with unit x, y.
  Vector x(3), y(2);
  x << 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0);
  y << 0.6, 0.8;
  CHECK(spectral_norm(x * y.transpose()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral norm of the obstruction-5.3 product matrix") {
  // ||Y||^2 = (61+sqrt(2821))/2 for Y = 6(B . U).
  const Matrix y = make_matrix(4, 4,
                               {3, 3, 3, 3,
                                0, -5, 0, 0,
                                0, 0, -5, 0,
                                0, 0, 0, -5});
  const double expected = std::sqrt((61.0 + std::sqrt(2821.0)) / 2.0);
  CHECK(spectral_norm(y) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("trace norm basics") {
  CHECK(trace_norm(Matrix::Identity(3, 3)) == doctest::Approx(3.0));
  Vector x(2), y(2);
  x << 1.0, 0.0;
  y << 0.6, 0.8;
  CHECK(trace_norm(x * y.transpose()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hadamard product") {
  const Matrix a = make_matrix(2, 2, {1, 2, 3, 4});
  CHECK(hadamard(a, Matrix::Ones(2, 2)) == a);
  CHECK(hadamard(a, Matrix::Zero(2, 2)).isZero(0.0));
  CHECK_THROWS_AS(hadamard(a, Matrix::Ones(2, 3)), InputError);
}

TEST_CASE("col_bound") {
  CHECK(col_bound(Matrix::Identity(4, 4)) == doctest::Approx(1.0));
  const Matrix col = make_matrix(2, 1, {3, 4});
  CHECK(col_bound(col) == doctest::Approx(5.0));
  // R of the eta_5 factorization has all columns of norm (3/2)^(1/4).
  const double f54 = std::pow(54.0, 0.25);
  Matrix r(3, 4);
  r << 3, 1, 1, 1,
       0, -2 * std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0),
       0, 0, std::sqrt(6.0), -std::sqrt(6.0);
  r /= f54;
  CHECK(col_bound(r) == doctest::Approx(std::pow(1.5, 0.25)).epsilon(1e-13));
}

TEST_CASE("polar factor") {
  SUBCASE("orthogonal input is a fixed point") {
    Matrix q(2, 2);
    const double c = std::cos(0.3), s = std::sin(0.3);
    q << c, -s, s, c;
    CHECK((polar_orthogonal(q) - q).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("sign pattern of a diagonal") {
    const Matrix m = make_matrix(2, 2, {2, 0, 0, -3});
    const Matrix u = polar_orthogonal(m);
    CHECK(u(0, 0) == doctest::Approx(1.0));
    CHECK(u(1, 1) == doctest::Approx(-1.0));
  }
  SUBCASE("rank-one input: pairing reproduces the singular value") {
    // Oracle: for M = x y^T with unit x, y the polar factor must satisfy
    // y^T U^T x = <U, M>_F = sigma_1 = 1 even though the factor is not
    // unique.
    Vector x(3), y(3);
    x << 0.6, 0.0, 0.8;
    y << 0.0, 1.0, 0.0;
    const Matrix u = polar_orthogonal(x * y.transpose());
    CHECK(orthogonality_error(u) < 1e-10);
    CHECK(x.dot(u * y) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("psd_rank_check") {
  CHECK(psd_rank_check(Matrix::Identity(3, 3), 3, 1e-9));
  const Matrix ind = make_matrix(3, 3, {1, 0, 0, 0, 0, 0, 0, 0, -1});
  CHECK_FALSE(psd_rank_check(ind, 2, 1e-9));
  CHECK_FALSE(psd_rank_check(Matrix::Identity(3, 3), 2, 1e-9));
  const Matrix nonsym = make_matrix(2, 2, {0, 1, 0, 0});
  CHECK_THROWS_AS(psd_rank_check(nonsym, 1, 1e-9), InputError);
}

TEST_CASE("norm inequalities and transpose symmetry on random matrices") {
  SplitMix64 rng{2024};
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 1 + static_cast<int>(rng.next() % 6);
    const int n = 1 + static_cast<int>(rng.next() % 6);
    const Matrix a = random_matrix(rng, m, n);
    const double sn = spectral_norm(a);
    const double tn = trace_norm(a);
    CHECK(sn <= tn + 1e-12);
    CHECK(tn <= std::min(m, n) * sn + 1e-12);
    CHECK(spectral_norm(a.transpose()) == doctest::Approx(sn).epsilon(1e-12));
    CHECK(trace_norm(a.transpose()) == doctest::Approx(tn).epsilon(1e-12));
  }
}

TEST_CASE("svd reconstruction and polar duality on random matrices") {
  SplitMix64 rng{77};
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + static_cast<int>(rng.next() % 5);
    const Matrix a = random_matrix(rng, m, m);
    const SvdResult dec = svd(a);
    const double top = dec.singular_values(0);
    CHECK(dec.reconstruction_error(a) <= 1e-10 * std::max(1.0, top));
    CHECK(orthogonality_error(dec.left) < 1e-10);
    CHECK(orthogonality_error(dec.right) < 1e-10);

    const Matrix u = polar_orthogonal(a);
    CHECK(orthogonality_error(u) < 1e-10);
    CHECK((u.transpose() * a).trace() ==
          doctest::Approx(trace_norm(a)).epsilon(1e-10));
  }
}
