#include "schur/bounds.hpp"

#include "schur/bigraph.hpp"
#include "schur/certificates.hpp"
#include "schur/eta.hpp"
#include "schur/path_witness.hpp"
#include "schur/rng.hpp"

#include "doctest.h"

#include <cmath>

using namespace schur;
using Tag = GraphName::Tag;

namespace {

BiGraph graph_of(std::uint32_t bits, std::size_t m, std::size_t n) {
  BiGraph g(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (bits & (1u << (i * n + j))) g.set(i, j, true);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("seed_orthogonal") {
  const Matrix h2 = seed_orthogonal(2);
  CHECK(h2(0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(h2(1, 1) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  const Matrix h4 = seed_orthogonal(4);
  CHECK(h4.cwiseAbs().minCoeff() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(h4.cwiseAbs().maxCoeff() == doctest::Approx(0.5).epsilon(1e-14));
  const Matrix q3 = seed_orthogonal(3, 7);
  CHECK(orthogonality_error(q3) < 1e-10);
  CHECK(q3.cwiseAbs().minCoeff() >= 1e-3);
  CHECK((seed_orthogonal(3, 7) - q3).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ascent objective is monotone and sound") {
  const Matrix trie = catalog(Tag::Trie).to_matrix();
  const AscentResult res =
      lower_bound_ascend(trie, seed_orthogonal(3, 1), 500, 1e-14);
  for (std::size_t i = 1; i < res.objective_history.size(); ++i) {
    CHECK(res.objective_history[i] >= res.objective_history[i - 1] - 1e-12);
  }
  CHECK(orthogonality_error(res.U) < 1e-9);
  const double exact = (9.0 + 4.0 * std::sqrt(6.0)) / 15.0;
  CHECK(res.lower <= exact + 1e-9);
  CHECK(res.lower == doctest::Approx(exact).epsilon(1e-6));
}

TEST_CASE("ascent on the all-ones matrix") {
  const Matrix ones = Matrix::Ones(4, 4);
  const AscentResult res =
      lower_bound_ascend(ones, seed_orthogonal(4), 100, 1e-12);
  CHECK(res.lower == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("factorization upper bounds on catalog graphs") {
  auto upper_of = [](const Matrix& a) {
    auto [fact, upper] = upper_bound_factorize(a);
    CHECK(fact.residual() < 1e-9);
    CHECK(fact.S.rows() <= std::min(a.rows(), a.cols()));
    return upper;
  };
  CHECK(upper_of(Matrix::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(upper_of(catalog(Tag::SigmaSquare, 4).to_matrix()) ==
        doctest::Approx(eta(6)).epsilon(1e-6));
  CHECK(upper_of(catalog(Tag::Gee7).to_matrix()) ==
        doctest::Approx(9.0 / 7.0).epsilon(1e-6));
}

TEST_CASE("norm_bounds reproduces the nine exact rows") {
  struct Row {
    GraphName name;
    double value;
  };
  const Row rows[] = {
      {{Tag::SingleEdge, 0}, 1.0},
      {{Tag::SigmaSquare, 2}, eta(2)},
      {{Tag::SigmaSquare, 3}, eta(3)},
      {{Tag::E, 4}, eta(4)},
      {{Tag::E, 5}, eta(5)},
      {{Tag::SigmaSquare, 4}, eta(6)},
      {{Tag::Trie, 0}, (9.0 + 4.0 * std::sqrt(6.0)) / 15.0},
      {{Tag::Gee7, 0}, 9.0 / 7.0},
      {{Tag::Gee6Cycle, 0}, 4.0 / 3.0},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name.str());
    const NormBounds nb = norm_bounds(catalog(row.name).to_matrix());
    CHECK(nb.converged);
    CHECK(nb.gap() <= 1e-6);
    CHECK(nb.midpoint() == doctest::Approx(row.value).epsilon(1e-5));
    CHECK(nb.lower <= row.value + 1e-9);
    CHECK(nb.upper >= row.value - 1e-9);
  }
}

TEST_CASE("norm_bounds degenerate inputs") {
  const NormBounds zero = norm_bounds(Matrix::Zero(3, 3));
  CHECK(zero.lower == 0.0);
  CHECK(zero.upper == 0.0);
  CHECK(zero.converged);

  const NormBounds empty = norm_bounds(Matrix());
  CHECK(empty.upper == 0.0);
  CHECK(empty.converged);

  const NormBounds ones = norm_bounds(Matrix::Ones(3, 3));
  CHECK(ones.converged);
  CHECK(ones.midpoint() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("witnesses reproduce the reported bounds") {
  const Matrix a = catalog(Tag::E, 5).to_matrix();
  const NormBounds nb = norm_bounds(a);
  REQUIRE(nb.converged);
  CHECK(orthogonality_error(nb.witness_U) < 1e-9);
  Matrix padded = Matrix::Zero(4, 4);
  padded.topLeftCorner(3, 4) = a;
  CHECK(spectral_norm(padded.cwiseProduct(nb.witness_U)) ==
        doctest::Approx(nb.lower).epsilon(1e-10));
  CHECK(nb.factorization.residual() < 1e-9);
  CHECK(nb.factorization.product() == doctest::Approx(nb.upper).epsilon(1e-10));
}

TEST_CASE("soundness against exact values across the catalog") {
  for (const GraphName& name : certified_catalog()) {
    const NormCertificate cert = certificate(name);
    if (cert.kind == CertKind::LowerOnly) continue;
    CAPTURE(name.str());
    const NormBounds nb = norm_bounds(cert.graph.to_matrix());
    CHECK(nb.lower <= cert.exact_value + 1e-9);
    CHECK(nb.upper >= cert.exact_value - 1e-9);
    CHECK(nb.factorization.residual() < 1e-9);
    CHECK(nb.factorization.S.rows() <=
          std::min(nb.factorization.target.rows(),
                   nb.factorization.target.cols()));
  }
}

TEST_CASE("norm laws on random 0-1 matrices") {
  SplitMix64 rng{8080};
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t m = 2 + rng.next() % 3, n = 2 + rng.next() % 3;
    const BiGraph g = graph_of(static_cast<std::uint32_t>(rng.next()), m, n);
    const Matrix a = g.to_matrix();
    const NormBounds base = norm_bounds(a);
    if (!base.converged) continue;
    CAPTURE(g.to_text());

    // Transpose invariance.
    const NormBounds t = norm_bounds(a.transpose());
    CHECK(t.midpoint() == doctest::Approx(base.midpoint()).epsilon(1e-5));

    // Row/column permutation invariance.
    Matrix perm = a;
    perm.row(0).swap(perm.row(m - 1));
    perm.col(0).swap(perm.col(n - 1));
    const NormBounds p = norm_bounds(perm);
    CHECK(p.midpoint() == doctest::Approx(base.midpoint()).epsilon(1e-5));

    // Duplicating a row keeps the norm.
    Matrix dup(m + 1, n);
    dup.topRows(m) = a;
    dup.row(m) = a.row(0);
    const NormBounds d = norm_bounds(dup);
    CHECK(d.midpoint() == doctest::Approx(base.midpoint()).epsilon(1e-5));

    // Deleting a row cannot push the upper bound above the original.
    if (m > 1) {
      const Matrix del = a.bottomRows(m - 1);
      const NormBounds del_nb = norm_bounds(del);
      CHECK(del_nb.upper <= base.upper + 1e-5);
    }
  }
}

TEST_CASE("direct sums take the maximum of the parts") {
  const BiGraph pairs[][2] = {
      {catalog(Tag::SigmaSquare, 2), catalog(Tag::SingleEdge)},
      {catalog(Tag::Trie), catalog(Tag::SigmaSquare, 3)},
      {catalog(Tag::E, 4), catalog(Tag::Gee6Cycle)},
  };
  for (const auto& pr : pairs) {
    const NormBounds a = norm_bounds(pr[0].to_matrix());
    const NormBounds b = norm_bounds(pr[1].to_matrix());
    const NormBounds s = norm_bounds(direct_sum(pr[0], pr[1]).to_matrix());
    const double expected = std::max(a.midpoint(), b.midpoint());
    CHECK(s.midpoint() == doctest::Approx(expected).epsilon(1e-5));
  }
}

TEST_CASE("completion program matches the witness route") {
  // A graph with slack vertices: the top singular pair of A . U vanishes
  // off the extremal core, so this exercises the interior-point route.
  Matrix a(3, 4);
  a << 1, 1, 0, 1,
       0, 1, 1, 0,
       1, 0, 0, 0;
  const auto f = completion_upper_bound(a);
  REQUIRE(f.has_value());
  CHECK(f->residual() < 1e-9);
  CHECK(f->S.rows() <= 3);
  CHECK(f->product() == doctest::Approx(eta(4)).epsilon(1e-8));

  const NormBounds nb = norm_bounds(a);
  CHECK(nb.converged);
  CHECK(nb.midpoint() == doctest::Approx(eta(4)).epsilon(1e-6));

  // Transposed orientation goes through the flip path.
  const auto ft = completion_upper_bound(Matrix(a.transpose()));
  REQUIRE(ft.has_value());
  CHECK(ft->residual() < 1e-9);
  CHECK(ft->product() == doctest::Approx(eta(4)).epsilon(1e-8));
}

TEST_CASE("triangular truncation norms grow") {
  double prev = 0.0;
  for (int n : {2, 4, 8, 16}) {
    Matrix tri = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) tri(i, j) = 1.0;
    }
    const NormBounds nb = norm_bounds(tri);
    CHECK(nb.lower > prev);
    if (n == 16) {
      // Largest instance in the suite; the estimator should still close.
      CHECK(nb.converged);
      CHECK(nb.midpoint() == doctest::Approx(1.70448).epsilon(1e-4));
    }
    prev = nb.lower;
  }
}
