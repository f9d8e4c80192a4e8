#include "schur/certificates.hpp"

#include "schur/eta.hpp"
#include "schur/path_witness.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace schur {

namespace {

using Tag = GraphName::Tag;

Matrix pad_square(const Matrix& a) {
  const Eigen::Index n = std::max(a.rows(), a.cols());
  Matrix p = Matrix::Zero(n, n);
  p.topLeftCorner(a.rows(), a.cols()) = a;
  return p;
}

NormCertificate single_edge_cert() {
  NormCertificate c;
  c.name = {Tag::SingleEdge, 0};
  c.graph = catalog(c.name);
  c.kind = CertKind::FactorizationWitness;
  c.exact_value = 1.0;
  c.value_text = "1";
  Matrix one(1, 1);
  one(0, 0) = 1.0;
  c.S = one;
  c.R = one;
  c.witness = one;
  return c;
}

// Paths and even cycles come out of the extremal construction: the square
// path from (S, R) with witness (SY)^{-1}(RX); the widened path reuses S
// against the extended R; the even cycle uses the extended pair with uniform
// weights, whose shape V solves Rt = St V on the column space and pairs the
// two null vectors.
NormCertificate path_cert(const GraphName& name) {
  const int n = name.param;
  PathWitness w = build_path_witness(n);
  NormCertificate c;
  c.name = name;
  c.graph = catalog(name);
  c.kind = CertKind::FactorizationWitness;
  c.exact_value = path_norm(n);
  switch (n) {
    case 1: c.value_text = "1"; break;
    case 2: c.value_text = "sqrt(4/3)"; break;
    case 3: c.value_text = "(1+sqrt(2))/2"; break;
    case 4: c.value_text = "(2/5) sqrt(5+2 sqrt(5))"; break;
    default: c.value_text = "(2/" + std::to_string(n + 1) + ") cot(pi/" +
                            std::to_string(2 * (n + 1)) + ")";
  }
  const Matrix omega = w.U.transpose();
  if (name.tag == Tag::SigmaSquare) {
    c.S = w.S;
    c.R = w.R;
    c.witness = omega;
  } else {
    c.S = w.S;
    c.R = w.Rt;
    Matrix wide = Matrix::Identity(n + 1, n + 1);
    wide.topLeftCorner(n, n) = omega;
    c.witness = wide;
  }
  return c;
}

NormCertificate even_cycle_cert(const GraphName& name) {
  const int n = name.param - 1;  // Lambda(n+1) with n odd
  PathWitness w = build_path_witness(n);
  NormCertificate c;
  c.name = name;
  c.graph = catalog(name);
  c.kind = CertKind::FactorizationWitness;
  c.exact_value = path_norm(n);
  c.value_text = (n == 3) ? "(1+sqrt(2))/2" : "(2/" + std::to_string(n + 1) +
                                                  ") cot(pi/" +
                                                  std::to_string(2 * (n + 1)) +
                                                  ")";
  c.S = w.St;
  c.R = w.Rt;
  // Rt = St V: particular solution through the pseudoinverse, completed by
  // pairing the one-dimensional null spaces.
  Eigen::JacobiSVD<Matrix> ds(w.St, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::JacobiSVD<Matrix> dr(w.Rt, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix pinv_st =
      ds.matrixV().leftCols(n) *
      ds.singularValues().head(n).cwiseInverse().asDiagonal() *
      ds.matrixU().transpose();
  const Vector null_s = ds.matrixV().col(n);
  const Vector null_r = dr.matrixV().col(n);
  Matrix v = pinv_st * w.Rt + null_s * null_r.transpose();
  if (orthogonality_error(v) > 1e-10) v = polar_orthogonal(v);
  c.witness = v;
  return c;
}

NormCertificate eta4_cert(const GraphName& name) {
  const double s19 = std::sqrt(19.0);
  const double e4 = eta(4);
  const double al = std::sqrt(139.0 - 22.0 * s19) / 15.0;
  const double be = -std::sqrt(24.0 - 2.0 * s19) / 15.0;
  const double ga = 2.0 * std::sqrt(16.0 + 2.0 * s19) / 15.0;
  const double de = std::sqrt(424.0 - 82.0 * s19) / 15.0;
  const double si = std::sqrt(61.0 + 2.0 * s19) / 15.0;
  const double ta = -std::sqrt(256.0 - 58.0 * s19) / 15.0;

  Matrix p(3, 3);
  p << e4, al, be,
       al, e4, al,
       be, al, e4;
  Matrix q(5, 5);
  q << e4,  ga,  de,  si,  ta,
       ga,  e4,  ga, -si, -si,
       de,  ga,  e4,  ta,  si,
       si, -si,  ta, 2 * si, al,
       ta, -si,  si, al, 2 * si;

  const double root74 = std::sqrt(74.0 - 2.0 * s19);
  Matrix u(3, 3);
  u << 8.0 + s19, -root74, -7.0 + s19,
       root74, 1.0 + 2.0 * s19, root74,
       -7.0 + s19, -root74, 8.0 + s19;
  u /= 15.0;

  NormCertificate c;
  c.name = name;
  c.graph = catalog(name);
  c.kind = CertKind::PsdCompletion;
  c.exact_value = e4;
  c.value_text = "(1/15) sqrt(169+38 sqrt(19))";
  c.P = p;
  c.Q = q;
  c.psd_graph = catalog(Tag::F, 4);
  if (name.tag == Tag::E) {
    c.witness = u;
  } else {
    Matrix wide = Matrix::Identity(5, 5);
    wide.topLeftCorner(3, 3) = u;
    c.witness = wide;
  }
  return c;
}

NormCertificate eta5_cert(const GraphName& name) {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0),
               s6 = std::sqrt(6.0);
  const double f54 = std::pow(54.0, 0.25);
  Matrix s(3, 3);
  s << 2 * s6, 2 * s6, 2 * s6,
       -2 * s3, s3, s3,
       0, 3, -3;
  s /= 2.0 * f54;
  Matrix r(3, 4);
  r << 3, 1, 1, 1,
       0, -2 * s2, s2, s2,
       0, 0, s6, -s6;
  r /= f54;
  Matrix v(3, 4);
  v << s5, 3, -1, -1,
       s5, -1, 3, -1,
       s5, -1, -1, 3;
  v /= 4.0;

  NormCertificate c;
  c.name = name;
  c.graph = catalog(name);
  c.kind = CertKind::FactorizationWitness;
  c.exact_value = eta(5);
  c.value_text = "sqrt(3/2)";
  c.S = s;
  c.R = r;
  c.witness = v;
  return c;
}

NormCertificate trie_cert() {
  const double s6 = std::sqrt(6.0);
  const double a = std::sqrt((-3.0 + 2.0 * s6) / 15.0);
  const double b = 0.5 * std::sqrt((3.0 + 8.0 * s6) / 15.0);
  const double cc = std::sqrt((9.0 + 4.0 * s6) / 30.0);
  Matrix s(3, 3), r(3, 3);
  s << 1, 1, 0.5,
       a, -a, b,
       -a, a, cc;
  r << 1, 1, 0.5,
       a, -a, b,
       a, -a, -cc;
  Matrix u(3, 3);
  u << 9.0 - s6, std::sqrt(54.0 - 6.0 * s6), 2.0 * std::sqrt(21.0 + 6.0 * s6),
       std::sqrt(54.0 - 6.0 * s6), 3.0 * (1.0 + s6),
       -2.0 * std::sqrt(27.0 - 3.0 * s6),
       2.0 * std::sqrt(21.0 + 6.0 * s6), -2.0 * std::sqrt(27.0 - 3.0 * s6),
       3.0 - 2.0 * s6;
  u /= 15.0;

  NormCertificate c;
  c.name = {Tag::Trie, 0};
  c.graph = catalog(c.name);
  c.kind = CertKind::FactorizationWitness;
  c.exact_value = (9.0 + 4.0 * s6) / 15.0;
  c.value_text = "(9+4 sqrt(6))/15";
  c.S = s;
  c.R = r;
  c.witness = u;
  return c;
}

NormCertificate gee7_cert() {
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0), s7 = std::sqrt(7.0),
               s14 = std::sqrt(14.0);
  Matrix s(3, 3), r(3, 3);
  s << 3, 4, 3,
       -s2, s2, -s2,
       -s7, 0, s7;
  s /= s14;
  r << 3, 4, 3,
       s2, -s2, s2,
       -s7, 0, s7;
  r /= s14;
  Matrix u(3, 3);
  u << 3, 2 * s6, -4,
       2 * s6, 1, 2 * s6,
       -4, 2 * s6, 3;
  u /= 7.0;

  NormCertificate c;
  c.name = {Tag::Gee7, 0};
  c.graph = catalog(c.name);
  c.kind = CertKind::FactorizationWitness;
  c.exact_value = 9.0 / 7.0;
  c.value_text = "9/7";
  c.S = s;
  c.R = r;
  c.witness = u;
  return c;
}

// Six-cycle certificate from the circulant picture: the cycle entry pattern
// is f(j-i mod 3) with f(0)=f(1)=1, f(2)=0, which factors through the
// frequency decomposition f(d) = 2/3 + (2/3)cos(2 pi d/3 - pi/3). The
// witness circ(2/3, 2/3, -1/3) turns the bits into (2/3) x (2-regular
// biadjacency), of spectral norm 4/3. `row_perm` maps circulant row i to the
// stored catalog row.
NormCertificate six_cycle_cert(const GraphName& name,
                               const std::array<int, 3>& row_perm) {
  const double sc = std::sqrt(2.0 / 3.0);
  Matrix s(3, 3), r(3, 3);
  for (int j = 0; j < 3; ++j) {
    const double a = 2.0 * M_PI * j / 3.0;
    const double b = a - M_PI / 3.0;
    s.col(row_perm[j]) << sc, sc * std::cos(a), sc * std::sin(a);
    r.col(j) << sc, sc * std::cos(b), sc * std::sin(b);
  }
  Matrix circ(3, 3);
  circ << 2, 2, -1,
          -1, 2, 2,
          2, -1, 2;
  circ /= 3.0;
  Matrix u(3, 3);
  for (int i = 0; i < 3; ++i) u.row(row_perm[i]) = circ.row(i);

  NormCertificate c;
  c.name = name;
  c.graph = catalog(name);
  c.kind = CertKind::FactorizationWitness;
  c.exact_value = 4.0 / 3.0;
  c.value_text = "4/3";
  c.S = s;
  c.R = r;
  c.witness = u;
  return c;
}

// [1 I_n]: hub column t e_1, spoke columns mix the hub direction with a unit
// simplex in the remaining n-1 coordinates; the norm-(2n/(n+1))^(1/2) value
// drops out of the closure condition. Witness rows [alpha 1 | I - J/(n+1)].
NormCertificate bracket_ones_cert(int n) {
  const double c2 = std::sqrt(2.0 * n / (n + 1.0));
  NormCertificate c;
  c.name = {Tag::BracketOnes, n};
  c.graph = catalog(c.name);
  c.kind = CertKind::FactorizationWitness;
  c.exact_value = c2;
  c.value_text = "sqrt(" + std::to_string(2 * n) + "/" +
                 std::to_string(n + 1) + ")";
  if (n == 1) {
    Matrix s(1, 1), r(1, 2);
    s << 1;
    r << 1, 1;
    c.S = s;
    c.R = r;
  } else {
    // Unit simplex vectors g_i in R^{n-1} with <g_i,g_j> = -1/(n-1).
    Matrix gram = Matrix::Constant(n, n, -1.0 / (n - 1));
    gram.diagonal().setOnes();
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    const Matrix g = es.eigenvectors().rightCols(n - 1) *
                     es.eigenvalues().tail(n - 1).cwiseMax(0.0).cwiseSqrt().asDiagonal();
    const double p = 1.0 / std::sqrt(c2);
    const double qv = std::sqrt(c2 - 1.0 / c2);
    const double t = std::sqrt(c2);
    const double uu = 1.0 / (n * p);
    const double vv = (n - 1.0) / (n * qv);
    Matrix s(n, n), r(n, n + 1);
    for (int i = 0; i < n; ++i) {
      s(0, i) = p;
      s.block(1, i, n - 1, 1) = qv * g.row(i).transpose();
    }
    r.setZero();
    r(0, 0) = t;
    for (int j = 0; j < n; ++j) {
      r(0, j + 1) = uu;
      r.block(1, j + 1, n - 1, 1) = vv * g.row(j).transpose();
    }
    c.S = s;
    c.R = r;
  }
  Matrix w(n, n + 1);
  w.col(0).setConstant(std::sqrt(n + 2.0) / (n + 1.0));
  w.rightCols(n) =
      Matrix::Identity(n, n) - Matrix::Constant(n, n, 1.0 / (n + 1.0));
  c.witness = w;
  return c;
}

NormCertificate obstruction_cert(const GraphName& name) {
  NormCertificate c;
  c.name = name;
  c.graph = catalog(name);
  c.kind = CertKind::LowerOnly;
  const Matrix bits = c.graph.to_matrix();
  switch (name.tag) {
    case Tag::Obstruction53: {
      Matrix u(4, 4);
      u << 3, 3, 3, 3,
           3, -5, 1, 1,
           3, 1, -5, 1,
           3, 1, 1, -5;
      u /= 6.0;
      c.witness = u;
      c.exact_value = std::sqrt((61.0 + std::sqrt(2821.0)) / 2.0) / 6.0;
      c.value_text = "(1/6) sqrt((61+sqrt(2821))/2)";
      c.lower_target = (9.0 + 4.0 * std::sqrt(6.0)) / 15.0;
      c.lower_target_text = "(9+4 sqrt(6))/15";
      break;
    }
    case Tag::Obstruction54: {
      PathWitness w = build_path_witness(4);
      c.x = w.x;
      c.y = w.y;
      c.exact_value =
          trace_norm(hadamard(bits.transpose(), w.x * w.y.transpose()));
      c.value_text = "trace norm of B^t . (x y^T)";
      c.lower_target = 1.235;
      c.lower_target_text = "1.235";
      break;
    }
    case Tag::Obstruction55: {
      const double s5 = std::sqrt(5.0);
      Matrix u(4, 4);
      u << s5, 3, -1, -1,
           s5, -1, 3, -1,
           s5, -1, -1, 3,
           -1, s5, s5, s5;
      u /= 4.0;
      c.witness = u;
      c.exact_value = spectral_norm(hadamard(bits, u));
      c.value_text = "||B . U||";
      c.lower_target = eta(6) + 1e-4;
      c.lower_target_text = "eta_6 + 1e-4";
      break;
    }
    case Tag::Obstruction56: {
      const double is2 = 1.0 / std::sqrt(2.0);
      Matrix u(4, 4);
      u << 0, 0, -is2, is2,
           0, 1.0 / 3, 2.0 / 3, 2.0 / 3,
           -is2, 2.0 / 3, -1.0 / 6, -1.0 / 6,
           is2, 2.0 / 3, -1.0 / 6, -1.0 / 6;
      c.witness = u;
      c.exact_value = spectral_norm(hadamard(bits, u));
      c.value_text = "||B . U||";
      c.lower_target = eta(6) + 1e-4;
      c.lower_target_text = "eta_6 + 1e-4";
      break;
    }
    default:
      throw InputError("obstruction_cert: not an obstruction name");
  }
  return c;
}

}  // namespace

NormCertificate certificate(const GraphName& name) {
  switch (name.tag) {
    case Tag::SingleEdge:
      return single_edge_cert();
    case Tag::SigmaSquare:
    case Tag::SigmaWide:
      if (name.param == 1 && name.tag == Tag::SigmaSquare)
        return single_edge_cert();
      if (name.param < 1 || name.param > 4) {
        throw InputError("certificate: no stored certificate for " +
                         name.str());
      }
      return path_cert(name);
    case Tag::Lambda:
      if (name.param == 3) {
        return six_cycle_cert(name, {0, 1, 2});
      }
      if (name.param == 4) return even_cycle_cert(name);
      throw InputError("certificate: no stored certificate for " + name.str());
    case Tag::E:
    case Tag::F: {
      const bool is_e = name.tag == Tag::E;
      switch (name.param) {
        case 1: return single_edge_cert();
        case 2: {
          auto c = path_cert({is_e ? Tag::SigmaSquare : Tag::SigmaWide, 2});
          c.name = name;
          return c;
        }
        case 3: {
          if (is_e) {
            auto c = path_cert({Tag::SigmaSquare, 3});
            c.name = name;
            return c;
          }
          auto c = even_cycle_cert({Tag::Lambda, 4});
          c.name = name;
          return c;
        }
        case 4: return eta4_cert(name);
        case 5: return eta5_cert(name);
        case 6: {
          auto c = path_cert({is_e ? Tag::SigmaSquare : Tag::SigmaWide, 4});
          c.name = name;
          return c;
        }
        default:
          throw InputError("certificate: no stored certificate for " +
                           name.str());
      }
    }
    case Tag::Trie:
      return trie_cert();
    case Tag::Gee7:
      return gee7_cert();
    case Tag::Gee6Cycle:
      return six_cycle_cert({Tag::Gee6Cycle, 0}, {0, 2, 1});
    case Tag::Obstruction53:
    case Tag::Obstruction54:
    case Tag::Obstruction55:
    case Tag::Obstruction56:
      return obstruction_cert(name);
    case Tag::BracketOnes:
      if (name.param < 1) {
        throw InputError("certificate: bracket-ones needs n >= 1");
      }
      return bracket_ones_cert(name.param);
  }
  throw InputError("certificate: unknown name");
}

std::vector<GraphName> certified_catalog() {
  std::vector<GraphName> names = {
      {Tag::SingleEdge, 0},
      {Tag::SigmaSquare, 2}, {Tag::SigmaWide, 2},
      {Tag::SigmaSquare, 3}, {Tag::SigmaWide, 3}, {Tag::Lambda, 4},
      {Tag::E, 4}, {Tag::F, 4},
      {Tag::E, 5},
      {Tag::SigmaSquare, 4}, {Tag::SigmaWide, 4},
      {Tag::Trie, 0}, {Tag::Gee7, 0}, {Tag::Gee6Cycle, 0},
  };
  for (int n = 1; n <= 6; ++n) names.push_back({Tag::BracketOnes, n});
  names.push_back({Tag::Obstruction53, 0});
  names.push_back({Tag::Obstruction54, 0});
  names.push_back({Tag::Obstruction55, 0});
  names.push_back({Tag::Obstruction56, 0});
  return names;
}

namespace {

void add_check(CertReport& rep, std::string name, bool pass, double err,
               std::string detail = {}) {
  rep.checks.push_back({std::move(name), pass, err, std::move(detail)});
}

}  // namespace

CertReport verify_certificate(const NormCertificate& cert, double tol) {
  CertReport rep;
  rep.name = cert.name;
  rep.exact_value = cert.exact_value;
  const Matrix bits = cert.graph.to_matrix();

  if (cert.S && cert.R) {
    const double resid =
        (cert.S->transpose() * (*cert.R) - bits).cwiseAbs().maxCoeff();
    add_check(rep, "S^T R = bits", resid <= tol, resid);
    const Eigen::Index k = cert.S->rows();
    add_check(rep, "k <= min(m,n)",
              k <= std::min(bits.rows(), bits.cols()),
              static_cast<double>(k));
    const double prod = col_bound(*cert.S) * col_bound(*cert.R);
    add_check(rep, "c(S)c(R) = value", std::abs(prod - cert.exact_value) <= tol,
              std::abs(prod - cert.exact_value));
  }

  if (cert.witness) {
    const double oerr = orthogonality_error(*cert.witness);
    add_check(rep, "witness orthogonal", oerr <= tol, oerr);
    double lower = 0.0;
    if (cert.witness->rows() == cert.witness->cols()) {
      Matrix padded = pad_square(bits);
      lower = spectral_norm(padded.cwiseProduct(*cert.witness));
    } else {
      lower = spectral_norm(bits.cwiseProduct(*cert.witness));
    }
    if (cert.kind == CertKind::LowerOnly) {
      add_check(rep, "||bits . U|| = certified lower",
                std::abs(lower - cert.exact_value) <= tol,
                std::abs(lower - cert.exact_value));
      add_check(rep, "lower > " + cert.lower_target_text,
                lower > cert.lower_target, lower - cert.lower_target);
    } else {
      add_check(rep, "||bits . U|| >= value", lower >= cert.exact_value - tol,
                cert.exact_value - lower);
    }
  }

  if (cert.kind == CertKind::PsdCompletion && cert.P && cert.Q &&
      cert.psd_graph) {
    const Matrix b = cert.psd_graph->to_matrix();
    const Eigen::Index mm = b.rows(), nn = b.cols();
    Matrix c(mm + nn, mm + nn);
    c << *cert.P, b, b.transpose(), *cert.Q;
    bool psd_ok = false;
    double min_ev = 0.0;
    try {
      psd_ok = psd_rank_check(c, 3, tol);
      min_ev = symmetric_eigenvalues(c)(0);
    } catch (const InputError&) {
      psd_ok = false;
    }
    add_check(rep, "completion psd of rank 3", psd_ok, min_ev);
    const double maxdiag = c.diagonal().maxCoeff();
    add_check(rep, "max diagonal = value",
              std::abs(maxdiag - cert.exact_value) <= tol,
              std::abs(maxdiag - cert.exact_value));
    add_check(rep, "graph embeds in completed graph",
              is_induced_subgraph(cert.graph, *cert.psd_graph), 0.0);
  }

  if (cert.kind == CertKind::LowerOnly && cert.x && cert.y) {
    const Matrix rank_one = (*cert.x) * cert.y->transpose();
    const double tn = trace_norm(hadamard(bits.transpose(), rank_one));
    add_check(rep, "||B^t . (x y^T)||_1 = certified lower",
              std::abs(tn - cert.exact_value) <= tol,
              std::abs(tn - cert.exact_value));
    add_check(rep, "lower > " + cert.lower_target_text, tn > cert.lower_target,
              tn - cert.lower_target);
  }

  if (cert.name.tag == Tag::Obstruction55 && cert.witness) {
    // Recompute the characteristic polynomial the proof quotes; the printed
    // version has a typo, so the report carries the recomputed coefficients.
    const Matrix bu = hadamard(bits, *cert.witness);
    const Matrix z = 16.0 * bu.transpose() * bu - 9.0 * Matrix::Identity(4, 4);
    const Vector ev = symmetric_eigenvalues(z);
    // p(x) = prod (x - ev_i), expanded.
    std::vector<double> coeff{1.0};
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      coeff.push_back(0.0);
      for (std::size_t d = coeff.size() - 1; d > 0; --d) {
        coeff[d] -= ev(i) * coeff[d - 1];
      }
    }
    rep.char_poly = std::move(coeff);
  }

  rep.pass = !rep.checks.empty();
  for (const auto& chk : rep.checks) rep.pass = rep.pass && chk.pass;
  return rep;
}

}  // namespace schur
