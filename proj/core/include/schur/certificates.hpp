#pragma once

#include "schur/bigraph.hpp"
#include "schur/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schur {

enum class CertKind {
  FactorizationWitness,  // S^T R = bits with c(S)c(R) = value, plus an
                         // orthogonal/coisometric witness attaining value
  PsdCompletion,         // [[P,B],[B^T,Q]] psd of rank 3 with max diagonal =
                         // value, plus a witness for the lower bound
  LowerOnly,             // witness certifying value > lower_target only
};

/// An exact-norm certificate for one catalog graph.
struct NormCertificate {
  GraphName name;
  BiGraph graph;
  CertKind kind = CertKind::FactorizationWitness;
  double exact_value = 0.0;   // certified value (the exact norm, or for
                              // LowerOnly the certified lower bound)
  std::string value_text;     // closed form, printable

  std::optional<Matrix> S, R;       // factorization of graph bits
  std::optional<Matrix> witness;    // Omega with ||bits . Omega|| >= value
  std::optional<Matrix> P, Q;       // psd completion blocks
  std::optional<BiGraph> psd_graph; // the graph the completion targets
  std::optional<Vector> x, y;       // trace-norm pair (obstruction 5.4)

  double lower_target = 0.0;        // LowerOnly: strict threshold to beat
  std::string lower_target_text;
};

/// Builds the certificate for a catalog name; throws InputError when the
/// name carries no certificate.
NormCertificate certificate(const GraphName& name);

inline NormCertificate certificate(GraphName::Tag tag, int param = 0) {
  return certificate(GraphName{tag, param});
}

/// All names covered by the certificate suite: the nine exact-norm rows, the
/// bracket-ones family for n <= 6, and the four obstruction lower bounds.
std::vector<GraphName> certified_catalog();

struct CertCheck {
  std::string name;
  bool pass = false;
  double error = 0.0;
  std::string detail;
};

struct CertReport {
  GraphName name;
  double exact_value = 0.0;
  std::vector<CertCheck> checks;
  bool pass = false;
  /// Recomputed characteristic polynomial coefficients (leading first) of
  /// the obstruction-5.5 Gram block; empty elsewhere.
  std::vector<double> char_poly;
};

/// Runs every check the certificate kind calls for, at tolerance tol.
/// Failures land in the report; nothing throws.
CertReport verify_certificate(const NormCertificate& cert, double tol);

}  // namespace schur
