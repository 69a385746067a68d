#pragma once

#include <set>

#include "repkit/phipsi.hpp"

namespace repkit::filtration {

using cat::AbMorphism;
using cat::AbObject;
using cat::ClassOracle;

/// V^F = { v | every arrow w -> v has F(w) = 0 }.
std::set<quiver::VertexId> v_f_set(const AbObject& rep_obj);

struct PeelStep {
  /// (+)_{v in peeled} f_v(F(v)), zero summands omitted.
  AbObject sum;
  std::vector<std::pair<quiver::VertexId, AbObject>> summands;
  std::set<quiver::VertexId> peeled;
  AbMorphism inclusion;  // sum -> F, induced by the counits; monic
  AbObject quotient;
  AbMorphism quotient_projection;
  /// F'(v) = F(v) on the peeled set.
  bool vertex_match = false;
  /// coker phi_v of the quotient matches coker phi_v of F off the
  /// peeled set (dimension and isomorphism class).
  bool coker_preserved = false;
};

/// One application of the peel lemma; requires every phi_v monic
/// (throws NotInPhi otherwise). The inclusion is checked, not assumed.
PeelStep peel_step(const AbObject& rep_obj);

struct FiltrationStep {
  std::set<quiver::VertexId> peeled;
  std::vector<std::pair<quiver::VertexId, AbObject>> summands;
  /// Isomorphism coker(inclusions[i]) -> (+)_v f_v(X_v), plus inverse.
  AbMorphism iso;
  AbMorphism iso_inverse;
};

struct FiltrationCertificate {
  std::string class_name;
  /// 0 = F_0 <= F_1 <= ... <= F_n = F.
  std::vector<AbObject> chain;
  std::vector<AbMorphism> inclusions;  // F_i -> F_{i+1}, monic
  std::vector<FiltrationStep> steps;
};

/// Builds and internally verifies a filtration certificate; throws
/// NotInPhi when F fails membership in Phi(oracle class).
FiltrationCertificate filtrate(const AbObject& rep_obj,
                               const ClassOracle& oracle);

struct VerifyResult {
  bool ok = false;
  std::string first_failure;
};

/// Recheck everything from scratch, independent of how the certificate
/// was produced.
VerifyResult verify_certificate(const AbObject& rep_obj,
                                const FiltrationCertificate& cert,
                                const ClassOracle& oracle);

}  // namespace repkit::filtration
