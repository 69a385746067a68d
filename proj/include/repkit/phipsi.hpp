#pragma once

#include <functional>
#include <map>
#include <string>

#include "repkit/adjoint.hpp"

namespace repkit::cat {

/// A decidable, isomorphism-closed membership predicate on objects of
/// one instance. Phi and Psi are parametric in these.
struct ClassOracle {
  std::string name;
  CategoryRef instance;
  std::function<bool(const AbObject&)> test;
};

/// Named oracles: all | zero | proj | inj | flat | gproj | ginj |
/// wgflat. Throws CapabilityMissing when the instance lacks the test.
ClassOracle named_oracle(CategoryRef instance, const std::string& name);

struct PhiVertex {
  AbMorphism phi;  // assembled block map (+)_{a: w->v} F(w) -> F(v)
  bool monic = false;
  AbObject cokernel;
  AbMorphism cokernel_projection;
};

struct PhiReport {
  std::map<quiver::VertexId, PhiVertex> vertices;
  bool all_monic = false;
};

PhiReport phi_report(const AbObject& rep_obj);

struct PsiVertex {
  AbMorphism psi;  // assembled block map G(v) -> (+)_{a: v->w} G(w)
  bool epi = false;
  AbObject kernel;
  AbMorphism kernel_inclusion;
};

struct PsiReport {
  std::map<quiver::VertexId, PsiVertex> vertices;
  bool all_epi = false;
};

PsiReport psi_report(const AbObject& rep_obj);

struct MembershipVerdict {
  bool member = false;
  std::map<quiver::VertexId, bool> map_condition;   // monic / epi
  std::map<quiver::VertexId, bool> class_condition;  // coker / ker in X
};

/// F in Phi(X): every phi_v monic with cokernel passing the oracle.
MembershipVerdict in_phi(const AbObject& rep_obj,
                         const ClassOracle& oracle);
/// G in Psi(Y): every psi_v epi with kernel passing the oracle.
MembershipVerdict in_psi(const AbObject& rep_obj,
                         const ClassOracle& oracle);

struct DualityBridgeReport {
  /// (phi_v^F)^+ == psi_v^{F^+} as exact matrix equality, per vertex.
  std::map<quiver::VertexId, bool> phi_to_psi;
  /// (psi_v^{F^+})^+ == phi_v^{F^{++}} (target-finite converse).
  std::map<quiver::VertexId, bool> psi_to_phi;
  bool all_equal = false;
  /// F in Phi(X) => F^+ in Psi(X^+), when oracles are supplied.
  bool implication_checked = false;
  bool implication_holds = false;
};

DualityBridgeReport duality_bridge(const AbObject& rep_obj,
                                   const ClassOracle* oracle = nullptr,
                                   const ClassOracle* dual_oracle = nullptr);

}  // namespace repkit::cat
