#include "repkit/phipsi.hpp"

#include "repkit/gorenstein.hpp"

namespace repkit::cat {

ClassOracle named_oracle(CategoryRef instance, const std::string& name) {
  ClassOracle o;
  o.name = name;
  o.instance = instance;
  if (name == "all") {
    o.test = [](const AbObject&) { return true; };
  } else if (name == "zero") {
    o.test = [](const AbObject& x) { return udim(x) == 0; };
  } else if (name == "proj") {
    if (!instance->has_projective_test())
      throw CapabilityMissing("no projective test");
    o.test = [](const AbObject& x) {
      return projective_injective_test(x).is_projective;
    };
  } else if (name == "inj") {
    if (!instance->has_injective_test())
      throw CapabilityMissing("no injective test");
    o.test = [](const AbObject& x) {
      return projective_injective_test(x).is_injective;
    };
  } else if (name == "flat") {
    if (!instance->has_dual()) throw CapabilityMissing("no dual");
    o.test = [](const AbObject& x) { return gorenstein::is_flat(x); };
  } else if (name == "gproj") {
    if (!instance->has_gproj_oracle())
      throw CapabilityMissing("no Gorenstein projective oracle");
    o.test = [](const AbObject& x) {
      return gorenstein::is_gproj(x).holds;
    };
  } else if (name == "ginj") {
    if (!instance->has_gproj_oracle())
      throw CapabilityMissing("no Gorenstein injective oracle");
    o.test = [](const AbObject& x) {
      return gorenstein::is_ginj(x).holds;
    };
  } else if (name == "wgflat") {
    if (!instance->has_dual() || !instance->has_gproj_oracle())
      throw CapabilityMissing("no weakly-Gorenstein-flat oracle");
    o.test = [](const AbObject& x) { return gorenstein::is_wgflat(x); };
  } else {
    throw ValidationError("unknown class oracle: " + name);
  }
  return o;
}

PhiReport phi_report(const AbObject& rep_obj) {
  if (rep_obj.cat->kind != CatKind::repcat)
    throw ValidationError("phi_report needs a representation");
  const Representation& f = *rep_obj.rep;
  const Quiver& q = rep_obj.cat->shape;
  PhiReport out;
  out.all_monic = true;
  for (const auto& v : q.vertices) {
    std::vector<quiver::Arrow> in = q.arrows_into(v);
    std::vector<AbObject> parts;
    for (const auto& a : in) parts.push_back(f.vertex(a.src));
    DirectSum ds = direct_sum(rep_obj.cat->inner, parts);
    AbMorphism phi = zero_morphism(ds.object, f.vertex(v));
    for (std::size_t i = 0; i < in.size(); ++i)
      phi = add(phi, compose(f.arrow(in[i].id), ds.projections[i]));
    PhiVertex pv;
    pv.monic = is_monic(phi);
    auto [coker, proj] = cokernel_of(phi);
    pv.phi = std::move(phi);
    pv.cokernel = std::move(coker);
    pv.cokernel_projection = std::move(proj);
    out.all_monic = out.all_monic && pv.monic;
    out.vertices.emplace(v, std::move(pv));
  }
  return out;
}

PsiReport psi_report(const AbObject& rep_obj) {
  if (rep_obj.cat->kind != CatKind::repcat)
    throw ValidationError("psi_report needs a representation");
  const Representation& g = *rep_obj.rep;
  const Quiver& q = rep_obj.cat->shape;
  PsiReport out;
  out.all_epi = true;
  for (const auto& v : q.vertices) {
    std::vector<quiver::Arrow> outgoing = q.arrows_out_of(v);
    std::vector<AbObject> parts;
    for (const auto& a : outgoing) parts.push_back(g.vertex(a.tgt));
    DirectSum ds = direct_sum(rep_obj.cat->inner, parts);
    AbMorphism psi = zero_morphism(g.vertex(v), ds.object);
    for (std::size_t i = 0; i < outgoing.size(); ++i)
      psi = add(psi,
                compose(ds.inclusions[i], g.arrow(outgoing[i].id)));
    PsiVertex pv;
    pv.epi = is_epi(psi);
    auto [ker, inc] = kernel_of(psi);
    pv.psi = std::move(psi);
    pv.kernel = std::move(ker);
    pv.kernel_inclusion = std::move(inc);
    out.all_epi = out.all_epi && pv.epi;
    out.vertices.emplace(v, std::move(pv));
  }
  return out;
}

MembershipVerdict in_phi(const AbObject& rep_obj,
                         const ClassOracle& oracle) {
  PhiReport rep = phi_report(rep_obj);
  MembershipVerdict out;
  out.member = true;
  for (const auto& [v, pv] : rep.vertices) {
    out.map_condition[v] = pv.monic;
    bool cls = pv.monic && oracle.test(pv.cokernel);
    out.class_condition[v] = cls;
    out.member = out.member && pv.monic && cls;
  }
  return out;
}

MembershipVerdict in_psi(const AbObject& rep_obj,
                         const ClassOracle& oracle) {
  PsiReport rep = psi_report(rep_obj);
  MembershipVerdict out;
  out.member = true;
  for (const auto& [v, pv] : rep.vertices) {
    out.map_condition[v] = pv.epi;
    bool cls = pv.epi && oracle.test(pv.kernel);
    out.class_condition[v] = cls;
    out.member = out.member && pv.epi && cls;
  }
  return out;
}

DualityBridgeReport duality_bridge(const AbObject& rep_obj,
                                   const ClassOracle* oracle,
                                   const ClassOracle* dual_oracle) {
  if (!rep_obj.cat->has_dual()) throw CapabilityMissing("no dual");
  DualityBridgeReport out;
  AbObject dual = dualize(rep_obj);
  PhiReport phi = phi_report(rep_obj);
  PsiReport psi = psi_report(dual);
  out.all_equal = true;
  for (const auto& v : rep_obj.cat->shape.vertices) {
    bool fwd =
        umat(phi.vertices.at(v).phi).transpose() ==
        umat(psi.vertices.at(v).psi);
    out.phi_to_psi[v] = fwd;
    // finite quivers are target-finite, so the converse applies
    bool bwd =
        umat(psi.vertices.at(v).psi).transpose() ==
        umat(phi.vertices.at(v).phi);
    out.psi_to_phi[v] = bwd;
    out.all_equal = out.all_equal && fwd && bwd;
  }
  if (oracle && dual_oracle) {
    out.implication_checked = true;
    bool in_x = in_phi(rep_obj, *oracle).member;
    bool in_y = in_psi(dual, *dual_oracle).member;
    out.implication_holds = !in_x || in_y;
  }
  return out;
}

}  // namespace repkit::cat
