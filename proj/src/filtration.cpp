#include "repkit/filtration.hpp"

#include <algorithm>

namespace repkit::filtration {

using cat::CatKind;
using cat::CategoryRef;
using cat::compose;
using cat::DirectSum;
using cat::udim;
using cat::umat;
using quiver::VertexId;

std::set<VertexId> v_f_set(const AbObject& rep_obj) {
  if (rep_obj.cat->kind != CatKind::repcat)
    throw ValidationError("v_f_set needs a representation");
  const quiver::Quiver& q = rep_obj.cat->shape;
  std::set<VertexId> out;
  for (const auto& v : q.vertices) {
    bool all_zero = true;
    for (const auto& a : q.arrows)
      if (a.tgt == v && udim(rep_obj.rep->vertex(a.src)) > 0) {
        all_zero = false;
        break;
      }
    if (all_zero) out.insert(v);
  }
  return out;
}

namespace {

// Objects isomorphic? dimension data for Vect, Jordan type for NilMod,
// explicit search for nested representations.
bool same_iso_class(const AbObject& a, const AbObject& b) {
  if (udim(a) != udim(b)) return false;
  switch (a.cat->kind) {
    case CatKind::vect:
      return true;
    case CatKind::nilmod:
      return cat::jordan_type(a) == cat::jordan_type(b);
    case CatKind::repcat:
      return cat::find_isomorphism(a, b).has_value();
  }
  return false;
}

}  // namespace

PeelStep peel_step(const AbObject& rep_obj) {
  CategoryRef repcat = rep_obj.cat;
  cat::PhiReport phi = cat::phi_report(rep_obj);
  if (!phi.all_monic)
    throw NotInPhi("peel_step: some phi_v is not monic");

  PeelStep out;
  out.peeled = v_f_set(rep_obj);

  std::vector<AbObject> parts;
  std::vector<AbMorphism> counits;
  for (const VertexId& v : out.peeled) {
    const AbObject& xv = rep_obj.rep->vertex(v);
    if (udim(xv) == 0) continue;
    out.summands.emplace_back(v, xv);
    counits.push_back(cat::counit_f(v, rep_obj));
    parts.push_back(counits.back().domain);
  }
  DirectSum ds = cat::direct_sum(repcat, parts);
  AbMorphism incl = cat::zero_morphism(ds.object, rep_obj);
  for (std::size_t i = 0; i < parts.size(); ++i)
    incl = cat::add(incl, compose(counits[i], ds.projections[i]));
  internal_check(cat::is_monic(incl),
                 "peel inclusion is monic on Phi members");

  auto [quot, proj] = cat::cokernel_of(incl);

  // (b) the inclusion restricts to an isomorphism on the peeled set
  out.vertex_match = true;
  for (const VertexId& v : out.peeled)
    if (!cat::is_iso(incl.rep_map->component(v)))
      out.vertex_match = false;

  // (c) coker phi is untouched off the peeled set
  cat::PhiReport quot_phi = cat::phi_report(quot);
  out.coker_preserved = true;
  for (const auto& v : repcat->shape.vertices) {
    if (out.peeled.count(v)) continue;
    if (!same_iso_class(phi.vertices.at(v).cokernel,
                        quot_phi.vertices.at(v).cokernel))
      out.coker_preserved = false;
  }

  out.sum = ds.object;
  out.inclusion = std::move(incl);
  out.quotient = std::move(quot);
  out.quotient_projection = std::move(proj);
  return out;
}

FiltrationCertificate filtrate(const AbObject& rep_obj,
                               const ClassOracle& oracle) {
  CategoryRef repcat = rep_obj.cat;
  if (repcat->kind != CatKind::repcat)
    throw ValidationError("filtrate needs a representation");
  cat::MembershipVerdict member = cat::in_phi(rep_obj, oracle);
  if (!member.member)
    throw NotInPhi("filtrate: representation is not in Phi(" +
                   oracle.name + ")");

  quiver::QuiverReport qrep = quiver::classify_quiver(repcat->shape);
  internal_check(qrep.left_rooted, "filtrate needs a left-rooted quiver");
  const std::size_t max_steps = qrep.v_sequence.size();

  FiltrationCertificate cert;
  cert.class_name = oracle.name;

  AbObject f0 = cat::zero_object(repcat);
  cert.chain.push_back(f0);
  AbMorphism mu = cat::zero_morphism(f0, rep_obj);  // F_i -> F
  AbObject quotient = rep_obj;                      // F / F_i
  AbMorphism q_proj = cat::identity_morphism(rep_obj);

  std::size_t steps = 0;
  while (udim(quotient) > 0) {
    internal_check(steps < max_steps,
                   "filtration exceeds the V-sequence length");
    PeelStep peel = peel_step(quotient);
    internal_check(udim(peel.sum) > 0,
                   "peel extracts something from a nonzero quotient");

    // F_{i+1} = preimage of the peeled subobject under F ->> F/F_i
    const AbMorphism& sigma = peel.inclusion;
    auto [unused, coker_sigma] = cat::cokernel_of(sigma);
    (void)unused;
    AbObject next;
    AbMorphism mu_next;  // F_{i+1} -> F
    if (udim(peel.quotient) == 0) {
      next = rep_obj;  // final step closes the chain at F itself
      mu_next = cat::identity_morphism(rep_obj);
    } else {
      auto [pre, pre_incl] =
          cat::kernel_of(compose(coker_sigma, q_proj));
      next = pre;
      mu_next = pre_incl;
    }

    AbMorphism iota = cat::factor_through_monic(mu_next, mu);
    internal_check(cat::is_monic(iota), "chain inclusion is monic");

    // the quotient F_{i+1}/F_i is identified with the peeled sum
    AbMorphism h =
        cat::factor_through_monic(sigma, compose(q_proj, mu_next));
    auto [qobj, pi] = cat::cokernel_of(iota);
    AbMorphism iso = cat::factor_through_epi(pi, h);
    internal_check(cat::is_iso(iso), "step quotient is the peeled sum");
    AbMorphism iso_inv = cat::morphism_from_umat(
        peel.sum, qobj, linalg::inverse(umat(iso)));

    FiltrationStep step;
    step.peeled = peel.peeled;
    step.summands = peel.summands;
    step.iso = std::move(iso);
    step.iso_inverse = std::move(iso_inv);
    cert.steps.push_back(std::move(step));
    cert.chain.push_back(next);
    cert.inclusions.push_back(std::move(iota));

    // advance to F / F_{i+1}
    auto [new_quot, new_proj] = cat::cokernel_of(mu_next);
    quotient = std::move(new_quot);
    q_proj = std::move(new_proj);
    mu = std::move(mu_next);
    ++steps;
  }
  if (cert.chain.size() == 1) {
    // zero representation: empty chain ends at F = 0
    cert.chain.back() = rep_obj;
  }

  VerifyResult check = verify_certificate(rep_obj, cert, oracle);
  internal_check(check.ok, "fresh certificate verifies: " +
                               check.first_failure);
  return cert;
}

VerifyResult verify_certificate(const AbObject& rep_obj,
                                const FiltrationCertificate& cert,
                                const ClassOracle& oracle) {
  auto fail = [](const std::string& why) {
    return VerifyResult{false, why};
  };
  if (cert.chain.empty()) return fail("empty chain");
  if (udim(cert.chain.front()) != 0)
    return fail("chain does not start at the zero representation");
  if (!(cert.chain.back() == rep_obj))
    return fail("chain does not end at the given representation");
  if (cert.inclusions.size() + 1 != cert.chain.size())
    return fail("inclusion count mismatch");
  if (cert.steps.size() != cert.inclusions.size())
    return fail("step count mismatch");

  quiver::QuiverReport qrep =
      quiver::classify_quiver(rep_obj.cat->shape);
  if (cert.steps.size() > qrep.v_sequence.size())
    return fail("more steps than the V-sequence length");

  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    try {
      cat::validate_object(cert.chain[i]);
    } catch (const Error& e) {
      return fail("chain object " + std::to_string(i) +
                  " invalid: " + e.what());
    }
  }

  for (std::size_t i = 0; i < cert.inclusions.size(); ++i) {
    const AbMorphism& iota = cert.inclusions[i];
    if (!(iota.domain == cert.chain[i]) ||
        !(iota.codomain == cert.chain[i + 1]))
      return fail("inclusion " + std::to_string(i) +
                  " has wrong endpoints");
    try {
      cat::validate_morphism(iota);
    } catch (const Error& e) {
      return fail("inclusion " + std::to_string(i) +
                  " invalid: " + e.what());
    }
    if (!cat::is_monic(iota))
      return fail("inclusion " + std::to_string(i) + " is not monic");
  }

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const FiltrationStep& step = cert.steps[i];
    const std::string tag = "step " + std::to_string(i);

    std::vector<AbObject> parts;
    for (const auto& [v, xv] : step.summands) {
      if (!step.peeled.count(v))
        return fail(tag + ": summand vertex outside the peeled set");
      if (!oracle.test(xv))
        return fail(tag + ": summand at " + v + " fails the " +
                    oracle.name + " oracle");
      parts.push_back(cat::free_f(rep_obj.cat, v, xv));
    }
    AbObject sum = cat::direct_sum(rep_obj.cat, parts).object;

    auto [qobj, pi] = cat::cokernel_of(cert.inclusions[i]);
    const AbMorphism& iso = step.iso;
    if (!(iso.domain == qobj))
      return fail(tag + ": iso domain is not the canonical quotient");
    if (!(iso.codomain == sum))
      return fail(tag + ": iso codomain is not the stated sum");
    try {
      cat::validate_morphism(iso);
      cat::validate_morphism(step.iso_inverse);
    } catch (const Error& e) {
      return fail(tag + ": iso invalid: " + e.what());
    }
    if (!(step.iso_inverse.domain == sum) ||
        !(step.iso_inverse.codomain == qobj))
      return fail(tag + ": inverse iso has wrong endpoints");
    if (!umat(compose(step.iso_inverse, iso)).is_identity())
      return fail(tag + ": iso_inverse . iso is not the identity");
    if (!umat(compose(iso, step.iso_inverse)).is_identity())
      return fail(tag + ": iso . iso_inverse is not the identity");
  }
  return VerifyResult{true, ""};
}

}  // namespace repkit::filtration
