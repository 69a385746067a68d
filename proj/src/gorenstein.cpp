#include "repkit/gorenstein.hpp"

#include <algorithm>

#include "repkit/phipsi.hpp"

namespace repkit::gorenstein {

using cat::CatKind;
using cat::compose;
using cat::direct_sum;
using cat::DirectSum;
using cat::hom_basis;
using cat::hom_coordinates;
using cat::kernel_of;
using cat::Matrix;
using cat::udim;
using cat::umat;
using linalg::Scalar;

namespace {

Matrix vec(const Matrix& m) {
  Matrix out(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.set(i * m.cols() + j, 0, m.at(i, j));
  return out;
}

// Solve sum_j x_j images_j = target; on success return the matching
// combination of the generators (a morphism dom -> cod).
std::optional<AbMorphism> solve_combination(
    const AbObject& dom, const AbObject& cod,
    const std::vector<AbMorphism>& generators,
    const std::vector<AbMorphism>& images, const AbMorphism& target) {
  Matrix t = vec(umat(target));
  if (generators.empty())
    return t.is_zero() ? std::optional(cat::zero_morphism(dom, cod))
                       : std::nullopt;
  std::vector<Matrix> cols;
  for (const AbMorphism& m : images) cols.push_back(vec(umat(m)));
  auto sol = linalg::solve_linear(Matrix::hconcat(cols), t);
  if (!sol.solution) return std::nullopt;
  AbMorphism out = cat::zero_morphism(dom, cod);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    Scalar c = sol.solution->at(j, 0);
    if (!c.is_zero()) out = cat::add(out, cat::scale(generators[j], c));
  }
  return out;
}

}  // namespace

AbMorphism canonical_projective_cover(const AbObject& f) {
  if (f.cat->kind != CatKind::repcat)
    return *cat::projective_injective_test(f).cover;
  CategoryRef repcat = f.cat;
  std::vector<AbObject> parts;
  std::vector<AbMorphism> maps;  // f_v(P_v) -> F
  for (const auto& v : repcat->shape.vertices) {
    const AbObject& fv = f.rep->vertex(v);
    if (udim(fv) == 0) continue;
    AbMorphism cover_v = *cat::projective_injective_test(fv).cover;
    maps.push_back(compose(cat::counit_f(v, f),
                           cat::free_f(repcat, v, cover_v)));
    parts.push_back(maps.back().domain);
  }
  DirectSum ds = direct_sum(repcat, parts);
  AbMorphism total = cat::zero_morphism(ds.object, f);
  for (std::size_t i = 0; i < parts.size(); ++i)
    total = cat::add(total, compose(maps[i], ds.projections[i]));
  internal_check(cat::is_epi(total), "canonical cover is epi");
  return total;
}

AbMorphism minimal_projective_cover(const AbObject& f) {
  if (f.cat->kind != CatKind::repcat)
    return *cat::projective_injective_test(f).cover;
  CategoryRef repcat = f.cat;
  cat::PhiReport phi = cat::phi_report(f);
  std::vector<AbObject> parts;
  std::vector<AbMorphism> maps;
  for (const auto& v : repcat->shape.vertices) {
    const cat::PhiVertex& pv = phi.vertices.at(v);
    if (udim(pv.cokernel) == 0) continue;
    AbMorphism cover_c = *cat::projective_injective_test(pv.cokernel).cover;
    // lift the cover of coker phi_v through F(v) ->> coker phi_v
    auto lift = linalg::solve_linear(umat(pv.cokernel_projection),
                                     umat(cover_c));
    internal_check(lift.solution.has_value(), "cover lifts along epi");
    AbMorphism lifted = cat::morphism_from_umat(
        cover_c.domain, f.rep->vertex(v), *lift.solution);
    maps.push_back(compose(cat::counit_f(v, f),
                           cat::free_f(repcat, v, lifted)));
    parts.push_back(maps.back().domain);
  }
  DirectSum ds = direct_sum(repcat, parts);
  AbMorphism total = cat::zero_morphism(ds.object, f);
  for (std::size_t i = 0; i < parts.size(); ++i)
    total = cat::add(total, compose(maps[i], ds.projections[i]));
  internal_check(cat::is_epi(total), "minimal cover is epi");
  return total;
}

AbMorphism canonical_injective_envelope(const AbObject& f) {
  if (f.cat->kind != CatKind::repcat)
    return *cat::projective_injective_test(f).envelope;
  CategoryRef repcat = f.cat;
  std::vector<AbObject> parts;
  std::vector<AbMorphism> maps;  // F -> g_v(I_v)
  for (const auto& v : repcat->shape.vertices) {
    const AbObject& fv = f.rep->vertex(v);
    if (udim(fv) == 0) continue;
    AbMorphism env_v = *cat::projective_injective_test(fv).envelope;
    maps.push_back(compose(cat::cofree_g(repcat, v, env_v),
                           cat::unit_g(v, f)));
    parts.push_back(maps.back().codomain);
  }
  DirectSum ds = direct_sum(repcat, parts);
  AbMorphism total = cat::zero_morphism(f, ds.object);
  for (std::size_t i = 0; i < parts.size(); ++i)
    total = cat::add(total, compose(ds.inclusions[i], maps[i]));
  internal_check(cat::is_monic(total), "canonical envelope is monic");
  return total;
}

SplitTest is_projective_rep(const AbObject& f) {
  if (f.cat->kind != CatKind::repcat)
    throw ValidationError("is_projective_rep needs a representation");
  SplitTest out;
  AbMorphism cover = canonical_projective_cover(f);
  std::vector<AbMorphism> basis = hom_basis(f, cover.domain);
  std::vector<AbMorphism> images;
  for (const AbMorphism& b : basis) images.push_back(compose(cover, b));
  std::optional<AbMorphism> section = solve_combination(
      f, cover.domain, basis, images, cat::identity_morphism(f));
  out.holds = section.has_value();
  out.structure_map = std::move(cover);
  out.splitting = std::move(section);
  return out;
}

SplitTest is_injective_rep(const AbObject& f) {
  if (f.cat->kind != CatKind::repcat)
    throw ValidationError("is_injective_rep needs a representation");
  SplitTest out;
  AbMorphism env = canonical_injective_envelope(f);
  std::vector<AbMorphism> basis = hom_basis(env.codomain, f);
  std::vector<AbMorphism> images;
  for (const AbMorphism& b : basis) images.push_back(compose(b, env));
  std::optional<AbMorphism> retraction = solve_combination(
      env.codomain, f, basis, images, cat::identity_morphism(f));
  out.holds = retraction.has_value();
  out.structure_map = std::move(env);
  out.splitting = std::move(retraction);
  return out;
}

std::size_t ext1_dim(const AbObject& a, const AbObject& b) {
  AbMorphism cover = canonical_projective_cover(a);
  auto [omega, incl] = kernel_of(cover);
  std::vector<AbMorphism> hom_pb = hom_basis(cover.domain, b);
  std::vector<AbMorphism> hom_ob = hom_basis(omega, b);
  if (hom_ob.empty()) return 0;
  Matrix restriction(umat(cover).field(), hom_ob.size(), hom_pb.size());
  for (std::size_t j = 0; j < hom_pb.size(); ++j) {
    Matrix coords = hom_coordinates(hom_ob, compose(hom_pb[j], incl));
    for (std::size_t i = 0; i < hom_ob.size(); ++i)
      restriction.set(i, j, coords.at(i, 0));
  }
  return hom_ob.size() - linalg::rank_and_kernel(restriction).rank;
}

std::size_t ext1_into_dim(const AbObject& a, const AbObject& b) {
  AbMorphism env = b.cat->kind == CatKind::repcat
                       ? canonical_injective_envelope(b)
                       : *cat::projective_injective_test(b).envelope;
  auto [coker, proj] = cat::cokernel_of(env);
  std::vector<AbMorphism> hom_ai = hom_basis(a, env.codomain);
  std::vector<AbMorphism> hom_ac = hom_basis(a, coker);
  if (hom_ac.empty()) return 0;
  Matrix post(umat(env).field(), hom_ac.size(), hom_ai.size());
  for (std::size_t j = 0; j < hom_ai.size(); ++j) {
    Matrix coords = hom_coordinates(hom_ac, compose(proj, hom_ai[j]));
    for (std::size_t i = 0; i < hom_ac.size(); ++i)
      post.set(i, j, coords.at(i, 0));
  }
  return hom_ac.size() - linalg::rank_and_kernel(post).rank;
}

std::vector<AbObject> indecomposable_projectives(CategoryRef c) {
  switch (c->kind) {
    case CatKind::vect: {
      AbObject k = cat::vect_object(c, 1);
      return {k};
    }
    case CatKind::nilmod:
      return {cat::regular_module(c)};
    case CatKind::repcat: {
      std::vector<AbObject> out;
      for (const auto& v : c->shape.vertices)
        for (const AbObject& p : indecomposable_projectives(c->inner))
          out.push_back(cat::free_f(c, v, p));
      return out;
    }
  }
  throw InternalError("indecomposable_projectives: bad kind");
}

std::vector<AbObject> indecomposable_injectives(CategoryRef c) {
  switch (c->kind) {
    case CatKind::vect: {
      AbObject k = cat::vect_object(c, 1);
      return {k};
    }
    case CatKind::nilmod:
      return {cat::regular_module(c)};  // self-injective
    case CatKind::repcat: {
      std::vector<AbObject> out;
      for (const auto& v : c->shape.vertices)
        for (const AbObject& p : indecomposable_injectives(c->inner))
          out.push_back(cat::cofree_g(c, v, p));
      return out;
    }
  }
  throw InternalError("indecomposable_injectives: bad kind");
}

bool ext1_vanishes_against_projectives(const AbObject& f) {
  for (const AbObject& p : indecomposable_projectives(f.cat))
    if (ext1_dim(f, p) != 0) return false;
  return true;
}

namespace {

// positive verdict with the split period-2 witness on x (+) x
CompleteResolution split_witness(const AbObject& x) {
  DirectSum ds = direct_sum(x.cat, {x, x});
  AbMorphism d = compose(ds.inclusions[0], ds.projections[1]);
  CompleteResolution c;
  c.period = 2;
  c.objects = {ds.object, ds.object};
  c.differentials = {d, d};
  bool ok = attach_syzygy(c, x);
  internal_check(ok, "split witness syzygy");
  return c;
}

// period-2 block witness over NilMod from the Jordan type
CompleteResolution nilmod_witness(const AbObject& x) {
  CategoryRef c = x.cat;
  std::size_t n = c->nil_order;
  std::vector<std::size_t> blocks = cat::jordan_type(x);
  std::size_t m = blocks.size();
  AbObject free = cat::free_module(c, m);
  Matrix d0(c->field, n * m, n * m), d1(c->field, n * m, n * m);
  Matrix s = cat::regular_module(c).action;
  for (std::size_t b = 0; b < m; ++b) {
    d0.place(b * n, b * n, s.power(blocks[b]));
    d1.place(b * n, b * n, s.power(n - blocks[b]));
  }
  CompleteResolution out;
  out.period = 2;
  out.objects = {free, free};
  out.differentials = {cat::make_morphism(free, free, std::move(d0)),
                       cat::make_morphism(free, free, std::move(d1))};
  bool ok = attach_syzygy(out, x);
  internal_check(ok, "nilmod witness syzygy");
  return out;
}

// Syzygy iteration with minimal covers and cycle detection; the
// returned complex closes the cycle through the found isomorphism.
std::optional<CompleteResolution> repcat_nilmod_witness(
    const AbObject& x, std::size_t cap = 48) {
  if (udim(x) == 0) {
    auto w = split_witness(x);
    return w;
  }
  std::vector<AbObject> proj;       // P_i
  std::vector<AbMorphism> covers;   // c_i : P_i ->> Z_i
  std::vector<AbMorphism> kernels;  // kappa_{i+1} : Z_{i+1} -> P_i
  std::vector<AbObject> syzygies{x};
  std::optional<AbMorphism> closing;  // psi : Z_m -> Z_0
  std::size_t period = 0;
  for (std::size_t i = 0; i < cap; ++i) {
    AbMorphism cover = minimal_projective_cover(syzygies[i]);
    auto [z, kappa] = kernel_of(cover);
    proj.push_back(cover.domain);
    covers.push_back(cover);
    kernels.push_back(kappa);
    syzygies.push_back(z);
    if (udim(z) > 64 * udim(x) + 64) return std::nullopt;
    std::optional<AbMorphism> iso = cat::find_isomorphism(z, x);
    if (iso) {
      closing = iso;
      period = i + 1;
      break;
    }
  }
  if (!closing) return std::nullopt;

  const std::size_t m = period;
  // delta_i : P_i -> P_{i-1}; the seam uses the closing isomorphism
  std::vector<AbMorphism> delta(m, covers[0]);
  for (std::size_t i = 1; i < m; ++i)
    delta[i] = compose(kernels[i - 1], covers[i]);
  {
    AbMorphism psi_inv = cat::morphism_from_umat(
        syzygies[0], syzygies[m], linalg::inverse(umat(*closing)));
    delta[0] = compose(kernels[m - 1], compose(psi_inv, covers[0]));
  }
  CompleteResolution out;
  out.period = m;
  for (std::size_t i = 0; i < m; ++i)
    out.objects.push_back(proj[(m - i) % m]);
  out.differentials.push_back(delta[0]);
  for (std::size_t i = 1; i < m; ++i)
    out.differentials.push_back(delta[m - i]);
  // ker(differentials[1 % m]) is Z_m ~ x through the closing iso
  std::size_t idx = 1 % m;
  auto [k, k_inc] = kernel_of(out.differentials[idx]);
  AbMorphism into_zm =
      cat::factor_through_monic(kernels[m - 1], k_inc);
  out.syzygy_index = idx;
  out.syzygy_iso = compose(*closing, into_zm);
  internal_check(cat::is_iso(*out.syzygy_iso), "witness syzygy iso");
  return out;
}

}  // namespace

CompleteResolution dualize_resolution(const CompleteResolution& c) {
  CompleteResolution out;
  out.period = c.period;
  const std::size_t p = c.period;
  for (std::size_t j = 0; j < p; ++j)
    out.objects.push_back(cat::dualize(c.objects[(p - j) % p]));
  for (std::size_t j = 0; j < p; ++j)
    out.differentials.push_back(
        cat::dualize(c.differentials[(p - j - 1) % p]));
  return out;
}

CompleteResolution lift_resolution(CategoryRef repcat,
                                   const quiver::VertexId& v,
                                   const CompleteResolution& c) {
  CompleteResolution out;
  out.period = c.period;
  for (const AbObject& o : c.objects)
    out.objects.push_back(cat::free_f(repcat, v, o));
  for (const AbMorphism& d : c.differentials)
    out.differentials.push_back(cat::free_f(repcat, v, d));
  return out;
}

bool attach_syzygy(CompleteResolution& c, const AbObject& x) {
  for (std::size_t j = 0; j < c.period; ++j) {
    auto [k, inc] = kernel_of(c.differentials[j]);
    std::optional<AbMorphism> iso = cat::find_isomorphism(k, x);
    if (iso) {
      c.syzygy_index = j;
      c.syzygy_iso = iso;
      return true;
    }
  }
  return false;
}

bool verify_syzygy(const CompleteResolution& c, const AbObject& x) {
  if (!c.syzygy_iso || c.syzygy_index >= c.period) return false;
  auto [k, inc] = kernel_of(c.differentials[c.syzygy_index]);
  const AbMorphism& iso = *c.syzygy_iso;
  if (!(iso.domain == k) || !(iso.codomain == x)) return false;
  try {
    cat::validate_morphism(iso);
  } catch (const Error&) {
    return false;
  }
  return cat::is_iso(iso);
}

AcyclicityVerdict verify_total_acyclicity(
    const CompleteResolution& c, const std::vector<AbObject>& tests,
    bool injective_mode) {
  AcyclicityVerdict out;
  const std::size_t p = c.period;
  if (p == 0 || c.objects.size() != p || c.differentials.size() != p) {
    out.detail = "bad period/shape";
    return out;
  }
  for (std::size_t i = 0; i < p; ++i) {
    const AbMorphism& d = c.differentials[i];
    if (!(d.domain == c.objects[i]) ||
        !(d.codomain == c.objects[(i + 1) % p])) {
      out.detail = "differential endpoints at " + std::to_string(i);
      return out;
    }
    try {
      cat::validate_morphism(d);
    } catch (const Error& e) {
      out.detail = std::string("differential invalid: ") + e.what();
      return out;
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (!umat(compose(c.differentials[(i + 1) % p], c.differentials[i]))
             .is_zero()) {
      out.detail = "composite not zero at " + std::to_string(i);
      return out;
    }
  }
  out.structural = true;

  out.components = true;
  for (const AbObject& o : c.objects) {
    cat::ProjInjReport r = cat::projective_injective_test(o);
    bool good = injective_mode ? r.is_injective : r.is_projective;
    if (!good) {
      out.components = false;
      out.detail = "component fails the class test";
    }
  }

  out.exact = true;
  std::vector<std::size_t> ranks(p);
  for (std::size_t i = 0; i < p; ++i)
    ranks[i] = linalg::rank_and_kernel(umat(c.differentials[i])).rank;
  for (std::size_t j = 0; j < p; ++j) {
    std::size_t incoming = ranks[(j + p - 1) % p];
    std::size_t kernel = udim(c.objects[j]) - ranks[j];
    if (incoming != kernel) {
      out.exact = false;
      out.detail = "not exact at position " + std::to_string(j);
    }
  }

  // Hom(P, -) and Hom(-, P) complexes, one test object at a time
  out.hom_into = true;
  out.hom_from = true;
  for (const AbObject& t : tests) {
    std::vector<std::vector<AbMorphism>> into(p), from(p);
    for (std::size_t j = 0; j < p; ++j) {
      into[j] = hom_basis(t, c.objects[j]);
      from[j] = hom_basis(c.objects[j], t);
    }
    std::vector<std::size_t> rk_into(p), rk_from(p);
    for (std::size_t j = 0; j < p; ++j) {
      // (d_j)_* : Hom(t, obj_j) -> Hom(t, obj_{j+1})
      linalg::Field fld = umat(c.differentials[j]).field();
      Matrix m(fld, into[(j + 1) % p].size(), into[j].size());
      for (std::size_t k = 0; k < into[j].size(); ++k) {
        AbMorphism img = compose(c.differentials[j], into[j][k]);
        Matrix coords = hom_coordinates(into[(j + 1) % p], img);
        for (std::size_t i = 0; i < into[(j + 1) % p].size(); ++i)
          m.set(i, k, coords.at(i, 0));
      }
      rk_into[j] = linalg::rank_and_kernel(m).rank;
      // (d_j)^* : Hom(obj_{j+1}, t) -> Hom(obj_j, t)
      Matrix n(fld, from[j].size(), from[(j + 1) % p].size());
      for (std::size_t k = 0; k < from[(j + 1) % p].size(); ++k) {
        AbMorphism img = compose(from[(j + 1) % p][k],
                                 c.differentials[j]);
        Matrix coords = hom_coordinates(from[j], img);
        for (std::size_t i = 0; i < from[j].size(); ++i)
          n.set(i, k, coords.at(i, 0));
      }
      rk_from[j] = linalg::rank_and_kernel(n).rank;
    }
    for (std::size_t j = 0; j < p; ++j) {
      if (rk_into[(j + p - 1) % p] != into[j].size() - rk_into[j]) {
        out.hom_into = false;
        out.detail = "Hom(P,-) not exact at " + std::to_string(j);
      }
      if (rk_from[j] != from[j].size() - rk_from[(j + p - 1) % p]) {
        out.hom_from = false;
        out.detail = "Hom(-,P) not exact at " + std::to_string(j);
      }
    }
  }
  return out;
}

GorensteinVerdict is_gproj(const AbObject& x) {
  GorensteinVerdict out;
  switch (x.cat->kind) {
    case CatKind::vect:
      out.holds = true;
      out.witness = split_witness(x);
      return out;
    case CatKind::nilmod:
      out.holds = true;  // self-injective base: every module qualifies
      out.witness = nilmod_witness(x);
      return out;
    case CatKind::repcat: {
      if (!x.cat->has_gproj_oracle())
        throw CapabilityMissing("no Gorenstein oracle for " +
                                x.cat->describe());
      if (x.cat->inner->kind != CatKind::nilmod) {
        // finite global dimension: Gorenstein projective = projective
        SplitTest split = is_projective_rep(x);
        out.holds = split.holds;
        if (split.holds) {
          out.witness = split_witness(x);
        } else {
          out.note = "not projective in a finite-gldim category";
        }
        return out;
      }
      // NilMod base: the Phi characterization decides membership
      cat::ClassOracle inner_gproj =
          cat::named_oracle(x.cat->inner, "gproj");
      cat::MembershipVerdict phi = cat::in_phi(x, inner_gproj);
      out.holds = phi.member;
      if (!phi.member) {
        out.note = "phi condition fails";
        return out;
      }
      std::optional<CompleteResolution> witness =
          repcat_nilmod_witness(x);
      if (witness) {
        out.witness = std::move(witness);
      } else {
        out.note = "witness search exhausted";
      }
      return out;
    }
  }
  throw InternalError("is_gproj: bad kind");
}

GorensteinVerdict is_ginj(const AbObject& x) {
  AbObject dual = cat::dualize(x);
  GorensteinVerdict g = is_gproj(dual);
  GorensteinVerdict out;
  out.holds = g.holds;
  out.note = g.note;
  if (g.witness) {
    CompleteResolution w = dualize_resolution(*g.witness);
    if (attach_syzygy(w, x)) out.witness = std::move(w);
  }
  return out;
}

bool is_flat(const AbObject& x) {
  if (!x.cat->has_dual()) throw CapabilityMissing("no dual");
  return cat::projective_injective_test(cat::dualize(x)).is_injective;
}

bool is_wgflat(const AbObject& x) {
  if (!x.cat->has_dual()) throw CapabilityMissing("no dual");
  return is_ginj(cat::dualize(x)).holds;
}

FlatRightResolution flat_right_resolution(const AbObject& x,
                                          std::size_t steps) {
  if (x.cat->kind != CatKind::nilmod)
    throw ValidationError(
        "flat_right_resolution is a NilMod construction");
  if (!is_wgflat(x)) throw NotWGFlat("object is not weakly Gorenstein flat");
  FlatRightResolution out;
  out.objects.push_back(x);
  AbObject current = x;
  AbObject test_injective = cat::regular_module(x.cat);
  std::optional<AbMorphism> pending_proj;  // previous coker projection
  for (std::size_t t = 0; t < steps; ++t) {
    AbMorphism env = *cat::projective_injective_test(current).envelope;
    AbMorphism step =
        pending_proj ? compose(env, *pending_proj) : env;
    out.maps.push_back(step);
    out.objects.push_back(env.codomain);
    auto [coker, proj] = cat::cokernel_of(env);
    // Ext^1(I, X'^+) = 0 for the test injective I
    out.ext_checks.push_back(
        ext1_dim(test_injective, cat::dualize(coker)));
    pending_proj = proj;
    current = coker;
  }
  out.glued = nilmod_witness(x);
  out.verdict =
      verify_total_acyclicity(out.glued, {test_injective}, false);
  return out;
}

}  // namespace repkit::gorenstein
