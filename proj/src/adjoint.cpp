#include "repkit/adjoint.hpp"

#include <algorithm>

namespace repkit::cat {

namespace {

using quiver::Path;
using quiver::VertexId;

struct PathIndex {
  std::vector<Path> paths;
  std::size_t index_of(const Path& p) const {
    auto it = std::find(paths.begin(), paths.end(), p);
    internal_check(it != paths.end(), "path index lookup");
    return static_cast<std::size_t>(it - paths.begin());
  }
};

// paths v ~> w per vertex w, in enumerate_paths order
std::map<VertexId, PathIndex> paths_from(const Quiver& q,
                                         const VertexId& v) {
  std::map<VertexId, PathIndex> out;
  for (const auto& w : q.vertices)
    out[w] = PathIndex{quiver::enumerate_paths(q, v, w)};
  return out;
}

std::map<VertexId, PathIndex> paths_into(const Quiver& q,
                                         const VertexId& v) {
  std::map<VertexId, PathIndex> out;
  for (const auto& w : q.vertices)
    out[w] = PathIndex{quiver::enumerate_paths(q, w, v)};
  return out;
}

}  // namespace

AbObject eval_e(const quiver::VertexId& v, const AbObject& rep_obj) {
  if (rep_obj.cat->kind != CatKind::repcat)
    throw ValidationError("eval_e outside RepCat");
  return rep_obj.rep->vertex(v);
}

AbMorphism eval_e(const quiver::VertexId& v, const AbMorphism& eta) {
  if (eta.domain.cat->kind != CatKind::repcat)
    throw ValidationError("eval_e outside RepCat");
  return eta.rep_map->component(v);
}

AbObject free_f(CategoryRef repcat, const quiver::VertexId& v,
                const AbObject& x) {
  if (!same_instance(x.cat, repcat->inner))
    throw ValidationError("free_f: object not in the inner instance");
  const Quiver& q = repcat->shape;
  if (!q.has_vertex(v)) throw ValidationError("free_f: unknown vertex");
  auto paths = paths_from(q, v);

  std::map<VertexId, DirectSum> sums;
  Representation rep;
  rep.cat = repcat;
  for (const auto& w : q.vertices) {
    std::vector<AbObject> copies(paths[w].paths.size(), x);
    sums.emplace(w, direct_sum(repcat->inner, copies));
    rep.at_vertex.emplace(w, sums.at(w).object);
  }
  for (const auto& a : q.arrows) {
    const DirectSum& src = sums.at(a.src);
    const DirectSum& tgt = sums.at(a.tgt);
    AbMorphism m = zero_morphism(src.object, tgt.object);
    for (std::size_t i = 0; i < paths[a.src].paths.size(); ++i) {
      Path extended = paths[a.src].paths[i];
      extended.push_back(a.id);
      std::size_t j = paths[a.tgt].index_of(extended);
      m = add(m, compose(tgt.inclusions[j], src.projections[i]));
    }
    rep.at_arrow.emplace(a.id, std::move(m));
  }
  return rep_object(repcat, std::move(rep));
}

AbMorphism free_f(CategoryRef repcat, const quiver::VertexId& v,
                  const AbMorphism& g) {
  AbObject fx = free_f(repcat, v, g.domain);
  AbObject fy = free_f(repcat, v, g.codomain);
  const Quiver& q = repcat->shape;
  auto paths = paths_from(q, v);
  RepMorphism m;
  m.domain = fx.rep;
  m.codomain = fy.rep;
  for (const auto& w : q.vertices) {
    std::size_t n = paths[w].paths.size();
    std::vector<Matrix> blocks(n, umat(g));
    Matrix block =
        n == 0 ? Matrix(repcat->base_field(), 0, 0)
               : Matrix::block_diag(blocks);
    m.components.emplace(
        w, morphism_from_umat(fx.rep->vertex(w), fy.rep->vertex(w),
                              block));
  }
  return make_rep_morphism(fx, fy, std::move(m));
}

AbObject cofree_g(CategoryRef repcat, const quiver::VertexId& v,
                  const AbObject& x) {
  if (!same_instance(x.cat, repcat->inner))
    throw ValidationError("cofree_g: object not in the inner instance");
  const Quiver& q = repcat->shape;
  if (!q.has_vertex(v)) throw ValidationError("cofree_g: unknown vertex");
  auto paths = paths_into(q, v);

  std::map<VertexId, DirectSum> sums;
  Representation rep;
  rep.cat = repcat;
  for (const auto& w : q.vertices) {
    std::vector<AbObject> copies(paths[w].paths.size(), x);
    sums.emplace(w, direct_sum(repcat->inner, copies));
    rep.at_vertex.emplace(w, sums.at(w).object);
  }
  for (const auto& a : q.arrows) {
    const DirectSum& src = sums.at(a.src);
    const DirectSum& tgt = sums.at(a.tgt);
    AbMorphism m = zero_morphism(src.object, tgt.object);
    for (std::size_t j = 0; j < paths[a.tgt].paths.size(); ++j) {
      Path through = paths[a.tgt].paths[j];
      through.insert(through.begin(), a.id);
      std::size_t i = paths[a.src].index_of(through);
      m = add(m, compose(tgt.inclusions[j], src.projections[i]));
    }
    rep.at_arrow.emplace(a.id, std::move(m));
  }
  return rep_object(repcat, std::move(rep));
}

AbMorphism cofree_g(CategoryRef repcat, const quiver::VertexId& v,
                    const AbMorphism& g) {
  AbObject gx = cofree_g(repcat, v, g.domain);
  AbObject gy = cofree_g(repcat, v, g.codomain);
  const Quiver& q = repcat->shape;
  auto paths = paths_into(q, v);
  RepMorphism m;
  m.domain = gx.rep;
  m.codomain = gy.rep;
  for (const auto& w : q.vertices) {
    std::size_t n = paths[w].paths.size();
    std::vector<Matrix> blocks(n, umat(g));
    Matrix block =
        n == 0 ? Matrix(repcat->base_field(), 0, 0)
               : Matrix::block_diag(blocks);
    m.components.emplace(
        w, morphism_from_umat(gx.rep->vertex(w), gy.rep->vertex(w),
                              block));
  }
  return make_rep_morphism(gx, gy, std::move(m));
}

AbMorphism counit_f(const quiver::VertexId& v, const AbObject& rep_obj) {
  CategoryRef repcat = rep_obj.cat;
  const Quiver& q = repcat->shape;
  AbObject source = free_f(repcat, v, rep_obj.rep->vertex(v));
  auto paths = paths_from(q, v);
  RepMorphism m;
  m.domain = source.rep;
  m.codomain = rep_obj.rep;
  for (const auto& w : q.vertices) {
    const std::vector<Path>& pw = paths[w].paths;
    std::vector<AbObject> copies(pw.size(), rep_obj.rep->vertex(v));
    DirectSum ds = direct_sum(repcat->inner, copies);
    AbMorphism comp = zero_morphism(ds.object, rep_obj.rep->vertex(w));
    for (std::size_t i = 0; i < pw.size(); ++i)
      comp = add(comp, compose(path_map(*rep_obj.rep, v, pw[i]),
                               ds.projections[i]));
    comp.domain = source.rep->vertex(w);
    m.components.emplace(w, std::move(comp));
  }
  return make_rep_morphism(source, rep_obj, std::move(m));
}

AbMorphism unit_f(CategoryRef repcat, const quiver::VertexId& v,
                  const AbObject& x) {
  AbObject fx = free_f(repcat, v, x);
  std::vector<Path> pv = quiver::enumerate_paths(repcat->shape, v, v);
  internal_check(pv.size() == 1 && pv[0].empty(),
                 "acyclic quiver has only the trivial loop path");
  DirectSum ds = direct_sum(repcat->inner, {x});
  AbMorphism inc = ds.inclusions[0];
  inc.codomain = fx.rep->vertex(v);
  return inc;
}

AbMorphism unit_g(const quiver::VertexId& v, const AbObject& rep_obj) {
  CategoryRef repcat = rep_obj.cat;
  const Quiver& q = repcat->shape;
  AbObject target = cofree_g(repcat, v, rep_obj.rep->vertex(v));
  auto paths = paths_into(q, v);
  RepMorphism m;
  m.domain = rep_obj.rep;
  m.codomain = target.rep;
  for (const auto& w : q.vertices) {
    const std::vector<Path>& pw = paths[w].paths;
    std::vector<AbObject> copies(pw.size(), rep_obj.rep->vertex(v));
    DirectSum ds = direct_sum(repcat->inner, copies);
    AbMorphism comp = zero_morphism(rep_obj.rep->vertex(w), ds.object);
    for (std::size_t i = 0; i < pw.size(); ++i)
      comp = add(comp, compose(ds.inclusions[i],
                               path_map(*rep_obj.rep, w, pw[i])));
    comp.codomain = target.rep->vertex(w);
    m.components.emplace(w, std::move(comp));
  }
  return make_rep_morphism(rep_obj, target, std::move(m));
}

AbMorphism counit_g(CategoryRef repcat, const quiver::VertexId& v,
                    const AbObject& x) {
  AbObject gx = cofree_g(repcat, v, x);
  std::vector<Path> pv = quiver::enumerate_paths(repcat->shape, v, v);
  internal_check(pv.size() == 1 && pv[0].empty(),
                 "acyclic quiver has only the trivial loop path");
  DirectSum ds = direct_sum(repcat->inner, {x});
  AbMorphism prj = ds.projections[0];
  prj.domain = gx.rep->vertex(v);
  return prj;
}

AdjunctionReport adjunction_audit(CategoryRef repcat,
                                  const quiver::VertexId& v,
                                  const AbObject& x,
                                  const AbObject& rep_obj) {
  AdjunctionReport r;
  AbObject fx = free_f(repcat, v, x);
  AbObject gx = cofree_g(repcat, v, x);
  r.hom_fX_F = hom_dim(fx, rep_obj);
  r.hom_X_Fv = hom_dim(x, rep_obj.rep->vertex(v));
  r.hom_evF_X = hom_dim(rep_obj.rep->vertex(v), x);
  r.hom_F_gX = hom_dim(rep_obj, gx);
  r.left_dims_match = r.hom_fX_F == r.hom_X_Fv;
  r.right_dims_match = r.hom_evF_X == r.hom_F_gX;

  // triangle identities for f_v -| e_v
  {
    AbMorphism t1 = compose(counit_f(v, fx),
                            free_f(repcat, v, unit_f(repcat, v, x)));
    AbMorphism t2 = compose(eval_e(v, counit_f(v, rep_obj)),
                            unit_f(repcat, v, rep_obj.rep->vertex(v)));
    r.triangle_f = umat(t1).is_identity() && umat(t2).is_identity();
  }
  // triangle identities for e_v -| g_v
  {
    AbMorphism t1 = compose(counit_g(repcat, v, rep_obj.rep->vertex(v)),
                            eval_e(v, unit_g(v, rep_obj)));
    AbMorphism t2 = compose(cofree_g(repcat, v, counit_g(repcat, v, x)),
                            unit_g(v, gx));
    r.triangle_g = umat(t1).is_identity() && umat(t2).is_identity();
  }
  r.ok = r.left_dims_match && r.right_dims_match && r.triangle_f &&
         r.triangle_g;
  return r;
}

}  // namespace repkit::cat
