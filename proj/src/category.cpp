#include "repkit/category.hpp"

#include <algorithm>

namespace repkit::cat {

bool CategoryInstance::has_projective_test() const { return true; }
bool CategoryInstance::has_injective_test() const { return true; }

namespace {
bool tower_is_vect_based(const CategoryInstance& c) {
  if (c.kind == CatKind::vect) return true;
  if (c.kind == CatKind::nilmod) return false;
  return tower_is_vect_based(*c.inner);
}
}  // namespace

bool CategoryInstance::has_gproj_oracle() const {
  switch (kind) {
    case CatKind::vect:
    case CatKind::nilmod:
      return true;
    case CatKind::repcat:
      // over Vect towers the global dimension is finite so Gorenstein
      // projective = projective; over NilMod the instance is
      // 1-Iwanaga-Gorenstein and a dedicated oracle exists
      if (inner->kind == CatKind::nilmod) return true;
      return tower_is_vect_based(*inner);
  }
  return false;
}

Field CategoryInstance::base_field() const {
  return kind == CatKind::repcat ? inner->base_field() : field;
}

std::string CategoryInstance::describe() const {
  switch (kind) {
    case CatKind::vect:
      return field.is_rationals() ? "Vect(Q)"
                                  : "Vect(F" + std::to_string(field.p) + ")";
    case CatKind::nilmod:
      return (field.is_rationals() ? std::string("NilMod(Q,")
                                   : "NilMod(F" + std::to_string(field.p) +
                                         ",") +
             std::to_string(nil_order) + ")";
    case CatKind::repcat:
      return "Rep(" + std::to_string(shape.vertices.size()) + "v/" +
             std::to_string(shape.arrows.size()) + "a, " +
             inner->describe() + ")";
  }
  return "?";
}

CategoryRef make_vect(Field f) {
  auto c = std::make_shared<CategoryInstance>();
  c->kind = CatKind::vect;
  c->field = f;
  return c;
}

CategoryRef make_nilmod(Field f, std::size_t n) {
  if (n < 2) throw ValidationError("NilMod needs n >= 2");
  auto c = std::make_shared<CategoryInstance>();
  c->kind = CatKind::nilmod;
  c->field = f;
  c->nil_order = n;
  return c;
}

CategoryRef make_repcat(Quiver q, CategoryRef inner) {
  quiver::validate(q);
  if (!quiver::classify_quiver(q).acyclic)
    throw ValidationError("RepCat needs a finite acyclic quiver");
  auto c = std::make_shared<CategoryInstance>();
  c->kind = CatKind::repcat;
  c->shape = std::move(q);
  c->inner = std::move(inner);
  return c;
}

bool same_instance(const CategoryRef& a, const CategoryRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case CatKind::vect:
      return a->field == b->field;
    case CatKind::nilmod:
      return a->field == b->field && a->nil_order == b->nil_order;
    case CatKind::repcat:
      return a->shape == b->shape && same_instance(a->inner, b->inner);
  }
  return false;
}

CategoryRef dual_instance(const CategoryRef& c) {
  if (c->kind != CatKind::repcat) return c;
  return make_repcat(quiver::opposite(c->shape), dual_instance(c->inner));
}

const AbObject& Representation::vertex(const quiver::VertexId& v) const {
  auto it = at_vertex.find(v);
  if (it == at_vertex.end())
    throw ValidationError("representation has no vertex " + v);
  return it->second;
}

const AbMorphism& Representation::arrow(const quiver::ArrowId& a) const {
  auto it = at_arrow.find(a);
  if (it == at_arrow.end())
    throw ValidationError("representation has no arrow " + a);
  return it->second;
}

const AbMorphism& RepMorphism::component(const quiver::VertexId& v) const {
  auto it = components.find(v);
  if (it == components.end())
    throw ValidationError("morphism has no component at vertex " + v);
  return it->second;
}

bool operator==(const AbObject& a, const AbObject& b) {
  if (!same_instance(a.cat, b.cat)) return false;
  switch (a.cat->kind) {
    case CatKind::vect:
      return a.dim == b.dim;
    case CatKind::nilmod:
      return a.dim == b.dim && a.action == b.action;
    case CatKind::repcat:
      return *a.rep == *b.rep;
  }
  return false;
}

bool operator==(const AbMorphism& a, const AbMorphism& b) {
  if (!(a.domain == b.domain) || !(a.codomain == b.codomain)) return false;
  if (a.domain.cat->kind == CatKind::repcat) return *a.rep_map == *b.rep_map;
  return a.matrix == b.matrix;
}

bool operator==(const Representation& a, const Representation& b) {
  if (!same_instance(a.cat, b.cat)) return false;
  return a.at_vertex == b.at_vertex && a.at_arrow == b.at_arrow;
}

bool operator==(const RepMorphism& a, const RepMorphism& b) {
  return a.components == b.components && *a.domain == *b.domain &&
         *a.codomain == *b.codomain;
}

AbObject vect_object(CategoryRef cat, std::size_t dim) {
  if (cat->kind != CatKind::vect)
    throw ValidationError("vect_object outside Vect");
  AbObject x;
  x.cat = std::move(cat);
  x.dim = dim;
  return x;
}

AbObject nilmod_object(CategoryRef cat, Matrix action) {
  if (cat->kind != CatKind::nilmod)
    throw ValidationError("nilmod_object outside NilMod");
  AbObject x;
  x.cat = std::move(cat);
  x.dim = action.rows();
  x.action = std::move(action);
  validate_object(x);
  return x;
}

AbObject rep_object(CategoryRef cat, Representation rep) {
  if (cat->kind != CatKind::repcat)
    throw ValidationError("rep_object outside RepCat");
  AbObject x;
  x.cat = cat;
  x.rep = std::make_shared<Representation>(std::move(rep));
  return x;
}

AbObject zero_object(CategoryRef cat) {
  switch (cat->kind) {
    case CatKind::vect:
      return vect_object(cat, 0);
    case CatKind::nilmod:
      return nilmod_object(cat, Matrix(cat->field, 0, 0));
    case CatKind::repcat: {
      Representation r;
      r.cat = cat;
      for (const auto& v : cat->shape.vertices)
        r.at_vertex.emplace(v, zero_object(cat->inner));
      for (const auto& a : cat->shape.arrows)
        r.at_arrow.emplace(
            a.id, zero_morphism(r.at_vertex.at(a.src),
                                r.at_vertex.at(a.tgt)));
      return rep_object(cat, std::move(r));
    }
  }
  throw InternalError("zero_object: bad kind");
}

AbObject regular_module(CategoryRef nilmod_cat) {
  if (nilmod_cat->kind != CatKind::nilmod)
    throw ValidationError("regular_module outside NilMod");
  std::size_t n = nilmod_cat->nil_order;
  Matrix x(nilmod_cat->field, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) x.set(i + 1, i, 1);
  return nilmod_object(nilmod_cat, x);
}

AbObject free_module(CategoryRef nilmod_cat, std::size_t m) {
  if (m == 0) return zero_object(nilmod_cat);
  std::vector<Matrix> blocks(m, regular_module(nilmod_cat).action);
  return nilmod_object(nilmod_cat, Matrix::block_diag(blocks));
}

AbObject cyclic_module(CategoryRef nilmod_cat, std::size_t s) {
  if (nilmod_cat->kind != CatKind::nilmod)
    throw ValidationError("cyclic_module outside NilMod");
  if (s > nilmod_cat->nil_order)
    throw ValidationError("cyclic_module exceeds nilpotency order");
  if (s == 0) return zero_object(nilmod_cat);
  Matrix x(nilmod_cat->field, s, s);
  for (std::size_t i = 0; i + 1 < s; ++i) x.set(i + 1, i, 1);
  return nilmod_object(nilmod_cat, x);
}

AbMorphism make_morphism(AbObject domain, AbObject codomain, Matrix m) {
  AbMorphism f;
  f.domain = std::move(domain);
  f.codomain = std::move(codomain);
  f.matrix = std::move(m);
  validate_morphism(f);
  return f;
}

AbMorphism make_rep_morphism(AbObject domain, AbObject codomain,
                             RepMorphism m) {
  AbMorphism f;
  f.domain = std::move(domain);
  f.codomain = std::move(codomain);
  f.rep_map = std::make_shared<RepMorphism>(std::move(m));
  validate_morphism(f);
  return f;
}

std::size_t udim(const AbObject& x) {
  if (x.cat->kind != CatKind::repcat) return x.dim;
  std::size_t d = 0;
  for (const auto& [v, obj] : x.rep->at_vertex) d += udim(obj);
  return d;
}

Matrix umat(const AbMorphism& f) {
  if (f.domain.cat->kind != CatKind::repcat) return f.matrix;
  const Quiver& q = f.domain.cat->shape;
  std::vector<Matrix> blocks;
  for (const auto& v : q.vertices)
    blocks.push_back(umat(f.rep_map->component(v)));
  if (blocks.empty()) return Matrix(f.domain.cat->base_field(), 0, 0);
  return Matrix::block_diag(blocks);
}

AbMorphism identity_morphism(const AbObject& x) {
  if (x.cat->kind != CatKind::repcat)
    return make_morphism(x, x,
                         Matrix::identity(x.cat->field, x.dim));
  RepMorphism m;
  m.domain = x.rep;
  m.codomain = x.rep;
  for (const auto& [v, obj] : x.rep->at_vertex)
    m.components.emplace(v, identity_morphism(obj));
  return make_rep_morphism(x, x, std::move(m));
}

AbMorphism zero_morphism(const AbObject& domain, const AbObject& codomain) {
  if (domain.cat->kind != CatKind::repcat)
    return make_morphism(
        domain, codomain,
        Matrix(domain.cat->field, codomain.dim, domain.dim));
  RepMorphism m;
  m.domain = domain.rep;
  m.codomain = codomain.rep;
  for (const auto& [v, obj] : domain.rep->at_vertex)
    m.components.emplace(
        v, zero_morphism(obj, codomain.rep->vertex(v)));
  return make_rep_morphism(domain, codomain, std::move(m));
}

AbMorphism compose(const AbMorphism& g, const AbMorphism& f) {
  if (!(f.codomain == g.domain))
    throw ValidationError("compose: endpoint mismatch");
  if (f.domain.cat->kind != CatKind::repcat) {
    AbMorphism out;
    out.domain = f.domain;
    out.codomain = g.codomain;
    out.matrix = g.matrix * f.matrix;
    return out;
  }
  RepMorphism m;
  m.domain = f.domain.rep;
  m.codomain = g.codomain.rep;
  for (const auto& [v, comp] : f.rep_map->components)
    m.components.emplace(v, compose(g.rep_map->component(v), comp));
  AbMorphism out;
  out.domain = f.domain;
  out.codomain = g.codomain;
  out.rep_map = std::make_shared<RepMorphism>(std::move(m));
  return out;
}

AbMorphism add(const AbMorphism& f, const AbMorphism& g) {
  if (!(f.domain == g.domain) || !(f.codomain == g.codomain))
    throw ValidationError("add: endpoint mismatch");
  if (f.domain.cat->kind != CatKind::repcat) {
    AbMorphism out = f;
    out.matrix = f.matrix + g.matrix;
    return out;
  }
  RepMorphism m;
  m.domain = f.rep_map->domain;
  m.codomain = f.rep_map->codomain;
  for (const auto& [v, comp] : f.rep_map->components)
    m.components.emplace(v, add(comp, g.rep_map->component(v)));
  AbMorphism out = f;
  out.rep_map = std::make_shared<RepMorphism>(std::move(m));
  return out;
}

AbMorphism negate(const AbMorphism& f) {
  return scale(f, linalg::Scalar(f.domain.cat->base_field(), -1));
}

AbMorphism scale(const AbMorphism& f, const linalg::Scalar& s) {
  if (f.domain.cat->kind != CatKind::repcat) {
    AbMorphism out = f;
    out.matrix = f.matrix.scaled(s);
    return out;
  }
  RepMorphism m;
  m.domain = f.rep_map->domain;
  m.codomain = f.rep_map->codomain;
  for (const auto& [v, comp] : f.rep_map->components)
    m.components.emplace(v, scale(comp, s));
  AbMorphism out = f;
  out.rep_map = std::make_shared<RepMorphism>(std::move(m));
  return out;
}

AbMorphism morphism_from_umat(const AbObject& domain,
                              const AbObject& codomain, const Matrix& m) {
  if (m.rows() != udim(codomain) || m.cols() != udim(domain))
    throw ValidationError("morphism_from_umat: shape mismatch");
  if (domain.cat->kind != CatKind::repcat) {
    AbMorphism out;
    out.domain = domain;
    out.codomain = codomain;
    out.matrix = m;
    return out;
  }
  const Quiver& q = domain.cat->shape;
  RepMorphism rm;
  rm.domain = domain.rep;
  rm.codomain = codomain.rep;
  std::size_t row_off = 0, col_off = 0;
  for (const auto& v : q.vertices) {
    const AbObject& dv = domain.rep->vertex(v);
    const AbObject& cv = codomain.rep->vertex(v);
    std::size_t dr = udim(cv), dc = udim(dv);
    Matrix block(m.field(), dr, dc);
    for (std::size_t i = 0; i < dr; ++i)
      for (std::size_t j = 0; j < dc; ++j)
        block.set(i, j, m.at(row_off + i, col_off + j));
    rm.components.emplace(v, morphism_from_umat(dv, cv, block));
    row_off += dr;
    col_off += dc;
  }
  AbMorphism out;
  out.domain = domain;
  out.codomain = codomain;
  out.rep_map = std::make_shared<RepMorphism>(std::move(rm));
  return out;
}

DirectSum direct_sum(CategoryRef cat, const std::vector<AbObject>& parts) {
  for (const AbObject& p : parts)
    if (!same_instance(p.cat, cat))
      throw ValidationError("direct_sum: instance mismatch");
  DirectSum out;
  if (cat->kind == CatKind::vect || cat->kind == CatKind::nilmod) {
    std::size_t total = 0;
    for (const AbObject& p : parts) total += p.dim;
    AbObject sum;
    if (cat->kind == CatKind::vect) {
      sum = vect_object(cat, total);
    } else {
      Matrix action(cat->field, total, total);
      std::size_t off = 0;
      for (const AbObject& p : parts) {
        action.place(off, off, p.action);
        off += p.dim;
      }
      sum = nilmod_object(cat, std::move(action));
    }
    std::size_t off = 0;
    for (const AbObject& p : parts) {
      Matrix inc(cat->field, total, p.dim);
      Matrix prj(cat->field, p.dim, total);
      for (std::size_t i = 0; i < p.dim; ++i) {
        inc.set(off + i, i, 1);
        prj.set(i, off + i, 1);
      }
      out.inclusions.push_back(make_morphism(p, sum, std::move(inc)));
      out.projections.push_back(make_morphism(sum, p, std::move(prj)));
      off += p.dim;
    }
    out.object = std::move(sum);
    return out;
  }
  // repcat: vertex-wise
  Representation sum_rep;
  sum_rep.cat = cat;
  std::map<quiver::VertexId, DirectSum> vertex_sums;
  for (const auto& v : cat->shape.vertices) {
    std::vector<AbObject> vparts;
    for (const AbObject& p : parts) vparts.push_back(p.rep->vertex(v));
    vertex_sums.emplace(v, direct_sum(cat->inner, vparts));
    sum_rep.at_vertex.emplace(v, vertex_sums.at(v).object);
  }
  for (const auto& a : cat->shape.arrows) {
    const DirectSum& src = vertex_sums.at(a.src);
    const DirectSum& tgt = vertex_sums.at(a.tgt);
    AbMorphism arrow = zero_morphism(src.object, tgt.object);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      arrow = add(arrow,
                  compose(tgt.inclusions[i],
                          compose(parts[i].rep->arrow(a.id),
                                  src.projections[i])));
    }
    sum_rep.at_arrow.emplace(a.id, std::move(arrow));
  }
  AbObject sum = rep_object(cat, std::move(sum_rep));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    RepMorphism inc, prj;
    inc.domain = parts[i].rep;
    inc.codomain = sum.rep;
    prj.domain = sum.rep;
    prj.codomain = parts[i].rep;
    for (const auto& v : cat->shape.vertices) {
      inc.components.emplace(v, vertex_sums.at(v).inclusions[i]);
      prj.components.emplace(v, vertex_sums.at(v).projections[i]);
    }
    out.inclusions.push_back(
        make_rep_morphism(parts[i], sum, std::move(inc)));
    out.projections.push_back(
        make_rep_morphism(sum, parts[i], std::move(prj)));
  }
  out.object = std::move(sum);
  return out;
}

bool is_monic(const AbMorphism& f) {
  Matrix m = umat(f);
  return linalg::rank_and_kernel(m).rank == m.cols();
}

bool is_epi(const AbMorphism& f) {
  Matrix m = umat(f);
  return linalg::rank_and_kernel(m).rank == m.rows();
}

bool is_iso(const AbMorphism& f) {
  Matrix m = umat(f);
  return m.rows() == m.cols() &&
         linalg::rank_and_kernel(m).rank == m.rows();
}

void validate_object(const AbObject& x) {
  switch (x.cat->kind) {
    case CatKind::vect:
      return;
    case CatKind::nilmod: {
      if (x.action.rows() != x.dim || x.action.cols() != x.dim)
        throw ValidationError("action matrix shape mismatch");
      if (!(x.action.field() == x.cat->field))
        throw FieldMismatch("action over wrong field");
      if (!x.action.power(x.cat->nil_order).is_zero())
        throw ValidationError("action fails x^n = 0");
      return;
    }
    case CatKind::repcat: {
      const Representation& r = *x.rep;
      if (!same_instance(r.cat, x.cat))
        throw ValidationError("representation instance mismatch");
      for (const auto& v : x.cat->shape.vertices) {
        validate_object(r.vertex(v));
        if (!same_instance(r.vertex(v).cat, x.cat->inner))
          throw ValidationError("vertex object in wrong instance");
      }
      for (const auto& a : x.cat->shape.arrows) {
        const AbMorphism& f = r.arrow(a.id);
        if (!(f.domain == r.vertex(a.src)) ||
            !(f.codomain == r.vertex(a.tgt)))
          throw ValidationError("arrow " + a.id +
                                " has mismatched endpoints");
        validate_morphism(f);
      }
      return;
    }
  }
}

void validate_morphism(const AbMorphism& f) {
  if (!same_instance(f.domain.cat, f.codomain.cat))
    throw ValidationError("morphism across instances");
  switch (f.domain.cat->kind) {
    case CatKind::vect:
      if (f.matrix.rows() != f.codomain.dim ||
          f.matrix.cols() != f.domain.dim)
        throw ValidationError("matrix shape mismatch");
      return;
    case CatKind::nilmod: {
      if (f.matrix.rows() != f.codomain.dim ||
          f.matrix.cols() != f.domain.dim)
        throw ValidationError("matrix shape mismatch");
      if (!(f.codomain.action * f.matrix == f.matrix * f.domain.action))
        throw IntertwinerViolation(
            "matrix does not intertwine the actions");
      return;
    }
    case CatKind::repcat: {
      const RepMorphism& m = *f.rep_map;
      const Quiver& q = f.domain.cat->shape;
      for (const auto& v : q.vertices) {
        const AbMorphism& c = m.component(v);
        if (!(c.domain == f.domain.rep->vertex(v)) ||
            !(c.codomain == f.codomain.rep->vertex(v)))
          throw ValidationError("component endpoints mismatch at " + v);
        validate_morphism(c);
      }
      for (const auto& a : q.arrows) {
        AbMorphism lhs = compose(m.component(a.tgt),
                                 f.domain.rep->arrow(a.id));
        AbMorphism rhs = compose(f.codomain.rep->arrow(a.id),
                                 m.component(a.src));
        if (!(umat(lhs) == umat(rhs)))
          throw IntertwinerViolation("square at arrow " + a.id +
                                     " does not commute");
      }
      return;
    }
  }
}

}  // namespace repkit::cat
