#include "repkit/abcat.hpp"

#include <algorithm>

#include "repkit/gorenstein.hpp"

namespace repkit::cat {

using linalg::Scalar;

namespace {

// Matrix entries flattened row-major into a column vector.
Matrix vec(const Matrix& m) {
  Matrix out(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.set(i * m.cols() + j, 0, m.at(i, j));
  return out;
}

// Kernel + induced structure for a Vect/NilMod morphism.
std::pair<AbObject, AbMorphism> kernel_flat(const AbMorphism& f) {
  Matrix k = linalg::rank_and_kernel(f.matrix).kernel_basis;
  AbObject ker;
  if (f.domain.cat->kind == CatKind::vect) {
    ker = vect_object(f.domain.cat, k.cols());
  } else {
    // induced action a with K a = N_dom K; unique since K is monic
    auto sol = linalg::solve_linear(k, f.domain.action * k);
    internal_check(sol.solution.has_value(), "kernel action solvable");
    ker = nilmod_object(f.domain.cat, *sol.solution);
  }
  return {ker, make_morphism(ker, f.domain, std::move(k))};
}

std::pair<AbObject, AbMorphism> cokernel_flat(const AbMorphism& f) {
  linalg::CokernelData cd = linalg::cokernel_data(f.matrix);
  AbObject coker;
  if (f.domain.cat->kind == CatKind::vect) {
    coker = vect_object(f.domain.cat, cd.dim);
  } else {
    // induced action a with a P = P N_cod; unique since P is epi
    auto sol = linalg::solve_linear(
        cd.proj.transpose(), (cd.proj * f.codomain.action).transpose());
    internal_check(sol.solution.has_value(), "cokernel action solvable");
    coker = nilmod_object(f.domain.cat, sol.solution->transpose());
  }
  return {coker, make_morphism(f.codomain, coker, std::move(cd.proj))};
}

std::pair<AbObject, AbMorphism> kernel_rep(const AbMorphism& f) {
  CategoryRef cat = f.domain.cat;
  const Quiver& q = cat->shape;
  Representation ker;
  ker.cat = cat;
  std::map<quiver::VertexId, AbMorphism> incls;
  for (const auto& v : q.vertices) {
    auto [kv, iv] = kernel_of(f.rep_map->component(v));
    ker.at_vertex.emplace(v, kv);
    incls.emplace(v, iv);
  }
  for (const auto& a : q.arrows) {
    // induced map: kappa_tgt . L = F(a) . kappa_src
    AbMorphism rhs =
        compose(f.domain.rep->arrow(a.id), incls.at(a.src));
    ker.at_arrow.emplace(a.id,
                         factor_through_monic(incls.at(a.tgt), rhs));
  }
  AbObject kobj = rep_object(cat, std::move(ker));
  RepMorphism inc;
  inc.domain = kobj.rep;
  inc.codomain = f.domain.rep;
  for (const auto& v : q.vertices) {
    AbMorphism c = incls.at(v);
    c.domain = kobj.rep->vertex(v);
    inc.components.emplace(v, c);
  }
  return {kobj, make_rep_morphism(kobj, f.domain, std::move(inc))};
}

std::pair<AbObject, AbMorphism> cokernel_rep(const AbMorphism& f) {
  CategoryRef cat = f.domain.cat;
  const Quiver& q = cat->shape;
  Representation coker;
  coker.cat = cat;
  std::map<quiver::VertexId, AbMorphism> projs;
  for (const auto& v : q.vertices) {
    auto [cv, pv] = cokernel_of(f.rep_map->component(v));
    coker.at_vertex.emplace(v, cv);
    projs.emplace(v, pv);
  }
  for (const auto& a : q.arrows) {
    // induced map: C(a) . rho_src = rho_tgt . G(a)
    AbMorphism rhs =
        compose(projs.at(a.tgt), f.codomain.rep->arrow(a.id));
    coker.at_arrow.emplace(a.id,
                           factor_through_epi(projs.at(a.src), rhs));
  }
  AbObject cobj = rep_object(cat, std::move(coker));
  RepMorphism prj;
  prj.domain = f.codomain.rep;
  prj.codomain = cobj.rep;
  for (const auto& v : q.vertices) {
    AbMorphism c = projs.at(v);
    c.codomain = cobj.rep->vertex(v);
    prj.components.emplace(v, c);
  }
  return {cobj, make_rep_morphism(f.codomain, cobj, std::move(prj))};
}

}  // namespace

std::pair<AbObject, AbMorphism> kernel_of(const AbMorphism& f) {
  if (f.domain.cat->kind == CatKind::repcat) return kernel_rep(f);
  return kernel_flat(f);
}

std::pair<AbObject, AbMorphism> cokernel_of(const AbMorphism& f) {
  if (f.domain.cat->kind == CatKind::repcat) return cokernel_rep(f);
  return cokernel_flat(f);
}

KernelCokernel kernel_cokernel(const AbMorphism& f) {
  validate_morphism(f);
  KernelCokernel out;
  auto [k, ki] = kernel_of(f);
  auto [c, cp] = cokernel_of(f);
  out.kernel = std::move(k);
  out.kernel_inclusion = std::move(ki);
  out.cokernel = std::move(c);
  out.cokernel_projection = cp;
  out.image = kernel_of(cp).first;
  return out;
}

AbMorphism factor_through_monic(const AbMorphism& monic,
                                const AbMorphism& h) {
  auto sol = linalg::solve_linear(umat(monic), umat(h));
  if (!sol.solution)
    throw InternalError("factor_through_monic: no factorization");
  internal_check(sol.solution_space_dim == 0,
                 "factor_through_monic: not monic");
  return morphism_from_umat(h.domain, monic.domain, *sol.solution);
}

AbMorphism factor_through_epi(const AbMorphism& epi, const AbMorphism& h) {
  auto sol = linalg::solve_linear(umat(epi).transpose(),
                                  umat(h).transpose());
  if (!sol.solution)
    throw InternalError("factor_through_epi: no factorization");
  internal_check(sol.solution_space_dim == 0,
                 "factor_through_epi: not epi");
  return morphism_from_umat(epi.codomain, h.codomain,
                            sol.solution->transpose());
}

std::vector<AbMorphism> hom_basis(const AbObject& x, const AbObject& y) {
  if (!same_instance(x.cat, y.cat))
    throw ValidationError("hom_basis across instances");

  if (x.cat->kind != CatKind::repcat) {
    const std::size_t dx = x.dim, dy = y.dim;
    Field f = x.cat->field;
    Matrix nx = x.cat->kind == CatKind::nilmod ? x.action
                                               : Matrix(f, dx, dx);
    Matrix ny = y.cat->kind == CatKind::nilmod ? y.action
                                               : Matrix(f, dy, dy);
    // intertwining N_y M - M N_x = 0, M flattened row-major
    Matrix sys(f, dy * dx, dy * dx);
    for (std::size_t i = 0; i < dy; ++i)
      for (std::size_t j = 0; j < dx; ++j) {
        std::size_t row = i * dx + j;
        for (std::size_t k = 0; k < dy; ++k)
          sys.set(row, k * dx + j,
                  sys.at(row, k * dx + j) + ny.at(i, k));
        for (std::size_t l = 0; l < dx; ++l)
          sys.set(row, i * dx + l,
                  sys.at(row, i * dx + l) - nx.at(l, j));
      }
    Matrix basis = linalg::rank_and_kernel(sys).kernel_basis;
    std::vector<AbMorphism> out;
    for (std::size_t b = 0; b < basis.cols(); ++b) {
      Matrix m(f, dy, dx);
      for (std::size_t i = 0; i < dy; ++i)
        for (std::size_t j = 0; j < dx; ++j)
          m.set(i, j, basis.at(i * dx + j, b));
      out.push_back(make_morphism(x, y, std::move(m)));
    }
    return out;
  }

  // representations: coordinates over the inner hom bases per vertex,
  // constrained by the commuting squares
  const Quiver& q = x.cat->shape;
  Field f = x.cat->base_field();
  std::map<quiver::VertexId, std::vector<AbMorphism>> inner;
  std::map<quiver::VertexId, std::size_t> offset;
  std::size_t vars = 0;
  for (const auto& v : q.vertices) {
    inner[v] = hom_basis(x.rep->vertex(v), y.rep->vertex(v));
    offset[v] = vars;
    vars += inner[v].size();
  }
  std::vector<std::vector<Scalar>> rows;
  for (const auto& a : q.arrows) {
    const AbMorphism& fa = x.rep->arrow(a.id);
    const AbMorphism& ga = y.rep->arrow(a.id);
    std::size_t dr = udim(y.rep->vertex(a.tgt));
    std::size_t dc = udim(x.rep->vertex(a.src));
    if (dr * dc == 0) continue;
    // eta_tgt . F(a) - G(a) . eta_src = 0, entrywise
    std::vector<Matrix> tgt_terms, src_terms;
    for (const AbMorphism& b : inner[a.tgt])
      tgt_terms.push_back(umat(compose(b, fa)));
    for (const AbMorphism& b : inner[a.src])
      src_terms.push_back(umat(compose(ga, b)));
    for (std::size_t i = 0; i < dr; ++i)
      for (std::size_t j = 0; j < dc; ++j) {
        std::vector<Scalar> row(vars, Scalar(f, 0L));
        for (std::size_t t = 0; t < tgt_terms.size(); ++t)
          row[offset[a.tgt] + t] = tgt_terms[t].at(i, j);
        for (std::size_t t = 0; t < src_terms.size(); ++t)
          row[offset[a.src] + t] =
              row[offset[a.src] + t] - src_terms[t].at(i, j);
        rows.push_back(std::move(row));
      }
  }
  Matrix sys(f, rows.size(), vars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < vars; ++j) sys.set(i, j, rows[i][j]);
  Matrix basis = linalg::rank_and_kernel(sys).kernel_basis;

  std::vector<AbMorphism> out;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    RepMorphism m;
    m.domain = x.rep;
    m.codomain = y.rep;
    for (const auto& v : q.vertices) {
      AbMorphism comp =
          zero_morphism(x.rep->vertex(v), y.rep->vertex(v));
      for (std::size_t t = 0; t < inner[v].size(); ++t) {
        Scalar c = basis.at(offset[v] + t, b);
        if (!c.is_zero()) comp = add(comp, scale(inner[v][t], c));
      }
      m.components.emplace(v, std::move(comp));
    }
    out.push_back(make_rep_morphism(x, y, std::move(m)));
  }
  return out;
}

std::size_t hom_dim(const AbObject& x, const AbObject& y) {
  return hom_basis(x, y).size();
}

Matrix hom_coordinates(const std::vector<AbMorphism>& basis,
                       const AbMorphism& f) {
  Field fld = f.domain.cat->base_field();
  Matrix target = vec(umat(f));
  if (basis.empty()) {
    internal_check(target.is_zero(), "hom_coordinates: empty basis");
    return Matrix(fld, 0, 1);
  }
  std::vector<Matrix> cols;
  for (const AbMorphism& b : basis) cols.push_back(vec(umat(b)));
  auto sol = linalg::solve_linear(Matrix::hconcat(cols), target);
  internal_check(sol.solution.has_value(),
                 "hom_coordinates: morphism outside span");
  return *sol.solution;
}

std::vector<std::size_t> jordan_type(const AbObject& x) {
  if (x.cat->kind != CatKind::nilmod)
    throw ValidationError("jordan_type outside NilMod");
  return linalg::nilpotent_jordan(x.action).blocks;
}

namespace {

// Reversal permutation rho with rho * S * rho = S^T for the regular
// action S (multiplication by x).
Matrix reversal(Field f, std::size_t n) {
  Matrix r(f, n, n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, n - 1 - i, 1);
  return r;
}

// Epi R^s -> x assembled from Jordan chain generators.
AbMorphism nilmod_cover(const AbObject& x) {
  CategoryRef cat = x.cat;
  std::size_t n = cat->nil_order;
  linalg::JordanData jd = linalg::nilpotent_jordan(x.action);
  std::size_t s = jd.blocks.size();
  AbObject src = free_module(cat, s);
  Matrix c(cat->field, x.dim, s * n);
  std::size_t col_off = 0, chain_off = 0;
  for (std::size_t b = 0; b < s; ++b) {
    // chain columns are [N^{s-1} g, ..., N g, g]; generator g is last
    Matrix g = jd.basis.columns({chain_off + jd.blocks[b] - 1});
    Matrix pow = g;
    for (std::size_t j = 0; j < n; ++j) {
      c.place(0, col_off + j, pow);
      pow = x.action * pow;
    }
    chain_off += jd.blocks[b];
    col_off += n;
  }
  return make_morphism(src, x, std::move(c));
}

AbMorphism nilmod_envelope(const AbObject& x) {
  CategoryRef cat = x.cat;
  std::size_t n = cat->nil_order;
  AbObject xd = dualize(x);
  AbMorphism cover_dual = nilmod_cover(xd);
  std::size_t t = cover_dual.domain.dim / n;
  // (R^t)^+ -> R^t via the per-copy reversal
  std::vector<Matrix> rhos(t, reversal(cat->field, n));
  AbObject target = free_module(cat, t);
  Matrix env = (t == 0 ? Matrix(cat->field, 0, x.dim)
                       : Matrix::block_diag(rhos) *
                             cover_dual.matrix.transpose());
  return make_morphism(x, target, std::move(env));
}

}  // namespace

ProjInjReport projective_injective_test(const AbObject& x) {
  ProjInjReport out;
  switch (x.cat->kind) {
    case CatKind::vect:
      out.is_projective = true;
      out.is_injective = true;
      out.cover = identity_morphism(x);
      out.envelope = identity_morphism(x);
      return out;
    case CatKind::nilmod: {
      std::vector<std::size_t> blocks = jordan_type(x);
      bool full = std::all_of(
          blocks.begin(), blocks.end(),
          [&](std::size_t b) { return b == x.cat->nil_order; });
      out.is_projective = full;
      out.is_injective = full;  // k[x]/(x^n) is self-injective
      out.cover = nilmod_cover(x);
      out.envelope = nilmod_envelope(x);
      internal_check(is_epi(*out.cover), "cover is epi");
      internal_check(is_monic(*out.envelope), "envelope is monic");
      return out;
    }
    case CatKind::repcat: {
      gorenstein::SplitTest pt = gorenstein::is_projective_rep(x);
      gorenstein::SplitTest it = gorenstein::is_injective_rep(x);
      out.is_projective = pt.holds;
      out.is_injective = it.holds;
      out.cover = pt.structure_map;
      out.envelope = it.structure_map;
      return out;
    }
  }
  throw InternalError("projective_injective_test: bad kind");
}

AbObject dualize(const AbObject& x) {
  if (!x.cat->has_dual()) throw CapabilityMissing("no dual");
  switch (x.cat->kind) {
    case CatKind::vect:
      return x;
    case CatKind::nilmod:
      return nilmod_object(x.cat, x.action.transpose());
    case CatKind::repcat: {
      CategoryRef dcat = dual_instance(x.cat);
      Representation d;
      d.cat = dcat;
      for (const auto& [v, obj] : x.rep->at_vertex)
        d.at_vertex.emplace(v, dualize(obj));
      for (const auto& a : x.cat->shape.arrows) {
        // arrow a: w -> v becomes a: v -> w with the transposed map
        d.at_arrow.emplace(a.id, dualize(x.rep->arrow(a.id)));
      }
      return rep_object(dcat, std::move(d));
    }
  }
  throw InternalError("dualize: bad kind");
}

AbMorphism dualize(const AbMorphism& f) {
  if (f.domain.cat->kind != CatKind::repcat) {
    AbMorphism out;
    out.domain = dualize(f.codomain);
    out.codomain = dualize(f.domain);
    out.matrix = f.matrix.transpose();
    return out;
  }
  AbObject dd = dualize(f.codomain);
  AbObject dc = dualize(f.domain);
  RepMorphism m;
  m.domain = dd.rep;
  m.codomain = dc.rep;
  for (const auto& [v, comp] : f.rep_map->components)
    m.components.emplace(v, dualize(comp));
  AbMorphism out;
  out.domain = std::move(dd);
  out.codomain = std::move(dc);
  out.rep_map = std::make_shared<RepMorphism>(std::move(m));
  return out;
}

AbMorphism double_dual_iso(const AbObject& x) {
  AbObject dd = dualize(dualize(x));
  internal_check(dd == x, "double dual is the identity encoding");
  return identity_morphism(x);
}

namespace {

// splitmix64, used for the deterministic hom-space iso search
std::uint64_t mix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::optional<AbMorphism> find_isomorphism(const AbObject& x,
                                           const AbObject& y) {
  if (!same_instance(x.cat, y.cat)) return std::nullopt;
  if (udim(x) != udim(y)) return std::nullopt;
  switch (x.cat->kind) {
    case CatKind::vect:
      return identity_morphism(x);  // same dimension
    case CatKind::nilmod: {
      linalg::JordanData jx = linalg::nilpotent_jordan(x.action);
      linalg::JordanData jy = linalg::nilpotent_jordan(y.action);
      if (jx.blocks != jy.blocks) return std::nullopt;
      Matrix g = jy.basis * linalg::inverse(jx.basis);
      AbMorphism iso = make_morphism(x, y, std::move(g));
      internal_check(is_iso(iso), "jordan conjugation isomorphism");
      return iso;
    }
    case CatKind::repcat: {
      for (const auto& v : x.cat->shape.vertices)
        if (udim(x.rep->vertex(v)) != udim(y.rep->vertex(v)))
          return std::nullopt;
      std::vector<AbMorphism> basis = hom_basis(x, y);
      if (basis.empty()) return udim(x) == 0
                                    ? std::optional(zero_morphism(x, y))
                                    : std::nullopt;
      for (const AbMorphism& b : basis)
        if (is_iso(b)) return b;
      // deterministic random combinations of the basis
      Field f = x.cat->base_field();
      std::uint64_t state = 0x52657049736f5355ULL ^ udim(x);
      for (int trial = 0; trial < 256; ++trial) {
        AbMorphism cand = zero_morphism(x, y);
        for (const AbMorphism& b : basis) {
          long coeff;
          if (f.is_rationals()) {
            coeff = static_cast<long>(mix(state) % 7) - 3;
          } else {
            coeff = static_cast<long>(mix(state) % f.p);
          }
          if (coeff != 0) cand = add(cand, scale(b, Scalar(f, coeff)));
        }
        if (is_iso(cand)) return cand;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace repkit::cat
