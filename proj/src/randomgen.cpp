#include "repkit/randomgen.hpp"

#include <algorithm>
#include <numeric>

namespace repkit::randomgen {

using cat::AbMorphism;
using cat::CatKind;
using cat::Matrix;
using cat::udim;
using linalg::Field;
using linalg::Scalar;

namespace {

Scalar random_scalar(Field f, Rng& rng) {
  if (f.is_rationals()) return Scalar(f, rng.range(-3, 3));
  return Scalar(f, static_cast<long>(rng.below(f.p)));
}

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols,
                     Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, random_scalar(f, rng));
  return m;
}

Matrix random_invertible(Field f, std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix m = random_matrix(f, n, n, rng);
    if (linalg::rank_and_kernel(m).rank == n) return m;
  }
  return Matrix::identity(f, n);
}

std::vector<std::size_t> random_partition(std::size_t total,
                                          std::size_t max_part,
                                          Rng& rng) {
  std::vector<std::size_t> parts;
  while (total > 0) {
    std::size_t p = 1 + rng.below(std::min(max_part, total));
    parts.push_back(p);
    total -= p;
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

quiver::Quiver random_left_rooted_quiver(Rng& rng,
                                         std::size_t max_vertices,
                                         std::size_t max_arrows,
                                         std::size_t max_paths) {
  for (;;) {
    quiver::Quiver q;
    std::size_t nv = 2 + rng.below(max_vertices - 1);
    for (std::size_t i = 1; i <= nv; ++i)
      q.vertices.push_back(std::to_string(i));
    std::vector<std::size_t> order(nv);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = nv; i > 1; --i)
      std::swap(order[i - 1], order[rng.below(i)]);
    std::size_t na = 1 + rng.below(max_arrows);
    for (std::size_t a = 1; a <= na; ++a) {
      std::size_t i = rng.below(nv - 1);
      std::size_t j = i + 1 + rng.below(nv - i - 1);
      q.arrows.push_back(quiver::Arrow{"a" + std::to_string(a),
                                       q.vertices[order[i]],
                                       q.vertices[order[j]]});
    }
    // keep path sets small: sum of adjacency powers, counted exactly
    std::vector<std::vector<std::uint64_t>> adj(
        nv, std::vector<std::uint64_t>(nv, 0));
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < nv; ++i) idx[q.vertices[i]] = i;
    for (const auto& a : q.arrows) ++adj[idx[a.src]][idx[a.tgt]];
    std::vector<std::vector<std::uint64_t>> total = adj, power = adj;
    for (std::size_t step = 2; step <= nv; ++step) {
      std::vector<std::vector<std::uint64_t>> next(
          nv, std::vector<std::uint64_t>(nv, 0));
      for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t k = 0; k < nv; ++k)
          for (std::size_t j = 0; j < nv; ++j)
            next[i][j] += power[i][k] * adj[k][j];
      power = next;
      for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) total[i][j] += power[i][j];
    }
    std::uint64_t worst = 0;
    for (const auto& row : total)
      for (std::uint64_t v : row) worst = std::max(worst, v);
    if (worst <= max_paths) return q;
  }
}

AbObject random_object(CategoryRef inner, Rng& rng, std::size_t max_dim) {
  switch (inner->kind) {
    case CatKind::vect:
      return cat::vect_object(inner, rng.below(max_dim + 1));
    case CatKind::nilmod: {
      std::size_t dim = rng.below(max_dim + 1);
      if (dim == 0) return cat::zero_object(inner);
      std::vector<std::size_t> parts =
          random_partition(dim, inner->nil_order, rng);
      Matrix j = linalg::jordan_matrix(inner->field, parts);
      Matrix t = random_invertible(inner->field, dim, rng);
      return cat::nilmod_object(inner,
                                t * j * linalg::inverse(t));
    }
    case CatKind::repcat:
      return random_rep(inner, rng, max_dim);
  }
  throw InternalError("random_object: bad kind");
}

AbObject random_class_object(CategoryRef inner, Rng& rng,
                             std::size_t max_dim,
                             const std::string& cls) {
  if (cls == "all") return random_object(inner, rng, max_dim);
  if (cls == "zero_mix")
    return rng.chance(1, 2) ? cat::zero_object(inner)
                            : random_object(inner, rng, max_dim);
  if (cls == "proj") {
    if (inner->kind == CatKind::vect)
      return cat::vect_object(inner, rng.below(max_dim + 1));
    if (inner->kind == CatKind::nilmod) {
      std::size_t copies = rng.below(max_dim / inner->nil_order + 1);
      if (copies == 0) return cat::zero_object(inner);
      Matrix t = random_invertible(inner->field,
                                   copies * inner->nil_order, rng);
      return cat::nilmod_object(
          inner, t * cat::free_module(inner, copies).action *
                     linalg::inverse(t));
    }
  }
  throw ValidationError("random_class_object: unknown class " + cls);
}

AbMorphism random_morphism(const AbObject& x, const AbObject& y,
                           Rng& rng) {
  std::vector<AbMorphism> basis = cat::hom_basis(x, y);
  AbMorphism out = cat::zero_morphism(x, y);
  Field f = x.cat->base_field();
  for (const AbMorphism& b : basis) {
    Scalar c = random_scalar(f, rng);
    if (!c.is_zero()) out = cat::add(out, cat::scale(b, c));
  }
  return out;
}

AbObject random_rep(CategoryRef repcat, Rng& rng, std::size_t max_dim) {
  if (repcat->kind != CatKind::repcat)
    throw ValidationError("random_rep needs a RepCat instance");
  cat::Representation rep;
  rep.cat = repcat;
  for (const auto& v : repcat->shape.vertices)
    rep.at_vertex.emplace(v,
                          random_object(repcat->inner, rng, max_dim));
  for (const auto& a : repcat->shape.arrows)
    rep.at_arrow.emplace(a.id,
                         random_morphism(rep.at_vertex.at(a.src),
                                         rep.at_vertex.at(a.tgt), rng));
  return cat::rep_object(repcat, std::move(rep));
}

Extension random_extension(const AbObject& a, const AbObject& c,
                           Rng& rng) {
  CategoryRef inner = a.cat;
  Field f = inner->base_field();
  std::size_t da = udim(a), dc = udim(c);
  Extension out;
  if (inner->kind == CatKind::repcat)
    return random_rep_extension(a, c, rng);

  Matrix action(f, 0, 0);
  if (inner->kind == CatKind::nilmod) {
    std::size_t n = inner->nil_order;
    // theta with sum_{i+j=n-1} Na^i theta Nc^j = 0, so the block
    // triangular action stays nilpotent of order n
    std::vector<Matrix> pa{Matrix::identity(f, da)};
    std::vector<Matrix> pc{Matrix::identity(f, dc)};
    for (std::size_t i = 1; i < n; ++i) {
      pa.push_back(pa.back() * a.action);
      pc.push_back(pc.back() * c.action);
    }
    Matrix sys(f, da * dc, da * dc);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t s = 0; s < dc; ++s) {
        std::size_t row = r * dc + s;
        for (std::size_t k = 0; k < da; ++k)
          for (std::size_t l = 0; l < dc; ++l) {
            Scalar coeff(f, 0L);
            for (std::size_t i = 0; i < n; ++i)
              coeff = coeff + pa[i].at(r, k) * pc[n - 1 - i].at(l, s);
            std::size_t col = k * dc + l;
            sys.set(row, col, sys.at(row, col) + coeff);
          }
      }
    Matrix basis = linalg::rank_and_kernel(sys).kernel_basis;
    Matrix theta(f, da, dc);
    for (std::size_t b = 0; b < basis.cols(); ++b) {
      Scalar coeff = random_scalar(f, rng);
      if (coeff.is_zero()) continue;
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < dc; ++l)
          theta.set(k, l,
                    theta.at(k, l) + basis.at(k * dc + l, b) * coeff);
    }
    action = Matrix(f, da + dc, da + dc);
    action.place(0, 0, a.action);
    action.place(0, da, theta);
    action.place(da, da, c.action);
    out.total = cat::nilmod_object(inner, std::move(action));
  } else {
    out.total = cat::vect_object(inner, da + dc);
  }

  Matrix inc(f, da + dc, da), prj(f, dc, da + dc);
  for (std::size_t i = 0; i < da; ++i) inc.set(i, i, 1);
  for (std::size_t i = 0; i < dc; ++i) prj.set(i, da + i, 1);
  out.inclusion = cat::make_morphism(a, out.total, std::move(inc));
  out.projection = cat::make_morphism(out.total, c, std::move(prj));
  return out;
}

Extension random_rep_extension(const AbObject& a, const AbObject& c,
                               Rng& rng) {
  CategoryRef repcat = a.cat;
  if (repcat->kind != CatKind::repcat)
    throw ValidationError("random_rep_extension needs representations");
  CategoryRef inner = repcat->inner;
  if (inner->kind == CatKind::repcat)
    throw ValidationError("nested extension generation not supported");
  Field f = repcat->base_field();
  const quiver::Quiver& q = repcat->shape;
  const bool modular = inner->kind == CatKind::nilmod;
  const std::size_t n = modular ? inner->nil_order : 1;

  // joint homogeneous system for all theta_v (vertex extension blocks)
  // and eta_ar (arrow correction blocks)
  std::map<quiver::VertexId, std::size_t> theta_off;
  std::map<quiver::ArrowId, std::size_t> eta_off;
  std::size_t vars = 0;
  auto da = [&](const quiver::VertexId& v) {
    return udim(a.rep->vertex(v));
  };
  auto dc = [&](const quiver::VertexId& v) {
    return udim(c.rep->vertex(v));
  };
  for (const auto& v : q.vertices) {
    theta_off[v] = vars;
    vars += modular ? da(v) * dc(v) : 0;
  }
  for (const auto& ar : q.arrows) {
    eta_off[ar.id] = vars;
    vars += da(ar.tgt) * dc(ar.src);
  }

  std::vector<std::vector<Scalar>> rows;
  auto add_row = [&]() -> std::vector<Scalar>& {
    rows.emplace_back(vars, Scalar(f, 0L));
    return rows.back();
  };

  if (modular) {
    for (const auto& v : q.vertices) {
      const Matrix& na = a.rep->vertex(v).action;
      const Matrix& nc = c.rep->vertex(v).action;
      std::vector<Matrix> pa{Matrix::identity(f, da(v))};
      std::vector<Matrix> pc{Matrix::identity(f, dc(v))};
      for (std::size_t i = 1; i < n; ++i) {
        pa.push_back(pa.back() * na);
        pc.push_back(pc.back() * nc);
      }
      for (std::size_t r = 0; r < da(v); ++r)
        for (std::size_t s = 0; s < dc(v); ++s) {
          auto& row = add_row();
          for (std::size_t k = 0; k < da(v); ++k)
            for (std::size_t l = 0; l < dc(v); ++l) {
              Scalar coeff(f, 0L);
              for (std::size_t i = 0; i < n; ++i)
                coeff =
                    coeff + pa[i].at(r, k) * pc[n - 1 - i].at(l, s);
              row[theta_off[v] + k * dc(v) + l] = coeff;
            }
        }
    }
  }
  for (const auto& ar : q.arrows) {
    // N_a(tgt) eta - eta N_c(src) + theta_tgt C(ar) - A(ar) theta_src
    const quiver::VertexId& w = ar.src;
    const quiver::VertexId& v = ar.tgt;
    Matrix na = modular ? a.rep->vertex(v).action
                        : Matrix(f, da(v), da(v));
    Matrix nc = modular ? c.rep->vertex(w).action
                        : Matrix(f, dc(w), dc(w));
    Matrix amap = umat(a.rep->arrow(ar.id));
    Matrix cmap = umat(c.rep->arrow(ar.id));
    for (std::size_t r = 0; r < da(v); ++r)
      for (std::size_t s = 0; s < dc(w); ++s) {
        auto& row = add_row();
        for (std::size_t k = 0; k < da(v); ++k)
          row[eta_off[ar.id] + k * dc(w) + s] =
              row[eta_off[ar.id] + k * dc(w) + s] + na.at(r, k);
        for (std::size_t l = 0; l < dc(w); ++l)
          row[eta_off[ar.id] + r * dc(w) + l] =
              row[eta_off[ar.id] + r * dc(w) + l] - nc.at(l, s);
        if (modular) {
          for (std::size_t l = 0; l < dc(v); ++l)
            row[theta_off[v] + r * dc(v) + l] =
                row[theta_off[v] + r * dc(v) + l] + cmap.at(l, s);
          for (std::size_t k = 0; k < da(w); ++k)
            row[theta_off[w] + k * dc(w) + s] =
                row[theta_off[w] + k * dc(w) + s] - amap.at(r, k);
        }
      }
  }

  Matrix sys(f, rows.size(), vars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < vars; ++j) sys.set(i, j, rows[i][j]);
  Matrix basis = linalg::rank_and_kernel(sys).kernel_basis;
  std::vector<Scalar> sol(vars, Scalar(f, 0L));
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    Scalar coeff = random_scalar(f, rng);
    if (coeff.is_zero()) continue;
    for (std::size_t j = 0; j < vars; ++j)
      sol[j] = sol[j] + basis.at(j, b) * coeff;
  }

  cat::Representation total;
  total.cat = repcat;
  for (const auto& v : q.vertices) {
    std::size_t dav = da(v), dcv = dc(v);
    AbObject ev;
    if (modular) {
      Matrix action(f, dav + dcv, dav + dcv);
      action.place(0, 0, a.rep->vertex(v).action);
      action.place(dav, dav, c.rep->vertex(v).action);
      for (std::size_t k = 0; k < dav; ++k)
        for (std::size_t l = 0; l < dcv; ++l)
          action.set(k, dav + l, sol[theta_off[v] + k * dcv + l]);
      ev = cat::nilmod_object(inner, std::move(action));
    } else {
      ev = cat::vect_object(inner, dav + dcv);
    }
    total.at_vertex.emplace(v, std::move(ev));
  }
  for (const auto& ar : q.arrows) {
    std::size_t dav = da(ar.tgt), dcv = dc(ar.src);
    Matrix block(f, dav + dc(ar.tgt), da(ar.src) + dcv);
    block.place(0, 0, umat(a.rep->arrow(ar.id)));
    block.place(dav, da(ar.src), umat(c.rep->arrow(ar.id)));
    for (std::size_t k = 0; k < dav; ++k)
      for (std::size_t l = 0; l < dcv; ++l)
        block.set(k, da(ar.src) + l,
                  sol[eta_off[ar.id] + k * dcv + l]);
    total.at_arrow.emplace(
        ar.id,
        cat::morphism_from_umat(total.at_vertex.at(ar.src),
                                total.at_vertex.at(ar.tgt), block));
  }
  Extension out;
  out.total = cat::rep_object(repcat, std::move(total));
  cat::validate_object(out.total);

  cat::RepMorphism inc, prj;
  inc.domain = a.rep;
  inc.codomain = out.total.rep;
  prj.domain = out.total.rep;
  prj.codomain = c.rep;
  for (const auto& v : q.vertices) {
    std::size_t dav = da(v), dcv = dc(v);
    Matrix mi(f, dav + dcv, dav), mp(f, dcv, dav + dcv);
    for (std::size_t i = 0; i < dav; ++i) mi.set(i, i, 1);
    for (std::size_t i = 0; i < dcv; ++i) mp.set(i, dav + i, 1);
    inc.components.emplace(
        v, cat::morphism_from_umat(a.rep->vertex(v),
                                   out.total.rep->vertex(v), mi));
    prj.components.emplace(
        v, cat::morphism_from_umat(out.total.rep->vertex(v),
                                   c.rep->vertex(v), mp));
  }
  out.inclusion = cat::make_rep_morphism(a, out.total, std::move(inc));
  out.projection =
      cat::make_rep_morphism(out.total, c, std::move(prj));
  return out;
}

AbObject random_phi_rep(CategoryRef repcat, Rng& rng,
                        const PhiGenOptions& opt) {
  if (repcat->kind != CatKind::repcat)
    throw ValidationError("random_phi_rep needs a RepCat instance");
  CategoryRef inner = repcat->inner;
  const quiver::Quiver& q = repcat->shape;
  std::map<quiver::VertexId, std::size_t> rank =
      quiver::topological_rank(q);
  std::vector<quiver::VertexId> order = q.vertices;
  std::sort(order.begin(), order.end(),
            [&](const auto& x, const auto& y) {
              return rank[x] != rank[y] ? rank[x] < rank[y] : x < y;
            });

  cat::Representation rep;
  rep.cat = repcat;
  for (const auto& v : order) {
    std::vector<quiver::Arrow> in = q.arrows_into(v);
    std::vector<AbObject> parts;
    for (const auto& ar : in) parts.push_back(rep.at_vertex.at(ar.src));
    cat::DirectSum ds = cat::direct_sum(inner, parts);

    AbObject coker =
        random_class_object(inner, rng, opt.max_coker_dim,
                            opt.coker_class);
    if (opt.nonzero_at_sources && in.empty()) {
      for (int attempt = 0; attempt < 10 && udim(coker) == 0; ++attempt)
        coker = random_class_object(inner, rng, opt.max_coker_dim,
                                    opt.coker_class);
      if (udim(coker) == 0)
        coker = inner->kind == CatKind::nilmod
                    ? cat::free_module(inner, 1)
                    : cat::vect_object(inner, 1);
    }

    Extension ext = random_extension(ds.object, coker, rng);
    AbMorphism into = ext.inclusion;
    if (opt.twist) {
      AbMorphism aut = cat::identity_morphism(ext.total);
      if (inner->kind == CatKind::vect) {
        aut = cat::morphism_from_umat(
            ext.total, ext.total,
            random_invertible(inner->base_field(), udim(ext.total),
                              rng));
      } else {
        for (int attempt = 0; attempt < 16; ++attempt) {
          AbMorphism cand = random_morphism(ext.total, ext.total, rng);
          if (cat::is_iso(cand)) {
            aut = std::move(cand);
            break;
          }
        }
      }
      into = cat::compose(aut, into);
    }
    rep.at_vertex.emplace(v, ext.total);
    for (std::size_t i = 0; i < in.size(); ++i)
      rep.at_arrow.emplace(in[i].id,
                           cat::compose(into, ds.inclusions[i]));
  }
  AbObject out = cat::rep_object(repcat, std::move(rep));
  cat::validate_object(out);
  return out;
}

std::optional<AbObject> corrupt_to_non_phi(const AbObject& rep_obj,
                                           Rng& rng) {
  const quiver::Quiver& q = rep_obj.cat->shape;
  std::vector<quiver::Arrow> candidates;
  for (const auto& a : q.arrows)
    if (udim(rep_obj.rep->vertex(a.src)) > 0) candidates.push_back(a);
  if (candidates.empty()) return std::nullopt;
  const quiver::Arrow& victim = candidates[rng.below(candidates.size())];
  cat::Representation rep = *rep_obj.rep;
  rep.at_arrow.erase(victim.id);
  rep.at_arrow.emplace(
      victim.id, cat::zero_morphism(rep.at_vertex.at(victim.src),
                                    rep.at_vertex.at(victim.tgt)));
  return cat::rep_object(rep_obj.cat, std::move(rep));
}

}  // namespace repkit::randomgen
