#include "repkit/repcat.hpp"

namespace repkit::cat {

std::vector<std::string> rep_diagnostics(const Representation& f) {
  std::vector<std::string> out;
  if (!f.cat || f.cat->kind != CatKind::repcat) {
    out.push_back("not attached to a RepCat instance");
    return out;
  }
  const Quiver& q = f.cat->shape;
  for (const auto& v : q.vertices) {
    if (!f.at_vertex.count(v)) {
      out.push_back("missing vertex object at " + v);
      continue;
    }
    try {
      validate_object(f.at_vertex.at(v));
      if (!same_instance(f.at_vertex.at(v).cat, f.cat->inner))
        out.push_back("vertex " + v + " lives in the wrong instance");
    } catch (const Error& e) {
      out.push_back("vertex " + v + ": " + e.what());
    }
  }
  for (const auto& a : q.arrows) {
    if (!f.at_arrow.count(a.id)) {
      out.push_back("missing arrow map at " + a.id);
      continue;
    }
    const AbMorphism& m = f.at_arrow.at(a.id);
    try {
      if (!f.at_vertex.count(a.src) || !f.at_vertex.count(a.tgt))
        continue;
      if (!(m.domain == f.at_vertex.at(a.src)))
        out.push_back("arrow " + a.id + " domain mismatch");
      else if (!(m.codomain == f.at_vertex.at(a.tgt)))
        out.push_back("arrow " + a.id + " codomain mismatch");
      else
        validate_morphism(m);
    } catch (const Error& e) {
      out.push_back("arrow " + a.id + ": " + e.what());
    }
  }
  for (const auto& [v, obj] : f.at_vertex)
    if (!q.has_vertex(v)) out.push_back("extra vertex object at " + v);
  for (const auto& [a, m] : f.at_arrow) {
    bool known = false;
    for (const auto& qa : q.arrows) known = known || qa.id == a;
    if (!known) out.push_back("extra arrow map at " + a);
  }
  return out;
}

AbMorphism path_map(const Representation& f, const quiver::VertexId& from,
                    const quiver::Path& path) {
  AbMorphism acc = identity_morphism(f.vertex(from));
  quiver::VertexId at = from;
  for (const quiver::ArrowId& a : path) {
    const AbMorphism& step = f.arrow(a);
    acc = compose(step, acc);
    for (const auto& qa : f.shape().arrows)
      if (qa.id == a) at = qa.tgt;
  }
  return acc;
}

AbObject build_rep(CategoryRef repcat,
                   std::map<quiver::VertexId, AbObject> at_vertex,
                   std::map<quiver::ArrowId, Matrix> arrow_umats) {
  Representation r;
  r.cat = repcat;
  r.at_vertex = std::move(at_vertex);
  for (const auto& a : repcat->shape.arrows) {
    auto it = arrow_umats.find(a.id);
    if (it == arrow_umats.end())
      throw ValidationError("missing arrow matrix for " + a.id);
    r.at_arrow.emplace(
        a.id, morphism_from_umat(r.at_vertex.at(a.src),
                                 r.at_vertex.at(a.tgt), it->second));
  }
  AbObject obj = rep_object(repcat, std::move(r));
  validate_object(obj);
  return obj;
}

std::vector<std::size_t> dim_vector(const AbObject& rep_obj) {
  if (rep_obj.cat->kind != CatKind::repcat)
    throw ValidationError("dim_vector of a non-representation");
  std::vector<std::size_t> out;
  for (const auto& v : rep_obj.cat->shape.vertices)
    out.push_back(udim(rep_obj.rep->vertex(v)));
  return out;
}

}  // namespace repkit::cat
