#include "repkit/serial.hpp"

namespace repkit::serial {

using cat::AbMorphism;
using cat::AbObject;
using cat::CategoryRef;
using cat::CatKind;
using linalg::Field;
using linalg::Matrix;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Matrix& m) {
  Json j;
  j["field"] = m.field().is_rationals() ? "Q" : "Fp";
  if (!m.field().is_rationals()) j["p"] = m.field().p;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m.field().is_rationals())
        row.push_back(m.at(i, k).str());
      else
        row.push_back(m.at(i, k).residue());
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field"))
    throw ValidationError("matrix JSON: missing field tag");
  Field f;
  std::string tag = j.at("field").get<std::string>();
  if (tag == "Q") {
    f = linalg::rationals();
  } else if (tag == "Fp") {
    f = linalg::prime_field(j.at("p").get<std::uint32_t>());
  } else {
    throw ValidationError("matrix JSON: unknown field " + tag);
  }
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (entries.size() != rows)
    throw ValidationError("matrix JSON: row count mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols)
      throw ValidationError("matrix JSON: column count mismatch");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& e = entries[i][k];
      if (e.is_string())
        m.set(i, k, linalg::Scalar::from_string(f, e.get<std::string>()));
      else
        m.set(i, k, linalg::Scalar(f, e.get<long>()));
    }
  }
  return m;
}

Json to_json(const quiver::Quiver& q) {
  Json j;
  j["vertices"] = q.vertices;
  Json arrows = Json::array();
  for (const auto& a : q.arrows) {
    Json ja;
    ja["id"] = a.id;
    ja["src"] = a.src;
    ja["tgt"] = a.tgt;
    arrows.push_back(std::move(ja));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

quiver::Quiver quiver_from_json(const Json& j) {
  quiver::Quiver q;
  for (const auto& v : j.at("vertices"))
    q.vertices.push_back(v.get<std::string>());
  for (const auto& a : j.at("arrows"))
    q.arrows.push_back(quiver::Arrow{a.at("id").get<std::string>(),
                                     a.at("src").get<std::string>(),
                                     a.at("tgt").get<std::string>()});
  quiver::validate(q);
  return q;
}

Json to_json(const quiver::QuiverReport& r) {
  Json j;
  j["acyclic"] = r.acyclic;
  j["left_rooted"] = r.left_rooted;
  j["right_rooted"] = r.right_rooted;
  j["target_finite"] = r.target_finite;
  j["source_finite"] = r.source_finite;
  j["locally_path_finite"] = r.locally_path_finite;
  j["v_sequence"] = r.v_sequence;
  return j;
}

Json to_json(const CategoryRef& c) {
  Json j;
  switch (c->kind) {
    case CatKind::vect:
      j["kind"] = "Vect";
      j["p"] = c->field.p;
      return j;
    case CatKind::nilmod:
      j["kind"] = "NilMod";
      j["p"] = c->field.p;
      j["n"] = c->nil_order;
      return j;
    case CatKind::repcat:
      j["kind"] = "RepCat";
      j["quiver"] = to_json(c->shape);
      j["inner"] = to_json(c->inner);
      return j;
  }
  throw InternalError("category to_json: bad kind");
}

CategoryRef category_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Vect")
    return cat::make_vect(Field{j.at("p").get<std::uint32_t>()});
  if (kind == "NilMod")
    return cat::make_nilmod(Field{j.at("p").get<std::uint32_t>()},
                            j.at("n").get<std::size_t>());
  if (kind == "RepCat")
    return cat::make_repcat(quiver_from_json(j.at("quiver")),
                            category_from_json(j.at("inner")));
  throw ValidationError("unknown category kind: " + kind);
}

namespace {

Json rep_body_to_json(const cat::Representation& rep) {
  Json j;
  Json vertices;
  for (const auto& v : rep.cat->shape.vertices)
    vertices[v] = object_to_json(rep.vertex(v), false);
  j["vertices"] = std::move(vertices);
  Json arrows;
  for (const auto& a : rep.cat->shape.arrows)
    arrows[a.id] = morphism_to_json(rep.arrow(a.id));
  j["arrows"] = std::move(arrows);
  return j;
}

cat::Representation rep_body_from_json(const Json& j, CategoryRef repcat,
                                       bool validate) {
  cat::Representation rep;
  rep.cat = repcat;
  const Json& vertices = j.at("vertices");
  for (const auto& v : repcat->shape.vertices) {
    if (!vertices.contains(v))
      throw ValidationError("representation JSON: no vertex " + v);
    rep.at_vertex.emplace(
        v, object_from_json(vertices.at(v), repcat->inner));
  }
  const Json& arrows = j.at("arrows");
  for (const auto& a : repcat->shape.arrows) {
    if (!arrows.contains(a.id))
      throw ValidationError("representation JSON: no arrow " + a.id);
    rep.at_arrow.emplace(
        a.id, morphism_from_json(arrows.at(a.id),
                                 rep.at_vertex.at(a.src),
                                 rep.at_vertex.at(a.tgt)));
  }
  if (validate) {
    AbObject probe;
    probe.cat = repcat;
    probe.rep = std::make_shared<cat::Representation>(rep);
    cat::validate_object(probe);
  }
  return rep;
}

}  // namespace

Json object_to_json(const AbObject& x, bool include_cat) {
  Json j;
  if (include_cat) j["cat"] = to_json(x.cat);
  switch (x.cat->kind) {
    case CatKind::vect:
      j["dim"] = x.dim;
      return j;
    case CatKind::nilmod:
      j["dim"] = x.dim;
      j["action"] = to_json(x.action);
      return j;
    case CatKind::repcat:
      j["rep"] = rep_body_to_json(*x.rep);
      return j;
  }
  throw InternalError("object to_json: bad kind");
}

AbObject object_from_json(const Json& j, CategoryRef context) {
  switch (context->kind) {
    case CatKind::vect:
      return cat::vect_object(context, j.at("dim").get<std::size_t>());
    case CatKind::nilmod: {
      Matrix action = matrix_from_json(j.at("action"));
      if (action.rows() != j.at("dim").get<std::size_t>())
        throw ValidationError("object JSON: dim/action mismatch");
      return cat::nilmod_object(context, std::move(action));
    }
    case CatKind::repcat:
      return cat::rep_object(
          context, rep_body_from_json(j.at("rep"), context, true));
  }
  throw InternalError("object from_json: bad kind");
}

AbObject object_from_json(const Json& j) {
  return object_from_json(j, category_from_json(j.at("cat")));
}

Json morphism_to_json(const AbMorphism& f) {
  Json j;
  if (f.domain.cat->kind != CatKind::repcat) {
    j["matrix"] = to_json(f.matrix);
    return j;
  }
  Json comps;
  for (const auto& v : f.domain.cat->shape.vertices)
    comps[v] = morphism_to_json(f.rep_map->component(v));
  j["components"] = std::move(comps);
  return j;
}

AbMorphism morphism_from_json(const Json& j, const AbObject& domain,
                              const AbObject& codomain) {
  if (domain.cat->kind != CatKind::repcat) {
    Matrix m = matrix_from_json(j.at("matrix"));
    AbMorphism f;
    f.domain = domain;
    f.codomain = codomain;
    f.matrix = std::move(m);
    if (f.matrix.rows() != codomain.dim || f.matrix.cols() != domain.dim)
      throw ValidationError("morphism JSON: shape mismatch");
    return f;
  }
  cat::RepMorphism m;
  m.domain = domain.rep;
  m.codomain = codomain.rep;
  const Json& comps = j.at("components");
  for (const auto& v : domain.cat->shape.vertices) {
    if (!comps.contains(v))
      throw ValidationError("morphism JSON: no component at " + v);
    m.components.emplace(
        v, morphism_from_json(comps.at(v), domain.rep->vertex(v),
                              codomain.rep->vertex(v)));
  }
  AbMorphism f;
  f.domain = domain;
  f.codomain = codomain;
  f.rep_map = std::make_shared<cat::RepMorphism>(std::move(m));
  return f;
}

Json rep_to_json(const AbObject& rep_obj) {
  if (rep_obj.cat->kind != CatKind::repcat)
    throw ValidationError("rep_to_json needs a representation");
  Json j;
  j["quiver"] = to_json(rep_obj.cat->shape);
  j["inner"] = to_json(rep_obj.cat->inner);
  Json body = rep_body_to_json(*rep_obj.rep);
  j["vertices"] = std::move(body["vertices"]);
  j["arrows"] = std::move(body["arrows"]);
  return j;
}

AbObject rep_from_json(const Json& j) {
  CategoryRef repcat = cat::make_repcat(
      quiver_from_json(j.at("quiver")),
      category_from_json(j.at("inner")));
  return cat::rep_object(repcat, rep_body_from_json(j, repcat, true));
}

AbObject rep_from_json_lenient(const Json& j) {
  CategoryRef repcat = cat::make_repcat(
      quiver_from_json(j.at("quiver")),
      category_from_json(j.at("inner")));
  return cat::rep_object(repcat, rep_body_from_json(j, repcat, false));
}

Json to_json(const cat::PhiReport& r) {
  Json j;
  Json vertices;
  for (const auto& [v, pv] : r.vertices) {
    Json jv;
    jv["monic"] = pv.monic;
    jv["coker_dim"] = cat::udim(pv.cokernel);
    jv["coker_object"] = object_to_json(pv.cokernel, false);
    vertices[v] = std::move(jv);
  }
  j["vertices"] = std::move(vertices);
  j["all_monic"] = r.all_monic;
  return j;
}

Json to_json(const cat::PsiReport& r) {
  Json j;
  Json vertices;
  for (const auto& [v, pv] : r.vertices) {
    Json jv;
    jv["epi"] = pv.epi;
    jv["ker_dim"] = cat::udim(pv.kernel);
    jv["ker_object"] = object_to_json(pv.kernel, false);
    vertices[v] = std::move(jv);
  }
  j["vertices"] = std::move(vertices);
  j["all_epi"] = r.all_epi;
  return j;
}

Json to_json(const cat::MembershipVerdict& v) {
  Json j;
  j["member"] = v.member;
  j["map_condition"] = v.map_condition;
  j["class_condition"] = v.class_condition;
  return j;
}

Json to_json(const cat::DualityBridgeReport& r) {
  Json j;
  j["phi_to_psi"] = r.phi_to_psi;
  j["psi_to_phi"] = r.psi_to_phi;
  j["all_equal"] = r.all_equal;
  j["implication_checked"] = r.implication_checked;
  if (r.implication_checked)
    j["implication_holds"] = r.implication_holds;
  return j;
}

Json certificate_to_json(const filtration::FiltrationCertificate& c) {
  Json j;
  j["format"] = "filtration-certificate/1";
  j["class"] = c.class_name;
  Json chain = Json::array();
  for (const AbObject& f : c.chain) chain.push_back(rep_to_json(f));
  j["chain"] = std::move(chain);
  Json incs = Json::array();
  for (const AbMorphism& m : c.inclusions)
    incs.push_back(morphism_to_json(m));
  j["inclusions"] = std::move(incs);
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json js;
    js["peeled"] = std::vector<std::string>(s.peeled.begin(),
                                            s.peeled.end());
    Json summands = Json::array();
    for (const auto& [v, x] : s.summands) {
      Json jx;
      jx["vertex"] = v;
      jx["object"] = object_to_json(x, false);
      summands.push_back(std::move(jx));
    }
    js["summands"] = std::move(summands);
    js["iso"] = morphism_to_json(s.iso);
    js["iso_inverse"] = morphism_to_json(s.iso_inverse);
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j;
}

filtration::FiltrationCertificate certificate_from_json(
    const Json& j, const AbObject& rep_obj) {
  if (j.value("format", "") != "filtration-certificate/1")
    throw ValidationError("unknown certificate format");
  filtration::FiltrationCertificate c;
  c.class_name = j.value("class", "all");
  CategoryRef repcat = rep_obj.cat;
  for (const auto& jr : j.at("chain")) {
    AbObject f = rep_from_json(jr);
    if (!cat::same_instance(f.cat, repcat))
      throw ValidationError("certificate chain lives elsewhere");
    // share one instance so structural equality applies
    f.cat = repcat;
    auto body = *f.rep;
    body.cat = repcat;
    f.rep = std::make_shared<cat::Representation>(std::move(body));
    c.chain.push_back(std::move(f));
  }
  const Json& incs = j.at("inclusions");
  if (c.chain.empty() || incs.size() + 1 != c.chain.size())
    throw ValidationError("certificate inclusion count mismatch");
  for (std::size_t i = 0; i < incs.size(); ++i)
    c.inclusions.push_back(
        morphism_from_json(incs[i], c.chain[i], c.chain[i + 1]));
  for (const auto& js : j.at("steps")) {
    filtration::FiltrationStep s;
    for (const auto& v : js.at("peeled"))
      s.peeled.insert(v.get<std::string>());
    std::vector<AbObject> parts;
    for (const auto& jx : js.at("summands")) {
      std::string v = jx.at("vertex").get<std::string>();
      AbObject x =
          object_from_json(jx.at("object"), repcat->inner);
      s.summands.emplace_back(v, x);
      parts.push_back(cat::free_f(repcat, v, x));
    }
    std::size_t i = c.steps.size();
    if (i >= c.inclusions.size())
      throw ValidationError("certificate has more steps than inclusions");
    AbObject sum = cat::direct_sum(repcat, parts).object;
    auto [qobj, pi] = cat::cokernel_of(c.inclusions[i]);
    s.iso = morphism_from_json(js.at("iso"), qobj, sum);
    s.iso_inverse = morphism_from_json(js.at("iso_inverse"), sum, qobj);
    c.steps.push_back(std::move(s));
  }
  return c;
}

Json resolution_to_json(const gorenstein::CompleteResolution& c) {
  Json j;
  j["period"] = c.period;
  Json objs = Json::array();
  for (const AbObject& o : c.objects)
    objs.push_back(object_to_json(o, true));
  j["objects"] = std::move(objs);
  Json diffs = Json::array();
  for (const AbMorphism& d : c.differentials)
    diffs.push_back(morphism_to_json(d));
  j["differentials"] = std::move(diffs);
  j["syzygy_index"] = c.syzygy_index;
  j["syzygy_iso"] =
      c.syzygy_iso ? morphism_to_json(*c.syzygy_iso) : Json(nullptr);
  Json verdicts;
  verdicts["exact"] = c.exact;
  verdicts["hom_into_proj_exact"] = c.hom_into_exact;
  verdicts["hom_from_proj_exact"] = c.hom_from_exact;
  j["verdicts"] = std::move(verdicts);
  return j;
}

Json to_json(const gorenstein::AcyclicityVerdict& v) {
  Json j;
  j["structural"] = v.structural;
  j["components"] = v.components;
  j["exact"] = v.exact;
  j["hom_into"] = v.hom_into;
  j["hom_from"] = v.hom_from;
  j["ok"] = v.ok();
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

}  // namespace repkit::serial
