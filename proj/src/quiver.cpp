#include "repkit/quiver.hpp"

#include <algorithm>

namespace repkit::quiver {

bool Quiver::has_vertex(const VertexId& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<Arrow> Quiver::arrows_into(const VertexId& v) const {
  std::vector<Arrow> out;
  for (const Arrow& a : arrows)
    if (a.tgt == v) out.push_back(a);
  std::sort(out.begin(), out.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  return out;
}

std::vector<Arrow> Quiver::arrows_out_of(const VertexId& v) const {
  std::vector<Arrow> out;
  for (const Arrow& a : arrows)
    if (a.src == v) out.push_back(a);
  std::sort(out.begin(), out.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  return out;
}

void validate(const Quiver& q) {
  std::set<VertexId> vs(q.vertices.begin(), q.vertices.end());
  if (vs.size() != q.vertices.size())
    throw ValidationError("duplicate vertex id");
  std::set<ArrowId> as;
  for (const Arrow& a : q.arrows) {
    if (!as.insert(a.id).second)
      throw ValidationError("duplicate arrow id: " + a.id);
    if (!vs.count(a.src))
      throw ValidationError("arrow " + a.id + " has undeclared source");
    if (!vs.count(a.tgt))
      throw ValidationError("arrow " + a.id + " has undeclared target");
  }
}

QuiverReport classify_quiver(const Quiver& q) {
  validate(q);
  QuiverReport rep;

  std::set<VertexId> current;  // V_0 = {}
  rep.v_sequence.push_back({});
  for (;;) {
    std::set<VertexId> next;
    for (const VertexId& v : q.vertices) {
      bool all_in = true;
      for (const Arrow& a : q.arrows)
        if (a.tgt == v && !current.count(a.src)) {
          all_in = false;
          break;
        }
      if (all_in) next.insert(v);
    }
    if (next == current) break;
    rep.v_sequence.push_back(
        std::vector<VertexId>(next.begin(), next.end()));
    current = std::move(next);
  }
  rep.left_rooted = current.size() == q.vertices.size();
  // finite case: left-rooted, acyclic and right-rooted coincide
  rep.acyclic = rep.left_rooted;
  rep.right_rooted = rep.acyclic;
  rep.target_finite = true;
  rep.source_finite = true;
  // any cycle yields infinitely many paths through its vertices
  rep.locally_path_finite = rep.acyclic;
  return rep;
}

std::vector<Path> enumerate_paths(const Quiver& q, const VertexId& v,
                                  const VertexId& w) {
  if (!q.has_vertex(v) || !q.has_vertex(w))
    throw ValidationError("path endpoint not in quiver");
  if (!classify_quiver(q).acyclic)
    throw PathExplosion("cyclic quiver has unbounded path sets");
  std::vector<Path> out;
  Path current;
  // depth-first in sorted arrow-id order; a path precedes its
  // extensions, so emission order is lexicographic
  auto walk = [&](auto&& self, const VertexId& at) -> void {
    if (at == w) out.push_back(current);
    for (const Arrow& a : q.arrows_out_of(at)) {
      current.push_back(a.id);
      self(self, a.tgt);
      current.pop_back();
    }
  };
  walk(walk, v);
  return out;
}

Quiver opposite(const Quiver& q) {
  Quiver out;
  out.vertices = q.vertices;
  for (const Arrow& a : q.arrows)
    out.arrows.push_back(Arrow{a.id, a.tgt, a.src});
  return out;
}

std::map<VertexId, std::size_t> topological_rank(const Quiver& q) {
  QuiverReport rep = classify_quiver(q);
  if (!rep.left_rooted)
    throw ValidationError("topological order needs a left-rooted quiver");
  std::map<VertexId, std::size_t> rank;
  for (std::size_t i = 0; i < rep.v_sequence.size(); ++i)
    for (const VertexId& v : rep.v_sequence[i])
      if (!rank.count(v)) rank[v] = i;
  return rank;
}

}  // namespace repkit::quiver
