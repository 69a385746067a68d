#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "repkit/errors.hpp"

namespace repkit::quiver {

using VertexId = std::string;
using ArrowId = std::string;

struct Arrow {
  ArrowId id;
  VertexId src;
  VertexId tgt;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite directed multigraph. Parallel arrows and loops are allowed;
/// ids must be unique and arrow endpoints declared.
struct Quiver {
  std::vector<VertexId> vertices;
  std::vector<Arrow> arrows;

  bool has_vertex(const VertexId& v) const;
  /// In-arrows of v, sorted by arrow id. This order fixes the block
  /// layout of every assembled map.
  std::vector<Arrow> arrows_into(const VertexId& v) const;
  std::vector<Arrow> arrows_out_of(const VertexId& v) const;
  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// Throws ValidationError when ids repeat or endpoints are undeclared.
void validate(const Quiver& q);

struct QuiverReport {
  bool acyclic = false;
  bool left_rooted = false;
  bool right_rooted = false;
  bool target_finite = false;
  bool source_finite = false;
  bool locally_path_finite = false;
  /// V_0 = {} then V_{k+1} = { v | w -> v implies w in V_k } until the
  /// sequence stabilizes; each set sorted by vertex id.
  std::vector<std::vector<VertexId>> v_sequence;
};

QuiverReport classify_quiver(const Quiver& q);

/// A path is the arrow-id sequence from source to target; empty = the
/// identity path.
using Path = std::vector<ArrowId>;

/// All paths v ~> w in lexicographic arrow-id order (the empty path
/// first when v == w). Throws PathExplosion on cyclic quivers.
std::vector<Path> enumerate_paths(const Quiver& q, const VertexId& v,
                                  const VertexId& w);

/// Arrows reversed, all ids preserved.
Quiver opposite(const Quiver& q);

std::map<VertexId, std::size_t> topological_rank(const Quiver& q);

}  // namespace repkit::quiver
