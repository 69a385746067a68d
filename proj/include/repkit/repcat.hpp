#pragma once

#include <string>
#include <vector>

#include "repkit/abcat.hpp"

namespace repkit::cat {

/// Structural diagnostics for a representation; empty means valid.
std::vector<std::string> rep_diagnostics(const Representation& f);

/// The composite of arrow maps along a path v ~> w (identity on the
/// empty path).
AbMorphism path_map(const Representation& f, const quiver::VertexId& from,
                    const quiver::Path& path);

/// Builds a representation from vertex objects and arrow matrices given
/// as underlying matrices; validates everything.
AbObject build_rep(CategoryRef repcat,
                   std::map<quiver::VertexId, AbObject> at_vertex,
                   std::map<quiver::ArrowId, Matrix> arrow_umats);

/// Dimension vector in quiver vertex order.
std::vector<std::size_t> dim_vector(const AbObject& rep_obj);

}  // namespace repkit::cat
