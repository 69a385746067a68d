#pragma once

#include "repkit/audit.hpp"

namespace testutil {

using namespace repkit;
using cat::AbObject;
using cat::CategoryRef;
using linalg::Field;
using linalg::Matrix;

inline quiver::Quiver paper_quiver() { return audit::example_quiver(); }

inline Matrix mat(Field f, std::size_t rows, std::size_t cols,
                  std::initializer_list<long> entries) {
  Matrix m(f, rows, cols);
  std::size_t i = 0;
  for (long e : entries) {
    m.set(i / cols, i % cols, e);
    ++i;
  }
  return m;
}

/// The representation of Figure 1 with x = y = z0 = z1 = k: dimensions
/// (1,1,3,7,7), vertex 3 = x + y + z0, vertex 4 = 5 = (x+y+z0)^2 + z1,
/// arrow maps the canonical inclusions.
inline AbObject fig1_rep(CategoryRef inner_vect) {
  Field f = inner_vect->field;
  CategoryRef repcat = cat::make_repcat(paper_quiver(), inner_vect);
  std::map<quiver::VertexId, AbObject> vertices;
  vertices.emplace("1", cat::vect_object(inner_vect, 1));
  vertices.emplace("2", cat::vect_object(inner_vect, 1));
  vertices.emplace("3", cat::vect_object(inner_vect, 3));
  vertices.emplace("4", cat::vect_object(inner_vect, 7));
  vertices.emplace("5", cat::vect_object(inner_vect, 7));
  std::map<quiver::ArrowId, Matrix> arrows;
  arrows.emplace("a1", mat(f, 3, 1, {1, 0, 0}));  // x slot
  arrows.emplace("a2", mat(f, 3, 1, {0, 1, 0}));  // y slot
  Matrix inc1(f, 7, 3), inc2(f, 7, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    inc1.set(i, i, 1);       // first copy of x+y+z0
    inc2.set(3 + i, i, 1);   // second copy
  }
  arrows.emplace("a3", inc1);
  arrows.emplace("a4", inc2);
  arrows.emplace("a5", Matrix::identity(f, 7));
  return cat::build_rep(repcat, std::move(vertices), std::move(arrows));
}

inline std::vector<std::size_t> dims(const AbObject& rep_obj) {
  return cat::dim_vector(rep_obj);
}

}  // namespace testutil
