#pragma once

#include "repkit/repcat.hpp"

namespace repkit::cat {

/// Evaluation at a vertex: e_v(F) = F(v), e_v(eta) = eta_v.
AbObject eval_e(const quiver::VertexId& v, const AbObject& rep_obj);
AbMorphism eval_e(const quiver::VertexId& v, const AbMorphism& eta);

/// Left adjoint of evaluation: f_v(X)(w) = X^{#paths v~>w}, arrows act
/// as coordinate inclusions indexed by path composition.
AbObject free_f(CategoryRef repcat, const quiver::VertexId& v,
                const AbObject& x);
/// f_v on morphisms (path-indexed block diagonal).
AbMorphism free_f(CategoryRef repcat, const quiver::VertexId& v,
                  const AbMorphism& g);

/// Right adjoint of evaluation: g_v(X)(w) = X^{#paths w~>v}, arrows act
/// as coordinate projections.
AbObject cofree_g(CategoryRef repcat, const quiver::VertexId& v,
                  const AbObject& x);
AbMorphism cofree_g(CategoryRef repcat, const quiver::VertexId& v,
                    const AbMorphism& g);

/// Counit f_v(e_v(F)) -> F: the copy at path p maps through F(p).
AbMorphism counit_f(const quiver::VertexId& v, const AbObject& rep_obj);
/// Unit X -> e_v(f_v(X)): the trivial-path coordinate.
AbMorphism unit_f(CategoryRef repcat, const quiver::VertexId& v,
                  const AbObject& x);
/// Unit F -> g_v(e_v(F)): path evaluation into the product.
AbMorphism unit_g(const quiver::VertexId& v, const AbObject& rep_obj);
/// Counit e_v(g_v(X)) -> X: the trivial-path coordinate.
AbMorphism counit_g(CategoryRef repcat, const quiver::VertexId& v,
                    const AbObject& x);

struct AdjunctionReport {
  std::size_t hom_fX_F = 0, hom_X_Fv = 0;  // f_v -| e_v, degree 0
  std::size_t hom_evF_X = 0, hom_F_gX = 0;  // e_v -| g_v, degree 0
  bool left_dims_match = false;
  bool right_dims_match = false;
  bool triangle_f = false;  // both triangle identities for f_v -| e_v
  bool triangle_g = false;  // both triangle identities for e_v -| g_v
  bool ok = false;
};

/// Verifies the degree-0 adjunction isomorphisms as dimension
/// equalities and checks the four triangle identities.
AdjunctionReport adjunction_audit(CategoryRef repcat,
                                  const quiver::VertexId& v,
                                  const AbObject& x,
                                  const AbObject& rep_obj);

}  // namespace repkit::cat
