#pragma once

#include <optional>
#include <vector>

#include "repkit/category.hpp"

namespace repkit::cat {

struct KernelCokernel {
  AbObject kernel;
  AbMorphism kernel_inclusion;  // monic, kernel -> domain
  AbObject cokernel;
  AbMorphism cokernel_projection;  // epi, codomain -> cokernel
  AbObject image;
};

/// Kernel, cokernel and image with canonical bases and, where the
/// instance carries structure, the induced actions/arrow maps.
KernelCokernel kernel_cokernel(const AbMorphism& f);

/// Kernel part only (cheaper).
std::pair<AbObject, AbMorphism> kernel_of(const AbMorphism& f);
/// Cokernel part only.
std::pair<AbObject, AbMorphism> cokernel_of(const AbMorphism& f);

/// Deterministic basis of Hom(x, y), solved from the intertwining /
/// commuting-square constraints in canonical echelon order.
std::vector<AbMorphism> hom_basis(const AbObject& x, const AbObject& y);
std::size_t hom_dim(const AbObject& x, const AbObject& y);

/// Coordinates of f in a hom basis (throws InternalError if f is not a
/// morphism in the span, which cannot happen for valid morphisms).
Matrix hom_coordinates(const std::vector<AbMorphism>& basis,
                       const AbMorphism& f);

struct ProjInjReport {
  bool is_projective = false;
  bool is_injective = false;
  /// Epi from a projective object (projective cover for NilMod).
  std::optional<AbMorphism> cover;
  /// Mono into an injective object (injective envelope for NilMod).
  std::optional<AbMorphism> envelope;
};
ProjInjReport projective_injective_test(const AbObject& x);

/// Pontryagin dual: transpose on Vect/NilMod, component-wise transpose
/// into the opposite quiver for representations. Contravariant.
AbObject dualize(const AbObject& x);
AbMorphism dualize(const AbMorphism& f);

/// The evaluation isomorphism x -> x^{++}. In this encoding the double
/// dual is the object itself, so this is the identity; it is still
/// checked and returned explicitly.
AbMorphism double_dual_iso(const AbObject& x);

/// g with monic . g = h, which must exist; unique.
AbMorphism factor_through_monic(const AbMorphism& monic,
                                const AbMorphism& h);
/// g with g . epi = h, which must exist; unique.
AbMorphism factor_through_epi(const AbMorphism& epi, const AbMorphism& h);

/// An explicit isomorphism x -> y, or nullopt. Deterministic: dimension
/// data for Vect, Jordan bases for NilMod, seeded hom-space search for
/// representations.
std::optional<AbMorphism> find_isomorphism(const AbObject& x,
                                           const AbObject& y);

/// Jordan block sizes of a NilMod object (descending).
std::vector<std::size_t> jordan_type(const AbObject& x);

}  // namespace repkit::cat
