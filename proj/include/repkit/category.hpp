#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "repkit/linalg.hpp"
#include "repkit/quiver.hpp"

namespace repkit::cat {

using linalg::Field;
using linalg::Matrix;
using quiver::Quiver;

enum class CatKind { vect, nilmod, repcat };

struct CategoryInstance;
using CategoryRef = std::shared_ptr<const CategoryInstance>;

/// A registered computable abelian category: vector spaces over a
/// field, finite-dimensional k[x]/(x^n)-modules, or representations of
/// a finite acyclic quiver over another registered instance.
struct CategoryInstance {
  CatKind kind = CatKind::vect;
  Field field;              // vect, nilmod
  std::size_t nil_order = 0;  // nilmod: n >= 2, x^n = 0
  Quiver shape;             // repcat
  CategoryRef inner;        // repcat

  bool has_projective_test() const;
  bool has_injective_test() const;
  bool has_gproj_oracle() const;
  bool has_dual() const { return true; }

  /// Base field, through nested instances.
  Field base_field() const;
  std::string describe() const;
};

CategoryRef make_vect(Field f);
CategoryRef make_nilmod(Field f, std::size_t n);
/// RepCat over a finite acyclic quiver; validates the quiver.
CategoryRef make_repcat(Quiver q, CategoryRef inner);

bool same_instance(const CategoryRef& a, const CategoryRef& b);

/// The codomain instance of the Pontryagin dual. Vect and NilMod are
/// self-dual via transpose; RepCat(Q, A) dualizes to RepCat(Q^op, A^+).
CategoryRef dual_instance(const CategoryRef& c);

struct Representation;
struct RepMorphism;

/// An object of a category instance. Exactly the fields of the
/// instance kind are meaningful.
struct AbObject {
  CategoryRef cat;
  std::size_t dim = 0;  // vect, nilmod
  Matrix action;        // nilmod: nilpotent with action^n = 0
  std::shared_ptr<const Representation> rep;  // repcat

  friend bool operator==(const AbObject& a, const AbObject& b);
};

struct AbMorphism {
  AbObject domain;
  AbObject codomain;
  Matrix matrix;  // vect, nilmod
  std::shared_ptr<const RepMorphism> rep_map;  // repcat

  friend bool operator==(const AbMorphism& a, const AbMorphism& b);
};

/// A representation of cat->shape with values in cat->inner. Arrow maps
/// determine the whole functor (free path category, no relations).
struct Representation {
  CategoryRef cat;  // repcat instance this lives in
  std::map<quiver::VertexId, AbObject> at_vertex;
  std::map<quiver::ArrowId, AbMorphism> at_arrow;

  const Quiver& shape() const { return cat->shape; }
  CategoryRef inner() const { return cat->inner; }
  const AbObject& vertex(const quiver::VertexId& v) const;
  const AbMorphism& arrow(const quiver::ArrowId& a) const;

  friend bool operator==(const Representation&, const Representation&);
};

struct RepMorphism {
  std::shared_ptr<const Representation> domain;
  std::shared_ptr<const Representation> codomain;
  std::map<quiver::VertexId, AbMorphism> components;

  const AbMorphism& component(const quiver::VertexId& v) const;
  friend bool operator==(const RepMorphism&, const RepMorphism&);
};

// -- constructors ----------------------------------------------------

AbObject vect_object(CategoryRef cat, std::size_t dim);
AbObject nilmod_object(CategoryRef cat, Matrix action);
AbObject rep_object(CategoryRef cat, Representation rep);
AbObject zero_object(CategoryRef cat);

/// The regular module k[x]/(x^n) (multiplication-by-x action on the
/// basis 1, x, ..., x^{n-1}).
AbObject regular_module(CategoryRef nilmod_cat);
/// Direct sum of m copies of the regular module.
AbObject free_module(CategoryRef nilmod_cat, std::size_t m);
/// k[x]/(x^s) as a k[x]/(x^n)-module, s <= n.
AbObject cyclic_module(CategoryRef nilmod_cat, std::size_t s);

AbMorphism make_morphism(AbObject domain, AbObject codomain, Matrix m);
AbMorphism make_rep_morphism(AbObject domain, AbObject codomain,
                             RepMorphism m);

// -- structural helpers ----------------------------------------------

/// Dimension of the underlying vector space (sums over vertices for
/// representations, recursively).
std::size_t udim(const AbObject& x);

/// The underlying matrix of a morphism; for representation morphisms a
/// block-diagonal matrix over the quiver's vertex order. Morphisms are
/// determined by their underlying matrices.
Matrix umat(const AbMorphism& f);

AbMorphism identity_morphism(const AbObject& x);
AbMorphism zero_morphism(const AbObject& domain, const AbObject& codomain);
AbMorphism compose(const AbMorphism& g, const AbMorphism& f);  // g after f
AbMorphism add(const AbMorphism& f, const AbMorphism& g);
AbMorphism negate(const AbMorphism& f);
AbMorphism scale(const AbMorphism& f, const linalg::Scalar& s);

/// Rebuilds a morphism between the given objects from an underlying
/// matrix (splitting it into vertex blocks for representations).
/// Checks nothing beyond shape; used where the matrix is known valid.
AbMorphism morphism_from_umat(const AbObject& domain,
                              const AbObject& codomain, const Matrix& m);

struct DirectSum {
  AbObject object;
  std::vector<AbMorphism> inclusions;
  std::vector<AbMorphism> projections;
};
DirectSum direct_sum(CategoryRef cat, const std::vector<AbObject>& parts);

bool is_monic(const AbMorphism& f);
bool is_epi(const AbMorphism& f);
bool is_iso(const AbMorphism& f);

/// Checks intertwining/commuting-square constraints exactly; throws
/// IntertwinerViolation (or ValidationError for shape errors) if not.
void validate_object(const AbObject& x);
void validate_morphism(const AbMorphism& f);

}  // namespace repkit::cat
