#pragma once

#include <cstdint>
#include <random>

#include "repkit/phipsi.hpp"

namespace repkit::randomgen {

using cat::AbObject;
using cat::CategoryRef;

/// Deterministic RNG. Bounded draws avoid std::uniform_int_distribution
/// so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(next() % n);
  }
  /// Value in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::size_t>(
               hi - lo + 1)));
  }
  bool chance(std::size_t num, std::size_t den) {
    return below(den) < num;
  }
  /// A derived independent stream.
  Rng fork() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

/// Random left-rooted quiver: arrows respect a random topological order,
/// so the result is acyclic; rejected until every path set stays small.
quiver::Quiver random_left_rooted_quiver(Rng& rng,
                                         std::size_t max_vertices = 8,
                                         std::size_t max_arrows = 12,
                                         std::size_t max_paths = 24);

/// Random object of the inner instance (Vect or NilMod).
AbObject random_object(CategoryRef inner, Rng& rng, std::size_t max_dim);

/// Random object of a named class: "all" | "proj" | "zero_mix".
AbObject random_class_object(CategoryRef inner, Rng& rng,
                             std::size_t max_dim,
                             const std::string& cls);

/// Random morphism x -> y (a random combination of the hom basis).
cat::AbMorphism random_morphism(const AbObject& x, const AbObject& y,
                                Rng& rng);

/// Arbitrary valid representation: random vertex objects, random arrow
/// morphisms.
AbObject random_rep(CategoryRef repcat, Rng& rng, std::size_t max_dim);

struct PhiGenOptions {
  std::size_t max_coker_dim = 2;
  /// class of the chosen cokernels: "all" | "proj" | "zero_mix"
  std::string coker_class = "all";
  /// force nonzero cokernels at source vertices (so that engineered
  /// negatives are always possible)
  bool nonzero_at_sources = false;
  /// post-compose each assembled map with a random automorphism
  bool twist = true;
};

/// A representation guaranteed to lie in Phi(class): cokernels are
/// chosen per vertex, vertex objects are random extensions of them by
/// the in-arrow sum, arrow maps are the twisted coordinate inclusions.
AbObject random_phi_rep(CategoryRef repcat, Rng& rng,
                        const PhiGenOptions& opt);

/// Engineered negative: zeroes one arrow map whose source is nonzero,
/// which breaks monicity of phi at the target. Returns nullopt when the
/// representation has no such arrow.
std::optional<AbObject> corrupt_to_non_phi(const AbObject& rep_obj,
                                           Rng& rng);

/// Random extension 0 -> a -> E -> c -> 0 in Vect or NilMod, returned
/// with the inclusion and projection.
struct Extension {
  AbObject total;
  cat::AbMorphism inclusion;
  cat::AbMorphism projection;
};
Extension random_extension(const AbObject& a, const AbObject& c,
                           Rng& rng);

/// Random extension of representations (vertex-wise extension objects,
/// arrow maps solved from the joint linear constraint system).
Extension random_rep_extension(const AbObject& a, const AbObject& c,
                               Rng& rng);

}  // namespace repkit::randomgen
