#pragma once

#include <json.hpp>

#include "repkit/filtration.hpp"
#include "repkit/gorenstein.hpp"

namespace repkit::serial {

using Json = nlohmann::ordered_json;

// matrices: {"field":"Q"|"Fp","p":..,"rows":r,"cols":c,"entries":[[..]]}
Json to_json(const linalg::Matrix& m);
linalg::Matrix matrix_from_json(const Json& j);

Json to_json(const quiver::Quiver& q);
quiver::Quiver quiver_from_json(const Json& j);

Json to_json(const quiver::QuiverReport& r);

// categories: {"kind":"Vect"|"NilMod"|"RepCat", "p":0|prime, ...}
Json to_json(const cat::CategoryRef& c);
cat::CategoryRef category_from_json(const Json& j);

// objects carry their category; inside representations the category is
// contextual and omitted
Json object_to_json(const cat::AbObject& x, bool include_cat = true);
cat::AbObject object_from_json(const Json& j, cat::CategoryRef context);
cat::AbObject object_from_json(const Json& j);  // standalone

// morphisms are serialized without endpoints; these come from context
Json morphism_to_json(const cat::AbMorphism& f);
cat::AbMorphism morphism_from_json(const Json& j,
                                   const cat::AbObject& domain,
                                   const cat::AbObject& codomain);

// representations: {"quiver":..,"inner":..,"vertices":{..},"arrows":{..}}
Json rep_to_json(const cat::AbObject& rep_obj);
cat::AbObject rep_from_json(const Json& j);
/// Parses without validating; for `rep validate` diagnostics.
cat::AbObject rep_from_json_lenient(const Json& j);

Json to_json(const cat::PhiReport& r);
Json to_json(const cat::PsiReport& r);
Json to_json(const cat::MembershipVerdict& v);
Json to_json(const cat::DualityBridgeReport& r);

Json certificate_to_json(const filtration::FiltrationCertificate& c);
filtration::FiltrationCertificate certificate_from_json(
    const Json& j, const cat::AbObject& rep_obj);

Json resolution_to_json(const gorenstein::CompleteResolution& c);
Json to_json(const gorenstein::AcyclicityVerdict& v);

/// Canonical dump used everywhere a file or report is emitted: two
/// space indent plus trailing newline, byte-stable for equal values.
std::string dump(const Json& j);

}  // namespace repkit::serial
