#pragma once

#include <optional>

#include "repkit/filtration.hpp"
#include "repkit/gorenstein.hpp"
#include "repkit/randomgen.hpp"
#include "repkit/serial.hpp"

namespace repkit::audit {

struct AuditConfig {
  std::string theorem;  // "A" | "C" | "3.4"
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  /// Inner instance; defaults: Vect(F5) for A, NilMod(F3, 2) otherwise.
  cat::CategoryRef inner;
  /// Fixed quiver; defaults: fresh random left-rooted quivers for A,
  /// the five-vertex example quiver otherwise.
  std::optional<quiver::Quiver> quiver;
};

struct SampleResult {
  std::size_t index = 0;
  std::string kind;  // "positive" | "negative"
  bool phi_side = false;
  bool category_side = false;
  bool agree = false;
  bool witness_ok = true;  // verified witness for the positive sides
  bool pass = false;
  std::uint64_t evidence_hash = 0;
};

struct AuditReport {
  AuditConfig config;
  std::vector<SampleResult> samples;
  std::size_t negatives = 0;
  bool pass = false;
};

/// Runs one theorem audit: two independent membership procedures per
/// sample, agreement required, with seeded generation throughout.
AuditReport run_audit(const AuditConfig& config);

serial::Json report_to_json(const AuditReport& r);

/// The five-vertex example quiver: arrows 1->3, 2->3, two arrows 3=>4,
/// and 4->5.
quiver::Quiver example_quiver();

/// FNV-1a over a string; the evidence hash primitive.
std::uint64_t fnv1a(const std::string& s);

}  // namespace repkit::audit
