#pragma once

#include <optional>
#include <string>

#include "odiam/constructor.hpp"
#include "odiam/oracle.hpp"

namespace odiam {

enum class Regime { kG2, kG3, kG9, kG678, kUnsupported };

struct RegimeInfo {
  Regime regime = Regime::kUnsupported;
  int diameter = 0;
  int gstar = 0;
  // Guaranteed bound on the directed diameter for the regime (-1 if none).
  int bound = -1;
  std::string reason;  // why a graph is unsupported
};

std::string regime_name(Regime r);
// Throws kDisconnected, kNotBridgeless.
RegimeInfo classify_regime(const Multigraph& g);

struct DispatchResult {
  RegimeInfo info;
  PipelineResult result;
  std::optional<FinePartition> partition;  // g9 / g678 only
};

// Runs the pipeline picked by the measured (d, g*). `forced` overrides the
// choice (the precondition checks inside the pipelines still apply). Throws
// kUnsupported when no pipeline applies.
DispatchResult orient_dispatch(const Multigraph& g, const PipelineOptions& options = {},
                               std::optional<Regime> forced = std::nullopt);

struct VerifyOutcome {
  RegimeInfo info;
  bool strong = false;
  int diameter = -1;  // directed; -1 when not strong
  bool within_bound = false;
  std::optional<AuditReport> table;
  std::optional<AuditReport> claims;
  bool ok() const {
    return strong && within_bound && (!table || table->ok()) && (!claims || claims->ok());
  }
};

// Strongness, the regime bound, and for g9 / g678 the class-bound table and
// the per-vertex claims.
VerifyOutcome verify_orientation(const Multigraph& g, const Digraph& d);

std::string verify_outcome_to_text(const VerifyOutcome& v);

}  // namespace odiam
