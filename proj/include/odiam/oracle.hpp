#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "odiam/orientation.hpp"
#include "odiam/partition.hpp"

namespace odiam {

struct SearchBudget {
  std::int64_t max_nodes = 200'000'000;
  int jobs = 1;
};

struct SearchReport {
  int optimal = -1;  // best directed diameter found
  Digraph witness;
  std::int64_t nodes = 0;
  std::int64_t pruned = 0;
  bool budget_exceeded = false;  // `optimal` is then only an upper bound
};

// Tree edges away from the root, every other edge towards the root side.
// DFS tree edges downwards, back edges upwards. Throws kNotBridgeless.
Digraph robbins_orientation(const Multigraph& g);

// Branch and bound over strong orientations. Throws kNotBridgeless. On
// budget exhaustion returns the incumbent with budget_exceeded set.
SearchReport exact_oriented_diameter(const Multigraph& g, const SearchBudget& budget = {});

// True iff no strong orientation has directed diameter below k. Throws
// kBudgetExceeded, kNotBridgeless.
bool certify_lower_bound(const Multigraph& g, int k, const SearchBudget& budget = {});

// Plain enumeration of all 2^m orientations, no pruning; m <= 24.
int exhaustive_oriented_diameter(const Multigraph& g);

std::string search_report_to_text(const SearchReport& report);

// Class family ("A", "A'", "S33", ...) -> (bound on ∂(w,u), bound on ∂(v,w)).
using ClassBoundTable = std::map<std::string, std::pair<int, int>>;
const ClassBoundTable& girth9_class_bounds();
const ClassBoundTable& girth678_class_bounds();

struct AuditViolation {
  VertexId vertex = -1;
  std::string cls;
  std::string rule;
  int measured = 0;
  int bound = 0;
};

struct AuditReport {
  std::vector<AuditViolation> violations;
  VertexId worst_from = -1;
  VertexId worst_to = -1;
  int worst = 0;
  bool ok() const { return violations.empty(); }
};

AuditReport audit_class_bounds(const Digraph& d, const FinePartition& fine, const ClassBoundTable& table);

// The per-vertex claims the constructions are proved to meet, each checked
// literally; "with equality only if" clauses are checked as implications.
AuditReport verify_construction_claims(const Multigraph& g, const Digraph& d, const FinePartition& fine);

std::string audit_report_to_text(const AuditReport& report);

}  // namespace odiam
