#pragma once

#include <functional>
#include <string>
#include <vector>

#include "odiam/io.hpp"
#include "odiam/oracle.hpp"

namespace odiam {

struct AcceptanceOptions {
  int g3_random = 60;
  int g9_random = 100;
  int g678_random = 150;
  int rs_triples = 1000;
  int completion_seeds = 10;
  int oracle_random = 150;
  int never_below_max_edges = 14;
  SearchBudget budget{2'000'000'000, 1};
  // Test hook: reverse one arc of every g9 / g678 output before auditing.
  bool corrupt_constructions = false;
  // Criteria to run (empty = all).
  std::vector<int> only;
  // Corpus manifests are read from / written to this directory when set.
  std::string corpus_dir;
  // Progress lines.
  std::function<void(const std::string&)> log;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Deterministic corpora for the two diameter-4 pipelines. Each entry is a
// random spec whose seed is known to produce an instance.
std::vector<ManifestEntry> g9_corpus_manifest(int random_count);
std::vector<ManifestEntry> g678_corpus_manifest(int random_count);

// Regenerates every entry and checks the recorded d and g*; throws
// kInvalidSpec on a mismatch.
std::vector<Multigraph> load_corpus(const std::vector<ManifestEntry>& manifest);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// One `PASS|FAIL <id> <title>: <detail>` line per criterion.
std::string acceptance_summary(const std::vector<CriterionResult>& results);

}  // namespace odiam
