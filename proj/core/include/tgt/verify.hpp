#pragma once

#include "tgt/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tgt {

// Randomized property checking: many small random graphs, every source, two
// start times each, engines compared field-for-field against the literal
// reference replays and query answers against brute force. On failure the
// instance is shrunk by greedy edge removal and reported as a reproducible
// case.

enum class Mutation : uint8_t {
  None,
  DfsV1PickLatest,  // sabotage the reference's tie-break; must be caught
};

struct VerifyOptions {
  uint32_t instances = 200;
  uint32_t max_n = 12;
  uint32_t max_m = 40;
  Timestamp max_t = 30;
  uint64_t seed = 2026;
  Mutation mutate = Mutation::None;
  bool shrink = true;
};

struct Violation {
  uint32_t instance = 0;
  uint64_t instance_seed = 0;
  std::string check;
  std::string detail;
  std::string source_label;
  Timestamp t_s = 0;
  std::vector<std::string> vertex_labels;
  std::vector<TemporalEdge> edges;  // shrunk reproduction

  std::string dump() const;
};

struct VerifySummary {
  uint64_t instances_run = 0;
  uint64_t cases_run = 0;  // (source, t_s) combinations
  std::optional<Violation> violation;
};

// True when `check` compares an engine against a reference implementation
// (as opposed to a standalone structural invariant).
bool is_reference_check(const std::string& check);

// Stops at the first violation. `progress`, when given, receives a line per
// 25 instances.
VerifySummary run_verification(const VerifyOptions& opts, std::ostream* progress = nullptr);

}  // namespace tgt
