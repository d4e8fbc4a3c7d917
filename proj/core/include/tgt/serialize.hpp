#pragma once

#include "tgt/graph.hpp"
#include "tgt/paths.hpp"
#include "tgt/traversal.hpp"

#include <string>
#include <vector>

namespace tgt {

// Renderers for the command-line tool. Output is deterministic: objects use
// fixed key order, arrays follow vertex/creation order, and no timestamps or
// environment data are embedded.

std::string stats_json(const GraphStats& s);
std::string stats_tsv(const GraphStats& s);

// Full tree: occurrences, traversal log, label census; cycles for the
// depth-first kinds.
std::string traversal_json(const TemporalGraph& g, const TraversalResult& r);
// One row per traversed edge: src, dst, t, label.
std::string traversal_tsv(const TemporalGraph& g, const TraversalResult& r);

struct PathRecord {
  VertexId vertex;
  int64_t value;  // arrival | duration | hops, per objective
  PathAnswer path;
};

struct PathsReport {
  std::string objective;  // "foremost" | "fastest" | "shortest" | "foremost_from"
  std::string value_key;  // "arrival" | "duration" | "hops"
  std::string source;
  Timestamp t_s = 0;
  std::vector<std::pair<std::string, Timestamp>> params;  // extra query parameters, in order
  std::vector<PathRecord> records;                        // reachable vertices, ascending id
};

std::string paths_json(const TemporalGraph& g, const PathsReport& r);
std::string paths_tsv(const TemporalGraph& g, const PathsReport& r);

}  // namespace tgt
