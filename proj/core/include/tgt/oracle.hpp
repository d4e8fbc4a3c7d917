#pragma once

#include "tgt/graph.hpp"
#include "tgt/traversal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tgt {

// Reference implementations used to validate the engines. The simulate_*
// family replays the traversal definitions literally (full rescan per step,
// no cursors or floors) and the exhaustive_* family answers path queries by
// brute-force relaxation. Both refuse inputs past hard size guards: they are
// correctness tools, not production code paths.
//
// The baseline_* family reimplements the conventional single-query
// algorithms (priority-queue earliest-arrival, per-start-time enumeration,
// hop-layered relaxation) on top of a per-neighbor binary search. It carries
// no size guard since the benchmarks run it at full scale.

inline constexpr size_t SIM_MAX_EDGES = 10000;
inline constexpr size_t SIM_MAX_SNAPSHOTS = 1000;

struct SimulateOptions {
  // Fault injection for meta-tests: flip the tie-break of the id-ordered DFS
  // from earliest to latest edge within the chosen neighbor.
  bool v1_pick_latest = false;
};

// Literal step-by-step replay of the chosen traversal; same canonical
// choices as the engines, so results must match field for field.
TraversalTree simulate_definition(const TemporalGraph& g, TraversalKind kind, VertexId source,
                                  Timestamp t_s, const SimulateOptions& opts = {});

// std::nullopt when equal, else a description of the first difference.
std::optional<std::string> compare_trees(const TraversalTree& a, const TraversalTree& b);

// Earliest arrival per vertex (arrival[source] = t_s), fixpoint relaxation.
std::vector<std::optional<Timestamp>> exhaustive_foremost(const TemporalGraph& g, VertexId source,
                                                          Timestamp t_s);

// Fewest hops among all earliest-arrival paths, from the same hop-layered
// relaxation as exhaustive_shortest.
std::vector<std::optional<uint32_t>> exhaustive_foremost_hops(const TemporalGraph& g,
                                                              VertexId source, Timestamp t_s);

// Minimum duration per vertex over paths departing at/after t_x and arriving
// by t_y, by enumerating every candidate start time (duration[source] = 0).
std::vector<std::optional<Timestamp>> exhaustive_fastest(const TemporalGraph& g, VertexId source,
                                                         Timestamp t_x, Timestamp t_y = T_INF);

// Fewest hops per vertex (hops[source] = 0), hop-layered relaxation.
std::vector<std::optional<uint32_t>> exhaustive_shortest(const TemporalGraph& g, VertexId source,
                                                         Timestamp t_s);

std::vector<std::optional<Timestamp>> baseline_foremost(const TemporalGraph& g, VertexId source,
                                                        Timestamp t_s);
std::vector<std::optional<Timestamp>> baseline_fastest(const TemporalGraph& g, VertexId source,
                                                       Timestamp t_x, Timestamp t_y = T_INF);
std::vector<std::optional<uint32_t>> baseline_shortest(const TemporalGraph& g, VertexId source,
                                                       Timestamp t_s);

}  // namespace tgt
