#pragma once

#include <cstdint>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace tgt {

using VertexId = uint32_t;
using Timestamp = int64_t;
using EdgeId = uint32_t;   // index into the chronological edge arrays
using OccId = uint32_t;    // index into a traversal's occurrence array

constexpr VertexId NO_VERTEX = std::numeric_limits<VertexId>::max();
constexpr EdgeId NO_EDGE = std::numeric_limits<EdgeId>::max();
constexpr OccId NO_OCC = std::numeric_limits<OccId>::max();

// SENTINEL values meaning "not reached". Serialized output never contains
// them: unreached vertices are simply omitted.
constexpr Timestamp T_INF = std::numeric_limits<Timestamp>::max();
constexpr uint32_t DIST_INF = std::numeric_limits<uint32_t>::max();

struct TemporalEdge {
  VertexId src = NO_VERTEX;
  VertexId dst = NO_VERTEX;
  Timestamp t = 0;

  friend bool operator==(const TemporalEdge& a, const TemporalEdge& b) {
    return a.src == b.src && a.dst == b.dst && a.t == b.t;
  }
};

// Malformed input text (bad token count, non-numeric timestamp, ...).
struct ParseError : std::runtime_error {
  size_t line = 0;
  ParseError(size_t line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
  explicit ParseError(const std::string& what_) : std::runtime_error(what_) {}
};

// Well-formed input that violates a data contract (duplicate edge without
// --dedupe, unknown vertex label, infeasible generator request, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reference implementations refuse inputs beyond their size guards instead of
// silently grinding; they exist to check small instances, not to scale.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tgt
