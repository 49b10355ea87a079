#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace transversal {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// One edge of a multigraph. A loop has tail == head. Parallel edges are
/// distinct records sharing the same endpoint pair.
struct EdgeRecord {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;

  bool is_loop() const { return tail == head; }
  bool operator==(const EdgeRecord&) const = default;
};

/// Immutable multigraph with loops and parallel edges.
///
/// Vertex ids are dense on construction (0..n-1) but need not stay dense:
/// contracting an edge keeps the tail's id and retires the head's. Edge ids
/// survive contraction and deletion of other edges unchanged.
class Multigraph {
 public:
  Multigraph() = default;

  /// Vertices 0..vertex_count-1. Edge ids must be pairwise distinct and
  /// endpoints must name existing vertices; throws std::invalid_argument.
  Multigraph(std::size_t vertex_count, std::vector<EdgeRecord> edges);

  /// Arbitrary (sorted, unique) vertex ids.
  Multigraph(std::vector<VertexId> vertices, std::vector<EdgeRecord> edges);

  /// Convenience: edges given as endpoint pairs, ids assigned 0..m-1.
  static Multigraph from_pairs(std::size_t vertex_count,
                               std::span<const std::pair<VertexId, VertexId>> pairs);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const EdgeRecord> edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  /// Position of v in vertices(); throws std::out_of_range("vertex not in graph").
  std::size_t vertex_index(VertexId v) const;

  const EdgeRecord* find_edge(EdgeId e) const;
  /// Throws std::out_of_range for an unknown edge id.
  const EdgeRecord& edge(EdgeId e) const;
  std::size_t loop_count() const;

  /// Non-loop incidences plus twice the loops at v.
  std::size_t valency(VertexId v) const;

  /// Merges head(e) into tail(e) and removes e. Other copies of e become loops.
  Multigraph contract_edge(EdgeId e) const;
  Multigraph delete_edge(EdgeId e) const;
  /// Appends an edge with a fresh id (one past the current maximum).
  Multigraph add_edge(VertexId tail, VertexId head) const;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<VertexId>> components() const;
  std::size_t component_count() const { return components().size(); }

  /// Every valency even (loops contribute 2). Connectivity is not required.
  bool all_degrees_even() const;
  /// Connected, loop-free and |E| = |V| - 1.
  bool is_tree() const;

  bool operator==(const Multigraph&) const = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeRecord> edges_;

  void validate() const;
};

}  // namespace transversal
