#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transversal/cover.hpp"

namespace transversal {

/// Malformed instance, graph or map document. The message names the field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cover instance together with its I/O-only vertex labels.
///
/// Grammar (JSON):
///   { "r": <int >= 1>,
///     "vertices": [<string>, ...],
///     "edges": [ {"tail": <label>, "head": <label>, "perm": [<int>, ...]}, ... ],
///     "name": <string>?, "provenance": <object>? }
/// `perm` is the 1-indexed one-line image sequence of the tail->head arc;
/// tail == head encodes a loop. Vertex and edge ids follow document order.
struct InstanceDocument {
  CoverInstance instance;
  std::vector<std::string> labels;  // aligned with instance.base().vertices()
  std::optional<std::string> name;
  std::optional<std::string> provenance_json;  // compact JSON object text

  const std::string& label(VertexId v) const;
};

InstanceDocument parse_instance(std::string_view text);
/// Reads and parses a file; I/O failures are reported as ParseError.
InstanceDocument load_instance(const std::string& path);

/// Canonical, byte-stable text. Vertices in id order, edges in id order.
std::string serialize(const InstanceDocument& doc);
/// Labels default to `v<id>`.
std::string serialize(const CoverInstance& c);
InstanceDocument with_default_labels(const CoverInstance& c);

/// A plain multigraph document: {"vertices": [...], "edges": [{"tail","head"}...]}.
/// Instance and expansion documents are accepted too; extra keys are ignored.
struct GraphDocument {
  Multigraph graph;
  std::vector<std::string> labels;
  std::optional<std::size_t> index(std::string_view label) const;
};

GraphDocument parse_graph(std::string_view text);
GraphDocument load_graph(const std::string& path);

/// Map document: {"<cover label>": "<base label>", ...}, or an expansion
/// document whose "fibre_of" member is such an object.
VertexMap parse_vertex_map(std::string_view text, const GraphDocument& cover,
                           const GraphDocument& base);
VertexMap load_vertex_map(const std::string& path, const GraphDocument& cover,
                          const GraphDocument& base);

/// Explicit cover as a graph document with "fibre_of" annotations. Explicit
/// vertices are labelled `<base label>:<i>`.
std::string serialize_expansion(const InstanceDocument& doc, const ExplicitCover& x);

}  // namespace transversal
