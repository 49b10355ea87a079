#include "transversal/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace transversal {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

std::vector<std::string> parse_labels(const json& doc) {
  const json& vertices = require(doc, "vertices", "document");
  if (!vertices.is_array()) throw ParseError("vertices: expected an array of strings");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const std::string where = "vertices[" + std::to_string(k) + "]";
    if (!vertices[k].is_string()) throw ParseError(where + ": expected a string label");
    const auto& label = vertices[k].get_ref<const std::string&>();
    if (!seen.insert(label).second) throw ParseError(where + ": duplicate label " + quoted(label));
    labels.push_back(label);
  }
  return labels;
}

// Endpoint pairs of the "edges" array, resolved to label positions.
struct RawEdge {
  VertexId tail;
  VertexId head;
  const json* node;
};

std::vector<RawEdge> parse_edges(const json& doc, const std::map<std::string, VertexId>& index) {
  const json& edges = require(doc, "edges", "document");
  if (!edges.is_array()) throw ParseError("edges: expected an array");
  std::vector<RawEdge> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const json& e = edges[k];
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    auto endpoint = [&](const char* key) {
      const json& v = require(e, key, where);
      if (!v.is_string()) throw ParseError(where + "." + key + ": expected a vertex label");
      auto it = index.find(v.get<std::string>());
      if (it == index.end()) {
        throw ParseError(where + "." + key + ": unknown vertex " + quoted(v.get<std::string>()));
      }
      return it->second;
    };
    out.push_back({endpoint("tail"), endpoint("head"), &e});
  }
  return out;
}

std::map<std::string, VertexId> label_index(const std::vector<std::string>& labels) {
  std::map<std::string, VertexId> index;
  for (std::size_t k = 0; k < labels.size(); ++k) index.emplace(labels[k], static_cast<VertexId>(k));
  return index;
}

Perm parse_perm(const json& e, std::uint32_t r, const std::string& where) {
  const json& p = require(e, "perm", where);
  if (!p.is_array()) throw ParseError(where + ".perm: expected an array of integers");
  if (p.size() != r) {
    throw ParseError(where + ".perm: wrong length, expected " + std::to_string(r) + " entries, got " +
                     std::to_string(p.size()));
  }
  std::vector<std::uint32_t> images;
  std::vector<bool> seen(r, false);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_number_integer()) throw ParseError(where + ".perm: entries must be integers");
    const auto x = p[k].get<long long>();
    if (x < 1 || x > static_cast<long long>(r)) {
      throw ParseError(where + ".perm: entry " + std::to_string(x) + " outside {1.." +
                       std::to_string(r) + "}");
    }
    if (seen[x - 1]) {
      throw ParseError(where + ".perm: not a bijection of {1.." + std::to_string(r) +
                       "} (repeated " + std::to_string(x) + ")");
    }
    seen[x - 1] = true;
    images.push_back(static_cast<std::uint32_t>(x));
  }
  return Perm::from_images(images);
}

void write_edge_endpoints(std::ostream& os, const std::string& tail, const std::string& head) {
  os << "{\"tail\": " << quoted(tail) << ", \"head\": " << quoted(head);
}

void write_label_array(std::ostream& os, const std::vector<std::string>& labels) {
  os << '[';
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k) os << ", ";
    os << quoted(labels[k]);
  }
  os << ']';
}

}  // namespace

const std::string& InstanceDocument::label(VertexId v) const {
  return labels.at(instance.base().vertex_index(v));
}

InstanceDocument parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "r" && key != "vertices" && key != "edges" && key != "name" && key != "provenance") {
      throw ParseError("document: unknown key " + quoted(key));
    }
  }
  const json& rj = require(doc, "r", "document");
  if (!rj.is_number_integer() || rj.get<long long>() < 1 || rj.get<long long>() > 65535) {
    throw ParseError("r: expected an integer in [1, 65535]");
  }
  const auto r = rj.get<std::uint32_t>();

  InstanceDocument out;
  out.labels = parse_labels(doc);
  const auto raw = parse_edges(doc, label_index(out.labels));
  std::vector<EdgeRecord> edges;
  std::vector<Perm> perms;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    edges.push_back({static_cast<EdgeId>(k), raw[k].tail, raw[k].head});
    perms.push_back(parse_perm(*raw[k].node, r, "edges[" + std::to_string(k) + "]"));
  }
  out.instance = CoverInstance(Multigraph(out.labels.size(), std::move(edges)), r, std::move(perms));
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("name: expected a string");
    out.name = it->get<std::string>();
  }
  if (auto it = doc.find("provenance"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("provenance: expected an object");
    out.provenance_json = it->dump();
  }
  return out;
}

InstanceDocument load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

InstanceDocument with_default_labels(const CoverInstance& c) {
  InstanceDocument doc;
  doc.instance = c;
  for (VertexId v : c.base().vertices()) doc.labels.push_back("v" + std::to_string(v));
  return doc;
}

std::string serialize(const InstanceDocument& doc) {
  const CoverInstance& c = doc.instance;
  const auto edges = c.base().edges();
  std::vector<std::size_t> order(edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&edges](std::size_t a, std::size_t b) { return edges[a].id < edges[b].id; });

  std::ostringstream os;
  os << "{\n";
  if (doc.name) os << "  \"name\": " << quoted(*doc.name) << ",\n";
  if (doc.provenance_json) os << "  \"provenance\": " << *doc.provenance_json << ",\n";
  os << "  \"r\": " << c.r() << ",\n";
  os << "  \"vertices\": ";
  write_label_array(os, doc.labels);
  os << ",\n  \"edges\": [";
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& e = edges[order[k]];
    os << (k ? ",\n    " : "\n    ");
    write_edge_endpoints(os, doc.label(e.tail), doc.label(e.head));
    const auto images = c.perms()[order[k]].images();
    os << ", \"perm\": [";
    for (std::size_t i = 0; i < images.size(); ++i) os << (i ? ", " : "") << images[i];
    os << "]}";
  }
  os << (order.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

std::string serialize(const CoverInstance& c) { return serialize(with_default_labels(c)); }

std::optional<std::size_t> GraphDocument::index(std::string_view label) const {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == label) return k;
  }
  return std::nullopt;
}

GraphDocument parse_graph(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  GraphDocument out;
  out.labels = parse_labels(doc);
  const auto raw = parse_edges(doc, label_index(out.labels));
  std::vector<EdgeRecord> edges;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    edges.push_back({static_cast<EdgeId>(k), raw[k].tail, raw[k].head});
  }
  out.graph = Multigraph(out.labels.size(), std::move(edges));
  return out;
}

GraphDocument load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

VertexMap parse_vertex_map(std::string_view text, const GraphDocument& cover,
                           const GraphDocument& base) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("fibre_of")) doc = doc.at("fibre_of");
  if (!doc.is_object()) throw ParseError("map: expected an object from cover to base labels");
  VertexMap h;
  for (const auto& [key, value] : doc.items()) {
    const auto from = cover.index(key);
    if (!from) throw ParseError("map: unknown cover vertex " + quoted(key));
    if (!value.is_string()) throw ParseError("map[" + quoted(key) + "]: expected a base label");
    const auto to = base.index(value.get<std::string>());
    if (!to) {
      throw ParseError("map[" + quoted(key) + "]: unknown base vertex " +
                       quoted(value.get<std::string>()));
    }
    h.emplace(static_cast<VertexId>(*from), static_cast<VertexId>(*to));
  }
  return h;
}

VertexMap load_vertex_map(const std::string& path, const GraphDocument& cover,
                          const GraphDocument& base) {
  try {
    return parse_vertex_map(read_file(path), cover, base);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_expansion(const InstanceDocument& doc, const ExplicitCover& x) {
  std::vector<std::string> labels(x.fibre_of.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = doc.label(x.fibre_of[v]) + ":" + std::to_string(x.index_of[v]);
  }
  std::ostringstream os;
  os << "{\n  \"r\": " << x.r << ",\n  \"vertices\": ";
  write_label_array(os, labels);
  os << ",\n  \"edges\": [";
  const auto edges = x.graph.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    os << (k ? ",\n    " : "\n    ");
    write_edge_endpoints(os, labels[edges[k].tail], labels[edges[k].head]);
    os << ", \"origin\": " << x.origin_of[k] << "}";
  }
  os << (edges.empty() ? "],\n" : "\n  ],\n");
  os << "  \"fibre_of\": {";
  for (std::size_t v = 0; v < labels.size(); ++v) {
    os << (v ? ",\n    " : "\n    ") << quoted(labels[v]) << ": " << quoted(doc.label(x.fibre_of[v]));
  }
  os << (labels.empty() ? "}\n}\n" : "\n  }\n}\n");
  return os.str();
}

}  // namespace transversal
