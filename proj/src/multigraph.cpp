#include "transversal/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace transversal {

namespace {

std::vector<VertexId> dense_vertices(std::size_t n) {
  std::vector<VertexId> v(n);
  std::iota(v.begin(), v.end(), VertexId{0});
  return v;
}

// Union-find over vertex positions.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<EdgeRecord> edges)
    : vertices_(dense_vertices(vertex_count)), edges_(std::move(edges)) {
  validate();
}

Multigraph::Multigraph(std::vector<VertexId> vertices, std::vector<EdgeRecord> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (!std::is_sorted(vertices_.begin(), vertices_.end()) ||
      std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("vertex ids must be sorted and unique");
  }
  validate();
}

Multigraph Multigraph::from_pairs(std::size_t vertex_count,
                                  std::span<const std::pair<VertexId, VertexId>> pairs) {
  std::vector<EdgeRecord> edges;
  edges.reserve(pairs.size());
  for (const auto& [tail, head] : pairs) {
    edges.push_back({static_cast<EdgeId>(edges.size()), tail, head});
  }
  return Multigraph(vertex_count, std::move(edges));
}

void Multigraph::validate() const {
  std::unordered_set<EdgeId> ids;
  for (const auto& e : edges_) {
    if (!has_vertex(e.tail) || !has_vertex(e.head)) {
      throw std::invalid_argument("edge " + std::to_string(e.id) +
                                  " has an endpoint outside the vertex set");
    }
    if (!ids.insert(e.id).second) {
      throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
    }
  }
}

bool Multigraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Multigraph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw std::out_of_range("vertex not in graph");
  return static_cast<std::size_t>(it - vertices_.begin());
}

const EdgeRecord* Multigraph::find_edge(EdgeId e) const {
  auto it = std::find_if(edges_.begin(), edges_.end(),
                         [e](const EdgeRecord& rec) { return rec.id == e; });
  return it == edges_.end() ? nullptr : &*it;
}

const EdgeRecord& Multigraph::edge(EdgeId e) const {
  const EdgeRecord* rec = find_edge(e);
  if (rec == nullptr) throw std::out_of_range("edge " + std::to_string(e) + " not in graph");
  return *rec;
}

std::size_t Multigraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const EdgeRecord& e) { return e.is_loop(); }));
}

std::size_t Multigraph::valency(VertexId v) const {
  if (!has_vertex(v)) throw std::out_of_range("vertex not in graph");
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (e.tail == v) ++d;
    if (e.head == v) ++d;
  }
  return d;
}

Multigraph Multigraph::contract_edge(EdgeId id) const {
  const EdgeRecord& target = edge(id);
  if (target.is_loop()) throw std::invalid_argument("cannot contract a loop");
  const VertexId keep = target.tail;
  const VertexId retire = target.head;

  std::vector<EdgeRecord> edges;
  edges.reserve(edges_.size() - 1);
  for (const auto& e : edges_) {
    if (e.id == id) continue;
    EdgeRecord rewritten = e;
    if (rewritten.tail == retire) rewritten.tail = keep;
    if (rewritten.head == retire) rewritten.head = keep;
    edges.push_back(rewritten);
  }
  std::vector<VertexId> vertices;
  vertices.reserve(vertices_.size() - 1);
  std::copy_if(vertices_.begin(), vertices_.end(), std::back_inserter(vertices),
               [retire](VertexId v) { return v != retire; });
  return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph Multigraph::delete_edge(EdgeId id) const {
  edge(id);
  std::vector<EdgeRecord> edges;
  edges.reserve(edges_.size() - 1);
  std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(edges),
               [id](const EdgeRecord& e) { return e.id != id; });
  return Multigraph(vertices_, std::move(edges));
}

Multigraph Multigraph::add_edge(VertexId tail, VertexId head) const {
  EdgeId next = 0;
  for (const auto& e : edges_) next = std::max(next, e.id + 1);
  std::vector<EdgeRecord> edges = edges_;
  edges.push_back({next, tail, head});
  return Multigraph(vertices_, std::move(edges));
}

std::vector<std::vector<VertexId>> Multigraph::components() const {
  DisjointSets sets(vertices_.size());
  for (const auto& e : edges_) {
    if (!e.is_loop()) sets.unite(vertex_index(e.tail), vertex_index(e.head));
  }
  // Roots are the smallest position in each block, so blocks come out ordered.
  std::vector<std::vector<VertexId>> blocks;
  std::vector<std::size_t> block_of_root(vertices_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (block_of_root[root] == SIZE_MAX) {
      block_of_root[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].push_back(vertices_[i]);
  }
  return blocks;
}

bool Multigraph::all_degrees_even() const {
  std::vector<std::size_t> parity(vertices_.size(), 0);
  for (const auto& e : edges_) {
    if (e.is_loop()) continue;
    parity[vertex_index(e.tail)] ^= 1;
    parity[vertex_index(e.head)] ^= 1;
  }
  return std::all_of(parity.begin(), parity.end(), [](std::size_t p) { return p == 0; });
}

bool Multigraph::is_tree() const {
  if (vertices_.empty() || loop_count() != 0) return false;
  return edges_.size() + 1 == vertices_.size() && component_count() == 1;
}

}  // namespace transversal
