#include "transversal/cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace transversal {

CoverInstance::CoverInstance(Multigraph base, std::uint32_t r, std::vector<Perm> perms)
    : base_(std::move(base)), r_(r), perms_(std::move(perms)) {
  if (r_ == 0) throw std::invalid_argument("cover index r must be positive");
  if (perms_.size() != base_.edge_count()) {
    throw std::invalid_argument("arc function needs exactly one permutation per edge");
  }
  for (std::size_t k = 0; k < perms_.size(); ++k) {
    if (perms_[k].degree() != r_) {
      throw std::invalid_argument("permutation on edge " + std::to_string(base_.edges()[k].id) +
                                  " has degree " + std::to_string(perms_[k].degree()) +
                                  ", expected " + std::to_string(r_));
    }
  }
}

const Perm& CoverInstance::perm(EdgeId e) const {
  const EdgeRecord& rec = base_.edge(e);
  return perms_[static_cast<std::size_t>(&rec - base_.edges().data())];
}

Perm CoverInstance::arc_perm(EdgeId e, VertexId from) const {
  const EdgeRecord& rec = base_.edge(e);
  if (rec.tail == from) return perm(e);
  if (rec.head == from) return inverse(perm(e));
  throw std::invalid_argument("vertex is not an endpoint of the edge");
}

CoverInstance contract_edge(const CoverInstance& c, EdgeId e) {
  const EdgeRecord& target = c.base().edge(e);
  if (target.is_loop()) throw std::invalid_argument("cannot contract a loop");
  const VertexId v = target.head;
  const Perm& sigma = c.perm(e);
  const Perm sigma_inv = inverse(sigma);

  std::vector<Perm> perms;
  perms.reserve(c.edge_count() - 1);
  const auto edges = c.base().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const EdgeRecord& f = edges[k];
    if (f.id == e) continue;
    const Perm& tau = c.perms()[k];
    const bool leaves_v = f.tail == v;
    const bool enters_v = f.head == v;
    if (leaves_v && enters_v) {
      perms.push_back(compose(compose(sigma, tau), sigma_inv));
    } else if (leaves_v) {
      perms.push_back(compose(sigma, tau));
    } else if (enters_v) {
      perms.push_back(compose(tau, sigma_inv));
    } else {
      perms.push_back(tau);
    }
  }
  return CoverInstance(c.base().contract_edge(e), c.r(), std::move(perms));
}

CoverInstance delete_edge(const CoverInstance& c, EdgeId e) {
  Multigraph base = c.base().delete_edge(e);
  std::vector<Perm> perms;
  perms.reserve(c.edge_count() - 1);
  const auto edges = c.base().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].id != e) perms.push_back(c.perms()[k]);
  }
  return CoverInstance(std::move(base), c.r(), std::move(perms));
}

CoverInstance disjoint_union(const CoverInstance& first, const CoverInstance& second) {
  if (first.r() != second.r()) throw std::invalid_argument("disjoint_union: different r");
  VertexId vshift = 0;
  for (VertexId v : first.base().vertices()) vshift = std::max(vshift, v + 1);
  EdgeId eshift = 0;
  for (const auto& e : first.base().edges()) eshift = std::max(eshift, e.id + 1);

  std::vector<VertexId> vertices(first.base().vertices().begin(), first.base().vertices().end());
  for (VertexId v : second.base().vertices()) vertices.push_back(v + vshift);
  std::vector<EdgeRecord> edges(first.base().edges().begin(), first.base().edges().end());
  for (const auto& e : second.base().edges()) {
    edges.push_back({e.id + eshift, e.tail + vshift, e.head + vshift});
  }
  std::vector<Perm> perms = first.perms();
  perms.insert(perms.end(), second.perms().begin(), second.perms().end());
  return CoverInstance(Multigraph(std::move(vertices), std::move(edges)), first.r(),
                       std::move(perms));
}

ExplicitCover expand(const CoverInstance& c) {
  const std::uint32_t r = c.r();
  const std::size_t n = c.vertex_count();
  ExplicitCover x;
  x.r = r;
  x.fibre_of.resize(n * r);
  x.index_of.resize(n * r);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::uint32_t i = 1; i <= r; ++i) {
      x.fibre_of[x.vertex(k, i)] = c.base().vertices()[k];
      x.index_of[x.vertex(k, i)] = i;
    }
  }
  std::vector<EdgeRecord> edges;
  edges.reserve(c.edge_count() * r);
  const auto base_edges = c.base().edges();
  for (std::size_t k = 0; k < base_edges.size(); ++k) {
    const auto& e = base_edges[k];
    const std::size_t pu = c.base().vertex_index(e.tail);
    const std::size_t pv = c.base().vertex_index(e.head);
    const Perm& sigma = c.perms()[k];
    for (std::uint32_t i = 1; i <= r; ++i) {
      edges.push_back({static_cast<EdgeId>(edges.size()), x.vertex(pu, i),
                       x.vertex(pv, sigma.apply(i))});
      x.origin_of.push_back(e.id);
    }
  }
  x.graph = Multigraph(n * r, std::move(edges));
  return x;
}

VertexMap fibre_map(const ExplicitCover& x) {
  VertexMap h;
  for (VertexId v = 0; v < x.fibre_of.size(); ++v) h.emplace(v, x.fibre_of[v]);
  return h;
}

CoveringMapReport validate_covering_map(const Multigraph& cover, const Multigraph& base,
                                        const VertexMap& h) {
  auto fail = [](std::string msg) { return CoveringMapReport{false, std::move(msg)}; };

  for (VertexId u : cover.vertices()) {
    auto it = h.find(u);
    if (it == h.end()) return fail("cover vertex " + std::to_string(u) + " is not mapped");
    if (!base.has_vertex(it->second)) {
      return fail("cover vertex " + std::to_string(u) + " maps outside the base");
    }
  }

  // Base edge multiplicities and loop counts, by vertex position.
  const std::size_t nb = base.vertex_count();
  std::vector<std::map<VertexId, std::size_t>> base_mult(nb);
  std::vector<std::size_t> base_loops(nb, 0);
  for (const auto& e : base.edges()) {
    if (e.is_loop()) {
      ++base_loops[base.vertex_index(e.tail)];
    } else {
      ++base_mult[base.vertex_index(e.tail)][e.head];
      ++base_mult[base.vertex_index(e.head)][e.tail];
    }
  }

  const std::size_t nc = cover.vertex_count();
  std::vector<std::map<VertexId, std::size_t>> cover_mult(nc);
  std::vector<std::size_t> within_fibre_valency(nc, 0);
  for (const auto& e : cover.edges()) {
    const VertexId hx = h.at(e.tail);
    const VertexId hy = h.at(e.head);
    const std::size_t px = cover.vertex_index(e.tail);
    const std::size_t py = cover.vertex_index(e.head);
    if (hx == hy) {
      if (base_loops[base.vertex_index(hx)] == 0) {
        return fail("cover edge " + std::to_string(e.id) + " lies inside the fibre of base vertex " +
                    std::to_string(hx) + ", which has no loop");
      }
      within_fibre_valency[px] += 1;
      within_fibre_valency[py] += 1;
    } else {
      if (!base_mult[base.vertex_index(hx)].contains(hy)) {
        return fail("cover edge " + std::to_string(e.id) + " maps onto a non-edge " +
                    std::to_string(hx) + "-" + std::to_string(hy));
      }
      ++cover_mult[px][hy];
      ++cover_mult[py][hx];
    }
  }

  for (std::size_t p = 0; p < nc; ++p) {
    const VertexId u = cover.vertices()[p];
    const std::size_t b = base.vertex_index(h.at(u));
    if (cover_mult[p] != base_mult[b]) {
      return fail("cover vertex " + std::to_string(u) +
                  ": non-loop edges are not in bijection with those at base vertex " +
                  std::to_string(base.vertices()[b]));
    }
    if (within_fibre_valency[p] != 2 * base_loops[b]) {
      return fail("cover vertex " + std::to_string(u) + ": loop valency " +
                  std::to_string(within_fibre_valency[p]) + " differs from " +
                  std::to_string(2 * base_loops[b]) + " at base vertex " +
                  std::to_string(base.vertices()[b]));
    }
  }
  return {true, {}};
}

FibreReport fibre_sizes(const Multigraph& cover, const Multigraph& base, const VertexMap& h) {
  FibreReport report;
  for (VertexId v : base.vertices()) report.sizes[v] = 0;
  for (VertexId u : cover.vertices()) {
    auto it = h.find(u);
    if (it != h.end()) ++report.sizes[it->second];
  }
  for (const auto& block : base.components()) {
    const std::size_t first = report.sizes[block.front()];
    for (VertexId v : block) {
      if (report.sizes[v] != first) report.uniform_on_components = false;
    }
  }
  return report;
}

}  // namespace transversal
