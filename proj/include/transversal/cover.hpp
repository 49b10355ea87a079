#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "transversal/multigraph.hpp"
#include "transversal/permutation.hpp"

namespace transversal {

/// An r-fold cover X^alpha given by a base multigraph and an arc function.
///
/// Only the stored tail->head orientation of each edge carries a permutation;
/// the reverse arc is its inverse, computed on demand. Loops carry a single
/// unconstrained permutation.
class CoverInstance {
 public:
  CoverInstance() = default;
  /// `perms` is aligned with `base.edges()`. Throws std::invalid_argument on a
  /// size mismatch, r == 0 or a permutation of the wrong degree.
  CoverInstance(Multigraph base, std::uint32_t r, std::vector<Perm> perms);

  const Multigraph& base() const { return base_; }
  std::uint32_t r() const { return r_; }
  std::size_t vertex_count() const { return base_.vertex_count(); }
  std::size_t edge_count() const { return base_.edge_count(); }

  /// Permutations aligned with base().edges().
  const std::vector<Perm>& perms() const { return perms_; }
  const Perm& perm(EdgeId e) const;
  /// Permutation of edge e read in the direction leaving `from`.
  Perm arc_perm(EdgeId e, VertexId from) const;

  bool operator==(const CoverInstance&) const = default;

 private:
  Multigraph base_;
  std::uint32_t r_ = 1;
  std::vector<Perm> perms_;
};

/// X^alpha / e: contracts the lifted matching of the non-loop edge e.
/// With s = alpha(e), u = tail(e), v = head(e), and left-first composition:
///   f = (w -> v, t)  becomes (w -> u, t s^-1)
///   f = (v -> w, t)  becomes (u -> w, s t)
///   loop t at v      becomes loop s t s^-1 at u
/// which covers the parallel and anti-parallel copies of e as special cases.
CoverInstance contract_edge(const CoverInstance& c, EdgeId e);
/// X^alpha \ e: restriction of alpha to the remaining edges.
CoverInstance delete_edge(const CoverInstance& c, EdgeId e);
/// Disjoint union; vertex and edge ids of `second` are shifted past `first`.
CoverInstance disjoint_union(const CoverInstance& first, const CoverInstance& second);

/// The explicit covering multigraph on V(X) x {1..r}.
///
/// Explicit vertex `k * r + (i - 1)` is (k-th base vertex, i). Explicit edge
/// ids are dense; `origin_of[id]` names the base edge it lifts.
struct ExplicitCover {
  Multigraph graph;
  std::uint32_t r = 1;
  std::vector<VertexId> fibre_of;   // explicit vertex -> base vertex
  std::vector<std::uint32_t> index_of;  // explicit vertex -> i in {1..r}
  std::vector<EdgeId> origin_of;    // explicit edge -> base edge

  VertexId vertex(std::size_t base_position, std::uint32_t i) const {
    return static_cast<VertexId>(base_position * r + (i - 1));
  }
};

ExplicitCover expand(const CoverInstance& c);

/// Cover vertex -> base vertex.
using VertexMap = std::map<VertexId, VertexId>;

struct CoveringMapReport {
  bool valid = false;
  std::string diagnostic;  // first violation; empty when valid
};

/// Checks that h is a locally bijective homomorphism. For each cover vertex u:
/// every edge at u maps onto an edge (edges inside a fibre onto a loop), the
/// number of edges from u into each other fibre equals the edge multiplicity
/// between the base images, and the valency u receives from edges inside its
/// own fibre equals twice the number of loops at h(u).
CoveringMapReport validate_covering_map(const Multigraph& cover, const Multigraph& base,
                                        const VertexMap& h);

struct FibreReport {
  std::map<VertexId, std::size_t> sizes;
  /// Sizes are constant on every connected component of the base.
  bool uniform_on_components = true;
};

FibreReport fibre_sizes(const Multigraph& cover, const Multigraph& base, const VertexMap& h);

/// The fibre projection of an expansion as a VertexMap.
VertexMap fibre_map(const ExplicitCover& x);

}  // namespace transversal
