#pragma once

// Flat-array kernels behind the engine. Each has a serial version and an
// OpenMP version; the two must produce identical results.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "transversal/cover.hpp"
#include "transversal/engine.hpp"
#include "transversal/polynomial.hpp"

namespace transversal::kernels {

/// Cover instance with vertices renumbered to positions and permutations
/// flattened (0-indexed images, r per edge).
struct CompiledCover {
  std::uint32_t n = 0;
  std::uint32_t r = 1;
  std::vector<std::uint32_t> edge_tail;  // non-loop edges, in edge-id order
  std::vector<std::uint32_t> edge_head;
  std::vector<std::uint32_t> edge_perm;  // edge k occupies [k*r, (k+1)*r)
  std::vector<std::uint32_t> loop_fixed;  // n*r: loops at vertex fixing index

  std::size_t edge_count() const { return edge_tail.size(); }

  static CompiledCover from(const CoverInstance& c);
};

/// hist[k] = number of transversals inducing exactly k edges.
std::vector<std::uint64_t> brute_histogram_serial(const CompiledCover& cc, std::uint64_t total);
std::vector<std::uint64_t> brute_histogram_omp(const CompiledCover& cc, std::uint64_t total);

/// hist[k * (n + 1) + j] = number of transversals with k edges and j components.
std::vector<std::uint64_t> zeta_histogram_serial(const CompiledCover& cc, std::uint64_t total);
std::vector<std::uint64_t> zeta_histogram_omp(const CompiledCover& cc, std::uint64_t total);

/// Contraction-deletion on the first live non-loop edge.
IntPolynomial dc_serial(const CompiledCover& cc, EngineStats& stats);
IntPolynomial dc_omp(const CompiledCover& cc, std::size_t task_depth, EngineStats& stats);

}  // namespace transversal::kernels
