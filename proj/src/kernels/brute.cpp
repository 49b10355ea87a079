#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernels.hpp"

namespace transversal::kernels {

CompiledCover CompiledCover::from(const CoverInstance& c) {
  CompiledCover cc;
  cc.n = static_cast<std::uint32_t>(c.vertex_count());
  cc.r = c.r();
  cc.loop_fixed.assign(static_cast<std::size_t>(cc.n) * cc.r, 0);
  const auto edges = c.base().edges();
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&edges](std::size_t a, std::size_t b) { return edges[a].id < edges[b].id; });
  for (std::size_t k : order) {
    const auto& e = edges[k];
    const Perm& p = c.perms()[k];
    const auto u = static_cast<std::uint32_t>(c.base().vertex_index(e.tail));
    if (e.is_loop()) {
      for (std::uint32_t i = 0; i < cc.r; ++i) {
        if (p.image0(i) == i) ++cc.loop_fixed[u * cc.r + i];
      }
      continue;
    }
    cc.edge_tail.push_back(u);
    cc.edge_head.push_back(static_cast<std::uint32_t>(c.base().vertex_index(e.head)));
    for (std::uint32_t i = 0; i < cc.r; ++i) cc.edge_perm.push_back(p.image0(i));
  }
  return cc;
}

namespace {

// Mixed-radix digits of `index`, digit 0 for vertex 0.
void decode(std::uint64_t index, std::uint32_t r, std::vector<std::uint32_t>& digits) {
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(index % r);
    index /= r;
  }
}

void advance(std::uint32_t r, std::vector<std::uint32_t>& digits) {
  for (auto& d : digits) {
    if (++d < r) return;
    d = 0;
  }
}

std::size_t induced_edges(const CompiledCover& cc, const std::vector<std::uint32_t>& choice) {
  std::size_t count = 0;
  const std::uint32_t r = cc.r;
  for (std::size_t k = 0; k < cc.edge_tail.size(); ++k) {
    count += cc.edge_perm[k * r + choice[cc.edge_tail[k]]] == choice[cc.edge_head[k]];
  }
  for (std::uint32_t v = 0; v < cc.n; ++v) count += cc.loop_fixed[v * r + choice[v]];
  return count;
}

std::size_t max_edges(const CompiledCover& cc) {
  std::size_t loops = std::accumulate(cc.loop_fixed.begin(), cc.loop_fixed.end(), std::size_t{0});
  return cc.edge_count() + loops;
}

void brute_range(const CompiledCover& cc, std::uint64_t begin, std::uint64_t end,
                 std::vector<std::uint64_t>& hist) {
  if (begin >= end) return;
  std::vector<std::uint32_t> choice(cc.n);
  decode(begin, cc.r, choice);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    ++hist[induced_edges(cc, choice)];
    advance(cc.r, choice);
  }
}

// Components of the transversal subgraph; loops never join anything.
std::size_t induced_components(const CompiledCover& cc, const std::vector<std::uint32_t>& choice,
                               std::vector<std::uint32_t>& parent) {
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = cc.n;
  const std::uint32_t r = cc.r;
  for (std::size_t k = 0; k < cc.edge_tail.size(); ++k) {
    const std::uint32_t u = cc.edge_tail[k];
    const std::uint32_t v = cc.edge_head[k];
    if (cc.edge_perm[k * r + choice[u]] != choice[v]) continue;
    const std::uint32_t a = find(u);
    const std::uint32_t b = find(v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components;
}

void zeta_range(const CompiledCover& cc, std::uint64_t begin, std::uint64_t end,
                std::vector<std::uint64_t>& hist) {
  if (begin >= end) return;
  std::vector<std::uint32_t> choice(cc.n);
  std::vector<std::uint32_t> parent(cc.n);
  decode(begin, cc.r, choice);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const std::size_t k = induced_edges(cc, choice);
    const std::size_t comps = induced_components(cc, choice, parent);
    ++hist[k * (cc.n + 1) + comps];
    advance(cc.r, choice);
  }
}

template <typename RangeFn>
std::vector<std::uint64_t> run_omp(std::size_t hist_size, std::uint64_t total, RangeFn range) {
  std::vector<std::uint64_t> hist(hist_size, 0);
#ifdef _OPENMP
  const std::uint64_t chunks = std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(total, 64u * static_cast<std::uint64_t>(omp_get_max_threads())));
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(hist_size, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
      const std::uint64_t begin = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
      const std::uint64_t size = total / chunks + (static_cast<std::uint64_t>(c) < total % chunks);
      range(begin, begin + size, local);
    }
#pragma omp critical(transversal_hist_merge)
    for (std::size_t k = 0; k < hist_size; ++k) hist[k] += local[k];
  }
#else
  range(0, total, hist);
#endif
  return hist;
}

}  // namespace

std::vector<std::uint64_t> brute_histogram_serial(const CompiledCover& cc, std::uint64_t total) {
  std::vector<std::uint64_t> hist(max_edges(cc) + 1, 0);
  brute_range(cc, 0, total, hist);
  return hist;
}

std::vector<std::uint64_t> brute_histogram_omp(const CompiledCover& cc, std::uint64_t total) {
  return run_omp(max_edges(cc) + 1, total,
                 [&cc](std::uint64_t b, std::uint64_t e, std::vector<std::uint64_t>& h) {
                   brute_range(cc, b, e, h);
                 });
}

std::vector<std::uint64_t> zeta_histogram_serial(const CompiledCover& cc, std::uint64_t total) {
  std::vector<std::uint64_t> hist((max_edges(cc) + 1) * (cc.n + 1), 0);
  zeta_range(cc, 0, total, hist);
  return hist;
}

std::vector<std::uint64_t> zeta_histogram_omp(const CompiledCover& cc, std::uint64_t total) {
  return run_omp((max_edges(cc) + 1) * (cc.n + 1), total,
                 [&cc](std::uint64_t b, std::uint64_t e, std::vector<std::uint64_t>& h) {
                   zeta_range(cc, b, e, h);
                 });
}

}  // namespace transversal::kernels
