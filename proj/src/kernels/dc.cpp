#include <algorithm>
#include <chrono>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernels.hpp"

namespace transversal::kernels {

namespace {

// Live part of a recursion node. Loops never need their permutation again:
// only how many loops at each vertex fix each index, so they are folded into
// `fixed` as soon as they appear.
struct DcState {
  std::vector<std::uint32_t> tail;
  std::vector<std::uint32_t> head;
  std::vector<std::uint32_t> perm;   // r images per live edge, edge order = id order
  std::vector<std::uint32_t> fixed;  // n*r
  std::vector<std::uint8_t> alive;   // n
};

// Per-thread accumulators. buckets[k] collects the loops-only polynomials of
// leaves reached through k contractions; the answer is sum_k (t-1)^k buckets[k].
struct Accumulator {
  std::vector<std::vector<BigInt>> buckets;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t max_depth = 0;
};

struct Context {
  std::uint32_t n = 0;
  std::uint32_t r = 1;
  bool small_leaves = true;  // r^n fits in 64 bits
  bool parallel = false;
  std::size_t task_depth = 0;
  std::vector<Accumulator> per_thread;
};

std::size_t thread_slot(const Context& ctx) {
#ifdef _OPENMP
  if (ctx.parallel) return static_cast<std::size_t>(omp_get_thread_num());
#endif
  (void)ctx;
  return 0;
}

bool power_fits_u64(std::uint32_t r, std::uint32_t n) {
  unsigned __int128 acc = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    acc *= r;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return false;
  }
  return true;
}

// prod over live vertices of sum_i t^{fixed[v][i]}.
template <typename Coeff>
std::vector<Coeff> leaf_product(const Context& ctx, const DcState& s) {
  std::vector<Coeff> acc{Coeff(1)};
  std::vector<Coeff> next;
  std::vector<std::uint32_t> factor;
  for (std::uint32_t v = 0; v < ctx.n; ++v) {
    if (!s.alive[v]) continue;
    const std::uint32_t* f = &s.fixed[static_cast<std::size_t>(v) * ctx.r];
    const std::uint32_t top = *std::max_element(f, f + ctx.r);
    factor.assign(top + 1, 0);
    for (std::uint32_t i = 0; i < ctx.r; ++i) ++factor[f[i]];
    next.assign(acc.size() + top, Coeff(0));
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t b = 0; b <= top; ++b) {
        if (factor[b]) next[a + b] += acc[a] * Coeff(factor[b]);
      }
    }
    acc.swap(next);
  }
  return acc;
}

void record_leaf(Context& ctx, Accumulator& acc, const DcState& s, std::size_t contractions) {
  ++acc.leaves;
  auto& bucket = acc.buckets[contractions];
  auto add = [&bucket](const auto& coeffs) {
    if (bucket.size() < coeffs.size()) bucket.resize(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) bucket[k] += coeffs[k];
  };
  if (ctx.small_leaves) {
    add(leaf_product<std::uint64_t>(ctx, s));
  } else {
    add(leaf_product<BigInt>(ctx, s));
  }
}

// Contracts the first live edge (u -> v, sigma), merging v into u.
DcState contract_front(const Context& ctx, const DcState& s) {
  const std::uint32_t r = ctx.r;
  const std::uint32_t u = s.tail[0];
  const std::uint32_t v = s.head[0];
  const std::uint32_t* sigma = &s.perm[0];
  std::vector<std::uint32_t> sigma_inv(r);
  for (std::uint32_t i = 0; i < r; ++i) sigma_inv[sigma[i]] = i;

  DcState out;
  out.alive = s.alive;
  out.alive[v] = 0;
  out.fixed = s.fixed;
  // loop tau at v becomes sigma tau sigma^-1 at u, which fixes k iff tau fixes k^sigma.
  for (std::uint32_t k = 0; k < r; ++k) {
    out.fixed[static_cast<std::size_t>(u) * r + k] += s.fixed[static_cast<std::size_t>(v) * r + sigma[k]];
  }
  const std::size_t m = s.tail.size();
  out.tail.reserve(m - 1);
  out.head.reserve(m - 1);
  out.perm.reserve((m - 1) * r);
  std::vector<std::uint32_t> rewritten(r);
  for (std::size_t e = 1; e < m; ++e) {
    const std::uint32_t* tau = &s.perm[e * r];
    std::uint32_t t = s.tail[e];
    std::uint32_t h = s.head[e];
    // A non-loop edge cannot both leave and enter v.
    if (t == v) {
      for (std::uint32_t i = 0; i < r; ++i) rewritten[i] = tau[sigma[i]];
      t = u;
    } else if (h == v) {
      for (std::uint32_t i = 0; i < r; ++i) rewritten[i] = sigma_inv[tau[i]];
      h = u;
    } else {
      std::copy(tau, tau + r, rewritten.begin());
    }
    if (t == h) {
      for (std::uint32_t i = 0; i < r; ++i) {
        if (rewritten[i] == i) ++out.fixed[static_cast<std::size_t>(u) * r + i];
      }
      continue;
    }
    out.tail.push_back(t);
    out.head.push_back(h);
    out.perm.insert(out.perm.end(), rewritten.begin(), rewritten.end());
  }
  return out;
}

void delete_front(std::uint32_t r, DcState& s) {
  s.tail.erase(s.tail.begin());
  s.head.erase(s.head.begin());
  s.perm.erase(s.perm.begin(), s.perm.begin() + r);
}

void recurse(DcState s, std::size_t contractions, std::size_t depth, Context* ctx) {
  Accumulator& acc = ctx->per_thread[thread_slot(*ctx)];
  ++acc.nodes;
  acc.max_depth = std::max<std::uint64_t>(acc.max_depth, depth);
  if (s.tail.empty()) {
    record_leaf(*ctx, acc, s, contractions);
    return;
  }
  DcState contracted = contract_front(*ctx, s);
  delete_front(ctx->r, s);
  if (ctx->parallel && depth < ctx->task_depth) {
#pragma omp task firstprivate(contracted, contractions, depth, ctx)
    recurse(std::move(contracted), contractions + 1, depth + 1, ctx);
  } else {
    recurse(std::move(contracted), contractions + 1, depth + 1, ctx);
  }
  recurse(std::move(s), contractions, depth + 1, ctx);
}

IntPolynomial run(const CompiledCover& cc, bool parallel, std::size_t task_depth,
                  EngineStats& stats) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx;
  ctx.n = cc.n;
  ctx.r = cc.r;
  ctx.small_leaves = power_fits_u64(cc.r, cc.n);
  ctx.parallel = parallel;
  ctx.task_depth = task_depth;
  int threads = 1;
#ifdef _OPENMP
  if (parallel) threads = omp_get_max_threads();
#endif
  ctx.per_thread.resize(static_cast<std::size_t>(threads));
  for (auto& acc : ctx.per_thread) acc.buckets.resize(std::max<std::size_t>(cc.n, 1));

  DcState root;
  root.tail = cc.edge_tail;
  root.head = cc.edge_head;
  root.perm = cc.edge_perm;
  root.fixed = cc.loop_fixed;
  root.alive.assign(cc.n, 1);

  if (parallel) {
#pragma omp parallel num_threads(threads)
#pragma omp single
    recurse(std::move(root), 0, 0, &ctx);
  } else {
    recurse(std::move(root), 0, 0, &ctx);
  }

  // Merge buckets, then fold sum_k (t-1)^k P_k by Horner in (t-1).
  std::vector<IntPolynomial> merged(ctx.per_thread.front().buckets.size());
  stats = {};
  for (const auto& acc : ctx.per_thread) {
    for (std::size_t k = 0; k < acc.buckets.size(); ++k) merged[k] += IntPolynomial(acc.buckets[k]);
    stats.nodes += acc.nodes;
    stats.leaves += acc.leaves;
    stats.max_depth = std::max(stats.max_depth, acc.max_depth);
  }
  IntPolynomial result;
  const IntPolynomial x = t_minus_one();
  for (std::size_t k = merged.size(); k-- > 0;) result = result * x + merged[k];
  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

IntPolynomial dc_serial(const CompiledCover& cc, EngineStats& stats) {
  return run(cc, false, 0, stats);
}

IntPolynomial dc_omp(const CompiledCover& cc, std::size_t task_depth, EngineStats& stats) {
  return run(cc, true, task_depth, stats);
}

}  // namespace transversal::kernels
