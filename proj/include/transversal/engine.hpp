#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "transversal/cover.hpp"
#include "transversal/polynomial.hpp"

namespace transversal {

/// One fibre index in {1..r} per base vertex, aligned with base().vertices().
using Transversal = std::vector<std::uint32_t>;

enum class Method { brute, dc };
enum class Execution { serial, parallel };

std::string to_string(Method m);

/// Default cap on the number of transversals the enumerators will visit.
inline constexpr std::uint64_t kDefaultTransversalBudget = 100'000'000;

/// Thrown by the enumerators when r^n exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(BigInt required, std::uint64_t budget);
  const BigInt& required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigInt required_;
  std::uint64_t budget_;
};

struct EngineStats {
  std::uint64_t nodes = 0;      // recursion nodes, or transversals for brute
  std::uint64_t leaves = 0;     // loops-only base cases, or transversals for brute
  std::uint64_t max_depth = 0;
  double wall_seconds = 0.0;
};

/// A computed transversal polynomial. Construction checks xi(1) = r^n and
/// throws std::logic_error if it fails.
class XiResult {
 public:
  XiResult(IntPolynomial poly, Method method, EngineStats stats, std::uint32_t r,
           std::size_t n);

  const IntPolynomial& poly() const { return poly_; }
  Method method() const { return method_; }
  const EngineStats& stats() const { return stats_; }

 private:
  IntPolynomial poly_;
  Method method_;
  EngineStats stats_;
};

/// r^n as an exact integer.
BigInt transversal_count(const CoverInstance& c);

/// |E(H)| of the subgraph induced by T: non-loop edges (u->v, s) with
/// T[v] = T[u]^s, plus loops (u, s) with T[u] fixed by s.
std::size_t transversal_edge_count(const CoverInstance& c, const Transversal& t);

struct BruteOptions {
  std::uint64_t budget = kDefaultTransversalBudget;
  Execution execution = Execution::parallel;
};

/// Histogram of transversal_edge_count over all r^n transversals.
XiResult xi_brute(const CoverInstance& c, const BruteOptions& options = {});

struct DcOptions {
  Execution execution = Execution::parallel;
  /// Recursion depth below which branches are spawned as tasks.
  std::size_t task_depth = 12;
};

/// Contraction-deletion on the live non-loop edge with the smallest id, down
/// to loops-only bases evaluated as prod_v sum_i t^{n_v(i)}.
XiResult xi_dc(const CoverInstance& c, const DcOptions& options = {});

enum class EdgeSelection { smallest_id, random };

struct ReferenceOptions {
  EdgeSelection selection = EdgeSelection::smallest_id;
  std::uint64_t seed = 0;
};

/// Literal recursion over contract_edge / delete_edge and polynomial
/// arithmetic. Slow; kept as the reference for the kernel.
XiResult xi_dc_reference(const CoverInstance& c, const ReferenceOptions& options = {});

/// Loops-only base case: prod over vertices of sum_i t^{n_v(i)}, where n_v(i)
/// counts loops at v fixing i. Throws std::invalid_argument if c has a
/// non-loop edge.
IntPolynomial loops_only_polynomial(const CoverInstance& c);

/// sum_H t^{|E(H)|} s^{c(H)}; loops inside a fibre count as edges but never
/// merge components.
BiPolynomial zeta_brute(const CoverInstance& c, const BruteOptions& options = {});

}  // namespace transversal
