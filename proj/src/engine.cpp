#include "transversal/engine.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "kernels/kernels.hpp"

namespace transversal {

std::string to_string(Method m) { return m == Method::brute ? "brute" : "dc"; }

namespace {

std::string budget_message(const BigInt& required, std::uint64_t budget) {
  std::ostringstream os;
  os << "transversal budget exceeded: r^n = " << required << " exceeds the bound of " << budget;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t checked_total(const CoverInstance& c, std::uint64_t budget) {
  const BigInt total = transversal_count(c);
  if (total > budget) throw BudgetExceeded(total, budget);
  return total.convert_to<std::uint64_t>();
}

IntPolynomial from_histogram(const std::vector<std::uint64_t>& hist) {
  std::vector<BigInt> coeffs(hist.begin(), hist.end());
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

BudgetExceeded::BudgetExceeded(BigInt required, std::uint64_t budget)
    : std::runtime_error(budget_message(required, budget)),
      required_(std::move(required)),
      budget_(budget) {}

XiResult::XiResult(IntPolynomial poly, Method method, EngineStats stats, std::uint32_t r,
                   std::size_t n)
    : poly_(std::move(poly)), method_(method), stats_(stats) {
  const BigInt expected = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(n));
  if (poly_.eval(1) != expected) {
    std::ostringstream os;
    os << "xi(1) = " << poly_.eval(1) << " but r^n = " << expected << " (" << to_string(method)
       << ")";
    throw std::logic_error(os.str());
  }
}

BigInt transversal_count(const CoverInstance& c) {
  return boost::multiprecision::pow(BigInt(c.r()), static_cast<unsigned>(c.vertex_count()));
}

std::size_t transversal_edge_count(const CoverInstance& c, const Transversal& t) {
  if (t.size() != c.vertex_count()) {
    throw std::invalid_argument("transversal must choose one index per base vertex");
  }
  for (std::uint32_t i : t) {
    if (i < 1 || i > c.r()) throw std::out_of_range("transversal index outside {1..r}");
  }
  const auto& g = c.base();
  std::size_t count = 0;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edges()[k];
    const std::uint32_t at_tail = t[g.vertex_index(e.tail)];
    const std::uint32_t at_head = t[g.vertex_index(e.head)];
    if (c.perms()[k].apply(at_tail) == at_head) ++count;
  }
  return count;
}

XiResult xi_brute(const CoverInstance& c, const BruteOptions& options) {
  const std::uint64_t total = checked_total(c, options.budget);
  const auto start = std::chrono::steady_clock::now();
  const auto cc = kernels::CompiledCover::from(c);
  const auto hist = options.execution == Execution::parallel
                        ? kernels::brute_histogram_omp(cc, total)
                        : kernels::brute_histogram_serial(cc, total);
  EngineStats stats;
  stats.nodes = total;
  stats.leaves = total;
  stats.wall_seconds = seconds_since(start);
  return XiResult(from_histogram(hist), Method::brute, stats, c.r(), c.vertex_count());
}

XiResult xi_dc(const CoverInstance& c, const DcOptions& options) {
  const auto cc = kernels::CompiledCover::from(c);
  EngineStats stats;
  IntPolynomial poly = options.execution == Execution::parallel
                           ? kernels::dc_omp(cc, options.task_depth, stats)
                           : kernels::dc_serial(cc, stats);
  return XiResult(std::move(poly), Method::dc, stats, c.r(), c.vertex_count());
}

IntPolynomial loops_only_polynomial(const CoverInstance& c) {
  const auto& g = c.base();
  if (g.loop_count() != g.edge_count()) {
    throw std::invalid_argument("base graph has a non-loop edge");
  }
  IntPolynomial product = IntPolynomial::constant(1);
  for (VertexId v : g.vertices()) {
    std::vector<std::size_t> fixing(c.r(), 0);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      if (g.edges()[k].tail != v) continue;
      for (std::uint32_t i : c.perms()[k].fixed_points()) ++fixing[i - 1];
    }
    IntPolynomial factor;
    for (std::size_t n_i : fixing) factor += IntPolynomial::monomial(1, n_i);
    product = product * factor;
  }
  return product;
}

namespace {

struct ReferenceWalk {
  std::mt19937_64 rng;
  EdgeSelection selection;
  EngineStats stats;

  IntPolynomial operator()(const CoverInstance& c, std::uint64_t depth) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    std::vector<EdgeId> candidates;
    for (const auto& e : c.base().edges()) {
      if (!e.is_loop()) candidates.push_back(e.id);
    }
    if (candidates.empty()) {
      ++stats.leaves;
      return loops_only_polynomial(c);
    }
    EdgeId chosen = *std::min_element(candidates.begin(), candidates.end());
    if (selection == EdgeSelection::random) {
      chosen = candidates[bounded_draw(rng, candidates.size())];
    }
    return t_minus_one() * (*this)(contract_edge(c, chosen), depth + 1) +
           (*this)(delete_edge(c, chosen), depth + 1);
  }
};

}  // namespace

XiResult xi_dc_reference(const CoverInstance& c, const ReferenceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ReferenceWalk walk{std::mt19937_64(options.seed), options.selection, {}};
  IntPolynomial poly = walk(c, 0);
  walk.stats.wall_seconds = seconds_since(start);
  return XiResult(std::move(poly), Method::dc, walk.stats, c.r(), c.vertex_count());
}

BiPolynomial zeta_brute(const CoverInstance& c, const BruteOptions& options) {
  const std::uint64_t total = checked_total(c, options.budget);
  const auto cc = kernels::CompiledCover::from(c);
  const auto hist = options.execution == Execution::parallel
                        ? kernels::zeta_histogram_omp(cc, total)
                        : kernels::zeta_histogram_serial(cc, total);
  BiPolynomial z;
  const std::size_t stride = c.vertex_count() + 1;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    if (hist[k]) z.add_term(k / stride, k % stride, BigInt(hist[k]));
  }
  return z;
}

}  // namespace transversal
