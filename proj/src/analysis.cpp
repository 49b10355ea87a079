#include "transversal/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>

#include "transversal/engine.hpp"

namespace transversal {

namespace {

BigInt power(std::uint32_t base, std::size_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

bool divides(const BigInt& d, const BigInt& value) {
  if (d == 0) return value == 0;
  return value % d == 0;
}

}  // namespace

CongruenceReport check_congruence(const CoverInstance& c, const IntPolynomial& xi) {
  CongruenceReport rep;
  const std::uint32_t r = c.r();
  rep.value = xi.eval(-BigInt(r - 1));
  rep.modulus = power(r, c.vertex_count());
  rep.holds = divides(rep.modulus, rep.value);
  rep.quotient = rep.value / rep.modulus;
  rep.extended_modulus = rep.modulus * (r - 1);
  rep.extended_applies = xi.coeff(0) == 0;
  rep.extended_modulus_holds = rep.extended_applies && divides(rep.extended_modulus, rep.value);
  return rep;
}

CongruenceReport check_congruence(const CoverInstance& c) {
  return check_congruence(c, xi_dc(c).poly());
}

std::string to_string(TwoFoldSign s) {
  switch (s) {
    case TwoFoldSign::plus:
      return "plus";
    case TwoFoldSign::minus:
      return "minus";
    case TwoFoldSign::zero:
      break;
  }
  return "zero";
}

TwoFoldReport check_two_fold(const CoverInstance& c, const IntPolynomial& xi) {
  if (c.r() != 2) throw std::invalid_argument("two-fold check requires r = 2");
  TwoFoldReport rep;
  rep.value = xi.eval(-1);
  rep.power = power(2, c.vertex_count());
  rep.eulerian = c.base().all_degrees_even();
  rep.sign = rep.value > 0 ? TwoFoldSign::plus
                           : (rep.value < 0 ? TwoFoldSign::minus : TwoFoldSign::zero);
  rep.consistent = rep.eulerian ? (rep.value == rep.power || rep.value == -rep.power)
                                : rep.value == 0;
  return rep;
}

TwoFoldReport check_two_fold(const CoverInstance& c) {
  if (c.r() != 2) throw std::invalid_argument("two-fold check requires r = 2");
  return check_two_fold(c, xi_dc(c).poly());
}

IntPolynomial tree_closed_form(std::size_t n, std::uint32_t r) {
  if (n == 0 || r == 0) throw std::invalid_argument("tree_closed_form needs n >= 1 and r >= 1");
  std::vector<BigInt> coeffs(n);
  BigInt binom = 1;  // C(n-1, j)
  for (std::size_t j = 0; j < n; ++j) {
    coeffs[j] = BigInt(r) * power(r - 1, n - 1 - j) * binom;
    binom = binom * (n - 1 - j) / (j + 1);
  }
  return IntPolynomial(std::move(coeffs));
}

BigInt correspondence_colouring_count(const IntPolynomial& xi) { return xi.coeff(0); }

BigInt correspondence_colouring_count(const CoverInstance& c) {
  return correspondence_colouring_count(xi_dc(c).poly());
}

BigInt count_transversal_cocliques(const CoverInstance& c) {
  const auto& g = c.base();
  const std::size_t n = g.vertex_count();
  const std::uint32_t r = c.r();
  // Edges attached to their later endpoint: (earlier position, perm read from later to earlier).
  std::vector<std::vector<std::pair<std::size_t, Perm>>> back(n);
  std::vector<std::vector<const Perm*>> loops(n);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edges()[k];
    const std::size_t pu = g.vertex_index(e.tail);
    const std::size_t pv = g.vertex_index(e.head);
    if (pu == pv) {
      loops[pu].push_back(&c.perms()[k]);
    } else if (pu < pv) {
      back[pv].emplace_back(pu, inverse(c.perms()[k]));
    } else {
      back[pu].emplace_back(pv, c.perms()[k]);
    }
  }

  std::vector<std::uint32_t> choice(n, 0);
  std::uint64_t count = 0;
  auto place = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      ++count;
      return;
    }
    for (std::uint32_t i = 1; i <= r; ++i) {
      bool clash = std::any_of(loops[depth].begin(), loops[depth].end(),
                               [i](const Perm* p) { return p->apply(i) == i; });
      for (const auto& [earlier, p] : back[depth]) {
        if (clash) break;
        clash = p.apply(i) == choice[earlier];
      }
      if (clash) continue;
      choice[depth] = i;
      self(self, depth + 1);
    }
  };
  place(place, 0);
  return BigInt(count);
}

Rational Rational::parse(std::string_view text) {
  auto parse_uint = [text](std::string_view part) {
    if (part.empty() || !std::all_of(part.begin(), part.end(),
                                     [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw std::invalid_argument("not a rational p/q: '" + std::string(text) + "'");
    }
    return BigInt(std::string(part));
  };
  Rational q;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    q.num = parse_uint(text);
  } else {
    q.num = parse_uint(text.substr(0, slash));
    q.den = parse_uint(text.substr(slash + 1));
  }
  if (q.den == 0) throw std::invalid_argument("rational with zero denominator");
  return q;
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << num << '/' << den;
  return os.str();
}

UGReport ug_classify(const CoverInstance& c, const IntPolynomial& xi, const Rational& eps,
                     const Rational& delta) {
  auto in_open_unit = [](const Rational& q) { return q.num > 0 && q.num < q.den; };
  if (!in_open_unit(eps) || !in_open_unit(delta)) {
    throw std::invalid_argument("eps and delta must lie strictly between 0 and 1");
  }
  UGReport rep;
  rep.max_satisfied = xi.is_zero() ? 0 : static_cast<std::size_t>(xi.degree());
  rep.total_edges = c.edge_count();
  const BigInt sat(rep.max_satisfied);
  const BigInt edges(rep.total_edges);
  rep.case_a = sat * eps.den >= (eps.den - eps.num) * edges;
  rep.case_b = sat * delta.den <= delta.num * edges;
  return rep;
}

CoverInstance generate_random(const GeneratorParams& p) {
  if (p.r == 0) throw std::invalid_argument("r must be positive");
  if (p.n == 0) throw std::invalid_argument("n must be positive");
  if (p.edges > 0 && p.n < 2) throw std::invalid_argument("non-loop edges need at least 2 vertices");
  std::mt19937_64 rng(p.seed);
  std::vector<EdgeRecord> edges;
  std::vector<Perm> perms;
  for (std::size_t k = 0; k < p.edges; ++k) {
    const auto u = static_cast<VertexId>(bounded_draw(rng, p.n));
    auto v = static_cast<VertexId>(bounded_draw(rng, p.n - 1));
    if (v >= u) ++v;
    edges.push_back({static_cast<EdgeId>(edges.size()), u, v});
    perms.push_back(Perm::random(p.r, rng));
  }
  for (std::size_t k = 0; k < p.loops; ++k) {
    const auto u = static_cast<VertexId>(bounded_draw(rng, p.n));
    edges.push_back({static_cast<EdgeId>(edges.size()), u, u});
    perms.push_back(Perm::random(p.r, rng));
  }
  return CoverInstance(Multigraph(p.n, std::move(edges)), p.r, std::move(perms));
}

CoverInstance generate_random_tree(std::size_t n, std::uint32_t r, std::uint64_t seed) {
  if (n == 0 || r == 0) throw std::invalid_argument("tree needs n >= 1 and r >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (n == 2) pairs.emplace_back(0, 1);
  if (n >= 3) {
    std::vector<std::size_t> code(n - 2);
    for (auto& x : code) x = bounded_draw(rng, n);
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t x : code) ++degree[x];
    for (std::size_t x : code) {
      const auto leaf = static_cast<std::size_t>(
          std::find(degree.begin(), degree.end(), std::size_t{1}) - degree.begin());
      pairs.emplace_back(static_cast<VertexId>(leaf), static_cast<VertexId>(x));
      --degree[leaf];
      --degree[x];
    }
    std::vector<VertexId> last;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 1) last.push_back(static_cast<VertexId>(v));
    }
    pairs.emplace_back(last[0], last[1]);
  }
  std::vector<EdgeRecord> edges;
  std::vector<Perm> perms;
  for (auto [a, b] : pairs) {
    if (bounded_draw(rng, 2)) std::swap(a, b);
    edges.push_back({static_cast<EdgeId>(edges.size()), a, b});
    perms.push_back(Perm::random(r, rng));
  }
  return CoverInstance(Multigraph(n, std::move(edges)), r, std::move(perms));
}

}  // namespace transversal
