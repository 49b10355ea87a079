#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "transversal/cover.hpp"
#include "transversal/polynomial.hpp"

namespace transversal {

/// xi(-(r-1)) against r^n, and against r^n (r-1) when xi has no constant term.
struct CongruenceReport {
  BigInt value;
  BigInt modulus;                 // r^n
  BigInt quotient;                // value / modulus, exact when holds
  bool holds = false;             // modulus divides value
  bool extended_applies = false;  // constant term is zero
  BigInt extended_modulus;        // r^n (r-1)
  bool extended_modulus_holds = false;
};

CongruenceReport check_congruence(const CoverInstance& c, const IntPolynomial& xi);
CongruenceReport check_congruence(const CoverInstance& c);

enum class TwoFoldSign { plus, minus, zero };
std::string to_string(TwoFoldSign s);

struct TwoFoldReport {
  BigInt value;          // xi(-1)
  BigInt power;          // 2^n
  bool eulerian = false;  // every valency even
  TwoFoldSign sign = TwoFoldSign::zero;
  bool consistent = false;  // eulerian => +-2^n, otherwise 0
};

/// Requires r == 2; throws std::invalid_argument otherwise.
TwoFoldReport check_two_fold(const CoverInstance& c, const IntPolynomial& xi);
TwoFoldReport check_two_fold(const CoverInstance& c);

/// sum_{j<n} r (r-1)^{n-1-j} C(n-1, j) t^j, the polynomial of every r-fold
/// cover of an n-vertex tree.
IntPolynomial tree_closed_form(std::size_t n, std::uint32_t r);

/// Constant term of xi.
BigInt correspondence_colouring_count(const IntPolynomial& xi);
BigInt correspondence_colouring_count(const CoverInstance& c);
/// Counts transversal cocliques by backtracking over base vertices, pruning on
/// the first induced edge. Independent of both xi engines.
BigInt count_transversal_cocliques(const CoverInstance& c);

/// Exact non-negative rational p/q with q > 0.
struct Rational {
  BigInt num = 0;
  BigInt den = 1;

  /// Accepts `p/q` or `p`. Throws std::invalid_argument.
  static Rational parse(std::string_view text);
  std::string to_string() const;
};

struct UGReport {
  std::size_t max_satisfied = 0;  // deg xi
  std::size_t total_edges = 0;
  bool case_a = false;  // max_satisfied >= (1 - eps) |E|
  bool case_b = false;  // max_satisfied <= delta |E|
};

/// eps and delta must lie in the open interval (0, 1).
UGReport ug_classify(const CoverInstance& c, const IntPolynomial& xi, const Rational& eps,
                     const Rational& delta);

struct GeneratorParams {
  std::size_t n = 1;
  std::uint32_t r = 1;
  std::size_t edges = 0;  // non-loop edges, uniform endpoint pairs (parallels allowed)
  std::size_t loops = 0;  // loops at uniform vertices
  std::uint64_t seed = 0;
};

/// Deterministic in the parameters. Throws std::invalid_argument when the
/// parameters admit no instance (n == 0, r == 0, or non-loop edges with n < 2).
CoverInstance generate_random(const GeneratorParams& params);
/// Uniform random labelled tree (Pruefer sequence) with random permutations.
CoverInstance generate_random_tree(std::size_t n, std::uint32_t r, std::uint64_t seed);

}  // namespace transversal
