#include "transversal/polynomial.hpp"

#include <random>

#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace transversal {
namespace {

TEST(IntPolynomialTest, RingOperations) {
  EXPECT_EQ(add(IntPolynomial{1, 1}, IntPolynomial{-1, 1}), (IntPolynomial{0, 2}));
  EXPECT_EQ(scalar_mul(3, IntPolynomial{0, 0, 1}), (IntPolynomial{0, 0, 3}));
  EXPECT_EQ(shift_mul_by_t(IntPolynomial{1}, 3), (IntPolynomial{0, 0, 0, 1}));
  EXPECT_EQ(mul(IntPolynomial{2, 1}, IntPolynomial{2, 1}), (IntPolynomial{4, 4, 1}));
  EXPECT_EQ(mul(IntPolynomial{3, 0, 5}, IntPolynomial{1}), (IntPolynomial{3, 0, 5}));
}

TEST(IntPolynomialTest, ProductMatchesTwoDisjointEdges) {
  // Two disjoint 2-vertex trees at r = 2, counted on the explicit cover.
  const std::pair<VertexId, VertexId> edge[] = {{0, 1}};
  const CoverInstance tree(Multigraph::from_pairs(2, edge), 2, {Perm::identity(2)});
  const IntPolynomial expected = testing::oracle_xi(disjoint_union(tree, tree));
  EXPECT_EQ(expected, (IntPolynomial{4, 8, 4}));
  EXPECT_EQ(mul(IntPolynomial{2, 2}, IntPolynomial{2, 2}), expected);
}

TEST(IntPolynomialTest, NormalizationAndZero) {
  EXPECT_TRUE(IntPolynomial({0, 0, 0}).is_zero());
  EXPECT_EQ(IntPolynomial({0, 0, 0}).degree(), -1);
  EXPECT_EQ(IntPolynomial({1, 0, 0}).degree(), 0);
  EXPECT_EQ(IntPolynomial{}.to_list_string(), "[]");
  EXPECT_EQ(IntPolynomial{}.to_human_string(), "0");
  EXPECT_EQ(IntPolynomial{}.eval(12345), 0);
}

TEST(IntPolynomialTest, Eval) {
  const IntPolynomial xi{8, 12, 6, 1};
  EXPECT_EQ(xi.eval(1), 27);
  EXPECT_EQ(xi.eval(-2), 0);
}

TEST(IntPolynomialTest, EvalIsExactBeyond64Bits) {
  // (t + 1)^70 at t = 1 is 2^70.
  IntPolynomial p{1};
  for (int k = 0; k < 70; ++k) p = p * IntPolynomial{1, 1};
  EXPECT_EQ(p.eval(1), BigInt(1) << 70);
  EXPECT_EQ(p.eval(-1), 0);
}

TEST(IntPolynomialTest, Rendering) {
  EXPECT_EQ((IntPolynomial{8, 12, 6, 1}).to_list_string(), "[8, 12, 6, 1]");
  EXPECT_EQ((IntPolynomial{8, 12, 6, 1}).to_human_string(), "8 + 12t + 6t^2 + t^3");
  EXPECT_EQ((IntPolynomial{-1, 0, -3}).to_human_string(), "-1 - 3t^2");
  EXPECT_EQ((IntPolynomial{0, -1}).to_human_string(), "-t");
}

TEST(BiPolynomialTest, SpecializeAndRender) {
  BiPolynomial z;
  z.add_term(1, 2, 1);
  EXPECT_EQ(specialize_s(z, 1), (IntPolynomial{0, 1}));

  BiPolynomial single;
  single.add_term(0, 1, 3);
  EXPECT_EQ(single.specialize_s(1), (IntPolynomial{3}));
  EXPECT_EQ(single.to_human_string(), "3s");

  BiPolynomial cancel;
  cancel.add_term(1, 1, 2);
  cancel.add_term(1, 1, -2);
  EXPECT_TRUE(cancel.is_zero());
}

IntPolynomial RandomPoly(std::mt19937_64& rng) {
  std::vector<BigInt> c(bounded_draw(rng, 6));
  for (auto& x : c) x = static_cast<long long>(bounded_draw(rng, 41)) - 20;
  return IntPolynomial(std::move(c));
}

TEST(IntPolynomialPropertyTest, RingAxiomsAndEvalHomomorphism) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = RandomPoly(rng);
    const auto q = RandomPoly(rng);
    const auto s = RandomPoly(rng);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + s, p + (q + s));
    EXPECT_EQ((p * q) * s, p * (q * s));
    EXPECT_EQ(p * (q + s), p * q + p * s);
    const BigInt x = static_cast<long long>(bounded_draw(rng, 11)) - 5;
    EXPECT_EQ((p * q).eval(x), p.eval(x) * q.eval(x));
    EXPECT_EQ(IntPolynomial(p.coeffs()), p);
    if (!p.is_zero() && !q.is_zero()) {
      EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
    }
  }
}

}  // namespace
}  // namespace transversal
