#include "fano/schubert.hpp"
#include "oracle/lr_tableaux.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fano;

namespace {

SchubertCycle s(const GrassmannianContext& ctx, std::initializer_list<int> parts) {
  return SchubertCycle::basis(ctx, Partition(parts));
}

std::vector<Partition> all_partitions(const GrassmannianContext& ctx) {
  std::vector<Partition> out;
  for (int w = 0; w <= ctx.dim(); ++w)
    for (auto& p : partitions_in_box(ctx, w)) out.push_back(p);
  return out;
}

}  // namespace

TEST(GrassmannianContext, RejectsBadShapes) {
  EXPECT_THROW(GrassmannianContext(2, 2), Error);
  EXPECT_THROW(GrassmannianContext(0, 3), Error);
  EXPECT_EQ(GrassmannianContext(2, 6).dim(), 8);
  EXPECT_EQ(GrassmannianContext(2, 5).str(), "Gr(2,5)");
}

TEST(Partition, NormalizesTrailingZeros) {
  EXPECT_EQ(Partition({2, 0}), Partition({2}));
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({-1}), Error);
  EXPECT_EQ(Partition({3, 1}).weight(), 4);
}

TEST(GrassDim, Values) {
  EXPECT_EQ(grass_dim(2, 5), 6);
  EXPECT_EQ(grass_dim(8, 12), 32);
  EXPECT_EQ(grass_dim(2, 12), 20);
  EXPECT_THROW(grass_dim(3, 3), Error);
}

TEST(EulerGrassmannian, Values) {
  EXPECT_EQ(euler_grassmannian(2, 5), 10);
  EXPECT_EQ(euler_grassmannian(2, 6), 15);
  EXPECT_EQ(euler_grassmannian(1, 2), 2);
  EXPECT_THROW(euler_grassmannian(2, 1), Error);
}

TEST(Pieri, HandExamples) {
  const GrassmannianContext g(2, 5);
  EXPECT_EQ(pieri_multiply(g, 2, Strip::horizontal, s(g, {3, 1})), s(g, {3, 3}));
  EXPECT_EQ(pieri_multiply(g, 2, Strip::vertical, s(g, {2, 2})), s(g, {3, 3}));
  const auto c = 3 * s(g, {2, 1}) + s(g, {3});
  EXPECT_EQ(pieri_multiply(g, 0, Strip::horizontal, c), c);
  EXPECT_THROW(pieri_multiply(GrassmannianContext(2, 6), 1, Strip::horizontal, c), Error);
}

TEST(Pieri, NeverLeavesTheBox) {
  for (auto [k, n] : {std::pair{2, 5}, {2, 6}, {3, 6}, {3, 7}}) {
    const GrassmannianContext g(k, n);
    for (const auto& mu : all_partitions(g))
      for (int p = 0; p <= g.cols() + 1; ++p)
        for (auto strip : {Strip::horizontal, Strip::vertical})
          for_each_strip(g, strip, mu, p, [&](const Partition& lambda) {
            EXPECT_TRUE(lambda.fits(g)) << lambda.str();
            EXPECT_EQ(lambda.weight(), mu.weight() + p);
          });
  }
}

TEST(Cycle, OutOfBoxTermsVanish) {
  const GrassmannianContext g(2, 5);
  SchubertCycle c(g, 4);
  c.add(Partition({4}), 7);
  c.add(Partition({2, 1, 1}), 7);
  EXPECT_TRUE(c.is_zero());
  EXPECT_THROW(c.add(Partition({1}), 1), Error);
  EXPECT_THROW(s(g, {1}) + s(g, {2}), Error);
}

TEST(Multiply, HandExamples) {
  const GrassmannianContext g25(2, 5), g26(2, 6);
  EXPECT_EQ(power(s(g25, {1}), 6), 5 * s(g25, {3, 3}));
  EXPECT_EQ(power(s(g26, {1}), 8), 14 * s(g26, {4, 4}));
  EXPECT_TRUE((s(g25, {2, 2}) * s(g25, {2, 2})).is_zero());
  EXPECT_EQ((s(g25, {2, 2}) * s(g25, {2, 2})).codim(), 8);
  EXPECT_EQ(power(s(g25, {1}), 4), 3 * s(g25, {3, 1}) + 2 * s(g25, {2, 2}));
}

TEST(Integrate, HandExamples) {
  const GrassmannianContext g25(2, 5), g26(2, 6);
  EXPECT_EQ(integrate(5 * s(g25, {3, 3})), 5);
  EXPECT_EQ(integrate(s(g25, {2}) * s(g25, {3, 1})), 1);
  EXPECT_EQ(integrate(s(g26, {1, 1}) * s(g26, {4, 2})), 0);
  EXPECT_EQ(integrate(s(g25, {3})), 0);
}

TEST(Multiply, MatchesLittlewoodRichardsonTableaux) {
  for (auto [k, n] : {std::pair{2, 5}, {2, 6}, {3, 6}}) {
    const GrassmannianContext g(k, n);
    const auto parts = all_partitions(g);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        const auto product = SchubertCycle::basis(g, a) * SchubertCycle::basis(g, b);
        for (const auto& lambda : partitions_in_box(g, a.weight() + b.weight())) {
          const long expected = oracle::lr_coefficient(lambda.parts(), a.parts(), b.parts());
          EXPECT_EQ(product.coefficient(lambda), expected)
              << g.str() << " " << a.str() << "*" << b.str() << " at " << lambda.str();
        }
        for (const auto& [lambda, c] : product.terms()) EXPECT_TRUE(lambda.fits(g));
      }
    }
  }
}

TEST(Multiply, PoincareDualityIsAPermutation) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
    const GrassmannianContext g(k, n);
    for (int c = 0; c <= g.dim(); ++c) {
      const auto rows = partitions_in_box(g, c);
      const auto cols = partitions_in_box(g, g.dim() - c);
      ASSERT_EQ(rows.size(), cols.size());
      for (const auto& a : rows) {
        int ones = 0;
        for (const auto& b : cols) {
          const Integer v = integrate(SchubertCycle::basis(g, a) * SchubertCycle::basis(g, b));
          EXPECT_TRUE(v == 0 || v == 1);
          ones += v == 1;
        }
        EXPECT_EQ(ones, 1) << g.str() << " " << a.str();
      }
    }
  }
}

TEST(Multiply, CommutativeAndAssociative) {
  for (auto [k, n] : {std::pair{2, 5}, {2, 6}}) {
    const GrassmannianContext g(k, n);
    const auto parts = all_partitions(g);
    for (const auto& a : parts) {
      const auto x = SchubertCycle::basis(g, a);
      for (const auto& b : parts) {
        const auto y = SchubertCycle::basis(g, b);
        EXPECT_EQ(x * y, y * x);
        if (a.weight() + b.weight() > g.dim()) continue;
        for (const auto& c : parts) {
          if (a.weight() + b.weight() + c.weight() > g.dim()) continue;
          const auto z = SchubertCycle::basis(g, c);
          EXPECT_EQ((x * y) * z, x * (y * z));
        }
      }
    }
  }
}

TEST(Multiply, RandomCombinationsAreBilinear) {
  std::mt19937 rng(12345);
  const GrassmannianContext g(3, 7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const int wa = trial % 5, wb = (trial / 5) % 5;
    auto random_cycle = [&](int w) {
      SchubertCycle c(g, w);
      for (const auto& p : partitions_in_box(g, w)) c.add(p, coeff(rng));
      return c;
    };
    const auto a1 = random_cycle(wa), a2 = random_cycle(wa), b = random_cycle(wb);
    EXPECT_EQ((a1 + a2) * b, a1 * b + a2 * b);
    EXPECT_EQ((3 * a1) * b, 3 * (a1 * b));
  }
}

TEST(Multiply, TopPowerOfHyperplaneIsCatalan) {
  const std::vector<int> catalan{1, 1, 2, 5, 14};
  for (int n = 4; n <= 6; ++n) {
    const GrassmannianContext g(2, n);
    EXPECT_EQ(integrate(power(SchubertCycle::special(g, 1), g.dim())), catalan[n - 2]) << n;
  }
}

TEST(Multiply, ContextMismatchThrows) {
  EXPECT_THROW(s(GrassmannianContext(2, 5), {1}) * s(GrassmannianContext(2, 6), {1}), Error);
}

TEST(Cycle, StringForm) {
  const GrassmannianContext g(2, 5);
  EXPECT_EQ((11 * s(g, {2}) + 12 * s(g, {1, 1})).str(), "11*s(2)+12*s(1,1)");
  EXPECT_EQ((s(g, {2}) - 2 * s(g, {1, 1})).str(), "s(2)-2*s(1,1)");
  EXPECT_EQ(SchubertCycle(g, 3).str(), "0");
}
