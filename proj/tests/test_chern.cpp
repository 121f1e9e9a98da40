#include "fano/chern.hpp"

#include <gtest/gtest.h>

using namespace fano;

namespace {

SchubertCycle s(const GrassmannianContext& ctx, std::initializer_list<int> parts) {
  return SchubertCycle::basis(ctx, Partition(parts));
}

const GrassmannianContext g25(2, 5);
const GrassmannianContext g26(2, 6);

SectionModel w5() { return section_chern(tangent_chern(g25), 2); }
SectionModel v14() { return section_chern(tangent_chern(g26), 4); }

}  // namespace

TEST(UniversalBundles, Gr25) {
  const auto b = universal_bundles(g25);
  EXPECT_EQ(b.sub.rank, 2);
  EXPECT_EQ(b.sub.total[1], s(g25, {1}));
  EXPECT_EQ(b.sub.total[2], s(g25, {1, 1}));
  EXPECT_TRUE(b.sub.total[3].is_zero());
  EXPECT_EQ(b.quot.rank, 3);
  for (int r = 0; r <= 3; ++r) EXPECT_EQ(b.quot.total[r], SchubertCycle::special(g25, r));
  EXPECT_EQ(universal_bundles(g26).quot.rank, 4);
}

TEST(Whitney, DualSubTimesQuotientIsOne) {
  for (auto [k, n] : {std::pair{1, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}}) {
    const GrassmannianContext g(k, n);
    const auto b = universal_bundles(g);
    const auto total = product(b.sub.dual().total, b.quot.total, g.dim());
    EXPECT_EQ(total, TotalChernClass::unit(g)) << g.str();
  }
}

TEST(TensorChern, LineBundles) {
  const GrassmannianContext g(2, 5);
  const auto alpha = 2 * s(g, {1});
  const auto beta = -3 * s(g, {1});
  const BundleModel a(1, TotalChernClass(g, {SchubertCycle::unit(g), alpha}));
  const BundleModel b(1, TotalChernClass(g, {SchubertCycle::unit(g), beta}));
  const auto t = tensor_chern(a, b);
  EXPECT_EQ(t.limit(), 1);
  EXPECT_EQ(t[1], alpha + beta);
}

TEST(TensorChern, TangentOfGr25) {
  const auto c = tangent_chern(g25);
  EXPECT_EQ(c[1], 5 * s(g25, {1}));
  EXPECT_EQ(c[2], 11 * s(g25, {2}) + 12 * s(g25, {1, 1}));
  EXPECT_EQ(c[3], 15 * s(g25, {3}) + 30 * s(g25, {2, 1}));
  EXPECT_EQ(c[4], 35 * s(g25, {3, 1}) + 25 * s(g25, {2, 2}));
}

TEST(TensorChern, DegreeOneComponent) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
    const GrassmannianContext g(k, n);
    const auto b = universal_bundles(g);
    for (const auto& [x, y] : {std::pair{b.sub, b.quot}, {b.quot, b.sub}, {b.sub, b.sub.dual()}, {b.quot.dual(), b.quot}}) {
      const auto t = tensor_chern(x, y);
      EXPECT_EQ(t[1], Integer(y.rank) * x.total[1] + Integer(x.rank) * y.total[1]) << g.str();
    }
  }
}

TEST(TensorChern, RejectsLargeRanks) {
  const GrassmannianContext g(1, 9);
  const BundleModel big(8, TotalChernClass::unit(g));
  EXPECT_THROW(tensor_chern(big, big), Error);
}

TEST(TensorChern, TopClassIntegratesToEulerNumber) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {1, 4}, {3, 6}}) {
    const GrassmannianContext g(k, n);
    EXPECT_EQ(integrate(tangent_chern(g)[g.dim()]), binomial(n, k)) << g.str();
  }
}

TEST(SectionChern, W5) {
  const auto w = w5();
  EXPECT_EQ(w.dim(), 4);
  EXPECT_EQ(w.chern[1], 3 * s(g25, {1}));
  EXPECT_EQ(w.chern[2], 4 * s(g25, {2}) + 5 * s(g25, {1, 1}));
  EXPECT_EQ(section_index(w), 3);
}

TEST(SectionChern, V14) {
  const auto v = v14();
  EXPECT_EQ(v.chern[1], 2 * s(g26, {1}));
  EXPECT_EQ(v.chern[2], 2 * s(g26, {2}) + 4 * s(g26, {1, 1}));
}

TEST(SectionChern, ZeroCodimensionIsIdentity) {
  const auto c = tangent_chern(g25);
  EXPECT_EQ(section_chern(c, 0).chern, c);
  EXPECT_THROW(section_chern(c, 6), Error);
}

TEST(SectionChern, FirstClassIsNMinusC) {
  for (auto [n, c] : {std::pair{5, 2}, {6, 4}, {5, 0}, {6, 1}}) {
    const GrassmannianContext g(2, n);
    EXPECT_EQ(section_chern(tangent_chern(g), c).chern[1], Integer(n - c) * s(g, {1}));
  }
}

TEST(SectionDegree, Values) {
  const auto h = SchubertCycle::special(g25, 1);
  EXPECT_EQ(section_degree(w5(), power(h, 4)), 5);
  EXPECT_EQ(section_degree(v14(), power(SchubertCycle::special(g26, 1), 4)), 14);
  EXPECT_EQ(section_degree(w5(), w5().chern[2] * h * h), 22);
  EXPECT_EQ(section_degree(w5(), h), 0);
}

TEST(EulerOfSection, Values) {
  EXPECT_EQ(euler_of_section(w5()), 6);
  EXPECT_EQ(euler_of_section(v14()), 12);
  EXPECT_EQ(euler_of_section(section_chern(tangent_chern(g25), 0)), euler_grassmannian(2, 5));
}

TEST(PlaneNormalBundle, Values) {
  EXPECT_EQ(plane_normal_bundle(w5(), {Partition({2, 2}), "xi"}), (PlaneNormalBundle{0, 2}));
  EXPECT_EQ(plane_normal_bundle(w5(), {Partition({3, 1}), "pi"}), (PlaneNormalBundle{0, 1}));
  EXPECT_EQ(plane_normal_bundle(v14(), {Partition({4, 2}), "pi"}), (PlaneNormalBundle{-1, 2}));
  EXPECT_THROW(plane_normal_bundle(w5(), {Partition({3}), "bad"}), Error);
}

TEST(PlaneNormalBundle, IndependentOfTruncation) {
  for (int extra = 0; extra <= 2; ++extra) {
    const auto w = section_chern(tangent_chern(g25), 2, 4 + extra);
    const auto v = section_chern(tangent_chern(g26), 4, 4 + extra);
    EXPECT_EQ(plane_normal_bundle(w, {Partition({2, 2}), ""}), (PlaneNormalBundle{0, 2}));
    EXPECT_EQ(plane_normal_bundle(w, {Partition({3, 1}), ""}), (PlaneNormalBundle{0, 1}));
    EXPECT_EQ(plane_normal_bundle(v, {Partition({4, 2}), ""}), (PlaneNormalBundle{-1, 2}));
  }
}

TEST(PlaneIntersectionMatrix, W5) {
  const std::vector<PlaneClass> planes{{Partition({2, 2}), "xi"}, {Partition({3, 1}), "pi"}};
  const auto m = plane_intersection_matrix(w5(), planes, 2, 3);
  EXPECT_EQ(m, (IntegerMatrix{{2, -1}, {-1, 1}}));
  EXPECT_EQ(determinant(m), 1);
}

TEST(PlaneIntersectionMatrix, InconsistentInput) {
  const std::vector<PlaneClass> planes{{Partition({2, 2}), "xi"}, {Partition({3, 1}), "pi"}};
  try {
    plane_intersection_matrix(w5(), planes, 0, 0);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("inconsistent"), std::string::npos);
  }
  EXPECT_THROW(plane_intersection_matrix(w5(), planes, 1, 1), Error);
  EXPECT_THROW(plane_intersection_matrix(w5(), std::span(planes).first(1), 2, 3), Error);
}

TEST(CompleteIntersection, ChernCoefficients) {
  const CompleteIntersection p4{4, {}, 0};
  EXPECT_EQ(p4.chern_coefficients(), (std::vector<Integer>{1, 5, 10, 10, 5}));
  const CompleteIntersection w22{6, {2, 2}, 0};
  EXPECT_EQ(w22.degree(), 4);
  // (1+h)^7 / (1+2h)^2 = 1 + 3h + 5h^2 + 3h^3 + 3h^4 (mod h^5)
  EXPECT_EQ(w22.chern_coefficients(), (std::vector<Integer>{1, 3, 5, 3, 3}));
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant({}), 1);
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), 6);
  EXPECT_EQ(determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_THROW(determinant({{1, 2}}), Error);
}
