#include <gtest/gtest.h>

#include "fglocus/error.hpp"
#include "fglocus/locus.hpp"
#include "test_support.hpp"

using namespace fglocus;
using namespace fglocus::testing;

namespace {

TEST(LocusTest, ExampleHexagonalComplex) {
  auto r = RingContext::make({"x", "y", "z", "w", "a", "b"});
  auto i = sq_ideal(r, {{1, 4}, {2, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}, {5, 6}});
  auto result = compute_locus(i, Method::both);
  EXPECT_EQ(result.j_ideal.to_string(), "(x, y, w, a, b)");
  EXPECT_EQ(result.faces(), (std::vector<Face>{Face{}, face1({3})}));
  EXPECT_EQ(result.maximal, std::vector<Face>{face1({3})});
  for (const auto& e : result.igl) {
    EXPECT_TRUE(e.witness.algebraic.has_value());
    EXPECT_TRUE(e.witness.combinatorial.has_value());
  }
  // link({3}) has facets {1,2},{4,5}; vertex 1 is free there.
  EXPECT_EQ(result.igl[1].witness.combinatorial, face1({1}));
}

TEST(LocusTest, PathAndStarExamples) {
  auto r5 = RingContext::indexed(5);
  EXPECT_EQ(igl_algebraic(sq_ideal(r5, {{2, 3}, {3, 4}, {4, 5}})).j_ideal,
            sq_ideal(r5, {{2}, {3}, {4}, {5}}));
  auto r3 = RingContext::indexed(3);
  EXPECT_EQ(igl_algebraic(sq_ideal(r3, {{1, 2}, {2, 3}})).j_ideal, sq_ideal(r3, {{1}, {2}, {3}}));
  auto r4 = RingContext::indexed(4);
  EXPECT_EQ(igl_algebraic(sq_ideal(r4, {{1, 2, 3}, {3, 4}})).j_ideal,
            sq_ideal(r4, {{1, 2}, {3}, {4}}));
}

TEST(LocusTest, ZeroIdealHasEmptyLocus) {
  auto r = RingContext::indexed(3);
  auto result = compute_locus(MonomialIdeal::zero(r), Method::both);
  EXPECT_TRUE(result.empty());
  EXPECT_TRUE(result.j_ideal.is_unit());
}

TEST(LocusTest, RejectsUnitAndNonSquarefree) {
  auto r = RingContext::indexed(3);
  EXPECT_THROW(igl_algebraic(MonomialIdeal::unit(r)), InvalidArgument);
  EXPECT_THROW(igl_algebraic(ideal(r, {{2, 0, 0}})), InvalidArgument);
}

TEST(LocusTest, TriangleBoundaryIsGorenstein) {
  auto tri = complex1(3, {{1, 2}, {2, 3}, {1, 3}});
  auto result = igl_combinatorial(tri);
  EXPECT_TRUE(result.empty());
  EXPECT_TRUE(result.j_ideal.is_unit());
  EXPECT_TRUE(igl_algebraic(to_ideal(tri, RingContext::indexed(3))).empty());
}

TEST(LocusTest, SimplexAndConesHaveEmptyLocus) {
  // I = 0 and I = (x_3): both regular rings.
  EXPECT_TRUE(compute_locus(SimplicialComplex::simplex(2), RingContext::indexed(2), Method::both)
                  .empty());
  EXPECT_TRUE(
      compute_locus(complex1(3, {{1, 2}}), RingContext::indexed(3), Method::both).empty());
  // Cone over two points: the hypersurface x_1 x_2.
  EXPECT_TRUE(compute_locus(complex1(3, {{1, 3}, {2, 3}}), RingContext::indexed(3), Method::both)
                  .empty());
}

TEST(LocusTest, PruningDoesNotChangeTheResult) {
  auto r = RingContext::indexed(4);
  auto i = sq_ideal(r, {{1, 2, 3}, {3, 4}});
  auto pruned = igl_algebraic(i);
  auto full = igl_algebraic(i, LocusOptions{.prune = false});
  EXPECT_EQ(pruned.faces(), full.faces());
  EXPECT_EQ(pruned.j_ideal, full.j_ideal);
}

TEST(LocusTest, DefiningIdeal) {
  auto r = RingContext::indexed(4);
  EXPECT_TRUE(defining_ideal({}, r).is_unit());
  EXPECT_EQ(defining_ideal({face1({1, 2})}, r), sq_ideal(r, {{3}, {4}}));
}

TEST(LocusTest, MethodParsing) {
  EXPECT_EQ(parse_method("both"), Method::both);
  EXPECT_EQ(to_string(Method::combinatorial), "combinatorial");
  EXPECT_THROW(parse_method("fast"), InvalidArgument);
}

TEST(NciTest, Recognition) {
  auto r3 = RingContext::indexed(3);
  EXPECT_TRUE(is_nci(sq_ideal(r3, {{1, 2}, {2, 3}})));
  EXPECT_FALSE(is_nci(sq_ideal(r3, {{1, 2}})));
  EXPECT_FALSE(is_nci(sq_ideal(r3, {{1}})));
  EXPECT_FALSE(is_nci(MonomialIdeal::zero(r3)));
  auto r4 = RingContext::indexed(4);
  EXPECT_FALSE(is_nci(sq_ideal(r4, {{1, 2}, {3, 4}})));
  // 4-cycle: NCI iff every single-vertex localization is a complete intersection.
  auto cycle = sq_ideal(r4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  EXPECT_EQ(is_nci(cycle), is_complete_intersection(monomial_localization(cycle, face1({1}))) &&
                               is_complete_intersection(monomial_localization(cycle, face1({2}))) &&
                               is_complete_intersection(monomial_localization(cycle, face1({3}))) &&
                               is_complete_intersection(monomial_localization(cycle, face1({4}))));
}

TEST(NciTest, ShortcutMatchesAlgebraicRoute) {
  auto r3 = RingContext::indexed(3);
  auto i = sq_ideal(r3, {{1, 2}, {2, 3}});
  auto shortcut = nci_locus(i);
  EXPECT_EQ(shortcut.j_ideal, sq_ideal(r3, {{1}, {2}, {3}}));
  EXPECT_EQ(shortcut.faces(), igl_algebraic(i).faces());
  EXPECT_EQ(shortcut.method, Method::nci);
  EXPECT_THROW(nci_locus(sq_ideal(r3, {{1, 2}})), InvalidArgument);

  // Unused variable 4: the locus face is {4}.
  auto r4 = RingContext::indexed(4);
  auto j = sq_ideal(r4, {{1, 2}, {2, 3}});
  EXPECT_EQ(nci_locus(j).faces(), igl_algebraic(j).faces());
  EXPECT_EQ(nci_locus(j).j_ideal, sq_ideal(r4, {{1}, {2}, {3}}));
}

} // namespace
