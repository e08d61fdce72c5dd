#include <gtest/gtest.h>

#include "fglocus/error.hpp"
#include "fglocus/simplicial_complex.hpp"
#include "test_support.hpp"

using namespace fglocus;
using namespace fglocus::testing;

namespace {

TEST(SimplicialTest, ToIdealGoldenExamples) {
  auto r5 = RingContext::indexed(5);
  EXPECT_EQ(to_ideal(complex1(5, {{1, 2, 5}, {1, 3, 5}, {1, 2, 4}}), r5),
            sq_ideal(r5, {{2, 3}, {3, 4}, {4, 5}}));

  auto r6 = RingContext::make({"x", "y", "z", "w", "a", "b"});
  auto i = to_ideal(complex1(6, {{1, 2, 3}, {1, 2, 6}, {3, 4, 5}}), r6);
  EXPECT_EQ(i, sq_ideal(r6, {{1, 4}, {2, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}, {5, 6}}));
  EXPECT_EQ(i.to_string(), "(x*w, x*a, y*w, y*a, z*b, w*b, a*b)");
}

TEST(SimplicialTest, ToIdealEdgeCases) {
  auto r3 = RingContext::indexed(3);
  EXPECT_TRUE(to_ideal(SimplicialComplex::simplex(3), r3).is_zero());
  EXPECT_TRUE(to_ideal(SimplicialComplex::void_complex(3), r3).is_unit());
  EXPECT_EQ(to_ideal(SimplicialComplex::irrelevant(3), r3), sq_ideal(r3, {{1}, {2}, {3}}));
  // An unused vertex becomes a linear generator.
  EXPECT_EQ(to_ideal(complex1(3, {{1, 2}}), r3), sq_ideal(r3, {{3}}));
}

TEST(SimplicialTest, FromIdeal) {
  auto r3 = RingContext::indexed(3);
  auto c = from_ideal(sq_ideal(r3, {{1, 2}, {2, 3}}));
  EXPECT_EQ(c.facets(), (std::vector<Face>{face1({2}), face1({1, 3})}));
  EXPECT_EQ(from_ideal(MonomialIdeal::zero(r3)), SimplicialComplex::simplex(3));

  auto r5 = RingContext::indexed(5);
  EXPECT_EQ(from_ideal(sq_ideal(r5, {{2, 3}, {3, 4}, {4, 5}})),
            complex1(5, {{1, 2, 5}, {1, 3, 5}, {1, 2, 4}}));

  EXPECT_THROW(from_ideal(MonomialIdeal::unit(r3)), InvalidArgument);
  EXPECT_THROW(from_ideal(ideal(r3, {{2, 0, 0}})), InvalidArgument);
}

TEST(SimplicialTest, FacesInCanonicalOrder) {
  EXPECT_EQ(faces(complex1(2, {{1, 2}})),
            (std::vector<Face>{Face{}, face1({1}), face1({2}), face1({1, 2})}));
  EXPECT_TRUE(faces(SimplicialComplex::void_complex(3)).empty());
  EXPECT_EQ(faces(complex1(3, {{1, 2}, {2, 3}})).size(), 6U);
  EXPECT_EQ(faces(SimplicialComplex::irrelevant(3)), std::vector<Face>{Face{}});
}

TEST(SimplicialTest, FacetsAreReducedToMaximal) {
  auto c = complex1(3, {{1}, {1, 2}, {1, 2}});
  EXPECT_EQ(c.facets(), std::vector<Face>{face1({1, 2})});
  EXPECT_THROW(SimplicialComplex(2, {face1({3})}), InvalidArgument);
}

TEST(SimplicialTest, Link) {
  auto delta = complex1(6, {{1, 2, 3}, {1, 2, 6}, {3, 4, 5}});
  auto lk = link(delta, face1({3}));
  EXPECT_EQ(lk.facets(), (std::vector<Face>{face1({1, 2}), face1({4, 5})}));
  EXPECT_EQ(lk.ground(), Face::full(6) - face1({3}));

  EXPECT_EQ(link(delta, Face{}), delta);

  auto path = complex1(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(link(path, face1({2})).facets(), (std::vector<Face>{face1({1}), face1({3})}));
  EXPECT_EQ(link(path, face1({1, 2})).facets(), std::vector<Face>{Face{}});
  EXPECT_THROW(link(path, face1({1, 3})), InvalidArgument);
}

TEST(SimplicialTest, FreeFaces) {
  EXPECT_EQ(free_faces(complex1(3, {{1, 2}, {2, 3}})),
            (std::vector<Face>{face1({1}), face1({3})}));
  EXPECT_FALSE(has_free_face(complex1(3, {{1, 2}, {2, 3}, {1, 3}})));
  EXPECT_EQ(free_faces(complex1(2, {{1, 2}})), (std::vector<Face>{face1({1}), face1({2})}));
  EXPECT_FALSE(has_free_face(SimplicialComplex::irrelevant(3)));
  EXPECT_FALSE(has_free_face(SimplicialComplex::void_complex(3)));
}

TEST(SimplicialTest, ConeReduction) {
  // Cone over two points with apex 3.
  auto cone = complex1(3, {{1, 3}, {2, 3}});
  EXPECT_EQ(cone_points(cone), face1({3}));
  auto reduced = cone_reduction(cone);
  EXPECT_EQ(reduced.facets(), (std::vector<Face>{face1({1}), face1({2})}));
  EXPECT_FALSE(has_free_face(reduced));
  EXPECT_TRUE(has_free_face(cone));

  EXPECT_EQ(cone_reduction(SimplicialComplex::simplex(3)).facets(), std::vector<Face>{Face{}});
  EXPECT_TRUE(cone_points(SimplicialComplex::void_complex(2)).empty());
}

TEST(SimplicialTest, FacePrimeAndMonomial) {
  auto r = RingContext::make({"x", "y", "z", "w", "a", "b"});
  EXPECT_EQ(face_prime(face1({3}), r).to_string(), "(x, y, w, a, b)");
  EXPECT_EQ(face_prime(Face{}, r).size(), 6U);
  EXPECT_TRUE(face_monomial(Face{}, r).is_one());
  EXPECT_TRUE(face_prime(Face::full(6), r).is_zero());
  EXPECT_EQ(face_monomial(face1({1, 4}), r).to_string(), "x*w");
}

TEST(SimplicialTest, MinimalTransversals) {
  auto t = minimal_transversals({face1({1, 2}), face1({2, 3})}, Face::full(3));
  EXPECT_EQ(t, (std::vector<Face>{face1({2}), face1({1, 3})}));
  EXPECT_EQ(minimal_transversals({}, Face::full(3)), std::vector<Face>{Face{}});
  EXPECT_TRUE(minimal_transversals({Face{}}, Face::full(3)).empty());
}

TEST(SimplicialTest, LinkIdealMatchesColonOnLinkGround) {
  auto r6 = RingContext::indexed(6);
  auto delta = complex1(6, {{1, 2, 3}, {1, 2, 6}, {3, 4, 5}});
  auto i = to_ideal(delta, r6);
  for (Face f : faces(delta))
    EXPECT_EQ(to_ideal(link(delta, f), r6), colon(i, face_monomial(f, r6))) << f.to_string();
}

} // namespace
