#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace toricmirror;

TEST(Subdivision, CatalogSpecsAreValid)
{
    EXPECT_TRUE(validate(local_p2()).ok());
    EXPECT_TRUE(validate(blowup_p2_polytope()).ok());
    EXPECT_TRUE(validate(unit_triangle()).ok());
    for (long long d = 1; d <= 8; ++d) EXPECT_TRUE(validate(a2d_polytope(d)).ok()) << "d=" << d;
}

TEST(Subdivision, AreaTwoTriangleRejected)
{
    SubdividedPolytope s;
    s.points = {{0, 0}, {2, 0}, {0, 1}};
    s.triangles = {{0, 1, 2}};
    s.nu = {0, 0, 0};
    auto r = validate(s);
    EXPECT_TRUE(r.has("not_elementary"));
    EXPECT_TRUE(r.has("missing_point"));
    EXPECT_THROW(require_valid(s), InputError);
}

TEST(Subdivision, AffineNuIsNotStrictlyConvex)
{
    auto s = local_p2();
    for (std::size_t i = 0; i < s.points.size(); ++i) s.nu[i] = 2 * s.points[i].x - s.points[i].y + 3;
    EXPECT_TRUE(validate(s).has("not_strictly_convex"));
}

TEST(Subdivision, ConcaveNuIsNotStrictlyConvex)
{
    auto s = local_p2();
    s.nu = {0, -1, -1, -1};
    auto r = validate(s);
    EXPECT_EQ(r.count("not_strictly_convex"), 3u);
}

TEST(Subdivision, StructuralDefects)
{
    auto s = local_p2();
    s.triangles.pop_back();
    EXPECT_TRUE(validate(s).has("tiling_area"));

    s = local_p2();
    s.points.push_back({5, 5});
    s.nu.push_back(0);
    auto r = validate(s);
    EXPECT_TRUE(r.has("unused_point") || r.has("tiling_area"));

    s = local_p2();
    s.triangles[0] = {0, 1, 9};
    EXPECT_TRUE(validate(s).has("bad_index"));

    s = local_p2();
    s.points[3] = s.points[2];
    EXPECT_TRUE(validate(s).has("duplicate_point"));

    s = local_p2();
    s.nu.pop_back();
    EXPECT_TRUE(validate(s).has("nu_size"));

    s = local_p2();
    s.triangles.push_back(s.triangles[0]);
    auto rr = validate(s);
    EXPECT_FALSE(rr.ok());
}

TEST(Subdivision, EdgesOfLocalP2)
{
    auto es = edges(local_p2());
    ASSERT_EQ(es.size(), 6u);
    std::size_t boundary = 0;
    for (const auto& e : es) {
        EXPECT_TRUE(lex_positive(e.n_check));
        if (e.is_boundary) {
            ++boundary;
            EXPECT_FALSE(e.minus_triangle.has_value());
        } else {
            ASSERT_TRUE(e.minus_triangle.has_value());
        }
    }
    EXPECT_EQ(boundary, 3u);
}

TEST(Subdivision, PlusTriangleLiesOnRotatedSide)
{
    auto s = a2d_polytope(3);
    for (const auto& e : edges(s)) {
        if (e.is_boundary) continue;
        LatticeVec ne = rotate(e.n_check);
        auto q = s.points[detail::third_vertex(s.triangles[e.plus_triangle], e.a, e.b)];
        EXPECT_GT(dot(ne, q - s.points[e.a]), 0);
        auto q2 = s.points[detail::third_vertex(s.triangles[*e.minus_triangle], e.a, e.b)];
        EXPECT_LT(dot(ne, q2 - s.points[e.a]), 0);
    }
}

TEST(Subdivision, KinksPositiveForStrictlyConvexNu)
{
    auto s = a2d_polytope(4);
    for (const auto& e : edges(s))
        if (!e.is_boundary) EXPECT_GT(edge_kink(s, s.nu, e), 0);
}

TEST(Subdivision, InteriorVerticesOfA2d)
{
    auto v = interior_vertices(a2d_polytope(4));
    ASSERT_EQ(v.size(), 3u);
    for (long long j = 1; j <= 3; ++j) EXPECT_EQ(v[static_cast<std::size_t>(j - 1)], (LatticeVec{j, 1}));
}

TEST(Subdivision, HullLatticePointsAreThePoints)
{
    for (long long d = 1; d <= 6; ++d) {
        auto s = a2d_polytope(d);
        auto hull = boundary_polygon(s);
        auto pts = lattice_points_in(hull);
        EXPECT_EQ(pts.size(), s.points.size());
        EXPECT_EQ(twice_area(hull), static_cast<long long>(s.triangles.size()));
    }
}
