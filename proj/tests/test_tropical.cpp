#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace toricmirror;

namespace {

RationalPoint rp(long long x, long long y) { return {Rational(x), Rational(y)}; }

// terms of the Legendre transform attaining the minimum, as lattice points
std::set<LatticeVec> active_points(const TropicalCurve& c, const RationalPoint& m)
{
    auto f = legendre(c.polytope);
    std::set<LatticeVec> out;
    for (auto i : f.active(m)) out.insert(f.terms[i].v);
    return out;
}

}  // namespace

TEST(Tropical, LocalP2Vertices)
{
    auto c = tropical_curve(local_p2());
    std::set<RationalPoint> got(c.vertices.begin(), c.vertices.end());
    std::set<RationalPoint> want{rp(-1, -1), rp(2, -1), rp(-1, 2)};
    EXPECT_EQ(got, want);
}

TEST(Tropical, LocalP2BoundedTangents)
{
    auto c = tropical_curve(local_p2());
    ASSERT_EQ(c.bounded_edges.size(), 3u);
    std::set<LatticeVec> got;
    for (const auto& e : c.bounded_edges) got.insert(lex_positive(e.n_e) ? e.n_e : -e.n_e);
    std::set<LatticeVec> want{{1, 0}, {1, -1}, {0, 1}};
    EXPECT_EQ(got, want);
    EXPECT_EQ(c.rays.size(), 3u);
}

TEST(Tropical, VertexIsWhereTriangleTermsTie)
{
    for (auto s : {local_p2(), blowup_p2_polytope(), a2d_polytope(3)}) {
        auto c = tropical_curve(s);
        for (std::size_t t = 0; t < c.vertices.size(); ++t) {
            std::set<LatticeVec> want;
            for (auto i : s.triangles[t]) want.insert(s.points[i]);
            EXPECT_EQ(active_points(c, c.vertices[t]), want);
        }
    }
}

TEST(Tropical, EdgesSeparateTheirDualEndpoints)
{
    for (auto s : {local_p2(), a2d_polytope(2), a2d_polytope(4)}) {
        auto c = tropical_curve(s);
        for (const auto& e : c.bounded_edges) {
            const auto& se = c.subdivision_edges[e.subdivision_edge];
            auto mid = ratio(1, 2) * (c.vertices[e.plus_vertex] + c.vertices[e.minus_vertex]);
            EXPECT_EQ(active_points(c, mid), (std::set<LatticeVec>{s.points[se.a], s.points[se.b]}));
        }
        for (const auto& r : c.rays) {
            const auto& se = c.subdivision_edges[r.subdivision_edge];
            RationalPoint far = c.vertices[r.origin] + RationalPoint{Rational(r.direction.x * 7), Rational(r.direction.y * 7)};
            EXPECT_EQ(active_points(c, far), (std::set<LatticeVec>{s.points[se.a], s.points[se.b]}));
        }
    }
}

TEST(Tropical, BalancedAtEveryVertex)
{
    for (long long d = 1; d <= 5; ++d) {
        auto c = tropical_curve(a2d_polytope(d));
        for (std::size_t t = 0; t < c.vertices.size(); ++t) {
            LatticeVec sum{0, 0};
            for (const auto& u : vertex_directions(c, t)) sum += u;
            EXPECT_TRUE(sum.is_zero()) << "d=" << d << " vertex " << t;
        }
    }
}

TEST(Tropical, EdgeDirectionIsRotatedTangent)
{
    auto c = tropical_curve(a2d_polytope(3));
    for (const auto& e : c.bounded_edges) {
        const auto& se = c.subdivision_edges[e.subdivision_edge];
        EXPECT_EQ(e.n_e, rotate(se.n_check));
        EXPECT_EQ(dot(e.n_e, se.n_check), 0);
    }
}

TEST(Tropical, RegionRaysAreCounterclockwiseStar)
{
    auto c = tropical_curve(a2d_polytope(4));
    auto regions = bounded_regions(c);
    ASSERT_EQ(regions.size(), 3u);
    for (const auto& r : regions) {
        const std::size_t n = r.rays.size();
        ASSERT_EQ(n, 5u);
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(det2(r.rays[j], r.rays[(j + 1) % n]), 1);
        // the cone (u_{j-1}, u_j) carries the triangle of vertices[j]
        for (std::size_t j = 0; j < n; ++j) {
            const auto& tri = c.polytope.triangles[r.vertices[j]];
            std::set<LatticeVec> pts{c.polytope.points[tri[0]], c.polytope.points[tri[1]], c.polytope.points[tri[2]]};
            EXPECT_TRUE(pts.count(r.dual_vertex + r.rays[(j + n - 1) % n]));
            EXPECT_TRUE(pts.count(r.dual_vertex + r.rays[j]));
        }
    }
}

TEST(Tropical, RegionOnBoundaryPointRejected)
{
    auto c = tropical_curve(local_p2());
    EXPECT_THROW(region_at(c, {1, 0}), InputError);
}

TEST(Tropical, InvalidSpecRejected)
{
    auto s = local_p2();
    s.nu = {0, 0, 0, 0};
    EXPECT_THROW(tropical_curve(s), InputError);
}
