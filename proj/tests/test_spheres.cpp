#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace toricmirror;

TEST(Fans, SelfIntersections)
{
    EXPECT_EQ(self_intersections(projective_plane_fan()), (IntVector{1, 1, 1}));
    EXPECT_EQ(self_intersections(p1xp1_fan()), (IntVector{0, 0, 0, 0}));
    auto f = blowup_p2_fan();
    IntVector b = self_intersections(f);
    Integer sum = 0;
    for (const auto& x : b) sum += x;
    // Σ b_j = 12 − 3r on a smooth complete toric surface
    EXPECT_EQ(sum, 12 - 3 * static_cast<long long>(f.size()));
}

TEST(Fans, BlowUpKeepsSmoothness)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto f = oracle::random_fan(rng);
        EXPECT_TRUE(fan_defect(f.rays).empty());
        Integer sum = 0;
        for (const auto& x : self_intersections(f)) sum += x;
        EXPECT_EQ(sum, 12 - 3 * static_cast<long long>(f.size()));
    }
}

TEST(Fans, DefectsReported)
{
    EXPECT_TRUE(fan_defect({{1, 0}, {0, 1}, {-1, -1}}).empty());
    EXPECT_FALSE(fan_defect({{2, 0}, {0, 1}, {-1, -1}}).empty());
    EXPECT_FALSE(fan_defect({{1, 0}, {1, 2}, {-1, -1}}).empty());
    EXPECT_THROW(make_fan({{1, 0}, {0, 1}}), InputError);
}

TEST(Spheres, ParityAndBalancing)
{
    auto f = projective_plane_fan();
    EXPECT_TRUE(validate_twisting(f, {3, 3, 3}).ok());
    auto r = validate_twisting(f, {2, 2, 2});
    ASSERT_FALSE(r.ok());
    EXPECT_NE(r.failures[0].find("parity"), std::string::npos);
    auto u = validate_twisting(f, {1, 3, 1});
    ASSERT_FALSE(u.ok());
    EXPECT_NE(u.failures[0].find("balancing"), std::string::npos);
    EXPECT_THROW(theta_from_twisting(f, {2, 2, 2}), InputError);
}

TEST(Spheres, ThetaRoundTripsThroughKinks)
{
    std::mt19937_64 rng(5);
    int built = 0;
    for (int i = 0; i < 200 && built < 60; ++i) {
        auto f = oracle::random_fan(rng);
        auto ell = oracle::random_twisting(f, rng, 12);
        if (!ell) continue;
        auto th = theta_from_twisting(f, *ell);
        EXPECT_EQ(kinks_of_theta(th), *ell);
        ++built;
    }
    EXPECT_EQ(built, 60);
}

TEST(Spheres, ThetaIsSemiIntegralOnEveryRay)
{
    auto f = blowup_p2_fan();
    auto th = theta_from_twisting(f, {-14, 5, -14, -9});
    for (long j = 0; j < static_cast<long>(f.size()); ++j) {
        EXPECT_NE(th.value2_on_ray(j) % 2, 0);
        // both adjacent linear parts agree on u_j
        EXPECT_EQ(dot2(th.theta(j), f.ray(j)), dot2(th.theta(j + 1), f.ray(j)));
    }
}

TEST(Spheres, SeedIsCanonical)
{
    for (auto f : {projective_plane_fan(), p1xp1_fan(), blowup_p2_fan(), hirzebruch_fan(3)}) {
        auto h = canonical_seed(f);
        EXPECT_TRUE(h.x2 == 0 || h.x2 == 1);
        EXPECT_TRUE(h.y2 == 0 || h.y2 == 1);
    }
}

TEST(Spheres, DifferenceSphereA5)
{
    for (long long j = 1; j <= 4; ++j) {
        auto f = make_fan(a2d_rays(j));
        IntVector ell = difference_sphere(f);
        IntVector want{-j + 2, 1, 1, j + 1, 2};
        // compare in listed ray order
        auto rays = a2d_rays(j);
        for (std::size_t i = 0; i < 5; ++i) {
            auto it = std::find(f.rays.begin(), f.rays.end(), rays[i]);
            ASSERT_NE(it, f.rays.end());
            EXPECT_EQ(ell[static_cast<std::size_t>(it - f.rays.begin())], want[i]) << "j=" << j << " ray " << i;
        }
    }
}

TEST(Spheres, GammaAvoidsLatticePoints)
{
    for (long long l : {-9, -3, 1, 7}) {
        auto g = gamma_curve(theta_from_twisting(projective_plane_fan(), {l, l, l}));
        ASSERT_EQ(g.vertices.size(), 3u);
        for (std::size_t i = 0; i < 3; ++i) {
            LatticeVec A = g.vertices[i].doubled(), B = g.vertices[(i + 1) % 3].doubled();
            for (long long x = -12; x <= 12; ++x)
                for (long long y = -12; y <= 12; ++y) {
                    LatticeVec P{2 * x, 2 * y};
                    bool on_line = det2(B - A, P - A) == 0;
                    bool between = dot(P - A, B - A) >= 0 && dot(P - B, A - B) >= 0;
                    EXPECT_FALSE(on_line && between) << "l=" << l << " " << LatticeVec{x, y};
                }
        }
    }
}

TEST(Spheres, TranslationByCanonicalKeepsValidity)
{
    auto c = tropical_curve(local_p2());
    auto r = bounded_regions(c)[0];
    auto fan = fan_of_region(c, r);
    IntVector ell{3, 3, 3};
    auto K = canonical_KC(c, r);
    auto moved = translate_sphere(c, r, ell, K);
    EXPECT_EQ(moved, (IntVector{-3, -3, -3}));
    EXPECT_TRUE(validate_twisting(fan, moved).ok());
    EXPECT_EQ(compact_support_class(c, r, K), Integer(1));
    EXPECT_EQ(compact_support_class(c, r, KinkVector{2, 2, 2}), std::nullopt);
}
