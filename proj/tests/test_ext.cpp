#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace toricmirror;

TEST(Ext, PointIntersection)
{
    EXPECT_EQ(ext_total_dims({PairKind::point_intersection, {}, {}}), (ExtDims{0, 1, 0, 0}));
}

TEST(Ext, CurveInSurfaceTotalIsOneExactlyForZeroAndOne)
{
    for (long long k = -5; k <= 5; ++k) {
        auto d = ext_total_dims({PairKind::curve_in_surface, k, {}});
        EXPECT_EQ(total(d) == 1, k == 0 || k == 1) << "k=" << k;
        // Ext^0 = H⁰(O(−k)), Ext^2 = H¹(O(−1−k))
        EXPECT_EQ(d[0], std::max(-k + 1, 0LL));
        EXPECT_EQ(d[2], std::max(k, 0LL));
    }
}

TEST(Ext, SurfacesAlongCurveVanishIffMinusOne)
{
    for (long long k = -5; k <= 5; ++k)
        for (long long m = -5; m <= 5; ++m) {
            auto d = ext_total_dims({PairKind::surfaces_along_curve, k, m});
            EXPECT_EQ(total(d) == 0, k + m == -1) << k << "," << m;
        }
}

TEST(Ext, MissingParameterIsInputError)
{
    EXPECT_THROW(ext_total_dims({PairKind::curve_in_surface, {}, {}}), InputError);
    EXPECT_THROW(ext_total_dims({PairKind::surfaces_along_curve, 1, {}}), InputError);
}

TEST(Ext, A2dConfigurationHolds)
{
    for (long long d = 1; d <= 5; ++d) {
        auto ex = build_a2d_example(d);
        auto rep = verify_a2d_configuration(ex);
        EXPECT_TRUE(rep.ok()) << "d=" << d << ": " << (rep.failures.empty() ? "" : rep.failures[0]);
        std::size_t objects = ex.labels().size();
        EXPECT_EQ(rep.checks.size(), objects * (objects - 1) / 2);
    }
}

TEST(Ext, A2dTelescopingIdentity)
{
    auto ex = build_a2d_example(6);
    for (std::size_t i = 0; i + 1 < ex.regions.size(); ++i)
        EXPECT_EQ(-ex.regions[i].kappa[3] + ex.regions[i + 1].kappa[0], ex.regions[i].j);
}

TEST(Ext, A2dCanonicalMatchesFan)
{
    auto ex = build_a2d_example(5);
    for (const auto& r : ex.regions) {
        auto f = make_fan(a2d_rays(r.j));
        auto kc = kc_on_fan(f);
        auto rays = a2d_rays(r.j);
        for (std::size_t i = 0; i < 5; ++i) {
            auto it = std::find(f.rays.begin(), f.rays.end(), rays[i]);
            EXPECT_EQ(kc[static_cast<std::size_t>(it - f.rays.begin())], r.K[i]);
        }
    }
}

TEST(Ext, A2dMutationsDetected)
{
    const long long d = 4;
    auto base = build_a2d_example(d);
    for (std::size_t r = 0; r < base.regions.size(); ++r)
        for (std::size_t i = 0; i < 5; ++i)
            for (int delta : {-2, -1, 1, 2}) {
                auto ex = base;
                ex.regions[r].kappa[i] += delta;
                EXPECT_FALSE(verify_a2d_configuration(ex).ok()) << "kappa r=" << r << " i=" << i;
                ex = base;
                ex.regions[r].ell[i] += delta;
                EXPECT_FALSE(verify_a2d_configuration(ex).ok()) << "ell r=" << r << " i=" << i;
                ex = base;
                ex.regions[r].K[i] += delta;
                EXPECT_FALSE(verify_a2d_configuration(ex).ok()) << "K r=" << r << " i=" << i;
            }
}

TEST(Ext, BFEExpressionPairsCorrectly)
{
    auto ex = build_a2d_example(5);
    for (const auto& r : ex.regions) {
        auto x = express_in_BFE(r.kappa, r.j);
        auto f = make_fan(a2d_rays(r.j));
        auto Q = toric_intersection_form(f);
        // rebuild D in fan order and pair against every toric divisor
        auto rays = a2d_rays(r.j);
        auto pos = [&](std::size_t i) { return static_cast<std::size_t>(std::find(f.rays.begin(), f.rays.end(), rays[i]) - f.rays.begin()); };
        IntVector D(5, Integer(0));
        D[pos(0)] += x.b;
        D[pos(4)] += x.f;
        D[pos(2)] += x.e;
        auto pairing = mat_vec(Q, D);
        for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(pairing[pos(i)], r.kappa[i]);
    }
    EXPECT_EQ((BFEExpression{1, -2, 0}).str(), "B - 2F");
    EXPECT_EQ((BFEExpression{0, 0, 0}).str(), "0");
}
