#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace toricmirror;

namespace {

// max(0, x): a single convex kink along the y-axis
PiecewiseLinearFn kink_line()
{
    PiecewiseLinearFn f;
    f.walls = {{{0, 0}, {0, 1}}, {{0, 0}, {0, -1}}};
    f.piece = [](Vec2 x) { return x.x > 0 ? AffineFn{0, {1, 0}} : AffineFn{0, {0, 0}}; };
    return f;
}

}  // namespace

TEST(Smoothing, ConstantIsReproduced)
{
    auto one = affine_function(1, {0, 0});
    auto phi = extend_support_function(local_p2(), {0, 1, 1, 1});
    for (double eps : {0.05, 0.3, 1.0})
        for (int order : {8, 16, 24}) {
            MollifierParams p{eps, order};
            EXPECT_NEAR(mollify_eval(one, p, {0.3, -0.2}), 1.0, 1e-10);
            // normalisation does not depend on the walls
            PiecewiseLinearFn walled = phi;
            walled.piece = [](Vec2) { return AffineFn{1, {0, 0}}; };
            EXPECT_NEAR(mollify_eval(walled, p, {0.1, 0.05}), 1.0, 1e-10);
        }
}

TEST(Smoothing, AffineFixedPoint)
{
    auto s = a2d_polytope(2);
    std::vector<Integer> lin;
    for (const auto& v : s.points) lin.push_back(2 * v.x - 3 * v.y + 1);
    auto f = extend_support_function(s, lin);
    MollifierParams p{auto_epsilon(s), 24};
    for (Vec2 x : {Vec2{1.0, 0.5}, Vec2{2.0, 0.4}, Vec2{0.7, 0.8}, Vec2{1.5, 0.25}})
        EXPECT_NEAR(mollify_eval(f, p, x), 2 * x.x - 3 * x.y + 1, 1e-8);
    auto plain = affine_function(-4, {0.5, 7});
    EXPECT_NEAR(mollify_eval(plain, {0.4, 12}, {3, -1}), -4 + 1.5 - 7, 1e-8);
}

TEST(Smoothing, GradientOfAffine)
{
    auto f = affine_function(2, {-1.5, 0.25});
    auto g = grad(f, {0.2, 24}, {0.4, 0.4});
    EXPECT_NEAR(g.x, -1.5, 1e-6);
    EXPECT_NEAR(g.y, 0.25, 1e-6);
}

TEST(Smoothing, AgreesOutsideNeighbourhood)
{
    auto s = local_p2();
    auto f = extend_support_function(s, s.nu);
    MollifierParams p{0.1, 24};
    int n = 0;
    for (std::uint64_t i = 1; i < 400 && n < 60; ++i) {
        Vec2 h = halton(i);
        Vec2 x{-3 + 6 * h.x, -3 + 6 * h.y};
        if (f.distance_to_walls(x) <= p.epsilon) continue;
        EXPECT_NEAR(mollify_eval(f, p, x), f(x), 1e-8);
        ++n;
    }
    EXPECT_EQ(n, 60);
}

TEST(Smoothing, ExtensionIsContinuousAcrossWalls)
{
    auto s = a2d_polytope(3);
    auto f = extend_support_function(s, s.nu);
    for (const auto& w : f.walls) {
        double t = std::isfinite(w.tmax) ? 0.37 * w.tmax : 0.8;
        Vec2 p = w.a + t * w.d;
        Vec2 n{-w.d.y, w.d.x};
        n = (1e-7 / norm(n)) * n;
        EXPECT_NEAR(f(p + n), f(p - n), 1e-5);
        EXPECT_NEAR(f.piece(p + n)(p), f.piece(p - n)(p), 1e-9);
    }
}

TEST(Smoothing, SupportChecksPass)
{
    for (auto s : {local_p2(), blowup_p2_polytope(), a2d_polytope(2)}) {
        auto rep = check_support_smoothing(s, s.nu, {0, 24}, 40, 3);
        EXPECT_TRUE(rep.ok());
        for (const auto& c : rep.checks) EXPECT_GT(c.points, 0u) << c.name;
    }
}

TEST(Smoothing, KinkSecondDerivative)
{
    auto f = kink_line();
    MollifierParams p{0.5, 24};
    auto near = hessian(f, p, {0.15, 0.2});
    EXPECT_GT(near.xx, 0.1);
    EXPECT_NEAR(near.yy, 0, 1e-5);
    auto far = hessian(f, p, {0.8, 0.0});
    EXPECT_NEAR(far.xx, 0, 1e-6);
    // symmetric bump: derivative ½ on the wall
    EXPECT_NEAR(grad(f, p, {0, 0.3}).x, 0.5, 1e-6);
}

TEST(Smoothing, HessianDefiniteLocalP2)
{
    auto th = theta_from_twisting(projective_plane_fan(), {3, 3, 3});
    auto rep = check_hessian_definiteness(th, {1.0, 24}, 200, 0);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_EQ(rep.interior_samples, 200u);
    EXPECT_EQ(rep.definite, 200u);
    EXPECT_GT(rep.min_abs_eigenvalue, 0);
    EXPECT_LE(rep.max_hull_excess, 1e-5);
}

TEST(Smoothing, HessianNegativeForConcave)
{
    auto th = theta_from_twisting(projective_plane_fan(), {-5, -5, -5});
    auto rep = check_hessian_definiteness(th, {1.0, 24}, 40, 1);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.convexity, Convexity::concave);
}

TEST(Smoothing, MixedSignsRejected)
{
    auto th = theta_from_twisting(blowup_p2_fan(), {-14, 5, -14, -9});
    EXPECT_THROW(check_hessian_definiteness(th, {1.0, 24}, 10), InputError);
}

TEST(Smoothing, BadParametersRejected)
{
    auto f = affine_function(0, {1, 1});
    EXPECT_THROW(mollify_eval(f, {0.0, 24}, {0, 0}), InputError);
    EXPECT_THROW(mollify_eval(f, {0.1, 1}, {0, 0}), InputError);
}

TEST(Smoothing, GaussLegendreIntegratesPolynomials)
{
    const auto& q = gauss_legendre(10);
    for (int k = 0; k < 20; ++k) {
        double s = 0;
        for (std::size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * std::pow(q.nodes[i], k);
        EXPECT_NEAR(s, 1.0 / (k + 1), 1e-14) << k;
    }
}
