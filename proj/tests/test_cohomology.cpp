#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace toricmirror;

namespace {

IntVector random_divisor(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<int> c(-4, 4);
    IntVector a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(c(rng));
    return a;
}

}  // namespace

TEST(Cohomology, WorkedExample)
{
    auto f = blowup_p2_fan();
    std::vector<LatticeVec> listed{{0, 1}, {-1, 1}, {-1, 0}, {1, -1}};
    auto pos = [&](std::size_t i) { return static_cast<std::size_t>(std::find(f.rays.begin(), f.rays.end(), listed[i]) - f.rays.begin()); };
    IntVector given{-14, 5, -14, -9}, ell(4);
    for (std::size_t i = 0; i < 4; ++i) ell[pos(i)] = given[i];
    IntVector K = kc_on_fan(f);
    IntVector wantK{-2, -1, -2, -3}, wantKappa{6, -3, 6, 3};
    auto th = theta_from_twisting(f, ell);
    auto psi = psi_from_theta(th);
    auto c = intersection_numbers(psi);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(K[pos(i)], wantK[i]);
        EXPECT_EQ(c[pos(i)], wantKappa[i]);
    }
    EXPECT_EQ(cohomology_dims(psi), (CohomologyDims{10, 3, 0}));
    auto rep = verify_winding_theorem(th);
    EXPECT_TRUE(rep.match);
    EXPECT_EQ(rep.winding.h_even, 10);
    EXPECT_EQ(rep.winding.h_odd, 3);
}

TEST(Cohomology, ProjectivePlaneLineBundles)
{
    auto f = projective_plane_fan();
    for (long long d = -6; d <= 6; ++d) {
        auto dims = cohomology_dims(support_from_divisor(f, {d, 0, 0}));
        long long h0 = d >= 0 ? (d + 1) * (d + 2) / 2 : 0;
        long long h2 = d <= -3 ? (-d - 1) * (-d - 2) / 2 : 0;
        EXPECT_EQ(dims, (CohomologyDims{h0, 0, h2})) << "d=" << d;
    }
}

TEST(Cohomology, MatchesRiemannRochOracle)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        auto f = oracle::random_fan(rng);
        IntVector a = random_divisor(rng, f.size());
        auto dims = cohomology_dims(support_from_divisor(f, a));
        auto o = oracle::cohomology(f, a);
        ASSERT_EQ(dims, (CohomologyDims{o.h0, o.h1, o.h2})) << "fan " << to_string(f.rays[0]) << " a=" << to_string(a);
    }
}

TEST(Cohomology, SerreSymmetry)
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = oracle::random_fan(rng);
        auto psi = support_from_divisor(f, random_divisor(rng, f.size()));
        auto dual = subtract(canonical_psi(f), psi);
        EXPECT_EQ(cohomology_dims(psi).reversed(), cohomology_dims(dual));
    }
}

TEST(Cohomology, IntersectionNumbersAreKappa)
{
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 40) {
        auto f = oracle::random_fan(rng);
        auto ell = oracle::random_twisting(f, rng, 12);
        if (!ell) continue;
        auto psi = psi_from_theta(theta_from_twisting(f, *ell));
        auto c = intersection_numbers(psi);
        auto a = divisor_coeffs(psi);
        IntVector K = kc_on_fan(f);
        for (std::size_t j = 0; j < f.size(); ++j) {
            EXPECT_EQ(2 * c[j], K[j] - (*ell)[j]);
            IntVector e(f.size(), Integer(0));
            e[j] = 1;
            EXPECT_EQ(c[j], oracle::intersect(f, a, e));
        }
        ++done;
    }
}

TEST(Cohomology, DivisorRoundTrip)
{
    auto f = hirzebruch_fan(2);
    IntVector a{3, -1, 4, 0};
    EXPECT_EQ(divisor_coeffs(support_from_divisor(f, a)), a);
}

TEST(Cohomology, ParityViolationRejected)
{
    auto th = theta_from_twisting(projective_plane_fan(), {3, 3, 3});
    th.thetas[0] = th.thetas[0] + HalfLatticeVec::from_doubled(1, 0);
    EXPECT_THROW(psi_from_theta(th), InputError);
}

TEST(Cohomology, MarginValidated)
{
    auto psi = canonical_psi(projective_plane_fan());
    EXPECT_THROW(cohomology_dims(psi, 1, 0), InputError);
    EXPECT_EQ(cohomology_dims(psi, 2, 3), (CohomologyDims{0, 0, 1}));
}

TEST(Cohomology, ProjectiveLine)
{
    EXPECT_EQ(p1_cohomology(3), (std::array<long long, 2>{4, 0}));
    EXPECT_EQ(p1_cohomology(-1), (std::array<long long, 2>{0, 0}));
    EXPECT_EQ(p1_cohomology(-4), (std::array<long long, 2>{0, 3}));
}
