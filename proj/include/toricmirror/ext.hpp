#ifndef TORICMIRROR_EXT_HPP
#define TORICMIRROR_EXT_HPP

#include "cohomology.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace toricmirror {

enum class PairKind { point_intersection, curve_in_surface, surfaces_along_curve, disjoint };

inline const char* to_string(PairKind k)
{
    switch (k) {
    case PairKind::point_intersection: return "point_intersection";
    case PairKind::curve_in_surface: return "curve_in_surface";
    case PairKind::surfaces_along_curve: return "surfaces_along_curve";
    default: return "disjoint";
    }
}

struct SphericalPair {
    PairKind kind = PairKind::disjoint;
    std::optional<long long> k;  // degree of the line bundle on the curve
    std::optional<long long> m;  // self-intersection of the curve in the second surface
};

using ExtDims = std::array<long long, 4>;

inline long long total(const ExtDims& d) { return d[0] + d[1] + d[2] + d[3]; }

inline ExtDims ext_total_dims(const SphericalPair& p)
{
    auto need = [&](const std::optional<long long>& v, const char* name) {
        if (!v) throw InputError(std::string(to_string(p.kind)) + " requires parameter " + name);
        return *v;
    };
    switch (p.kind) {
    case PairKind::point_intersection:
        return {0, 1, 0, 0};
    case PairKind::curve_in_surface: {
        long long k = need(p.k, "k");
        // Ext sheaves O(−k) in degree 0 and O(−1−k) in degree 1; the spectral sequence degenerates on ℙ¹
        auto e0 = p1_cohomology(-k), e1 = p1_cohomology(-1 - k);
        return {e0[0], e0[1] + e1[0], e1[1], 0};
    }
    case PairKind::surfaces_along_curve: {
        long long s = need(p.k, "k") + need(p.m, "m");
        auto h = p1_cohomology(s);
        return {0, h[0], h[1], 0};
    }
    default:
        return {0, 0, 0, 0};
    }
}

struct A2dRegion {
    long long j;
    IntVector K;      // K_{C_j} on e_{j1..j5}
    IntVector ell;
    IntVector kappa;  // (K − ℓ)/2
};

struct A2dExample {
    long long d = 0;
    std::vector<A2dRegion> regions;  // j = 1..d-1
    // E_{N_j} = O_{ℙ¹_j}(−1) for j = 1..d, E_{L_j} = 𝓛_{κ_j} on D_j
    std::vector<std::string> labels() const
    {
        std::vector<std::string> out;
        for (long long j = 1; j <= d; ++j) {
            out.push_back("N" + std::to_string(j));
            if (j < d) out.push_back("L" + std::to_string(j));
        }
        return out;
    }
};

// Rays at c_j = (j,1) in the order e_{j1}, …, e_{j5}.
inline std::vector<LatticeVec> a2d_rays(long long j) { return {{-1, 0}, {0, -1}, {1, -1}, {1, 0}, {-j, 1}}; }

inline A2dExample build_a2d_example(long long d)
{
    if (d < 1) throw InputError("d must be positive");
    A2dExample ex;
    ex.d = d;
    for (long long j = 1; j < d; ++j) {
        A2dRegion r;
        r.j = j;
        r.K = {j - 2, -1, -1, -j - 1, -2};
        r.ell = j % 2 ? IntVector{-1, 1, -1, 0, 0} : IntVector{0, -1, 1, -1, 0};
        for (std::size_t i = 0; i < 5; ++i) {
            Integer diff = r.K[i] - r.ell[i];
            if (diff % 2 != 0) throw Error("K - l is odd in region " + std::to_string(j));
            r.kappa.push_back(diff / 2);
        }
        ex.regions.push_back(std::move(r));
    }
    return ex;
}

struct A2dCheck {
    std::string first, second;
    SphericalPair pair;
    ExtDims dims{};
    long long expected_total = 0;
    bool ok = false;
    std::string note;
};

struct A2dReport {
    std::vector<std::string> assumptions;
    std::vector<A2dCheck> checks;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline A2dReport verify_a2d_configuration(const A2dExample& ex)
{
    A2dReport rep;
    rep.assumptions = {
        "D_j is a smooth complete toric surface, hence rational, so line bundles on D_j are spherical in the threefold",
        "each compact curve P1_j has normal bundle O(-1)+O(-1), so O_{P1_j}(-1) is spherical",
    };
    const long long d = ex.d;
    if (static_cast<long long>(ex.regions.size()) != d - 1) rep.failures.push_back("expected d-1 regions");

    for (const auto& r : ex.regions) {
        std::string name = "L" + std::to_string(r.j);
        auto fan = make_fan(a2d_rays(r.j));
        IntVector kc = kc_on_fan(fan);
        if (kc != r.K) rep.failures.push_back(name + ": K_C " + to_string(r.K) + " differs from the fan value " + to_string(kc));
        auto tw = validate_twisting(fan, r.ell);
        for (const auto& f : tw.failures) rep.failures.push_back(name + ": " + f);
        for (std::size_t i = 0; i < 5; ++i)
            if (2 * r.kappa[i] != r.K[i] - r.ell[i])
                rep.failures.push_back(name + ": kappa entry " + std::to_string(i + 1) + " is not (K - l)/2");
    }
    auto region = [&](long long j) -> const A2dRegion& { return ex.regions[static_cast<std::size_t>(j - 1)]; };
    auto add = [&](std::string a, std::string b, SphericalPair p, long long expect, std::string note) {
        A2dCheck c{std::move(a), std::move(b), p, ext_total_dims(p), expect, false, std::move(note)};
        c.ok = total(c.dims) == expect;
        if (!c.ok)
            rep.failures.push_back(c.first + "," + c.second + ": total Hom dimension " + std::to_string(total(c.dims)) +
                                   ", expected " + std::to_string(expect));
        rep.checks.push_back(std::move(c));
    };

    for (long long j = 1; j < d; ++j) {
        const auto& r = region(j);
        std::string L = "L" + std::to_string(j);
        add("N" + std::to_string(j), L, {PairKind::point_intersection, {}, {}}, 1, "P1_j meets D_j transversally");
        // E_{L_j} restricted to P1_{j+1} ⊂ D_j has degree κ_{j3}; tensoring by O(1) for E_{N_{j+1}} = O(−1)
        long long k = static_cast<long long>(r.kappa[2]) + 1;
        add(L, "N" + std::to_string(j + 1), {PairKind::curve_in_surface, k, {}}, 1, "P1_{j+1} lies in D_j");
    }
    for (long long j = 1; j + 1 < d; ++j) {
        const auto& r = region(j);
        const auto& s = region(j + 1);
        long long k = static_cast<long long>(-r.kappa[3] + s.kappa[0]);
        long long m = static_cast<long long>(-s.K[0]) - 2;  // self-intersection of e_{(j+1)1} in D_{j+1}
        if (k != j)
            rep.failures.push_back("L" + std::to_string(j) + ",L" + std::to_string(j + 1) + ": -kappa_j4 + kappa_(j+1)1 = " +
                                   std::to_string(k) + ", expected " + std::to_string(j));
        add("L" + std::to_string(j), "L" + std::to_string(j + 1), {PairKind::surfaces_along_curve, k, m}, 0,
            "D_j and D_{j+1} meet along a curve");
    }
    auto labels = ex.labels();
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            if (b == a + 1) continue;
            if (labels[a][0] == 'L' && labels[b][0] == 'L' && b == a + 2) continue;  // checked above
            add(labels[a], labels[b], {PairKind::disjoint, {}, {}}, 0, "supports are disjoint");
        }
    return rep;
}

struct BFEExpression {
    Integer b, f, e;  // κ = bB + fF + eE

    std::string str() const
    {
        std::string out;
        auto term = [&](const Integer& c, const char* sym) {
            if (c == 0) return;
            bool neg = c < 0;
            Integer m = neg ? Integer(-c) : c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            if (m != 1) out += m.str();
            out += sym;
        };
        term(b, "B");
        term(f, "F");
        term(e, "E");
        return out.empty() ? "0" : out;
    }
};

// Intersection form of D_j in the basis of toric divisors.
inline IntMatrix toric_intersection_form(const SmoothCompleteFan& f)
{
    const std::size_t n = f.size();
    IntVector b = self_intersections(f);
    IntMatrix M(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        M[i][i] = b[i];
        M[i][(i + 1) % n] = 1;
        M[(i + 1) % n][i] = 1;
    }
    return M;
}

// B = D_{e_{j1}}, F = D_{e_{j5}}, E = D_{e_{j3}}.
inline BFEExpression express_in_BFE(const IntVector& kappa, long long j)
{
    if (kappa.size() != 5) throw InputError("kappa must have five entries");
    auto fan = make_fan(a2d_rays(j));
    IntMatrix Q = toric_intersection_form(fan);
    if (Q[0][0] != -j || Q[4][4] != 0 || Q[2][2] != -1 || Q[0][4] != 1 || Q[0][2] != 0 || Q[2][4] != 0)
        throw Error("unexpected intersection numbers on D_j");
    BFEExpression x;
    // D·F = b, D·B = −j b + f, D·E = −e
    x.b = kappa[4];
    x.f = kappa[0] + j * x.b;
    x.e = -kappa[2];
    IntVector D(5);
    D[0] += x.b;
    D[4] += x.f;
    D[2] += x.e;
    IntVector pair = mat_vec(Q, D);
    if (pair != kappa) throw InputError("kappa " + to_string(kappa) + " is not in the span of B, F, E");
    return x;
}

}  // namespace toricmirror

#endif
