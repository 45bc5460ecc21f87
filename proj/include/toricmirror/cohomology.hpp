#ifndef TORICMIRROR_COHOMOLOGY_HPP
#define TORICMIRROR_COHOMOLOGY_HPP

#include "winding.hpp"

#include <algorithm>
#include <array>
#include <thread>
#include <vector>

namespace toricmirror {

// parts[j] is the linear part on the cone between u_{j-1} and u_j.
struct ToricSupportFunction {
    SmoothCompleteFan fan;
    std::vector<LatticeVec> parts;
};

struct CohomologyDims {
    long long h0 = 0, h1 = 0, h2 = 0;

    CohomologyDims reversed() const { return {h2, h1, h0}; }
    friend bool operator==(const CohomologyDims& a, const CohomologyDims& b)
    {
        return a.h0 == b.h0 && a.h1 == b.h1 && a.h2 == b.h2;
    }
};

// ψ with ψ(u_j) = a_j (divisor Σ a_j D_j in the sign convention where ψ_K = −1 on rays).
inline ToricSupportFunction support_from_divisor(const SmoothCompleteFan& f, const IntVector& a)
{
    if (a.size() != f.size()) throw InputError("one coefficient per ray is required");
    ToricSupportFunction psi;
    psi.fan = f;
    const long n = static_cast<long>(f.size());
    for (long j = 0; j < n; ++j) {
        const LatticeVec& p = f.ray(j - 1);
        const LatticeVec& q = f.ray(j);
        const Integer& ap = a[static_cast<std::size_t>((j - 1 + n) % n)];
        const Integer& aq = a[static_cast<std::size_t>(j)];
        // det(p, q) = 1
        psi.parts.push_back({ap * q.y - aq * p.y, aq * p.x - ap * q.x});
    }
    return psi;
}

inline ToricSupportFunction canonical_psi(const SmoothCompleteFan& f)
{
    return support_from_divisor(f, IntVector(f.size(), Integer(-1)));
}

inline IntVector divisor_coeffs(const ToricSupportFunction& psi)
{
    IntVector a;
    const long n = static_cast<long>(psi.fan.size());
    for (long j = 0; j < n; ++j) {
        Integer v = dot(psi.parts[static_cast<std::size_t>(j)], psi.fan.ray(j));
        Integer w = dot(psi.parts[static_cast<std::size_t>((j + 1) % n)], psi.fan.ray(j));
        if (v != w) throw InputError("linear parts disagree on ray " + std::to_string(j));
        a.push_back(v);
    }
    return a;
}

// c_j with ψ_{j+1} − ψ_j = c_j J u_j; equals D·D_j.
inline IntVector intersection_numbers(const ToricSupportFunction& psi)
{
    IntVector c;
    const long n = static_cast<long>(psi.fan.size());
    for (long j = 0; j < n; ++j) {
        LatticeVec d = psi.parts[static_cast<std::size_t>((j + 1) % n)] - psi.parts[static_cast<std::size_t>(j)];
        auto [ok, k] = parallel_multiple(d, rotate(psi.fan.ray(j)));
        if (!ok) throw InputError("linear parts disagree on ray " + std::to_string(j));
        c.push_back(k);
    }
    return c;
}

inline ToricSupportFunction subtract(const ToricSupportFunction& a, const ToricSupportFunction& b)
{
    ToricSupportFunction out;
    out.fan = a.fan;
    for (std::size_t j = 0; j < a.parts.size(); ++j) out.parts.push_back(a.parts[j] - b.parts[j]);
    return out;
}

// ½ψ_K − ϑ
inline ToricSupportFunction psi_from_theta(const SemiIntegralSupport& th)
{
    ToricSupportFunction k = canonical_psi(th.fan);
    ToricSupportFunction psi;
    psi.fan = th.fan;
    for (std::size_t j = 0; j < k.parts.size(); ++j) {
        // doubled: ψ_K − 2θ, must be even
        LatticeVec d = k.parts[j] - th.thetas[j].doubled();
        if (d.x % 2 != 0 || d.y % 2 != 0) throw InputError("parity violated on cone " + std::to_string(j));
        psi.parts.push_back({d.x / 2, d.y / 2});
    }
    return psi;
}

// Contribution of one m: 0 → Q_0, 2 → Q_2, 1 with h = runs − 1.
struct FultonLabel {
    int kind;
    long long h;
};

inline FultonLabel fulton_label(const std::vector<LatticeVec>& rays, const IntVector& a, const LatticeVec& m)
{
    const std::size_t n = rays.size();
    std::size_t minus = 0, runs = 0;
    std::vector<bool> neg(n);
    for (std::size_t j = 0; j < n; ++j) {
        neg[j] = dot(m, rays[j]) + a[j] < 0;
        if (neg[j]) ++minus;
    }
    if (minus == 0) return {0, 0};
    if (minus == n) return {2, 0};
    for (std::size_t j = 0; j < n; ++j)
        if (neg[j] && !neg[(j + n - 1) % n]) ++runs;
    return {1, static_cast<long long>(runs) - 1};
}

inline Box fulton_box(const SmoothCompleteFan& f, const IntVector& a, long long margin = 1)
{
    bool any = false;
    Rational xl, xh, yl, yh;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            const auto& p = f.rays[i];
            const auto& q = f.rays[j];
            Integer d = det2(p, q);
            if (d == 0) continue;
            // ⟨m,p⟩ = −a_i, ⟨m,q⟩ = −a_j
            Rational x = ratio(-a[i] * q.y + a[j] * p.y, d), y = ratio(-a[j] * p.x + a[i] * q.x, d);
            if (!any) { xl = xh = x; yl = yh = y; any = true; }
            xl = std::min(xl, x); xh = std::max(xh, x);
            yl = std::min(yl, y); yh = std::max(yh, y);
        }
    if (!any) throw Error("fan has no independent rays");
    return {detail::to_ll(floor(xl)) - margin, detail::to_ll(floor(yl)) - margin, detail::to_ll(ceil(xh)) + margin,
            detail::to_ll(ceil(yh)) + margin};
}

inline CohomologyDims cohomology_dims(const ToricSupportFunction& psi, unsigned threads = 1, long long margin = 1)
{
    if (margin < 1) throw InputError("search margin must be at least 1");
    IntVector a = divisor_coeffs(psi);
    const auto& rays = psi.fan.rays;
    Box b = fulton_box(psi.fan, a, margin);
    const long long rows = b.y1 - b.y0 + 1;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows)));
    std::vector<CohomologyDims> partial(threads);
    std::vector<int> ring_bad(threads, 0);
    auto work = [&](unsigned t) {
        for (long long y = b.y0 + t; y <= b.y1; y += threads)
            for (long long x = b.x0; x <= b.x1; ++x) {
                FultonLabel l = fulton_label(rays, a, {x, y});
                bool ring = x == b.x0 || x == b.x1 || y == b.y0 || y == b.y1;
                if (ring && (l.kind != 1 || l.h != 0)) ring_bad[t] = 1;
                if (l.kind == 0) ++partial[t].h0;
                else if (l.kind == 2) ++partial[t].h2;
                else partial[t].h1 += l.h;
            }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    CohomologyDims out;
    for (unsigned t = 0; t < threads; ++t) {
        if (ring_bad[t]) throw Error("search region too small");
        out.h0 += partial[t].h0;
        out.h1 += partial[t].h1;
        out.h2 += partial[t].h2;
    }
    return out;
}

struct WindingTheoremReport {
    EvenOdd winding;
    CohomologyDims cohomology;
    IntVector divisor;        // ψ(u_j)
    IntVector intersections;  // D·D_j = (K_C − ℓ)/2
    bool match = false;
};

inline WindingTheoremReport verify_winding_theorem(const SemiIntegralSupport& th, unsigned threads = 1)
{
    WindingTheoremReport r;
    r.winding = h_even_odd(th, threads);
    ToricSupportFunction psi = psi_from_theta(th);
    r.divisor = divisor_coeffs(psi);
    r.intersections = intersection_numbers(psi);
    r.cohomology = cohomology_dims(psi, threads);
    r.match = r.winding.h_even == r.cohomology.h0 + r.cohomology.h2 && r.winding.h_odd == r.cohomology.h1;
    return r;
}

inline std::array<long long, 2> p1_cohomology(long long d)
{
    return {std::max(d + 1, 0LL), std::max(-d - 1, 0LL)};
}

}  // namespace toricmirror

#endif
