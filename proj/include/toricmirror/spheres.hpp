#ifndef TORICMIRROR_SPHERES_HPP
#define TORICMIRROR_SPHERES_HPP

#include "bundles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricmirror {

// ℓ_j on the boundary curve dual to ray u_j of the fan.
struct TwistingNumbers {
    IntVector ell;
};

// thetas[j] is the linear part on the cone between u_{j-1} and u_j.
struct SemiIntegralSupport {
    SmoothCompleteFan fan;
    std::vector<HalfLatticeVec> thetas;

    const HalfLatticeVec& theta(long j) const
    {
        long n = static_cast<long>(thetas.size());
        return thetas[static_cast<std::size_t>(((j % n) + n) % n)];
    }
    // 2ϑ(u_j), an odd integer
    Integer value2_on_ray(long j) const { return dot2(theta(j), fan.ray(j)); }
};

struct GammaCurve {
    std::vector<HalfLatticeVec> vertices;  // closed, consecutive vertices joined
};

struct TwistingReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline TwistingReport validate_twisting(const SmoothCompleteFan& f, const IntVector& ell)
{
    TwistingReport r;
    if (ell.size() != f.size()) {
        r.failures.push_back("expected " + std::to_string(f.size()) + " twisting numbers, got " +
                             std::to_string(ell.size()));
        return r;
    }
    IntVector b = self_intersections(f);
    LatticeVec sum{0, 0};
    for (std::size_t j = 0; j < ell.size(); ++j) {
        if ((ell[j] - b[j]) % 2 != 0)
            r.failures.push_back("parity: edge " + std::to_string(j) + " (ray " + to_string(f.rays[j]) + ") has l=" +
                                 ell[j].str() + " but b=" + b[j].str());
        sum += ell[j] * f.rays[j];
    }
    if (!sum.is_zero()) r.failures.push_back("balancing: sum of l_j u_j is " + to_string(sum) + ", not zero");
    return r;
}

inline void require_valid_twisting(const SmoothCompleteFan& f, const IntVector& ell)
{
    auto r = validate_twisting(f, ell);
    if (r.ok()) return;
    std::string msg = "invalid twisting numbers:";
    for (const auto& s : r.failures) msg += " " + s + ";";
    throw InputError(msg);
}

// Unique point of {0,½}² with half-integral pairing on u_{r-1} and u_0.
inline HalfLatticeVec canonical_seed(const SmoothCompleteFan& f)
{
    const LatticeVec& a = f.ray(-1);
    const LatticeVec& b = f.ray(0);
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y) {
            auto h = HalfLatticeVec::from_doubled(x, y);
            if (dot2(h, a) % 2 != 0 && dot2(h, b) % 2 != 0) return h;
        }
    throw Error("fan not smooth");
}

inline SemiIntegralSupport theta_from_twisting(const SmoothCompleteFan& f, const IntVector& ell)
{
    require_valid_twisting(f, ell);
    SemiIntegralSupport t;
    t.fan = f;
    t.thetas.push_back(canonical_seed(f));
    for (std::size_t j = 0; j < f.size(); ++j) {
        // 2(θ_{j+1} − θ_j) = ℓ_j J u_j
        LatticeVec step = ell[j] * rotate(f.rays[j]);
        auto next = t.thetas.back() + HalfLatticeVec::from_doubled(step.x, step.y);
        if (j + 1 < f.size())
            t.thetas.push_back(next);
        else if (next != t.thetas.front())
            throw Error("theta cycle does not close");
    }
    return t;
}

inline IntVector kinks_of_theta(const SemiIntegralSupport& t)
{
    IntVector ell;
    const long n = static_cast<long>(t.fan.size());
    for (long j = 0; j < n; ++j) {
        if (dot2(t.theta(j), t.fan.ray(j)) % 2 == 0 || dot2(t.theta(j), t.fan.ray(j - 1)) % 2 == 0)
            throw InputError("not semi-integral on cone " + std::to_string(j));
        LatticeVec d = (t.theta(j + 1) - t.theta(j)).doubled();
        auto [ok, k] = parallel_multiple(d, rotate(t.fan.ray(j)));
        if (!ok) throw InputError("not a support function on the fan: linear parts disagree on ray " + std::to_string(j));
        ell.push_back(k);
    }
    return ell;
}

inline GammaCurve gamma_curve(const SemiIntegralSupport& t)
{
    GammaCurve g{t.thetas};
    const long n = static_cast<long>(t.fan.size());
    for (long j = 0; j < n; ++j) {
        // segment θ_j → θ_{j+1} lies on ⟨·,u_j⟩ = ϑ(u_j) ∈ ½ + ℤ
        if (dot2(t.theta(j), t.fan.ray(j)) % 2 == 0 || dot2(t.theta(j + 1), t.fan.ray(j)) % 2 == 0)
            throw Error("gamma segment " + std::to_string(j) + " is not lattice-free");
    }
    return g;
}

// +1 if γ runs counterclockwise, −1 clockwise, 0 if it encloses no area.
inline int gamma_orientation(const GammaCurve& g)
{
    Integer area = 0;
    const std::size_t n = g.vertices.size();
    for (std::size_t i = 0; i < n; ++i) area += det2(g.vertices[i].doubled(), g.vertices[(i + 1) % n].doubled());
    return area > 0 ? 1 : area < 0 ? -1 : 0;
}

inline IntVector region_twisting(const IntVector& ell, const IntVector& kappa, const Integer& scale)
{
    if (ell.size() != kappa.size()) throw InputError("twisting and shift differ in length");
    IntVector out(ell.size());
    for (std::size_t j = 0; j < ell.size(); ++j) out[j] = ell[j] + scale * kappa[j];
    return out;
}

// ℓ + 2K restricted to ∂C; K must lie in ker Φ.
inline IntVector translate_sphere(const TropicalCurve& c, const BoundedRegion& r, const IntVector& ell,
                                  const KinkVector& K)
{
    if (!is_zero(apply_phi(phi_map(c), K))) throw InputError("translation kinks are not in ker Phi");
    IntVector kr;
    for (auto e : r.edges) kr.push_back(K[e]);
    return region_twisting(ell, kr, 2);
}

inline std::optional<Integer> compact_support_class(const TropicalCurve& c, const BoundedRegion& r,
                                                    const KinkVector& K)
{
    KinkVector kc = canonical_KC(c, r);
    if (K.size() != kc.size()) throw InputError("kink vector has the wrong length");
    std::optional<Integer> a;
    for (std::size_t i = 0; i < kc.size(); ++i) {
        if (kc[i] == 0) {
            if (K[i] != 0) return std::nullopt;
            continue;
        }
        if (K[i] % kc[i] != 0) return std::nullopt;
        Integer q = K[i] / kc[i];
        if (a && *a != q) return std::nullopt;
        a = q;
    }
    return a ? a : std::optional<Integer>(Integer(0));
}

inline IntVector difference_sphere(const SmoothCompleteFan& f)
{
    IntVector ell;
    for (const auto& b : self_intersections(f)) ell.push_back(b + 2);
    require_valid_twisting(f, ell);
    return ell;
}

inline IntVector kc_on_fan(const SmoothCompleteFan& f)
{
    IntVector k;
    for (const auto& b : self_intersections(f)) k.push_back(-b - 2);
    return k;
}

}  // namespace toricmirror

#endif
