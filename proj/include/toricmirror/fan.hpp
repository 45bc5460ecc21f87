#ifndef TORICMIRROR_FAN_HPP
#define TORICMIRROR_FAN_HPP

#include "tropical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricmirror {

struct SmoothCompleteFan {
    std::vector<LatticeVec> rays;                        // u_0..u_{r-1}, counterclockwise
    std::vector<std::optional<std::size_t>> edge_refs;   // subdivision edge spanned by each ray
    std::optional<LatticeVec> region_ref;                // v_C when built from a polytope

    std::size_t size() const { return rays.size(); }
    const LatticeVec& ray(long j) const
    {
        long n = static_cast<long>(rays.size());
        return rays[static_cast<std::size_t>(((j % n) + n) % n)];
    }
};

// Empty string when the fan is smooth and complete.
inline std::string fan_defect(const std::vector<LatticeVec>& rays)
{
    const std::size_t n = rays.size();
    if (n < 3) return "a complete fan needs at least three rays";
    for (std::size_t j = 0; j < n; ++j) {
        if (rays[j].is_zero()) return "ray " + std::to_string(j) + " is zero";
        if (primitive(rays[j]) != rays[j]) return "ray " + to_string(rays[j]) + " is not primitive";
        if (det2(rays[j], rays[(j + 1) % n]) != 1)
            return "fan not smooth: det(" + to_string(rays[j]) + "," + to_string(rays[(j + 1) % n]) + ") != 1";
    }
    // every turn is in (0, π); count cones containing (1,0) in the half-open sense
    const LatticeVec d{1, 0};
    int covers = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& a = rays[j];
        const auto& b = rays[(j + 1) % n];
        Integer s0 = det2(a, d), s1 = det2(d, b);
        bool start = s0 == 0 ? dot(a, d) > 0 : s0 > 0;
        if (start && s1 > 0) ++covers;
    }
    if (covers != 1) return "rays wind " + std::to_string(covers) + " times around the origin";
    return {};
}

inline SmoothCompleteFan make_fan(std::vector<LatticeVec> rays)
{
    auto defect = fan_defect(rays);
    if (!defect.empty()) throw InputError(defect);
    SmoothCompleteFan f;
    f.edge_refs.assign(rays.size(), std::nullopt);
    f.rays = std::move(rays);
    return f;
}

inline SmoothCompleteFan fan_at_vertex(const TropicalCurve& c, const LatticeVec& v)
{
    BoundedRegion r = region_at(c, v);
    SmoothCompleteFan f = make_fan(r.rays);
    for (std::size_t j = 0; j < r.edges.size(); ++j) f.edge_refs[j] = c.bounded_edges[r.edges[j]].subdivision_edge;
    f.region_ref = v;
    return f;
}

inline SmoothCompleteFan fan_of_region(const TropicalCurve& c, const BoundedRegion& r)
{
    return fan_at_vertex(c, r.dual_vertex);
}

// b_j with u_{j-1} + u_{j+1} = −b_j u_j
inline IntVector self_intersections(const SmoothCompleteFan& f)
{
    IntVector b;
    const long n = static_cast<long>(f.size());
    for (long j = 0; j < n; ++j) {
        LatticeVec s = f.ray(j - 1) + f.ray(j + 1);
        auto [ok, k] = parallel_multiple(s, f.ray(j));
        if (!ok) throw Error("fan not smooth");
        b.push_back(-k);
    }
    return b;
}

inline SmoothCompleteFan projective_plane_fan() { return make_fan({{1, 0}, {0, 1}, {-1, -1}}); }

inline SmoothCompleteFan p1xp1_fan() { return make_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

inline SmoothCompleteFan hirzebruch_fan(long long a) { return make_fan({{1, 0}, {0, 1}, {-1, a}, {0, -1}}); }

// ℙ² blown up at a point, rays in the order of the worked example: D1=D3=H−E, D2=E, D4=H.
inline SmoothCompleteFan blowup_p2_fan() { return make_fan({{0, 1}, {-1, 1}, {-1, 0}, {1, -1}}); }

// Insert u_j + u_{j+1} after position j.
inline SmoothCompleteFan blow_up(const SmoothCompleteFan& f, std::size_t j)
{
    std::vector<LatticeVec> rays = f.rays;
    rays.insert(rays.begin() + static_cast<long>(j) + 1, f.ray(static_cast<long>(j)) + f.ray(static_cast<long>(j) + 1));
    return make_fan(std::move(rays));
}

}  // namespace toricmirror

#endif
