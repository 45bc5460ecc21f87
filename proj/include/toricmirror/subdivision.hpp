#ifndef TORICMIRROR_SUBDIVISION_HPP
#define TORICMIRROR_SUBDIVISION_HPP

#include "lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toricmirror {

using TriangleIndex = std::array<std::size_t, 3>;

struct SubdividedPolytope {
    std::vector<LatticeVec> points;
    std::vector<TriangleIndex> triangles;
    std::vector<Integer> nu;  // one value per point
};

struct ValidationIssue {
    std::string kind;
    std::string where;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    bool has(const std::string& kind) const
    {
        return std::any_of(issues.begin(), issues.end(), [&](const ValidationIssue& i) { return i.kind == kind; });
    }
    std::size_t count(const std::string& kind) const
    {
        return static_cast<std::size_t>(
            std::count_if(issues.begin(), issues.end(), [&](const ValidationIssue& i) { return i.kind == kind; }));
    }
};

struct SubdivisionEdge {
    std::size_t a, b;        // point indices, points[a] < points[b]
    LatticeVec n_check;      // lexicographically positive primitive tangent
    bool is_boundary = false;
    std::size_t plus_triangle = 0;
    std::optional<std::size_t> minus_triangle;
};

// ν(v) = ⟨m, v⟩ + c on one triangle.
struct AffinePart {
    LatticeVec m;
    Integer c;
};

inline Integer orient(const LatticeVec& a, const LatticeVec& b, const LatticeVec& c) { return det2(b - a, c - a); }

// Counterclockwise hull vertices, collinear points dropped.
inline std::vector<LatticeVec> convex_hull(std::vector<LatticeVec> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<LatticeVec> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline Integer twice_area(const std::vector<LatticeVec>& poly)
{
    Integer s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += det2(poly[i], poly[(i + 1) % poly.size()]);
    return s < 0 ? Integer(-s) : s;
}

// +1 strictly inside, 0 on boundary, −1 outside; poly counterclockwise and convex.
inline int locate_in_convex(const std::vector<LatticeVec>& poly, const LatticeVec& p)
{
    if (poly.size() < 3) return -1;
    bool boundary = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Integer o = orient(poly[i], poly[(i + 1) % poly.size()], p);
        if (o < 0) return -1;
        if (o == 0) boundary = true;
    }
    return boundary ? 0 : 1;
}

inline std::vector<LatticeVec> lattice_points_in(const std::vector<LatticeVec>& poly)
{
    std::vector<LatticeVec> out;
    if (poly.empty()) return out;
    Integer x0 = poly[0].x, x1 = poly[0].x, y0 = poly[0].y, y1 = poly[0].y;
    for (const auto& p : poly) {
        x0 = std::min(x0, p.x); x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y); y1 = std::max(y1, p.y);
    }
    for (Integer x = x0; x <= x1; ++x)
        for (Integer y = y0; y <= y1; ++y)
            if (locate_in_convex(poly, {x, y}) >= 0) out.push_back({x, y});
    return out;
}

inline AffinePart affine_part(const std::vector<LatticeVec>& pts, const std::vector<Integer>& values,
                              const TriangleIndex& t)
{
    const LatticeVec& v0 = pts[t[0]];
    LatticeVec e1 = pts[t[1]] - v0, e2 = pts[t[2]] - v0;
    Integer d = det2(e1, e2);
    if (d != 1 && d != -1) throw Error("affine part requested on a non-elementary triangle");
    Integer a = values[t[1]] - values[t[0]], b = values[t[2]] - values[t[0]];
    LatticeVec m{(a * e2.y - b * e1.y) * d, (b * e1.x - a * e2.x) * d};
    return {m, values[t[0]] - dot(m, v0)};
}

inline std::string triangle_name(const SubdividedPolytope& s, std::size_t t)
{
    const auto& tri = s.triangles[t];
    return "triangle " + std::to_string(t) + " " + to_string(s.points[tri[0]]) + to_string(s.points[tri[1]]) +
           to_string(s.points[tri[2]]);
}

inline std::string edge_name(const SubdividedPolytope& s, std::size_t a, std::size_t b)
{
    return "edge " + to_string(s.points[a]) + "-" + to_string(s.points[b]);
}

namespace detail {

using EdgeKey = std::pair<std::size_t, std::size_t>;

inline EdgeKey edge_key(const SubdividedPolytope& s, std::size_t a, std::size_t b)
{
    return s.points[a] < s.points[b] ? EdgeKey{a, b} : EdgeKey{b, a};
}

inline std::map<EdgeKey, std::vector<std::size_t>> edge_incidence(const SubdividedPolytope& s)
{
    std::map<EdgeKey, std::vector<std::size_t>> inc;
    for (std::size_t t = 0; t < s.triangles.size(); ++t)
        for (int i = 0; i < 3; ++i)
            inc[edge_key(s, s.triangles[t][i], s.triangles[t][(i + 1) % 3])].push_back(t);
    return inc;
}

inline std::size_t third_vertex(const TriangleIndex& t, std::size_t a, std::size_t b)
{
    for (auto v : t)
        if (v != a && v != b) return v;
    throw Error("triangle does not contain edge");
}

}  // namespace detail

// Kink k with m⁺ − m⁻ = k n_e across an interior edge; n_e = rotate(n_ě).
inline Integer edge_kink(const SubdividedPolytope& s, const std::vector<Integer>& values, const SubdivisionEdge& e)
{
    AffinePart p = affine_part(s.points, values, s.triangles[e.plus_triangle]);
    AffinePart q = affine_part(s.points, values, s.triangles[*e.minus_triangle]);
    auto [ok, k] = parallel_multiple(p.m - q.m, rotate(e.n_check));
    if (!ok) throw Error("slope jump not parallel to n_e at " + edge_name(s, e.a, e.b));
    return k;
}

inline ValidationReport validate(const SubdividedPolytope& s)
{
    ValidationReport r;
    auto issue = [&](std::string kind, std::string where, std::string msg) {
        r.issues.push_back({std::move(kind), std::move(where), std::move(msg)});
    };
    const std::size_t n = s.points.size();
    if (n < 3) {
        issue("too_few_points", "points", "at least three lattice points are required");
        return r;
    }
    if (s.nu.size() != n)
        issue("nu_size", "nu", "nu has " + std::to_string(s.nu.size()) + " values for " + std::to_string(n) + " points");

    std::map<LatticeVec, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = seen.emplace(s.points[i], i);
        if (!fresh)
            issue("duplicate_point", "point " + std::to_string(i),
                  "point " + to_string(s.points[i]) + " repeats point " + std::to_string(it->second));
    }
    if (s.triangles.empty()) issue("no_triangles", "triangles", "subdivision has no triangles");
    bool index_ok = true;
    for (std::size_t t = 0; t < s.triangles.size(); ++t)
        for (auto v : s.triangles[t])
            if (v >= n) {
                issue("bad_index", "triangle " + std::to_string(t), "vertex index " + std::to_string(v) + " out of range");
                index_ok = false;
            }
    if (!index_ok || !r.ok()) return r;

    std::vector<bool> triangle_ok(s.triangles.size(), true);
    Integer area_sum = 0;
    std::vector<bool> used(n, false);
    for (std::size_t t = 0; t < s.triangles.size(); ++t) {
        const auto& tri = s.triangles[t];
        for (auto v : tri) used[v] = true;
        Integer d = orient(s.points[tri[0]], s.points[tri[1]], s.points[tri[2]]);
        if (d == 0) {
            issue("degenerate_triangle", triangle_name(s, t), "vertices are collinear");
            triangle_ok[t] = false;
        } else if (d != 1 && d != -1) {
            issue("not_elementary", triangle_name(s, t),
                  "normalized area " + Integer(abs(d)).str() + " (elementary simplices have area 1)");
            triangle_ok[t] = false;
        }
        area_sum += abs(d);
    }

    auto hull = convex_hull(s.points);
    if (hull.size() < 3) {
        issue("degenerate_polytope", "points", "lattice points are collinear");
        return r;
    }
    Integer area = twice_area(hull);
    if (area_sum != area)
        issue("tiling_area", "triangles",
              "triangles cover normalized area " + area_sum.str() + " but P has " + area.str());
    for (const auto& p : lattice_points_in(hull))
        if (!seen.count(p)) issue("missing_point", to_string(p), "lattice point of P is not listed");
    for (std::size_t i = 0; i < n; ++i)
        if (!used[i]) issue("unused_point", to_string(s.points[i]), "point is not a vertex of any triangle");

    auto inc = detail::edge_incidence(s);
    bool tiling_ok = true;
    for (const auto& [key, tris] : inc) {
        auto [a, b] = key;
        bool on_boundary = false;
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const auto& h0 = hull[i];
            const auto& h1 = hull[(i + 1) % hull.size()];
            if (orient(h0, h1, s.points[a]) == 0 && orient(h0, h1, s.points[b]) == 0) on_boundary = true;
        }
        std::size_t want = on_boundary ? 1 : 2;
        if (tris.size() != want) {
            issue("tiling_edge", edge_name(s, a, b),
                  "edge lies in " + std::to_string(tris.size()) + " triangles, expected " + std::to_string(want));
            tiling_ok = false;
            continue;
        }
        if (want == 2) {
            auto q0 = detail::third_vertex(s.triangles[tris[0]], a, b);
            auto q1 = detail::third_vertex(s.triangles[tris[1]], a, b);
            if (sign(orient(s.points[a], s.points[b], s.points[q0])) ==
                sign(orient(s.points[a], s.points[b], s.points[q1]))) {
                issue("overlap", edge_name(s, a, b), "adjacent triangles lie on the same side");
                tiling_ok = false;
            }
        }
    }
    if (!tiling_ok || s.nu.size() != n) return r;
    if (!std::all_of(triangle_ok.begin(), triangle_ok.end(), [](bool b) { return b; })) return r;

    for (const auto& [key, tris] : inc) {
        if (tris.size() != 2) continue;
        auto [a, b] = key;
        SubdivisionEdge e;
        e.a = a;
        e.b = b;
        LatticeVec t = primitive(s.points[b] - s.points[a]);
        e.n_check = lex_positive(t) ? t : -t;
        LatticeVec ne = rotate(e.n_check);
        auto q0 = detail::third_vertex(s.triangles[tris[0]], a, b);
        bool first_plus = dot(ne, s.points[q0] - s.points[a]) > 0;
        e.plus_triangle = first_plus ? tris[0] : tris[1];
        e.minus_triangle = first_plus ? tris[1] : tris[0];
        Integer k = edge_kink(s, s.nu, e);
        if (k <= 0)
            issue("not_strictly_convex", edge_name(s, a, b), "kink of nu is " + k.str() + ", must be positive");
    }
    return r;
}

inline void require_valid(const SubdividedPolytope& s)
{
    auto r = validate(s);
    if (r.ok()) return;
    std::string msg = "invalid subdivided polytope:";
    for (const auto& i : r.issues) msg += " [" + i.kind + "] " + i.where + ": " + i.message + ";";
    throw InputError(msg);
}

inline std::vector<LatticeVec> boundary_polygon(const SubdividedPolytope& s) { return convex_hull(s.points); }

inline std::vector<LatticeVec> interior_vertices(const SubdividedPolytope& s)
{
    auto hull = boundary_polygon(s);
    std::vector<LatticeVec> out;
    for (const auto& p : s.points)
        if (locate_in_convex(hull, p) > 0) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t point_index(const SubdividedPolytope& s, const LatticeVec& p)
{
    for (std::size_t i = 0; i < s.points.size(); ++i)
        if (s.points[i] == p) return i;
    throw InputError("point " + to_string(p) + " is not a lattice point of the subdivision");
}

// Edges sorted by (lower endpoint, upper endpoint).
inline std::vector<SubdivisionEdge> edges(const SubdividedPolytope& s)
{
    std::vector<SubdivisionEdge> out;
    for (const auto& [key, tris] : detail::edge_incidence(s)) {
        SubdivisionEdge e;
        e.a = key.first;
        e.b = key.second;
        LatticeVec t = primitive(s.points[e.b] - s.points[e.a]);
        e.n_check = lex_positive(t) ? t : -t;
        LatticeVec ne = rotate(e.n_check);
        if (tris.size() == 1) {
            e.is_boundary = true;
            e.plus_triangle = tris[0];
        } else {
            auto q0 = detail::third_vertex(s.triangles[tris[0]], e.a, e.b);
            bool first_plus = dot(ne, s.points[q0] - s.points[e.a]) > 0;
            e.plus_triangle = first_plus ? tris[0] : tris[1];
            e.minus_triangle = first_plus ? tris[1] : tris[0];
        }
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [&](const SubdivisionEdge& x, const SubdivisionEdge& y) {
        if (s.points[x.a] != s.points[y.a]) return s.points[x.a] < s.points[y.a];
        return s.points[x.b] < s.points[y.b];
    });
    return out;
}

}  // namespace toricmirror

#endif
