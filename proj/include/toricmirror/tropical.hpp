#ifndef TORICMIRROR_TROPICAL_HPP
#define TORICMIRROR_TROPICAL_HPP

#include "subdivision.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace toricmirror {

struct TropicalTerm {
    LatticeVec v;
    Integer c;
};

// m ↦ min over terms of ⟨v,m⟩ + c
struct TropicalFunction {
    std::vector<TropicalTerm> terms;

    Rational operator()(const RationalPoint& m) const
    {
        if (terms.empty()) throw Error("empty tropical function");
        Rational best = dot(m, terms[0].v) + terms[0].c;
        for (std::size_t i = 1; i < terms.size(); ++i) {
            Rational val = dot(m, terms[i].v) + terms[i].c;
            if (val < best) best = val;
        }
        return best;
    }

    // Terms attaining the minimum at m.
    std::vector<std::size_t> active(const RationalPoint& m) const
    {
        Rational best = (*this)(m);
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (dot(m, terms[i].v) + terms[i].c == best) out.push_back(i);
        return out;
    }
};

inline TropicalFunction legendre(const SubdividedPolytope& s)
{
    TropicalFunction f;
    for (std::size_t i = 0; i < s.points.size(); ++i) f.terms.push_back({s.points[i], s.nu[i]});
    return f;
}

struct BoundedEdge {
    std::size_t subdivision_edge;
    std::size_t plus_vertex, minus_vertex;  // triangle indices = Γ-vertex indices
    LatticeVec n_e;                        // from p⁺ toward p⁻
};

struct TropicalRay {
    std::size_t subdivision_edge;
    std::size_t origin;
    LatticeVec direction;
};

struct BoundedRegion {
    LatticeVec dual_vertex;
    std::vector<LatticeVec> rays;          // outward tangents u_j at v_C, counterclockwise
    std::vector<std::size_t> edges;        // bounded-edge index of the edge dual to u_j
    std::vector<int> epsilon;              // +1 if n_e runs with the counterclockwise boundary
    std::vector<std::size_t> vertices;     // Γ-vertex p_j on cone (u_{j-1}, u_j)
};

struct TropicalCurve {
    SubdividedPolytope polytope;
    std::vector<SubdivisionEdge> subdivision_edges;
    std::vector<RationalPoint> vertices;   // one per triangle
    std::vector<BoundedEdge> bounded_edges;
    std::vector<TropicalRay> rays;
    std::vector<std::optional<std::size_t>> bounded_of_edge;  // subdivision edge → bounded edge
};

namespace detail {

inline RationalPoint solve_vertex(const SubdividedPolytope& s, const TriangleIndex& t)
{
    // ⟨v_i − v_0, m⟩ = ν(v_0) − ν(v_i), i = 1,2
    const auto& v0 = s.points[t[0]];
    LatticeVec a = s.points[t[1]] - v0, b = s.points[t[2]] - v0;
    Integer r1 = s.nu[t[0]] - s.nu[t[1]], r2 = s.nu[t[0]] - s.nu[t[2]];
    Integer d = det2(a, b);
    if (d == 0) throw Error("degenerate triangle has no tropical vertex");
    return {ratio(r1 * b.y - r2 * a.y, d), ratio(a.x * r2 - b.x * r1, d)};
}

// Sort directions counterclockwise starting from the lexicographically smallest.
template <class T, class Dir>
void sort_ccw_from_lex_min(std::vector<T>& items, Dir dir)
{
    if (items.empty()) return;
    auto start_it = std::min_element(items.begin(), items.end(), [&](const T& a, const T& b) { return dir(a) < dir(b); });
    LatticeVec s = dir(*start_it);
    // angle measured counterclockwise from s in [0, 2π)
    auto half = [&](const LatticeVec& v) {
        Integer c = det2(s, v);
        if (c > 0) return 1;
        if (c < 0) return 3;
        return dot(s, v) > 0 ? 0 : 2;
    };
    std::stable_sort(items.begin(), items.end(), [&](const T& a, const T& b) {
        LatticeVec va = dir(a), vb = dir(b);
        int ha = half(va), hb = half(vb);
        if (ha != hb) return ha < hb;
        return det2(va, vb) > 0;
    });
}

}  // namespace detail

inline TropicalCurve tropical_curve(const SubdividedPolytope& s)
{
    require_valid(s);
    TropicalCurve c;
    c.polytope = s;
    c.subdivision_edges = edges(s);
    for (std::size_t t = 0; t < s.triangles.size(); ++t) {
        RationalPoint p = detail::solve_vertex(s, s.triangles[t]);
        AffinePart part = affine_part(s.points, s.nu, s.triangles[t]);
        if (p != RationalPoint(-part.m)) throw Error("tropical vertex disagrees with the affine part of nu");
        c.vertices.push_back(p);
    }
    c.bounded_of_edge.assign(c.subdivision_edges.size(), std::nullopt);
    for (std::size_t i = 0; i < c.subdivision_edges.size(); ++i) {
        const auto& e = c.subdivision_edges[i];
        LatticeVec ne = rotate(e.n_check);
        if (e.is_boundary) {
            // leaves its vertex across ě, away from the triangle
            LatticeVec q = s.points[detail::third_vertex(s.triangles[e.plus_triangle], e.a, e.b)];
            bool on_plus_side = dot(ne, q - s.points[e.a]) > 0;
            c.rays.push_back({i, e.plus_triangle, on_plus_side ? ne : LatticeVec(-ne)});
            continue;
        }
        RationalPoint diff = c.vertices[*e.minus_triangle] - c.vertices[e.plus_triangle];
        if (diff.x == 0 && diff.y == 0)
            throw Error("subdivision not strictly convex at " + edge_name(s, e.a, e.b));
        LatticeVec n = primitive(diff);
        if (n != ne) throw Error("edge tangent disagrees with rotated n_check at " + edge_name(s, e.a, e.b));
        c.bounded_of_edge[i] = c.bounded_edges.size();
        c.bounded_edges.push_back({i, e.plus_triangle, *e.minus_triangle, n});
    }
    return c;
}

struct StarEdge {
    LatticeVec u;              // primitive outward tangent
    std::size_t subdivision_edge;
};

// Edges at a lattice point, counterclockwise from the lexicographically smallest tangent.
inline std::vector<StarEdge> star(const SubdividedPolytope& s, const std::vector<SubdivisionEdge>& es,
                                  std::size_t vertex)
{
    std::vector<StarEdge> out;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].a != vertex && es[i].b != vertex) continue;
        std::size_t other = es[i].a == vertex ? es[i].b : es[i].a;
        out.push_back({primitive(s.points[other] - s.points[vertex]), i});
    }
    detail::sort_ccw_from_lex_min(out, [](const StarEdge& e) { return e.u; });
    return out;
}

inline std::size_t triangle_with(const SubdividedPolytope& s, std::size_t a, std::size_t b, std::size_t c)
{
    for (std::size_t t = 0; t < s.triangles.size(); ++t) {
        const auto& tri = s.triangles[t];
        auto has = [&](std::size_t v) { return tri[0] == v || tri[1] == v || tri[2] == v; };
        if (has(a) && has(b) && has(c)) return t;
    }
    throw Error("no triangle with the requested vertices");
}

inline BoundedRegion region_at(const TropicalCurve& c, const LatticeVec& v)
{
    const auto& s = c.polytope;
    std::size_t vi = point_index(s, v);
    if (locate_in_convex(boundary_polygon(s), v) <= 0)
        throw InputError("vertex " + to_string(v) + " is not an interior vertex");
    auto st = star(s, c.subdivision_edges, vi);
    BoundedRegion r;
    r.dual_vertex = v;
    const std::size_t n = st.size();
    for (std::size_t j = 0; j < n; ++j) {
        const auto& prev = st[(j + n - 1) % n];
        const auto& cur = st[j];
        std::size_t pa = s.points[c.subdivision_edges[prev.subdivision_edge].a] == v + prev.u
                             ? c.subdivision_edges[prev.subdivision_edge].a
                             : c.subdivision_edges[prev.subdivision_edge].b;
        std::size_t ca = s.points[c.subdivision_edges[cur.subdivision_edge].a] == v + cur.u
                             ? c.subdivision_edges[cur.subdivision_edge].a
                             : c.subdivision_edges[cur.subdivision_edge].b;
        r.rays.push_back(cur.u);
        r.vertices.push_back(triangle_with(s, vi, pa, ca));
        auto be = c.bounded_of_edge[cur.subdivision_edge];
        if (!be) throw Error("edge at interior vertex is unbounded");
        r.edges.push_back(*be);
    }
    for (std::size_t j = 0; j < n; ++j) {
        const auto& e = c.bounded_edges[r.edges[j]];
        RationalPoint along = c.vertices[r.vertices[(j + 1) % n]] - c.vertices[r.vertices[j]];
        r.epsilon.push_back(primitive(along) == e.n_e ? 1 : -1);
    }
    return r;
}

inline std::vector<BoundedRegion> bounded_regions(const TropicalCurve& c)
{
    std::vector<BoundedRegion> out;
    for (const auto& v : interior_vertices(c.polytope)) out.push_back(region_at(c, v));
    return out;
}

// Outgoing primitive edge directions at Γ-vertex t (bounded and unbounded).
inline std::vector<LatticeVec> vertex_directions(const TropicalCurve& c, std::size_t t)
{
    std::vector<LatticeVec> out;
    for (const auto& e : c.bounded_edges) {
        if (e.plus_vertex == t) out.push_back(e.n_e);
        if (e.minus_vertex == t) out.push_back(-e.n_e);
    }
    for (const auto& r : c.rays)
        if (r.origin == t) out.push_back(r.direction);
    return out;
}

}  // namespace toricmirror

#endif
