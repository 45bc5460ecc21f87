#ifndef TORICMIRROR_BUNDLES_HPP
#define TORICMIRROR_BUNDLES_HPP

#include "fan.hpp"

#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace toricmirror {

struct SupportFunction {
    std::vector<Integer> values;  // one per lattice point of P
};

using KinkVector = IntVector;  // indexed by TropicalCurve::bounded_edges

struct PhiMap {
    IntMatrix matrix;       // rows (region, coordinate), columns bounded edges
    std::size_t cols = 0;
};

inline KinkVector kinks(const TropicalCurve& c, const SupportFunction& phi)
{
    if (phi.values.size() != c.polytope.points.size()) throw InputError("support function has the wrong number of values");
    KinkVector k;
    for (const auto& e : c.bounded_edges) k.push_back(edge_kink(c.polytope, phi.values, c.subdivision_edges[e.subdivision_edge]));
    return k;
}

inline PhiMap phi_map(const TropicalCurve& c)
{
    PhiMap p;
    p.cols = c.bounded_edges.size();
    for (const auto& r : bounded_regions(c)) {
        IntVector rx(p.cols), ry(p.cols);
        for (std::size_t j = 0; j < r.edges.size(); ++j) {
            const auto& n = c.bounded_edges[r.edges[j]].n_e;
            rx[r.edges[j]] += r.epsilon[j] * n.x;
            ry[r.edges[j]] += r.epsilon[j] * n.y;
        }
        p.matrix.push_back(std::move(rx));
        p.matrix.push_back(std::move(ry));
    }
    return p;
}

inline IntVector apply_phi(const PhiMap& p, const KinkVector& k)
{
    if (k.size() != p.cols) throw InputError("kink vector has " + std::to_string(k.size()) + " entries, expected " +
                                             std::to_string(p.cols));
    return mat_vec(p.matrix, k);
}

inline std::vector<KinkVector> picard_basis(const TropicalCurve& c)
{
    PhiMap p = phi_map(c);
    return integer_kernel(p.matrix, p.cols);
}

inline std::size_t picard_rank(const TropicalCurve& c) { return picard_basis(c).size(); }

// Index of the region whose Φ-row fails, if any.
inline std::optional<std::size_t> first_failing_region(const TropicalCurve& c, const KinkVector& k)
{
    IntVector img = apply_phi(phi_map(c), k);
    for (std::size_t i = 0; i + 1 < img.size(); i += 2)
        if (img[i] != 0 || img[i + 1] != 0) return i / 2;
    return std::nullopt;
}

inline std::size_t base_triangle(const SubdividedPolytope& s)
{
    auto key = [&](std::size_t t) {
        std::vector<LatticeVec> v{s.points[s.triangles[t][0]], s.points[s.triangles[t][1]], s.points[s.triangles[t][2]]};
        std::sort(v.begin(), v.end());
        return v;
    };
    std::size_t best = 0;
    for (std::size_t t = 1; t < s.triangles.size(); ++t)
        if (key(t) < key(best)) best = t;
    return best;
}

inline SupportFunction support_from_kinks(const TropicalCurve& c, const KinkVector& k)
{
    const auto& s = c.polytope;
    if (k.size() != c.bounded_edges.size())
        throw InputError("kink vector has " + std::to_string(k.size()) + " entries, expected " +
                         std::to_string(c.bounded_edges.size()));
    if (auto bad = first_failing_region(c, k)) {
        auto v = interior_vertices(s)[*bad];
        throw InputError("not a cocycle: inconsistent around region C" + std::to_string(*bad) + " (v_C=" + to_string(v) +
                         ")");
    }
    const std::size_t nt = s.triangles.size();
    std::vector<std::optional<AffinePart>> part(nt);
    std::size_t t0 = base_triangle(s);
    part[t0] = AffinePart{{0, 0}, 0};
    std::vector<std::vector<std::size_t>> adj(nt);
    for (std::size_t i = 0; i < c.bounded_edges.size(); ++i) {
        adj[c.bounded_edges[i].plus_vertex].push_back(i);
        adj[c.bounded_edges[i].minus_vertex].push_back(i);
    }
    std::deque<std::size_t> queue{t0};
    while (!queue.empty()) {
        std::size_t t = queue.front();
        queue.pop_front();
        for (std::size_t i : adj[t]) {
            const auto& e = c.bounded_edges[i];
            const auto& se = c.subdivision_edges[e.subdivision_edge];
            bool from_plus = e.plus_vertex == t;
            std::size_t u = from_plus ? e.minus_vertex : e.plus_vertex;
            LatticeVec jump = k[i] * e.n_e;  // m⁺ − m⁻
            LatticeVec m = from_plus ? part[t]->m - jump : part[t]->m + jump;
            Integer cc = part[t]->c + dot(part[t]->m - m, s.points[se.a]);
            if (!part[u]) {
                part[u] = AffinePart{m, cc};
                queue.push_back(u);
            } else if (part[u]->m != m || part[u]->c != cc) {
                throw Error("support function propagation is inconsistent despite Phi(K) = 0");
            }
        }
    }
    SupportFunction phi;
    phi.values.assign(s.points.size(), 0);
    std::vector<bool> set(s.points.size(), false);
    for (std::size_t t = 0; t < nt; ++t) {
        if (!part[t]) throw Error("subdivision dual graph is disconnected");
        for (auto v : s.triangles[t]) {
            Integer val = dot(part[t]->m, s.points[v]) + part[t]->c;
            if (set[v] && phi.values[v] != val) throw Error("support function is discontinuous");
            phi.values[v] = val;
            set[v] = true;
        }
    }
    return phi;
}

// Kinks of O(D_C): −b_e − 2 on ∂C, 1 on bounded edges leaving a vertex of C, 0 elsewhere.
inline KinkVector canonical_KC(const TropicalCurve& c, const BoundedRegion& r)
{
    const auto& s = c.polytope;
    KinkVector k(c.bounded_edges.size());
    IntVector b = self_intersections(make_fan(r.rays));
    for (std::size_t j = 0; j < r.edges.size(); ++j) k[r.edges[j]] = -b[j] - 2;
    std::size_t vi = point_index(s, r.dual_vertex);
    for (std::size_t i = 0; i < c.bounded_edges.size(); ++i) {
        const auto& se = c.subdivision_edges[c.bounded_edges[i].subdivision_edge];
        if (se.a == vi || se.b == vi) continue;
        for (auto t : r.vertices) {
            const auto& tri = s.triangles[t];
            bool has_a = tri[0] == se.a || tri[1] == se.a || tri[2] == se.a;
            bool has_b = tri[0] == se.b || tri[1] == se.b || tri[2] == se.b;
            if (has_a && has_b) k[i] = 1;
        }
    }
    SupportFunction phi;
    for (std::size_t i = 0; i < s.points.size(); ++i) phi.values.push_back(i == vi ? 0 : -1);
    if (kinks(c, phi) != k) throw Error("canonical class disagrees with the kinks of its support function");
    if (!is_zero(apply_phi(phi_map(c), k))) throw Error("canonical class is not balanced");
    return k;
}

inline Integer restriction_degree(const TropicalCurve& c, const KinkVector& k, std::size_t subdivision_edge)
{
    if (subdivision_edge >= c.subdivision_edges.size()) throw InputError("edge index out of range");
    auto be = c.bounded_of_edge[subdivision_edge];
    if (!be) throw InputError("no compact curve over a boundary edge");
    return k.at(*be);
}

inline KinkVector hms_line_bundle(const KinkVector& k)
{
    KinkVector out;
    for (const auto& e : k) out.push_back(-e);
    return out;
}

inline KinkVector add(const KinkVector& a, const KinkVector& b, const Integer& scale = 1)
{
    if (a.size() != b.size()) throw InputError("kink vectors differ in length");
    KinkVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + scale * b[i];
    return out;
}

}  // namespace toricmirror

#endif
