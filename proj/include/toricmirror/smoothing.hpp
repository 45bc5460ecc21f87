#ifndef TORICMIRROR_SMOOTHING_HPP
#define TORICMIRROR_SMOOTHING_HPP

#include "spheres.hpp"
#include "winding.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

namespace toricmirror {

struct Vec2 {
    double x = 0, y = 0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 to_vec2(const LatticeVec& v) { return {static_cast<double>(v.x), static_cast<double>(v.y)}; }
inline Vec2 to_vec2(const HalfLatticeVec& h) { return {static_cast<double>(h.x2) / 2, static_cast<double>(h.y2) / 2}; }

struct AffineFn {
    double c = 0;
    Vec2 g;
    double operator()(Vec2 x) const { return c + dot(g, x); }
};

// Points a + t d with t ∈ [0, tmax]; tmax = ∞ for rays.
struct Wall {
    Vec2 a, d;
    double tmax = std::numeric_limits<double>::infinity();
};

inline double distance(const Wall& w, Vec2 x)
{
    double t = dot(x - w.a, w.d) / dot(w.d, w.d);
    t = std::clamp(t, 0.0, w.tmax);
    return norm(x - (w.a + t * w.d));
}

struct PiecewiseLinearFn {
    std::vector<Wall> walls;
    std::function<AffineFn(Vec2)> piece;

    double operator()(Vec2 x) const { return piece(x)(x); }
    double distance_to_walls(Vec2 x) const
    {
        double d = std::numeric_limits<double>::infinity();
        for (const auto& w : walls) d = std::min(d, distance(w, x));
        return d;
    }
    std::size_t walls_within(Vec2 x, double r) const
    {
        std::size_t n = 0;
        for (const auto& w : walls)
            if (distance(w, x) < r) ++n;
        return n;
    }
};

inline PiecewiseLinearFn affine_function(double c, Vec2 g)
{
    return {{}, [c, g](Vec2) { return AffineFn{c, g}; }};
}

// φ on P extended by φ∘(nearest point of P): constant on corner sectors, constant along normals on edge strips.
inline PiecewiseLinearFn extend_support_function(const SubdividedPolytope& s, const std::vector<Integer>& values)
{
    require_valid(s);
    if (values.size() != s.points.size()) throw InputError("support function has the wrong number of values");
    struct Tri {
        Vec2 p0, e1, e2;
        double det;
        AffineFn f;
    };
    std::vector<Tri> tris;
    for (const auto& t : s.triangles) {
        AffinePart a = affine_part(s.points, values, t);
        Vec2 p0 = to_vec2(s.points[t[0]]);
        Vec2 e1 = to_vec2(s.points[t[1]]) - p0, e2 = to_vec2(s.points[t[2]]) - p0;
        tris.push_back({p0, e1, e2, cross(e1, e2), {static_cast<double>(a.c), to_vec2(a.m)}});
    }
    struct Side {
        Vec2 a, b;
        double fa, fb;
    };
    std::vector<Side> sides;  // boundary subdivision edges
    PiecewiseLinearFn f;
    auto hull = boundary_polygon(s);
    std::vector<Vec2> normals(hull.size());
    for (std::size_t i = 0; i < hull.size(); ++i) {
        Vec2 d = to_vec2(hull[(i + 1) % hull.size()] - hull[i]);
        normals[i] = (1.0 / norm(d)) * Vec2{d.y, -d.x};
    }
    for (const auto& e : edges(s)) {
        Vec2 a = to_vec2(s.points[e.a]), b = to_vec2(s.points[e.b]);
        f.walls.push_back({a, b - a, 1.0});
        if (e.is_boundary)
            sides.push_back({a, b, static_cast<double>(values[e.a]), static_cast<double>(values[e.b])});
    }
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        for (std::size_t h = 0; h < hull.size(); ++h)
            if (orient(hull[h], hull[(h + 1) % hull.size()], s.points[i]) == 0)
                f.walls.push_back({to_vec2(s.points[i]), normals[h]});
    }
    f.piece = [tris, sides](Vec2 x) {
        const Tri* best = nullptr;
        double best_min = -std::numeric_limits<double>::infinity();
        for (const auto& t : tris) {
            Vec2 q = x - t.p0;
            double l1 = cross(q, t.e2) / t.det, l2 = cross(t.e1, q) / t.det;
            double m = std::min({l1, l2, 1 - l1 - l2});
            if (m > best_min) {
                best_min = m;
                best = &t;
            }
        }
        if (best && best_min >= -1e-12) return best->f;
        const Side* near = nullptr;
        double nd = std::numeric_limits<double>::infinity(), ns = 0;
        for (const auto& sd : sides) {
            Vec2 d = sd.b - sd.a;
            double t = std::clamp(dot(x - sd.a, d) / dot(d, d), 0.0, 1.0);
            double dist = norm(x - (sd.a + t * d));
            if (dist < nd) {
                nd = dist;
                near = &sd;
                ns = t;
            }
        }
        Vec2 d = near->b - near->a;
        if (ns <= 0.0 || ns >= 1.0) {
            // corner of the strip: constant unless the neighbouring side continues the same line
            double v = ns <= 0.0 ? near->fa : near->fb;
            Vec2 p = ns <= 0.0 ? near->a : near->b;
            for (const auto& sd : sides) {
                if (&sd == near) continue;
                bool shares = norm(sd.a - p) < 1e-12 || norm(sd.b - p) < 1e-12;
                if (shares && std::abs(cross(sd.b - sd.a, d)) < 1e-12) {
                    Vec2 e = sd.b - sd.a;
                    Vec2 g = ((sd.fb - sd.fa) / dot(e, e)) * e;
                    AffineFn cand{sd.fa - dot(g, sd.a), g};
                    double t = dot(x - sd.a, e) / dot(e, e);
                    if (t >= 0.0 && t <= 1.0) return cand;
                }
            }
            return AffineFn{v, {0, 0}};
        }
        Vec2 g = ((near->fb - near->fa) / dot(d, d)) * d;
        return AffineFn{near->fa - dot(g, near->a), g};
    };
    return f;
}

// ϑ on N_ℝ: the linear part of the cone containing x.
inline PiecewiseLinearFn from_semi_integral(const SemiIntegralSupport& th)
{
    std::vector<Vec2> rays, parts;
    for (const auto& u : th.fan.rays) rays.push_back(to_vec2(u));
    for (const auto& t : th.thetas) parts.push_back(to_vec2(t));
    PiecewiseLinearFn f;
    for (const auto& u : rays) f.walls.push_back({{0, 0}, u});
    f.piece = [rays, parts](Vec2 x) {
        const std::size_t n = rays.size();
        for (std::size_t j = 0; j < n; ++j) {
            const Vec2& a = rays[(j + n - 1) % n];
            const Vec2& b = rays[j];
            if (cross(a, x) >= 0 && cross(x, b) >= 0) return AffineFn{0, parts[j]};
        }
        return AffineFn{0, parts[0]};
    };
    return f;
}

struct MollifierParams {
    double epsilon = 0.1;
    int quadrature_order = 24;  // Gauss–Legendre nodes per radial subinterval
};

struct QuadratureRule {
    std::vector<double> nodes, weights;  // on [0,1]
};

inline const QuadratureRule& gauss_legendre(int n)
{
    static std::mutex mu;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    QuadratureRule q;
    for (int i = 1; i <= n; ++i) {
        double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
        double dp = 0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1, p1 = 0;
            for (int k = 1; k <= n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1);
            double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        q.nodes.push_back((1 - z) / 2);
        q.weights.push_back(1.0 / ((1 - z * z) * dp * dp));
    }
    return cache.emplace(n, std::move(q)).first->second;
}

namespace detail {

// ∫ f(x + r e(φ)) dφ over the full circle, exact on each affine arc.
inline double circle_integral(const PiecewiseLinearFn& f, Vec2 x, double r)
{
    std::vector<double> ang;
    for (const auto& w : f.walls) {
        Vec2 q = w.a - x;
        double A = dot(w.d, w.d), B = 2 * dot(w.d, q), C = dot(q, q) - r * r;
        double disc = B * B - 4 * A * C;
        if (disc < 0) continue;
        double sq = std::sqrt(disc);
        for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
            if (t < 0 || t > w.tmax) continue;
            Vec2 p = q + t * w.d;
            ang.push_back(std::atan2(p.y, p.x));
        }
    }
    const double two_pi = 2 * std::numbers::pi;
    auto arc = [&](double a0, double a1) {
        double mid = 0.5 * (a0 + a1);
        AffineFn g = f.piece(x + r * Vec2{std::cos(mid), std::sin(mid)});
        return (g.c + dot(g.g, x)) * (a1 - a0) +
               r * (g.g.x * (std::sin(a1) - std::sin(a0)) - g.g.y * (std::cos(a1) - std::cos(a0)));
    };
    if (ang.empty()) return arc(0, two_pi);
    std::sort(ang.begin(), ang.end());
    double total = 0;
    for (std::size_t i = 0; i + 1 < ang.size(); ++i)
        if (ang[i + 1] > ang[i]) total += arc(ang[i], ang[i + 1]);
    total += arc(ang.back(), ang.front() + two_pi);
    return total;
}

}  // namespace detail

// (f ∗ μ_ε)(x) with μ_ε ∝ exp(1/(‖y‖² − ε²)) on the ε-disk.
inline double mollify_eval(const PiecewiseLinearFn& f, const MollifierParams& p, Vec2 x)
{
    const double eps = p.epsilon;
    if (!(eps > 0)) throw InputError("epsilon must be positive");
    if (p.quadrature_order < 2) throw InputError("quadrature order must be at least 2");
    std::vector<double> cuts{0.0, eps};
    for (const auto& w : f.walls) {
        for (double d : {distance(w, x), norm(x - w.a),
                         std::isfinite(w.tmax) ? norm(x - (w.a + w.tmax * w.d)) : eps})
            if (d > 0 && d < eps) cuts.push_back(d);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> merged;
    for (double c : cuts)
        if (merged.empty() || c - merged.back() > 1e-12 * eps) merged.push_back(c);
    if (merged.back() < eps) merged.push_back(eps);
    else merged.back() = eps;

    const auto& q = gauss_legendre(p.quadrature_order);
    const double inv_eps2 = 1 / (eps * eps);
    double num = 0, den = 0;
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        double ra = merged[k], rb = merged[k + 1], L = rb - ra;
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            // septic smoothstep flattens endpoint singularities of the angular integral
            double t = q.nodes[i], u = 1 - t;
            double s = t * t * t * t * (35 - 84 * t + 70 * t * t - 20 * t * t * t);
            double ds = 140 * t * t * t * u * u * u;
            double r = ra + L * s;
            double g = std::exp(1 / (r * r - eps * eps) + inv_eps2);
            double wr = q.weights[i] * L * ds * g * r;
            if (wr == 0) continue;
            num += wr * detail::circle_integral(f, x, r);
            den += wr * 2 * std::numbers::pi;
        }
    }
    return num / den;
}

struct Hessian2 {
    double xx = 0, xy = 0, yy = 0;

    std::array<double, 2> eigenvalues() const
    {
        double m = 0.5 * (xx + yy), d = std::hypot(0.5 * (xx - yy), xy);
        return {m - d, m + d};
    }
};

namespace detail {

inline Vec2 grad_at(const PiecewiseLinearFn& f, const MollifierParams& p, Vec2 x, double h)
{
    auto F = [&](Vec2 y) { return mollify_eval(f, p, y); };
    return {(F(x + Vec2{h, 0}) - F(x - Vec2{h, 0})) / (2 * h), (F(x + Vec2{0, h}) - F(x - Vec2{0, h})) / (2 * h)};
}

inline Hessian2 hessian_at(const PiecewiseLinearFn& f, const MollifierParams& p, Vec2 x, double h)
{
    auto F = [&](Vec2 y) { return mollify_eval(f, p, y); };
    double f0 = F(x);
    Hessian2 H;
    H.xx = (F(x + Vec2{h, 0}) - 2 * f0 + F(x - Vec2{h, 0})) / (h * h);
    H.yy = (F(x + Vec2{0, h}) - 2 * f0 + F(x - Vec2{0, h})) / (h * h);
    H.xy = (F(x + Vec2{h, h}) - F(x + Vec2{h, -h}) - F(x + Vec2{-h, h}) + F(x + Vec2{-h, -h})) / (4 * h * h);
    return H;
}

}  // namespace detail

inline Vec2 grad(const PiecewiseLinearFn& f, const MollifierParams& p, Vec2 x)
{
    double h = p.epsilon * 1e-3;
    Vec2 g1 = detail::grad_at(f, p, x, h), g2 = detail::grad_at(f, p, x, h / 2);
    if (norm(g1 - g2) > 1e-5 * std::max(1.0, norm(g1))) throw Error("quadrature order too low");
    return g1;
}

inline Hessian2 hessian(const PiecewiseLinearFn& f, const MollifierParams& p, Vec2 x)
{
    double h = p.epsilon * 1e-3;
    Hessian2 a = detail::hessian_at(f, p, x, h), b = detail::hessian_at(f, p, x, h / 2);
    double scale = std::max({1.0, std::abs(a.xx), std::abs(a.xy), std::abs(a.yy)});
    double diff = std::max({std::abs(a.xx - b.xx), std::abs(a.xy - b.xy), std::abs(a.yy - b.yy)});
    if (diff > 1e-5 * scale) throw Error("quadrature order too low");
    return a;
}

inline double inradius(Vec2 a, Vec2 b, Vec2 c)
{
    double area = std::abs(cross(b - a, c - a)) / 2;
    double s = (norm(b - a) + norm(c - b) + norm(a - c)) / 2;
    return area / s;
}

// Half the smallest triangle inradius: edge midpoints then lie in U_e and incenters outside V_ε.
inline double auto_epsilon(const SubdividedPolytope& s)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : s.triangles)
        best = std::min(best, inradius(to_vec2(s.points[t[0]]), to_vec2(s.points[t[1]]), to_vec2(s.points[t[2]])));
    return best / 2;
}

// Deterministic low-discrepancy points in [0,1)².
inline Vec2 halton(std::uint64_t i)
{
    auto radical = [](std::uint64_t n, std::uint64_t base) {
        double f = 1, r = 0;
        while (n > 0) {
            f /= static_cast<double>(base);
            r += f * static_cast<double>(n % base);
            n /= base;
        }
        return r;
    };
    return {radical(i, 2), radical(i, 3)};
}

namespace detail {

inline double distance_to_segment(Vec2 p, Vec2 a, Vec2 b)
{
    Vec2 d = b - a;
    double dd = dot(d, d);
    double t = dd > 0 ? std::clamp(dot(p - a, d) / dd, 0.0, 1.0) : 0.0;
    return norm(p - (a + t * d));
}

// Signed excess outside a convex polygon (≤ 0 inside).
inline double hull_excess(Vec2 p, const std::vector<Vec2>& poly, int orientation)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Vec2 a = poly[i], b = poly[(i + 1) % poly.size()];
        Vec2 d = b - a;
        double len = norm(d);
        if (len == 0) continue;
        worst = std::max(worst, -orientation * cross(d, p - a) / len);
    }
    return worst;
}

}  // namespace detail

struct SmoothingCheck {
    std::string name;
    std::size_t points = 0;
    double max_error = 0;
    double tolerance = 0;
    bool ok() const { return points > 0 && max_error <= tolerance; }
};

struct SmoothingReport {
    double epsilon = 0;
    std::vector<SmoothingCheck> checks;
    bool ok() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const SmoothingCheck& c) { return c.ok(); });
    }
};

// Affine reproduction, agreement outside V_ε and tangential constancy on U_e for a support function on P.
inline SmoothingReport check_support_smoothing(const SubdividedPolytope& s, const std::vector<Integer>& values,
                                               MollifierParams p, std::size_t samples, std::uint64_t seed)
{
    SmoothingReport rep;
    if (!(p.epsilon > 0)) p.epsilon = auto_epsilon(s);
    rep.epsilon = p.epsilon;
    PiecewiseLinearFn phi = extend_support_function(s, values);

    auto hull = boundary_polygon(s);
    double xl = 1e300, xh = -1e300, yl = 1e300, yh = -1e300;
    for (const auto& v : hull) {
        Vec2 q = to_vec2(v);
        xl = std::min(xl, q.x); xh = std::max(xh, q.x);
        yl = std::min(yl, q.y); yh = std::max(yh, q.y);
    }
    xl -= 1; yl -= 1; xh += 1; yh += 1;
    std::vector<Vec2> hull_pts;
    for (const auto& v : hull) hull_pts.push_back(to_vec2(v));
    auto sample = [&](std::uint64_t i) {
        Vec2 h = halton(seed * 7919 + i + 1);
        return Vec2{xl + (xh - xl) * h.x, yl + (yh - yl) * h.y};
    };

    SmoothingCheck affine{"affine_reproduction", 0, 0, 1e-8};
    std::vector<Integer> lin;
    for (const auto& v : s.points) lin.push_back(3 * v.x - 2 * v.y + 5);
    PiecewiseLinearFn lin_f = extend_support_function(s, lin);
    PiecewiseLinearFn lin_plain = affine_function(5, {3, -2});
    SmoothingCheck outside{"outside_epsilon_agreement", 0, 0, 1e-8};
    for (std::uint64_t i = 0; i < samples; ++i) {
        Vec2 x = sample(i);
        double want = lin_plain(x);
        affine.max_error = std::max(affine.max_error, std::abs(mollify_eval(lin_plain, p, x) - want));
        // the extension past ∂P is not affine, so only balls inside P count
        if (detail::hull_excess(x, hull_pts, 1) <= -p.epsilon)
            affine.max_error = std::max(affine.max_error, std::abs(mollify_eval(lin_f, p, x) - want));
        ++affine.points;
        if (phi.distance_to_walls(x) > p.epsilon) {
            outside.max_error = std::max(outside.max_error, std::abs(mollify_eval(phi, p, x) - phi(x)));
            ++outside.points;
        }
    }
    rep.checks.push_back(affine);
    rep.checks.push_back(outside);

    SmoothingCheck bend{"tangential_derivative_on_U_e", 0, 0, 1e-6};
    for (const auto& e : edges(s)) {
        if (e.is_boundary) continue;
        Vec2 a = to_vec2(s.points[e.a]), b = to_vec2(s.points[e.b]);
        AffinePart plus = affine_part(s.points, values, s.triangles[e.plus_triangle]);
        Vec2 t = to_vec2(e.n_check);
        double want = static_cast<double>(dot(plus.m, e.n_check));
        for (double frac : {0.45, 0.5, 0.55}) {
            Vec2 x = a + frac * (b - a);
            // U_e: the ε-ball meets no wall other than ě
            bool in_ue = true;
            for (const auto& w : phi.walls) {
                bool same = norm(w.a - a) < 1e-12 && norm(w.a + w.tmax * w.d - b) < 1e-12;
                if (!same && distance(w, x) < p.epsilon) in_ue = false;
            }
            if (!in_ue) continue;
            Vec2 g = grad(phi, p, x);
            bend.max_error = std::max(bend.max_error, std::abs(dot(g, t) - want));
            ++bend.points;
        }
    }
    rep.checks.push_back(bend);
    return rep;
}

struct HessianReport {
    double epsilon = 0;
    Convexity convexity = Convexity::neither;
    std::size_t interior_samples = 0;   // in C ∖ Ū_C
    std::size_t skeleton_samples = 0;   // in U_C
    std::size_t definite = 0;
    double min_abs_eigenvalue = std::numeric_limits<double>::infinity();
    double max_gamma_distance = 0;      // U_C samples
    double max_hull_excess = 0;         // all samples
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};


// Samples near the origin: Hessian definiteness where the ε-ball meets two independent rays,
// gradient on γ where it meets at most one, gradient inside conv(γ) everywhere.
inline HessianReport check_hessian_definiteness(const SemiIntegralSupport& th, MollifierParams p, std::size_t samples,
                                                std::uint64_t seed = 0)
{
    HessianReport rep;
    rep.convexity = is_strictly_convex(th);
    if (rep.convexity == Convexity::neither) throw InputError("convexity required");
    if (!(p.epsilon > 0)) p.epsilon = 1.0;
    rep.epsilon = p.epsilon;
    const double eps = p.epsilon;
    PiecewiseLinearFn f = from_semi_integral(th);
    std::vector<Vec2> poly;
    for (const auto& t : th.thetas) poly.push_back(to_vec2(t));
    const int orientation = rep.convexity == Convexity::convex ? 1 : -1;
    const int winding_sign = gamma_orientation(gamma_curve(th));
    std::vector<Vec2> rays;
    for (const auto& u : th.fan.rays) rays.push_back(to_vec2(u));

    std::size_t skeleton_target = std::max<std::size_t>(samples / 4, 1);
    for (std::uint64_t i = 0; rep.interior_samples < samples || rep.skeleton_samples < skeleton_target; ++i) {
        if (i > 200 * (samples + skeleton_target) + 1000) {
            rep.failures.push_back("could not place enough samples");
            break;
        }
        Vec2 h = halton(seed * 7919 + i + 1);
        double rad = 1.5 * eps * std::sqrt(h.x), ang = 2 * std::numbers::pi * h.y;
        Vec2 x{rad * std::cos(ang), rad * std::sin(ang)};
        std::vector<std::size_t> near_strong;
        std::size_t touching = 0;
        for (std::size_t j = 0; j < f.walls.size(); ++j) {
            double d = distance(f.walls[j], x);
            if (d < eps) ++touching;
            if (d < 0.8 * eps) near_strong.push_back(j);
        }
        bool independent = false;
        for (std::size_t a = 0; a < near_strong.size(); ++a)
            for (std::size_t b = a + 1; b < near_strong.size(); ++b)
                if (std::abs(cross(rays[near_strong[a]], rays[near_strong[b]])) > 0.5) independent = true;

        bool take_interior = independent && rep.interior_samples < samples;
        bool take_skeleton = touching <= 1 && rep.skeleton_samples < skeleton_target;
        if (!take_interior && !take_skeleton) continue;

        Vec2 g = grad(f, p, x);
        rep.max_hull_excess = std::max(rep.max_hull_excess, detail::hull_excess(g, poly, winding_sign));
        if (take_interior) {
            ++rep.interior_samples;
            auto ev = hessian(f, p, x).eigenvalues();
            bool good = orientation > 0 ? ev[0] > 0 : ev[1] < 0;
            if (good) ++rep.definite;
            rep.min_abs_eigenvalue = std::min(rep.min_abs_eigenvalue, orientation > 0 ? ev[0] : -ev[1]);
        } else {
            ++rep.skeleton_samples;
            double dg = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < poly.size(); ++j)
                dg = std::min(dg, detail::distance_to_segment(g, poly[j], poly[(j + 1) % poly.size()]));
            rep.max_gamma_distance = std::max(rep.max_gamma_distance, dg);
        }
    }
    if (rep.definite != rep.interior_samples)
        rep.failures.push_back(std::to_string(rep.interior_samples - rep.definite) + " Hessians have the wrong signature");
    if (rep.max_gamma_distance > 1e-5) rep.failures.push_back("gradient leaves gamma on U_C");
    if (rep.max_hull_excess > 1e-5) rep.failures.push_back("gradient leaves conv(gamma)");
    return rep;
}

}  // namespace toricmirror

#endif
