#ifndef TORICMIRROR_CATALOG_HPP
#define TORICMIRROR_CATALOG_HPP

#include "subdivision.hpp"

namespace toricmirror {

// P = conv{(−1,−1),(1,0),(0,1)} coned from the origin, ν = 1 on corners, 0 at the center.
inline SubdividedPolytope local_p2()
{
    SubdividedPolytope s;
    s.points = {{0, 0}, {-1, -1}, {1, 0}, {0, 1}};
    s.triangles = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}};
    s.nu = {0, 1, 1, 1};
    return s;
}

// Quadrilateral whose central fan is ℙ² blown up at a point.
inline SubdividedPolytope blowup_p2_polytope()
{
    SubdividedPolytope s;
    s.points = {{0, 0}, {0, 1}, {-1, 1}, {-1, 0}, {1, -1}};
    s.triangles = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}};
    s.nu = {0, 1, 1, 1, 1};
    return s;
}

inline SubdividedPolytope unit_triangle()
{
    SubdividedPolytope s;
    s.points = {{0, 0}, {1, 0}, {0, 1}};
    s.triangles = {{0, 1, 2}};
    s.nu = {0, 0, 0};
    return s;
}

// conv{(0,0),(0,2),(2d,0)}; c_j = (j,1) joined to (j,0), (j+1,0), c_{j±1} and (0,2).
// ν(x,y) = x² + xy + y² − y.
inline SubdividedPolytope a2d_polytope(long long d)
{
    if (d < 1) throw InputError("d must be positive");
    SubdividedPolytope s;
    auto low = [](long long i) { return static_cast<std::size_t>(i); };
    auto mid = [&](long long j) { return static_cast<std::size_t>(2 * d + 1 + j); };
    const std::size_t top = static_cast<std::size_t>(3 * d + 2);
    for (long long i = 0; i <= 2 * d; ++i) s.points.push_back({i, 0});
    for (long long j = 0; j <= d; ++j) s.points.push_back({j, 1});
    s.points.push_back({0, 2});
    for (long long j = 0; j < d; ++j) s.triangles.push_back({mid(j), low(j), low(j + 1)});
    for (long long i = d; i < 2 * d; ++i) s.triangles.push_back({mid(d), low(i), low(i + 1)});
    for (long long j = 0; j < d; ++j) s.triangles.push_back({mid(j), mid(j + 1), low(j + 1)});
    for (long long j = 0; j < d; ++j) s.triangles.push_back({top, mid(j), mid(j + 1)});
    for (const auto& p : s.points) s.nu.push_back(p.x * p.x + p.x * p.y + p.y * p.y - p.y);
    return s;
}

}  // namespace toricmirror

#endif
