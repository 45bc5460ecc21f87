#ifndef TORICMIRROR_WINDING_HPP
#define TORICMIRROR_WINDING_HPP

#include "spheres.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <thread>
#include <utility>
#include <vector>

namespace toricmirror {

struct WindingTable {
    long long x0 = 0, y0 = 0;              // lower-left corner of the box
    std::size_t width = 0, height = 0;
    std::vector<int> w;                    // row-major, y outer

    int at(long long x, long long y) const
    {
        if (x < x0 || y < y0 || x >= x0 + static_cast<long long>(width) || y >= y0 + static_cast<long long>(height))
            return 0;
        return w[static_cast<std::size_t>(y - y0) * width + static_cast<std::size_t>(x - x0)];
    }

    struct Entry {
        LatticeVec m;
        int w;
    };
    std::vector<Entry> nonzero() const
    {
        std::vector<Entry> out;
        for (std::size_t r = 0; r < height; ++r)
            for (std::size_t c = 0; c < width; ++c)
                if (int v = w[r * width + c]) out.push_back({{x0 + static_cast<long long>(c), y0 + static_cast<long long>(r)}, v});
        return out;
    }
    std::size_t count(int value) const { return static_cast<std::size_t>(std::count(w.begin(), w.end(), value)); }
};

namespace detail {

inline long long to_ll(const Integer& v)
{
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw Error("coordinate too large for a winding table");
    return static_cast<long long>(v);
}

template <class T>
struct Pt {
    T x, y;
};

template <class T>
T floor_div_t(const T& a, const T& b)
{
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Adds the crossings of γ with the line y = Y (doubled) into diff over lattice x in [x0, x0+width).
template <class T>
void row_crossings(const std::vector<Pt<T>>& v, const T& Y, long long x0, std::size_t width, std::vector<int>& diff)
{
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& A = v[i];
        const auto& B = v[(i + 1) % n];
        int dir;
        if (A.y <= Y && Y < B.y) dir = 1;
        else if (B.y <= Y && Y < A.y) dir = -1;
        else continue;
        T den = B.y - A.y;
        T num = A.x * den + (Y - A.y) * (B.x - A.x);
        if (den < 0) { den = -den; num = -num; }
        T den2 = 2 * den;
        if (num % den2 == 0) throw Error("lattice point lies on gamma");
        // lattice x with 2x < num/den
        T xmax = floor_div_t(num, den2);
        long long hi;
        if (xmax < T(x0)) continue;
        if (xmax >= T(x0 + static_cast<long long>(width) - 1)) hi = static_cast<long long>(width);
        else hi = static_cast<long long>(xmax) - x0 + 1;
        diff[0] += dir;
        diff[static_cast<std::size_t>(hi)] -= dir;
    }
}

template <class T>
std::vector<Pt<T>> convert(const GammaCurve& g)
{
    std::vector<Pt<T>> out;
    for (const auto& h : g.vertices) {
        if constexpr (std::is_same_v<T, long long>) out.push_back({to_ll(h.x2), to_ll(h.y2)});
        else out.push_back({h.x2, h.y2});
    }
    return out;
}

inline bool fits_fast(const GammaCurve& g)
{
    const Integer lim = Integer(1) << 24;
    for (const auto& h : g.vertices)
        if (abs(h.x2) > lim || abs(h.y2) > lim) return false;
    return true;
}

}  // namespace detail

inline int winding(const GammaCurve& g, const LatticeVec& m)
{
    Integer X = 2 * m.x, Y = 2 * m.y;
    int w = 0;
    const std::size_t n = g.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& A = g.vertices[i];
        const auto& B = g.vertices[(i + 1) % n];
        if (A == B) continue;
        Integer cross = (B.x2 - A.x2) * (Y - A.y2) - (B.y2 - A.y2) * (X - A.x2);
        bool in_box = std::min(A.x2, B.x2) <= X && X <= std::max(A.x2, B.x2) && std::min(A.y2, B.y2) <= Y &&
                      Y <= std::max(A.y2, B.y2);
        if (cross == 0 && in_box) throw Error("lattice point " + to_string(m) + " lies on gamma");
        if (A.y2 <= Y && Y < B.y2 && cross > 0) ++w;
        else if (B.y2 <= Y && Y < A.y2 && cross < 0) --w;
    }
    return w;
}

struct Box {
    long long x0, y0, x1, y1;  // inclusive
};

inline Box gamma_box(const GammaCurve& g, long long margin = 1)
{
    Integer xl = g.vertices[0].x2, xh = xl, yl = g.vertices[0].y2, yh = yl;
    for (const auto& h : g.vertices) {
        xl = std::min(xl, h.x2); xh = std::max(xh, h.x2);
        yl = std::min(yl, h.y2); yh = std::max(yh, h.y2);
    }
    return {detail::to_ll(floor_div(xl, 2)) - margin, detail::to_ll(floor_div(yl, 2)) - margin,
            detail::to_ll(-floor_div(-xh, 2)) + margin, detail::to_ll(-floor_div(-yh, 2)) + margin};
}

inline WindingTable winding_table(const GammaCurve& g, unsigned threads = 1, long long margin = 1)
{
    if (margin < 1) throw InputError("search margin must be at least 1");
    Box b = gamma_box(g, margin);
    WindingTable t;
    t.x0 = b.x0;
    t.y0 = b.y0;
    t.width = static_cast<std::size_t>(b.x1 - b.x0 + 1);
    t.height = static_cast<std::size_t>(b.y1 - b.y0 + 1);
    t.w.assign(t.width * t.height, 0);
    const bool fast = detail::fits_fast(g);
    auto fast_pts = fast ? detail::convert<long long>(g) : std::vector<detail::Pt<long long>>{};
    auto slow_pts = fast ? std::vector<detail::Pt<Integer>>{} : detail::convert<Integer>(g);
    auto work = [&](std::size_t r0, std::size_t r1) {
        std::vector<int> diff(t.width + 1);
        for (std::size_t r = r0; r < r1; ++r) {
            std::fill(diff.begin(), diff.end(), 0);
            long long Y = 2 * (t.y0 + static_cast<long long>(r));
            if (fast) detail::row_crossings<long long>(fast_pts, Y, t.x0, t.width, diff);
            else detail::row_crossings<Integer>(slow_pts, Integer(Y), t.x0, t.width, diff);
            int acc = 0;
            for (std::size_t c = 0; c < t.width; ++c) {
                acc += diff[c];
                t.w[r * t.width + c] = acc;
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(t.height)));
    if (threads == 1) {
        work(0, t.height);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (t.height + threads - 1) / threads;
        for (unsigned i = 0; i < threads; ++i) {
            std::size_t r0 = i * chunk, r1 = std::min(t.height, r0 + chunk);
            if (r0 < r1) pool.emplace_back(work, r0, r1);
        }
        for (auto& th : pool) th.join();
    }
    for (std::size_t r = 0; r < t.height; ++r)
        for (std::size_t c = 0; c < t.width; ++c)
            if ((r == 0 || c == 0 || r + 1 == t.height || c + 1 == t.width) && t.w[r * t.width + c] != 0)
                throw Error("winding table boundary ring is nonzero");
    return t;
}

inline WindingTable winding_table(const SemiIntegralSupport& th, unsigned threads = 1, long long margin = 1)
{
    return winding_table(gamma_curve(th), threads, margin);
}

struct EvenOdd {
    long long h_even = 0, h_odd = 0;
};

inline EvenOdd h_even_odd(const WindingTable& t)
{
    EvenOdd r;
    for (int v : t.w) {
        if (v > 0) r.h_even += v;
        if (v < 0) r.h_odd -= v;
    }
    return r;
}

inline EvenOdd h_even_odd(const SemiIntegralSupport& th, unsigned threads = 1)
{
    return h_even_odd(winding_table(th, threads));
}

enum class Convexity { convex, concave, neither };

inline const char* to_string(Convexity c)
{
    switch (c) {
    case Convexity::convex: return "convex";
    case Convexity::concave: return "concave";
    default: return "neither";
    }
}

// ϑ is the maximum of its linear parts exactly when every kink ℓ_j is positive.
inline Convexity is_strictly_convex(const SemiIntegralSupport& th)
{
    auto ell = kinks_of_theta(th);
    bool pos = std::all_of(ell.begin(), ell.end(), [](const Integer& l) { return l > 0; });
    bool neg = std::all_of(ell.begin(), ell.end(), [](const Integer& l) { return l < 0; });
    return pos ? Convexity::convex : neg ? Convexity::concave : Convexity::neither;
}

// Lattice points of the convex polygon bounded by γ, by half-plane tests.
inline long long convex_intersection_count(const SemiIntegralSupport& th)
{
    Convexity cv = is_strictly_convex(th);
    if (cv == Convexity::neither) throw InputError("convexity required");
    GammaCurve g = gamma_curve(th);
    std::vector<std::pair<LatticeVec, LatticeVec>> sides;
    const std::size_t n = g.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& A = g.vertices[i];
        const auto& B = g.vertices[(i + 1) % n];
        if (A != B) sides.push_back({A.doubled(), B.doubled()});
    }
    // ℓ ↦ −ℓ reflects γ through a point, so the orientation is not the convexity sign
    const int want = gamma_orientation(g);
    Box b = gamma_box(g, 0);
    long long count = 0;
    for (long long y = b.y0; y <= b.y1; ++y)
        for (long long x = b.x0; x <= b.x1; ++x) {
            LatticeVec P{2 * x, 2 * y};
            bool inside = true;
            for (const auto& [A, B] : sides)
                if (sign(det2(B - A, P - A)) != want) {
                    inside = false;
                    break;
                }
            if (inside) ++count;
        }
    return count;
}

class GenericityError : public Error {
public:
    GenericityError() : Error("perturb direction") {}
};

// #Min − #Max of T(q) = (ϑ(q) − ⟨m,q⟩)/⟨m̄,q⟩ over extrema with T > 0; extrema sit on rays.
inline int winding_via_T(const SemiIntegralSupport& th, const LatticeVec& m, const LatticeVec& mbar)
{
    const long n = static_cast<long>(th.fan.size());
    int w = 0;
    for (long j = 0; j < n; ++j) {
        const LatticeVec& u = th.fan.ray(j);
        Integer c = dot(mbar, u);
        if (c == 0) throw GenericityError();
        Integer a2 = th.value2_on_ray(j) - 2 * dot(m, u);  // 2a, odd
        // one-sided derivative signs: sign(bc − ad) into cone j+1 and into cone j
        const LatticeVec& un = th.fan.ray(j + 1);
        const LatticeVec& up = th.fan.ray(j - 1);
        Integer bn2 = dot2(th.theta(j + 1), un) - 2 * dot(m, un);
        Integer bp2 = dot2(th.theta(j), up) - 2 * dot(m, up);
        int sn = sign(bn2 * c - a2 * dot(mbar, un));
        int sp = sign(bp2 * c - a2 * dot(mbar, up));
        if (sn == 0 || sp == 0) throw GenericityError();
        bool extremum = sn == sp;

        // Extremum iff m + T m̄ lies on [θ_j, θ_{j+1}]; here c·2p = 2c m + 2a m̄.
        LatticeVec cp{2 * c * m.x + a2 * mbar.x, 2 * c * m.y + a2 * mbar.y};
        LatticeVec A = th.theta(j).doubled(), B = th.theta(j + 1).doubled();
        LatticeVec D = B - A;
        bool on_segment;
        if (D.is_zero()) {
            if (cp == c * A) throw GenericityError();
            on_segment = false;
        } else {
            Integer num = dot(cp - c * A, D);
            Integer den = c * dot(D, D);
            if (num == 0 || num == den) throw GenericityError();
            on_segment = sign(num) == sign(den) && sign(den - num) == sign(den);
        }
        if (on_segment != extremum) throw Error("extremum criterion disagrees with segment test on ray " + std::to_string(j));
        if (!extremum) continue;
        if (sign(a2) * sign(c) <= 0) continue;  // T ≤ 0
        w += sn > 0 ? 1 : -1;
    }
    return w;
}

inline LatticeVec generic_direction(std::size_t k)
{
    long long p = static_cast<long long>(3 * k + 1) * ((k % 2) ? -1 : 1);
    long long q = static_cast<long long>(5 * k + 2) * (((k / 2) % 2) ? -1 : 1);
    return {2 * p + 1, 2 * q + (k % 3 == 0 ? 2 : 0)};
}

inline int winding_via_T(const SemiIntegralSupport& th, const LatticeVec& m)
{
    for (std::size_t k = 0; k < 64; ++k) {
        try {
            return winding_via_T(th, m, generic_direction(k));
        } catch (const GenericityError&) {
        }
    }
    throw Error("no generic direction found");
}

}  // namespace toricmirror

#endif
