#ifndef TORICMIRROR_LATTICE_HPP
#define TORICMIRROR_LATTICE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toricmirror {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised for malformed or invalid user data (bad polytope, bad twisting numbers).
class InputError : public Error {
public:
    using Error::Error;
};

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

// cpp_rational rejects negative denominators
inline Rational ratio(Integer n, Integer d)
{
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw InputError("zero denominator in rational '" + s + "'");
        return ratio(Integer(s.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
        throw InputError("malformed rational '" + s + "'");
    }
}

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline Integer floor(const Rational& q)
{
    return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline Integer ceil(const Rational& q) { return -floor(-q); }

inline int sign(const Integer& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

struct LatticeVec {
    Integer x, y;

    LatticeVec() = default;
    LatticeVec(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}
    LatticeVec(long long x_, long long y_) : x(x_), y(y_) {}

    bool is_zero() const { return x == 0 && y == 0; }

    LatticeVec& operator+=(const LatticeVec& o) { x += o.x; y += o.y; return *this; }
    LatticeVec& operator-=(const LatticeVec& o) { x -= o.x; y -= o.y; return *this; }
};

inline LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
inline LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
inline LatticeVec operator-(const LatticeVec& a) { return {-a.x, -a.y}; }
inline LatticeVec operator*(const Integer& k, const LatticeVec& v) { return {k * v.x, k * v.y}; }
inline bool operator==(const LatticeVec& a, const LatticeVec& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const LatticeVec& a, const LatticeVec& b) { return !(a == b); }
inline bool operator<(const LatticeVec& a, const LatticeVec& b)
{
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline std::ostream& operator<<(std::ostream& os, const LatticeVec& v)
{
    return os << "(" << v.x << "," << v.y << ")";
}

inline std::string to_string(const LatticeVec& v)
{
    return "(" + v.x.str() + "," + v.y.str() + ")";
}

struct RationalPoint {
    Rational x, y;

    RationalPoint() = default;
    RationalPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
    explicit RationalPoint(const LatticeVec& v) : x(v.x), y(v.y) {}

    bool is_integral() const
    {
        return boost::multiprecision::denominator(x) == 1 && boost::multiprecision::denominator(y) == 1;
    }
    LatticeVec to_lattice() const
    {
        if (!is_integral())
            throw Error("point " + to_string(x) + "," + to_string(y) + " is not integral");
        return {boost::multiprecision::numerator(x), boost::multiprecision::numerator(y)};
    }
};

inline RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) { return {a.x + b.x, a.y + b.y}; }
inline RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) { return {a.x - b.x, a.y - b.y}; }
inline RationalPoint operator*(const Rational& k, const RationalPoint& p) { return {k * p.x, k * p.y}; }
inline bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const RationalPoint& a, const RationalPoint& b) { return !(a == b); }
inline bool operator<(const RationalPoint& a, const RationalPoint& b)
{
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline std::string to_string(const RationalPoint& p)
{
    return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RationalPoint& p) { return os << to_string(p); }

// A point of ½M, stored by its doubled integer coordinates.
struct HalfLatticeVec {
    Integer x2, y2;

    HalfLatticeVec() = default;
    static HalfLatticeVec from_doubled(Integer x2, Integer y2)
    {
        HalfLatticeVec h;
        h.x2 = std::move(x2);
        h.y2 = std::move(y2);
        return h;
    }
    static HalfLatticeVec from_lattice(const LatticeVec& v) { return from_doubled(2 * v.x, 2 * v.y); }

    LatticeVec doubled() const { return {x2, y2}; }
    Rational x() const { return Rational(x2, 2); }
    Rational y() const { return Rational(y2, 2); }
    RationalPoint point() const { return {x(), y()}; }
    bool is_integral() const { return x2 % 2 == 0 && y2 % 2 == 0; }
};

inline HalfLatticeVec operator+(const HalfLatticeVec& a, const HalfLatticeVec& b)
{
    return HalfLatticeVec::from_doubled(a.x2 + b.x2, a.y2 + b.y2);
}
inline HalfLatticeVec operator-(const HalfLatticeVec& a, const HalfLatticeVec& b)
{
    return HalfLatticeVec::from_doubled(a.x2 - b.x2, a.y2 - b.y2);
}
inline bool operator==(const HalfLatticeVec& a, const HalfLatticeVec& b) { return a.x2 == b.x2 && a.y2 == b.y2; }
inline bool operator!=(const HalfLatticeVec& a, const HalfLatticeVec& b) { return !(a == b); }

inline std::string to_string(const HalfLatticeVec& h) { return to_string(h.point()); }
inline std::ostream& operator<<(std::ostream& os, const HalfLatticeVec& h) { return os << to_string(h); }

inline Integer dot(const LatticeVec& a, const LatticeVec& b) { return a.x * b.x + a.y * b.y; }
inline Rational dot(const RationalPoint& a, const LatticeVec& b) { return a.x * b.x + a.y * b.y; }

// ⟨θ,u⟩ doubled: exact integer.
inline Integer dot2(const HalfLatticeVec& a, const LatticeVec& b) { return a.x2 * b.x + a.y2 * b.y; }

inline Integer det2(const LatticeVec& u, const LatticeVec& v) { return u.x * v.y - u.y * v.x; }
inline Rational det2(const RationalPoint& u, const RationalPoint& v) { return u.x * v.y - u.y * v.x; }

// Counterclockwise quarter turn.
inline LatticeVec rotate(const LatticeVec& v) { return {-v.y, v.x}; }

inline Integer gcd(Integer a, Integer b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

inline LatticeVec primitive(const LatticeVec& v)
{
    if (v.is_zero())
        throw Error("zero has no primitive direction");
    Integer g = gcd(v.x, v.y);
    return {v.x / g, v.y / g};
}

inline LatticeVec primitive(const RationalPoint& v)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Integer l = denominator(v.x) / gcd(denominator(v.x), denominator(v.y)) * denominator(v.y);
    return primitive(LatticeVec{numerator(v.x) * (l / denominator(v.x)), numerator(v.y) * (l / denominator(v.y))});
}

// (x>0) or (x=0 and y>0)
inline bool lex_positive(const LatticeVec& v) { return v.x > 0 || (v.x == 0 && v.y > 0); }

// If b is parallel to a (a ≠ 0), returns k with b = k a.
inline std::pair<bool, Integer> parallel_multiple(const LatticeVec& b, const LatticeVec& a)
{
    if (det2(a, b) != 0)
        return {false, Integer(0)};
    const Integer& num = a.x != 0 ? b.x : b.y;
    const Integer& den = a.x != 0 ? a.x : a.y;
    if (num % den != 0)
        return {false, Integer(0)};
    return {true, num / den};
}

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

inline IntVector mat_vec(const IntMatrix& A, const IntVector& x)
{
    IntVector out(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != x.size())
            throw Error("matrix/vector size mismatch");
        for (std::size_t j = 0; j < x.size(); ++j)
            out[i] += A[i][j] * x[j];
    }
    return out;
}

inline bool is_zero(const IntVector& v)
{
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

struct ExtendedGcd {
    Integer g, s, t;  // g = s a + t b, g ≥ 0
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b)
{
    Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1; r0 = std::move(r1); r1 = std::move(r2);
        Integer s2 = s0 - q * s1; s0 = std::move(s1); s1 = std::move(s2);
        Integer t2 = t0 - q * t1; t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return {r0, s0, t0};
}

namespace detail {

// Row Hermite normal form in place; returns number of nonzero rows.
inline std::size_t hermite_rows(IntMatrix& M, std::size_t cols)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
        for (std::size_t i = r + 1; i < M.size(); ++i) {
            if (M[i][c] == 0) continue;
            auto [g, s, t] = extended_gcd(M[r][c], M[i][c]);
            Integer a = M[r][c] / g, b = M[i][c] / g;
            for (std::size_t k = 0; k < cols; ++k) {
                Integer top = s * M[r][k] + t * M[i][k];
                Integer bot = -b * M[r][k] + a * M[i][k];
                M[r][k] = std::move(top);
                M[i][k] = std::move(bot);
            }
        }
        if (M[r][c] == 0) continue;
        if (M[r][c] < 0)
            for (auto& e : M[r]) e = -e;
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(M[i][c], M[r][c]);
            if (q == 0) continue;
            for (std::size_t k = 0; k < cols; ++k) M[i][k] -= q * M[r][k];
        }
        ++r;
    }
    M.resize(r);
    return r;
}

}  // namespace detail

// ℤ-basis of {x : A x = 0}, in row Hermite normal form. cols is needed when A has no rows.
inline std::vector<IntVector> integer_kernel(const IntMatrix& A, std::size_t cols)
{
    for (const auto& row : A)
        if (row.size() != cols) throw Error("ragged matrix");
    // Column operations on [A; I]: the identity block records a unimodular U with A U in column echelon form.
    IntMatrix AU = A;
    IntMatrix U(cols, IntVector(cols));
    for (std::size_t i = 0; i < cols; ++i) U[i][i] = 1;

    auto colop = [&](std::size_t p, std::size_t q, const Integer& s, const Integer& t, const Integer& a,
                     const Integer& b) {
        auto apply = [&](IntMatrix& M) {
            for (auto& row : M) {
                Integer cp = s * row[p] + t * row[q];
                Integer cq = -b * row[p] + a * row[q];
                row[p] = std::move(cp);
                row[q] = std::move(cq);
            }
        };
        apply(AU);
        apply(U);
    };

    std::size_t pivot = 0;
    for (std::size_t r = 0; r < AU.size() && pivot < cols; ++r) {
        for (std::size_t q = pivot + 1; q < cols; ++q) {
            if (AU[r][q] == 0) continue;
            auto [g, s, t] = extended_gcd(AU[r][pivot], AU[r][q]);
            colop(pivot, q, s, t, AU[r][pivot] / g, AU[r][q] / g);
        }
        if (AU[r][pivot] != 0) ++pivot;
    }

    IntMatrix basis;
    for (std::size_t q = pivot; q < cols; ++q) {
        IntVector v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = U[i][q];
        basis.push_back(std::move(v));
    }
    detail::hermite_rows(basis, cols);
    return basis;
}

inline std::size_t integer_rank(const IntMatrix& A, std::size_t cols)
{
    return cols - integer_kernel(A, cols).size();
}

inline std::string to_string(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace toricmirror

#endif
