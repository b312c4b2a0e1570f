#pragma once

#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "nonsas/angle_value.hpp"
#include "nonsas/errors.hpp"
#include "nonsas/rational.hpp"

namespace nonsas {

struct Point {
    Rational x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
    std::string str() const { return "(" + to_string(x) + ", " + to_string(y) + ")"; }
};

inline Point point(long x, long y) { return {Rational(x), Rational(y)}; }

// a*x + b*y + c = 0 in canonical integer form: gcd(a,b,c) = 1 and the first
// nonzero of (a, b) is positive. Line equality is then field-wise.
struct Line {
    Int a, b, c;

    static Line from_coeffs(const Rational& ra, const Rational& rb, const Rational& rc) {
        if (ra == 0 && rb == 0) throw GeometryError("degenerate line coefficients");
        Int l;
        mpz_lcm(l.get_mpz_t(), ra.get_den().get_mpz_t(), rb.get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rc.get_den().get_mpz_t());
        Rational fa = ra * l, fb = rb * l, fc = rc * l;
        Int a = fa.get_num(), b = fb.get_num(), c = fc.get_num();
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g > 1) {
            a /= g;
            b /= g;
            c /= g;
        }
        int lead = (a != 0) ? sign(a) : sign(b);
        if (lead < 0) {
            a = -a;
            b = -b;
            c = -c;
        }
        return {a, b, c};
    }

    Rational eval(const Point& p) const {
        return Rational(a) * p.x + Rational(b) * p.y + Rational(c);
    }
    bool contains(const Point& p) const { return eval(p) == 0; }

    bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const Line& o) const {
        return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
    }
    std::string str() const {
        return "[" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() + "]";
    }
};

inline Line line_through(const Point& A, const Point& B) {
    if (A == B) throw CoincidentPoints();
    return Line::from_coeffs(A.y - B.y, B.x - A.x, -((A.y - B.y) * A.x + (B.x - A.x) * A.y));
}

inline std::optional<Point> intersect(const Line& l1, const Line& l2) {
    if (l1 == l2) throw IdenticalLines();
    Int det = l1.a * l2.b - l2.a * l1.b;
    if (det == 0) return std::nullopt;
    Rational d(det);
    Rational x = Rational(l1.b * l2.c - l2.b * l1.c) / d;
    Rational y = Rational(l1.c * l2.a - l2.c * l1.a) / d;
    x.canonicalize();
    y.canonicalize();
    return Point{x, y};
}

// Distinct-parallel convention: a line is not parallel to itself.
inline bool parallel(const Line& l1, const Line& l2) {
    return !(l1 == l2) && l1.a * l2.b - l2.a * l1.b == 0;
}

inline bool collinear(const Point& A, const Point& B, const Point& C) {
    return (B.x - A.x) * (C.y - A.y) - (B.y - A.y) * (C.x - A.x) == 0;
}

// Strict betweenness of B on segment AC.
inline bool between(const Point& A, const Point& B, const Point& C) {
    if (A == B || B == C || A == C) throw DegeneratePoints();
    if (!collinear(A, B, C)) throw NotCollinear();
    return (B.x - A.x) * (C.x - B.x) + (B.y - A.y) * (C.y - B.y) > 0;
}

inline bool same_side(const Line& l, const Point& P, const Point& Q) {
    Rational sp = l.eval(P), sq = l.eval(Q);
    if (sp == 0 || sq == 0) throw PointOnLine();
    return sign(sp) == sign(sq);
}

// A ray stored as origin plus a primitive integer direction vector.
struct Ray {
    Point origin;
    Int dx, dy;

    Point tip() const { return {origin.x + Rational(dx), origin.y + Rational(dy)}; }
    Line line() const {
        return Line::from_coeffs(Rational(-dy), Rational(dx),
                                 Rational(dy) * origin.x - Rational(dx) * origin.y);
    }
    // Strict membership of a point on the open ray (origin excluded).
    bool passes_through(const Point& p) const {
        Rational ex = p.x - origin.x, ey = p.y - origin.y;
        if (ex * Rational(dy) != ey * Rational(dx)) return false;
        return ex * Rational(dx) + ey * Rational(dy) > 0;
    }

    bool operator==(const Ray& o) const {
        return origin == o.origin && dx == o.dx && dy == o.dy;
    }
    bool operator<(const Ray& o) const {
        if (!(origin == o.origin)) return origin < o.origin;
        return std::tie(dx, dy) < std::tie(o.dx, o.dy);
    }
    std::string str() const {
        return origin.str() + "->(" + dx.get_str() + "," + dy.get_str() + ")";
    }
};

inline std::pair<Int, Int> primitive_direction(const Rational& ex, const Rational& ey) {
    Int l;
    mpz_lcm(l.get_mpz_t(), ex.get_den().get_mpz_t(), ey.get_den().get_mpz_t());
    Int dx = Rational(ex * l).get_num(), dy = Rational(ey * l).get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    if (g > 1) {
        dx /= g;
        dy /= g;
    }
    return {dx, dy};
}

inline Ray make_ray(const Point& origin, const Point& through) {
    if (origin == through) throw CoincidentPoints();
    auto [dx, dy] = primitive_direction(through.x - origin.x, through.y - origin.y);
    return {origin, dx, dy};
}

inline Ray ray_dir(const Point& origin, long dx, long dy) {
    return make_ray(origin, {origin.x + Rational(dx), origin.y + Rational(dy)});
}

inline Ray opposite(const Ray& h) { return {h.origin, -h.dx, -h.dy}; }

struct Segment {
    Point a, b;

    Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == b) throw CoincidentPoints();
    }
    Rational squared_length() const {
        Rational ex = b.x - a.x, ey = b.y - a.y;
        return ex * ex + ey * ey;
    }
};

inline bool segment_congruent(const Segment& s1, const Segment& s2) {
    return s1.squared_length() == s2.squared_length();
}

// Unordered pair of rays with a common vertex on distinct lines. The rays are
// stored in a canonical order so that make_angle(h, k) == make_angle(k, h).
struct Angle {
    Ray h, k;

    const Point& vertex() const { return h.origin; }

    bool operator==(const Angle& o) const { return h == o.h && k == o.k; }
    std::string str() const {
        return "∠" + vertex().str() + "[(" + h.dx.get_str() + "," + h.dy.get_str() +
               "),(" + k.dx.get_str() + "," + k.dy.get_str() + ")]";
    }
};

inline Angle make_angle(const Ray& h, const Ray& k) {
    if (!(h.origin == k.origin)) throw DistinctVertices();
    if (h.dx * k.dy - h.dy * k.dx == 0) throw CollinearRays();
    if (k < h) return {k, h};
    return {h, k};
}

inline Angle angle_at(const Point& v, long hdx, long hdy, long kdx, long kdy) {
    return make_angle(ray_dir(v, hdx, hdy), ray_dir(v, kdx, kdy));
}

enum class Ordering { Less, Equal, Greater };

// Exact comparison of radian measures by monotone cosine comparison:
// cos(mu) = dot / sqrt(|h|^2 |k|^2), compared with sign splits and a
// cross-multiplied squared comparison. Rational arithmetic only.
inline Ordering compare_measure(const Angle& a1, const Angle& a2) {
    Int d1 = a1.h.dx * a1.k.dx + a1.h.dy * a1.k.dy;
    Int d2 = a2.h.dx * a2.k.dx + a2.h.dy * a2.k.dy;
    int s1 = sign(d1), s2 = sign(d2);
    if (s1 != s2) {
        // Larger cosine means smaller angle.
        return s1 > s2 ? Ordering::Less : Ordering::Greater;
    }
    if (s1 == 0) return Ordering::Equal;  // both right angles
    Int n1 = (a1.h.dx * a1.h.dx + a1.h.dy * a1.h.dy) * (a1.k.dx * a1.k.dx + a1.k.dy * a1.k.dy);
    Int n2 = (a2.h.dx * a2.h.dx + a2.h.dy * a2.h.dy) * (a2.k.dx * a2.k.dx + a2.k.dy * a2.k.dy);
    Int lhs = d1 * d1 * n2, rhs = d2 * d2 * n1;
    // cos^2 ordering; for positive cosines larger cos^2 means smaller angle,
    // for negative cosines larger cos^2 means larger angle.
    int cmp2 = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    if (cmp2 == 0) return Ordering::Equal;
    bool smaller = (s1 > 0) ? cmp2 > 0 : cmp2 < 0;
    return smaller ? Ordering::Less : Ordering::Greater;
}

// Radian measure in (0, pi): arg(dot + i*|cross|), exact-symbolic. Multiples
// of pi/4 realizable by rational directions (pi/4, pi/2, 3pi/4) come out as
// exact pi multiples; anything else stays a certified symbolic enclosure.
inline AngleValue measure_value(const Angle& a) {
    Int dot = a.h.dx * a.k.dx + a.h.dy * a.k.dy;
    Int cross = a.h.dx * a.k.dy - a.h.dy * a.k.dx;
    return AngleValue::from_arg(dot, abs(cross));
}

inline bool is_supplementary(const Angle& a1, const Angle& a2) {
    if (!(a1.vertex() == a2.vertex())) return false;
    auto same = [](const Ray& r, const Ray& s) { return r.dx == s.dx && r.dy == s.dy; };
    auto opp = [](const Ray& r, const Ray& s) { return r.dx == -s.dx && r.dy == -s.dy; };
    return (same(a1.h, a2.h) && opp(a1.k, a2.k)) || (same(a1.h, a2.k) && opp(a1.k, a2.h)) ||
           (same(a1.k, a2.h) && opp(a1.h, a2.k)) || (same(a1.k, a2.k) && opp(a1.h, a2.h));
}

// r strictly inside the angle: on the k-side of line(h) and the h-side of
// line(k). With a shared vertex this reduces to cross-product sign tests.
inline bool in_interior(const Angle& a, const Ray& r) {
    if (!(r.origin == a.vertex())) throw VertexMismatch();
    auto cross = [](const Ray& u, const Ray& v) -> Int { return u.dx * v.dy - u.dy * v.dx; };
    int rk = sign(cross(a.h, r)), kk = sign(cross(a.h, a.k));
    int rh = sign(cross(a.k, r)), hh = sign(cross(a.k, a.h));
    return rk == kk && rk != 0 && rh == hh && rh != 0;
}

}  // namespace nonsas
