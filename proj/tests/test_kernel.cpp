#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <mpfr.h>

#include <random>

#include "doctest.h"
#include "nonsas/geometry.hpp"

using namespace nonsas;

TEST_CASE("lines through point pairs come out in canonical integer form") {
    CHECK(line_through(point(0, 0), point(1, 0)) == Line::from_coeffs(0, 1, 0));
    CHECK(line_through(point(0, 0), point(1, 1)) == Line::from_coeffs(1, -1, 0));
    CHECK(line_through(point(0, 1), point(1, 2)) == Line::from_coeffs(1, -1, 1));
    // order of the defining points is irrelevant
    CHECK(line_through(point(1, 1), point(0, 0)) == line_through(point(0, 0), point(1, 1)));
    CHECK_THROWS_AS(line_through(point(2, 3), point(2, 3)), CoincidentPoints);
    // canonical form: gcd 1, first nonzero of (a, b) positive
    Line l = line_through(point(0, 4), point(6, 0));
    CHECK(l == Line::from_coeffs(2, 3, -12));
}

TEST_CASE("intersection, parallelism and the distinct-parallel convention") {
    Line y0 = Line::from_coeffs(0, 1, 0), y1 = Line::from_coeffs(0, 1, -1);
    Line diag = Line::from_coeffs(1, -1, 0);
    CHECK(*intersect(y0, diag) == point(0, 0));
    CHECK(*intersect(y1, diag) == point(1, 1));
    CHECK(!intersect(y0, y1).has_value());
    CHECK(parallel(y0, y1));
    CHECK(!parallel(y0, y0));  // a line is not parallel to itself
    CHECK(!parallel(y0, diag));
    CHECK_THROWS_AS(intersect(y0, y0), IdenticalLines);
    // parallel <=> no intersection, over a small family
    for (long a = -2; a <= 2; ++a)
        for (long c = -2; c <= 2; ++c) {
            Line l = Line::from_coeffs(a, 1, c);
            CHECK(parallel(l, y0) == (!(l == y0) && !intersect(l, y0).has_value()));
        }
}

TEST_CASE("betweenness is strict, symmetric and exclusive") {
    CHECK(between(point(0, 0), point(1, 1), point(2, 2)));
    CHECK(between(point(2, 2), point(1, 1), point(0, 0)));
    CHECK(!between(point(1, 1), point(0, 0), point(2, 2)));
    CHECK_THROWS_AS(between(point(0, 0), point(1, 0), point(1, 1)), NotCollinear);
    CHECK_THROWS_AS(between(point(0, 0), point(0, 0), point(2, 2)), DegeneratePoints);
}

TEST_CASE("side-of-line predicate") {
    Line diag = Line::from_coeffs(1, -1, 0);
    CHECK(same_side(diag, point(1, 0), point(2, 0)));
    CHECK(!same_side(diag, point(1, 0), point(0, 1)));
    CHECK_THROWS_AS(same_side(diag, point(1, 1), point(1, 0)), PointOnLine);
}

TEST_CASE("rays store primitive directions and support strict membership") {
    Ray r = make_ray(point(0, 0), point(2, 4));
    CHECK(r.dx == 1);
    CHECK(r.dy == 2);
    CHECK(r.passes_through(point(3, 6)));
    CHECK(!r.passes_through(point(0, 0)));   // origin excluded
    CHECK(!r.passes_through(point(-1, -2))); // opposite side
    CHECK(!r.passes_through(point(1, 3)));
    CHECK(opposite(r).passes_through(point(-1, -2)));
    CHECK(r.line().contains(point(-2, -4)));
    Ray q{point(0, 0), Int(1), Int(2)};
    CHECK(r == q);
}

TEST_CASE("segments compare by exact squared length") {
    CHECK(segment_congruent(Segment(point(0, 0), point(1, 1)),
                            Segment(point(3, 4), point(4, 5))));
    CHECK(!segment_congruent(Segment(point(0, 0), point(1, 1)),
                             Segment(point(0, 0), point(2, 0))));
    CHECK(Segment(point(0, 0), point(3, 4)).squared_length() == Rational(25));
    CHECK_THROWS_AS(Segment(point(1, 2), point(1, 2)), CoincidentPoints);
}

TEST_CASE("angles are unordered ray pairs with a shared vertex") {
    Ray h = ray_dir(point(1, 1), 1, 0), k = ray_dir(point(1, 1), 0, 1);
    CHECK(make_angle(h, k) == make_angle(k, h));
    CHECK(make_angle(h, k).vertex() == point(1, 1));
    CHECK_THROWS_AS(make_angle(h, ray_dir(point(0, 0), 0, 1)), DistinctVertices);
    CHECK_THROWS_AS(make_angle(h, ray_dir(point(1, 1), -2, 0)), CollinearRays);
}

TEST_CASE("exact measure comparison by monotone cosine") {
    Angle right = angle_at(point(0, 0), 1, 0, 0, 1);
    Angle eighth = angle_at(point(0, 0), 1, 0, 1, 1);
    Angle wide = angle_at(point(0, 0), 1, 0, -1, 1);
    CHECK(compare_measure(eighth, right) == Ordering::Less);
    CHECK(compare_measure(right, eighth) == Ordering::Greater);
    CHECK(compare_measure(wide, right) == Ordering::Greater);
    CHECK(compare_measure(right, angle_at(point(5, 5), 3, 4, -4, 3)) == Ordering::Equal);
    // scaling directions does not change the measure
    CHECK(compare_measure(angle_at(point(0, 0), 1, 2, 3, 1),
                          angle_at(point(7, 0), 2, 4, 9, 3)) == Ordering::Equal);
}

TEST_CASE("measure values: pi/4 multiples exact, everything else certified") {
    CHECK(*measure_value(angle_at(point(0, 0), 1, 0, 0, 1)).exact_pi() == Rational(1, 2));
    CHECK(*measure_value(angle_at(point(0, 0), 1, 0, 1, 1)).exact_pi() == Rational(1, 4));
    CHECK(*measure_value(angle_at(point(0, 0), 1, 1, -1, 1)).exact_pi() == Rational(1, 2));
    CHECK(*measure_value(angle_at(point(0, 0), 1, 0, -1, 1)).exact_pi() == Rational(3, 4));
    CHECK(!measure_value(angle_at(point(0, 0), 1, 0, 1, 2)).exact_pi());
}

TEST_CASE("measure enclosures contain an independent high-precision arctangent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        long hx = long(rng() % 9) - 4, hy = long(rng() % 9) - 4;
        long kx = long(rng() % 9) - 4, ky = long(rng() % 9) - 4;
        if ((hx == 0 && hy == 0) || (kx == 0 && ky == 0) || hx * ky - hy * kx == 0) continue;
        Angle a = angle_at(point(0, 0), hx, hy, kx, ky);
        long dot = hx * kx + hy * ky;
        long cross = std::abs(hx * ky - hy * kx);
        mpfr_t y, x, v;
        mpfr_inits2(300, y, x, v, (mpfr_ptr) nullptr);
        mpfr_set_si(y, cross, MPFR_RNDN);
        mpfr_set_si(x, dot, MPFR_RNDN);
        mpfr_atan2(v, y, x, MPFR_RNDN);
        Interval enc = measure_value(a).enclosure(256);
        mpfr_t lo, hi;
        mpfr_inits2(300, lo, hi, (mpfr_ptr) nullptr);
        mpfr_set_str(lo, enc.str(60).substr(1, enc.str(60).find(',') - 1).c_str(), 10,
                     MPFR_RNDD);
        // Compare through doubles too as a sanity check.
        CHECK(enc.lo_approx() <= mpfr_get_d(v, MPFR_RNDN));
        CHECK(mpfr_get_d(v, MPFR_RNDN) <= enc.hi_approx());
        mpfr_clears(y, x, v, lo, hi, (mpfr_ptr) nullptr);
    }
}

TEST_CASE("supplementary detection and interior test") {
    Ray h = ray_dir(point(0, 0), 1, 0), k = ray_dir(point(0, 0), 1, 2);
    CHECK(is_supplementary(make_angle(h, k), make_angle(opposite(h), k)));
    CHECK(!is_supplementary(make_angle(h, k), make_angle(h, ray_dir(point(0, 0), 0, 1))));
    Angle right = angle_at(point(0, 0), 1, 0, 0, 1);
    CHECK(in_interior(right, ray_dir(point(0, 0), 1, 1)));
    CHECK(in_interior(right, ray_dir(point(0, 0), 2, 1)));
    CHECK(!in_interior(right, ray_dir(point(0, 0), 1, 0)));   // on a side
    CHECK(!in_interior(right, ray_dir(point(0, 0), -1, 1)));  // outside
    CHECK_THROWS_AS(in_interior(right, ray_dir(point(1, 0), 1, 1)), VertexMismatch);
}

TEST_CASE("symbolic angle arithmetic: sums, negation, comparison") {
    AngleValue q1 = AngleValue::pi_multiple(Rational(1, 4));
    AngleValue a2 = AngleValue::from_arg(1, 2);  // arctan 2
    AngleValue s = q1 + a2;
    // pi/4 + arctan 2 = pi - arctan 3: check against the symbolic route
    AngleValue other = AngleValue::pi_multiple(Rational(1)) - AngleValue::from_arg(1, 3);
    CHECK(compare(s, other) == Cmp::Equal);
    CHECK((s - s).symbolically_zero());
    CHECK(compare(q1, a2) == Cmp::Less);
    CHECK(compare_with_pi_multiple(a2, Rational(1, 2)) == Cmp::Less);
    CHECK(compare_with_pi_multiple(a2, Rational(1, 4)) == Cmp::Greater);
    // arctan 2 + arctan(1/2) = pi/2 exactly
    CHECK(compare_with_pi_multiple(AngleValue::from_arg(1, 2) + AngleValue::from_arg(2, 1),
                                   Rational(1, 2)) == Cmp::Equal);
}

TEST_CASE("comparison route agreement: cosine oracle vs symbolic labels") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        long d[8];
        for (auto& x : d) x = long(rng() % 11) - 5;
        if ((d[0] == 0 && d[1] == 0) || (d[2] == 0 && d[3] == 0) ||
            (d[4] == 0 && d[5] == 0) || (d[6] == 0 && d[7] == 0))
            continue;
        if (d[0] * d[3] - d[1] * d[2] == 0 || d[4] * d[7] - d[5] * d[6] == 0) continue;
        Angle a1 = angle_at(point(0, 0), d[0], d[1], d[2], d[3]);
        Angle a2 = angle_at(point(1, 2), d[4], d[5], d[6], d[7]);
        Ordering o = compare_measure(a1, a2);
        Cmp c = compare(measure_value(a1), measure_value(a2));
        CHECK(c != Cmp::Undetermined);
        CHECK((o == Ordering::Less) == (c == Cmp::Less));
        CHECK((o == Ordering::Equal) == (c == Cmp::Equal));
        CHECK((o == Ordering::Greater) == (c == Cmp::Greater));
    }
}
