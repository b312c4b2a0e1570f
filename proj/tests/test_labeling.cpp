#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nonsas/labeling.hpp"

using namespace nonsas;

namespace {

// Piecewise extension applied directly to an exact measure q*pi at point P.
AngleValue extend(const LabelScheme& s, const Point& P, const Rational& q) {
    AngleValue mu = AngleValue::pi_multiple(q);
    const HatBijection& hat = s.hat_for(P);
    Cmp c = compare_with_pi_multiple(mu, Rational(1, 2));
    if (c == Cmp::Equal) return AngleValue::pi_multiple(Rational(1, 2));
    if (c == Cmp::Less) return hat_apply(hat, mu);
    return AngleValue::pi_multiple(Rational(1)) -
           hat_apply(hat, AngleValue::pi_multiple(Rational(1) - q));
}

}  // namespace

TEST_CASE("three-valued connectives follow Kleene tables") {
    using T = TriBool;
    CHECK(tri_and(T::True, T::Unknown) == T::Unknown);
    CHECK(tri_and(T::False, T::Unknown) == T::False);
    CHECK(tri_or(T::True, T::Unknown) == T::True);
    CHECK(tri_or(T::False, T::Unknown) == T::Unknown);
    CHECK(tri_not(T::Unknown) == T::Unknown);
    CHECK(tri_not(T::True) == T::False);
    CHECK(tri_of(true) == T::True);
}

TEST_CASE("exact rational powers detected via integer roots") {
    CHECK(*rational_pow_exact(Rational(1, 2), Rational(2)) == Rational(1, 4));
    CHECK(*rational_pow_exact(Rational(4), Rational(3, 2)) == Rational(8));
    CHECK(*rational_pow_exact(Rational(9, 4), Rational(-1, 2)) == Rational(2, 3));
    CHECK(!rational_pow_exact(Rational(2), Rational(1, 2)));
    CHECK(!rational_pow_exact(Rational(1, 2), Rational(3, 2)));
}

TEST_CASE("hat bijection validation") {
    CHECK_THROWS_AS(HatBijection::transpositions({{Rational(1, 4), Rational(1, 2)}}),
                    MalformedSpec);
    CHECK_THROWS_AS(HatBijection::transpositions({{Rational(0), Rational(1, 4)}}),
                    MalformedSpec);
    CHECK_THROWS_AS(
        HatBijection::transpositions({{Rational(1, 4), Rational(1, 3)}, {Rational(1, 4), Rational(3, 8)}}),
        MalformedSpec);
    CHECK_THROWS_AS(HatBijection::power(Rational(1)), MalformedSpec);
    CHECK_THROWS_AS(HatBijection::power(Rational(1, 2)), MalformedSpec);
    CHECK_NOTHROW(HatBijection::power(Rational(3, 2)));
}

TEST_CASE("transposition hat swaps exactly its table entries") {
    HatBijection b = HatBijection::transpositions({{Rational(1, 4), Rational(7, 16)}});
    CHECK(*hat_apply(b, AngleValue::pi_multiple(Rational(1, 4))).exact_pi() == Rational(7, 16));
    CHECK(*hat_apply(b, AngleValue::pi_multiple(Rational(7, 16))).exact_pi() == Rational(1, 4));
    CHECK(*hat_apply(b, AngleValue::pi_multiple(Rational(1, 3))).exact_pi() == Rational(1, 3));
    // interval-valued measures are isolated from the table
    AngleValue t = AngleValue::from_arg(2, 1);  // arctan(1/2) < pi/2
    CHECK(compare(hat_apply(b, t), t) == Cmp::Equal);
    CHECK_THROWS_AS(hat_apply(b, AngleValue::pi_multiple(Rational(3, 4))), OutOfDomain);
    CHECK_THROWS_AS(hat_apply(b, AngleValue::pi_multiple(Rational(1, 2))), OutOfDomain);
}

TEST_CASE("power hat: exact where rational, certified otherwise, with inverse") {
    HatBijection b = HatBijection::power(Rational(2));
    CHECK(*hat_apply(b, AngleValue::pi_multiple(Rational(1, 4))).exact_pi() == Rational(1, 16));
    CHECK(*hat_invert(b, AngleValue::pi_multiple(Rational(1, 16))).exact_pi() == Rational(1, 4));
    HatBijection h = HatBijection::power(Rational(3, 2));
    AngleValue y = hat_apply(h, AngleValue::pi_multiple(Rational(1, 3)));
    CHECK(!y.exact_pi());
    // x (2x/pi)^r < x on (0, pi/2)
    CHECK(compare_with_pi_multiple(y, Rational(1, 3)) == Cmp::Less);
    // the interval round-trip stays consistent with the original value...
    AngleValue back = hat_invert(h, y) - AngleValue::pi_multiple(Rational(1, 3));
    CHECK(back.enclosure(256).certain_sign() == 0);
    // ...and the inverse is exact where the radical collapses:
    // (2 * 1/64)^(2/5) = 1/4, so invert(pi/64) = pi/8 (and apply(pi/8) = pi/64)
    CHECK(*hat_invert(h, AngleValue::pi_multiple(Rational(1, 64))).exact_pi() == Rational(1, 8));
    CHECK(*hat_apply(h, AngleValue::pi_multiple(Rational(1, 8))).exact_pi() == Rational(1, 64));

    // monotonicity on a grid for several exponents
    for (Rational r : {Rational(3, 2), Rational(2), Rational(5, 2)}) {
        HatBijection p = HatBijection::power(r);
        AngleValue prev = AngleValue::zero();
        for (int i = 1; i < 16; ++i) {
            AngleValue v = hat_apply(p, AngleValue::pi_multiple(Rational(i, 32)));
            CHECK(compare(prev, v) == Cmp::Less);
            prev = v;
        }
    }
}

TEST_CASE("pinned label values of the main construction") {
    LabelScheme s = LabelScheme::counterexample();
    Angle eighth11 = angle_at(point(1, 1), 1, 0, 1, 1);
    Angle eighth00 = angle_at(point(0, 0), 1, 0, 1, 1);
    Angle wide11 = angle_at(point(1, 1), 1, 0, -1, 1);  // 3pi/4
    CHECK(*label_of(s, eighth11).exact_pi() == Rational(7, 16));
    CHECK(*label_of(s, eighth00).exact_pi() == Rational(1, 4));
    CHECK(*label_of(s, wide11).exact_pi() == Rational(9, 16));
    CHECK(congruent(s, eighth11, eighth00) == TriBool::False);
    CHECK(congruent(s, eighth00, angle_at(point(3, 2), 0, 1, 1, 1)) == TriBool::True);
    // same-vertex same-hat comparisons stay exact
    CHECK(congruent(s, eighth11, angle_at(point(1, 1), 0, -1, -1, -1)) == TriBool::True);
}

TEST_CASE("right angles label pi/2 under every scheme") {
    std::vector<LabelScheme> schemes = {LabelScheme::identity(), LabelScheme::counterexample(),
                                        LabelScheme::power({{point(1, 1), Rational(2)}})};
    for (const auto& s : schemes)
        for (long x : {0L, 1L, 5L})
            for (auto [dx, dy] : {std::pair<long, long>{1, 0}, {3, 4}, {1, 2}}) {
                Angle a = angle_at(point(x, 1), dx, dy, -dy, dx);
                CHECK(*label_of(s, a).exact_pi() == Rational(1, 2));
            }
}

TEST_CASE("supplement identity holds exactly on an ExactPi grid") {
    std::vector<LabelScheme> schemes = {LabelScheme::identity(), LabelScheme::counterexample(),
                                        LabelScheme::power({{point(1, 1), Rational(2)}})};
    for (const auto& s : schemes)
        for (const Point& P : {point(1, 1), point(0, 0)})
            for (int i = 1; i < 64; ++i) {
                Rational q(i, 64);
                AngleValue sum = extend(s, P, q) + extend(s, P, Rational(1) - q);
                CHECK(compare_with_pi_multiple(sum, Rational(1)) == Cmp::Equal);
            }
}

TEST_CASE("class addition and supplement guards") {
    AngleValue a = AngleValue::pi_multiple(Rational(7, 16));
    CHECK(*add_classes(a, a).exact_pi() == Rational(7, 8));
    CHECK_THROWS_AS(add_classes(AngleValue::pi_multiple(Rational(3, 2)),
                                AngleValue::pi_multiple(Rational(3, 4))),
                    RangeOverflow);
    CHECK(*supplement_class(a).exact_pi() == Rational(9, 16));
    CHECK_THROWS_AS(supplement_class(AngleValue::pi_multiple(Rational(1))), OutOfDomain);
    CHECK_THROWS_AS(supplement_class(AngleValue::zero()), OutOfDomain);
    CHECK(compare_to_two_rights(AngleValue::pi_multiple(Rational(13, 16))) == Cmp::Less);
}

TEST_CASE("scheme JSON round-trip and validation") {
    LabelScheme s = LabelScheme::counterexample();
    LabelScheme t = LabelScheme::from_json(s.to_json());
    CHECK(t.to_json() == s.to_json());
    CHECK(t.hat_for(point(1, 1)) == s.hat_for(point(1, 1)));
    CHECK(t.hat_for(point(0, 0)) == HatBijection::identity());
    nlohmann::json bad = {{"default", "identity"},
                          {"overrides",
                           {{{"point", {"1", "1"}},
                             {"bijection", {{"kind", "power"}, {"r", "1"}}}}}}};
    CHECK_THROWS_AS(LabelScheme::from_json(bad), MalformedSpec);
}

TEST_CASE("angle transfer: exact targets and certified brackets") {
    LabelScheme s = LabelScheme::counterexample();
    Ray base = ray_dir(point(0, 0), 1, 0);
    Point above{Rational(0), Rational(1)};
    // right-angle class lands exactly
    RayBracket right = transfer_angle(s, AngleValue::pi_multiple(Rational(1, 2)), base, above);
    REQUIRE(right.exact);
    CHECK(right.exact->dx == 0);
    CHECK(right.exact->dy == 1);
    // pi/4 class at an identity vertex lands exactly
    RayBracket quarter = transfer_angle(s, AngleValue::pi_multiple(Rational(1, 4)), base, above);
    REQUIRE(quarter.exact);
    CHECK(*measure_value(make_angle(base, *quarter.exact)).exact_pi() == Rational(1, 4));
    // the same class at the relabeled vertex needs measure 7pi/16: bracketed
    Ray base11 = ray_dir(point(1, 1), 1, 0);
    Point above11{Rational(1), Rational(2)};
    RayBracket b = transfer_angle(s, AngleValue::pi_multiple(Rational(1, 4)), base11, above11);
    AngleValue target = AngleValue::pi_multiple(Rational(7, 16));
    CHECK(compare(measure_value(make_angle(base11, b.lower)), target) != Cmp::Greater);
    CHECK(compare(measure_value(make_angle(base11, b.upper)), target) != Cmp::Less);
    // requested side is respected
    Rational side = b.upper.line().eval(above11);
    CHECK(base11.line().eval(b.upper.tip()) > 0);
    CHECK_THROWS_AS(transfer_angle(s, AngleValue::pi_multiple(Rational(1, 4)), base,
                                   point(5, 0)),
                    PointOnLine);
}
