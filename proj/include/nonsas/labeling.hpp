#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nonsas/angle_value.hpp"
#include "nonsas/errors.hpp"
#include "nonsas/geometry.hpp"

namespace nonsas {

enum class TriBool { False, Unknown, True };

inline TriBool tri_and(TriBool a, TriBool b) {
    if (a == TriBool::False || b == TriBool::False) return TriBool::False;
    if (a == TriBool::Unknown || b == TriBool::Unknown) return TriBool::Unknown;
    return TriBool::True;
}
inline TriBool tri_or(TriBool a, TriBool b) {
    if (a == TriBool::True || b == TriBool::True) return TriBool::True;
    if (a == TriBool::Unknown || b == TriBool::Unknown) return TriBool::Unknown;
    return TriBool::False;
}
inline TriBool tri_not(TriBool a) {
    if (a == TriBool::True) return TriBool::False;
    if (a == TriBool::False) return TriBool::True;
    return TriBool::Unknown;
}
inline TriBool tri_of(bool b) { return b ? TriBool::True : TriBool::False; }

// b^e exactly when the result is rational; base > 0.
inline std::optional<Rational> rational_pow_exact(const Rational& base, const Rational& exp) {
    Int p = exp.get_num(), s = exp.get_den();
    Int a = base.get_num(), b = base.get_den();
    Int ra, rb;
    if (mpz_root(ra.get_mpz_t(), a.get_mpz_t(), mpz_get_ui(s.get_mpz_t())) == 0) return std::nullopt;
    if (mpz_root(rb.get_mpz_t(), b.get_mpz_t(), mpz_get_ui(s.get_mpz_t())) == 0) return std::nullopt;
    bool neg = p < 0;
    unsigned long e = mpz_get_ui(Int(abs(p)).get_mpz_t());
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), ra.get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), rb.get_mpz_t(), e);
    Rational out = neg ? Rational(den, num) : Rational(num, den);
    out.canonicalize();
    return out;
}

// A bijection of (0, pi/2) onto itself, attached to one vertex. Transposition
// entries and the power exponent are exact rationals; transposition values are
// denominated in units of pi.
struct HatBijection {
    enum class Kind { Identity, Transpositions, Power };

    Kind kind = Kind::Identity;
    std::vector<std::pair<Rational, Rational>> pairs;  // units of pi, values in (0, 1/2)
    Rational exponent;                                 // r > 1

    static HatBijection identity() { return {}; }

    static HatBijection transpositions(std::vector<std::pair<Rational, Rational>> ps) {
        std::vector<Rational> seen;
        for (const auto& [u, v] : ps) {
            for (const Rational& q : {u, v}) {
                if (!(q > 0 && q < Rational(1, 2)))
                    throw MalformedSpec("transposition value " + to_string(q) +
                                        " outside (0, 1/2) pi");
                for (const auto& w : seen)
                    if (w == q)
                        throw MalformedSpec("overlapping transposition value " + to_string(q));
                seen.push_back(q);
            }
        }
        HatBijection b;
        b.kind = Kind::Transpositions;
        b.pairs = std::move(ps);
        return b;
    }

    static HatBijection power(Rational r) {
        if (!(r > 1)) throw MalformedSpec("power exponent must satisfy r > 1");
        HatBijection b;
        b.kind = Kind::Power;
        b.exponent = std::move(r);
        return b;
    }

    bool operator==(const HatBijection& o) const {
        return kind == o.kind && pairs == o.pairs && exponent == o.exponent;
    }
};

namespace detail {

inline void require_open_half_right(const AngleValue& x) {
    if (compare_with_pi_multiple(x, Rational(0)) == Cmp::Less ||
        compare_with_pi_multiple(x, Rational(0)) == Cmp::Equal ||
        compare_with_pi_multiple(x, Rational(1, 2)) == Cmp::Greater ||
        compare_with_pi_multiple(x, Rational(1, 2)) == Cmp::Equal)
        throw OutOfDomain("value outside (0, pi/2)");
}

// Enclosure of q*pi * (2q)^e.
inline Interval power_image(const Rational& q, const Rational& e, Prec p) {
    return Interval::from_rational(q, p) * Interval::pi(p) *
           Interval::pow_rational(2 * q, e, p);
}

}  // namespace detail

inline AngleValue hat_apply(const HatBijection& b, const AngleValue& x) {
    detail::require_open_half_right(x);
    switch (b.kind) {
        case HatBijection::Kind::Identity:
            return x;
        case HatBijection::Kind::Transpositions: {
            if (auto q = x.exact_pi()) {
                for (const auto& [u, v] : b.pairs) {
                    if (*q == u) return AngleValue::pi_multiple(v);
                    if (*q == v) return AngleValue::pi_multiple(u);
                }
            }
            // Interval-valued measures are isolated from the table entries.
            return x;
        }
        case HatBijection::Kind::Power: {
            Rational r = b.exponent;
            if (auto q = x.exact_pi()) {
                if (auto f = rational_pow_exact(2 * *q, r))
                    return AngleValue::pi_multiple(*q * *f);
                Rational qq = *q;
                return AngleValue::opaque(
                    [qq, r](Prec p) { return detail::power_image(qq, r, p); });
            }
            AngleValue xv = x;
            return AngleValue::opaque([xv, r](Prec p) {
                Interval X = xv.enclosure(p);
                Interval t = X * Interval::from_rational(Rational(2), p) *
                             Interval::pi(p).recip();
                return X * Interval::pow_interval(t, r, p);
            });
        }
    }
    throw GeometryError("unreachable");
}

// Unique preimage under the hat bijection. The power map x*(2x/pi)^r has the
// closed-form inverse x = (pi/2) * (2y/pi)^(1/(1+r)).
inline AngleValue hat_invert(const HatBijection& b, const AngleValue& y) {
    detail::require_open_half_right(y);
    switch (b.kind) {
        case HatBijection::Kind::Identity:
            return y;
        case HatBijection::Kind::Transpositions:
            return hat_apply(b, y);  // a transposition is its own inverse
        case HatBijection::Kind::Power: {
            Rational e = Rational(1) / (1 + b.exponent);
            if (auto q = y.exact_pi()) {
                if (auto f = rational_pow_exact(2 * *q, e))
                    return AngleValue::pi_multiple(Rational(1, 2) * *f);
                Rational qq = *q;
                return AngleValue::opaque([qq, e](Prec p) {
                    return Interval::pi(p) * Interval::from_rational(Rational(1, 2), p) *
                           Interval::pow_rational(2 * qq, e, p);
                });
            }
            AngleValue yv = y;
            return AngleValue::opaque([yv, e](Prec p) {
                Interval t = yv.enclosure(p) * Interval::from_rational(Rational(2), p) *
                             Interval::pi(p).recip();
                return Interval::pi(p) * Interval::from_rational(Rational(1, 2), p) *
                       Interval::pow_interval(t, e, p);
            });
        }
    }
    throw GeometryError("unreachable");
}

// Per-point hat bijections; identity at every unlisted point.
class LabelScheme {
  public:
    static LabelScheme identity() { return LabelScheme{}; }

    // Identity everywhere except the swap pi/4 <-> 7pi/16 at (1, 1): the
    // minimal bijections meeting the pinned values of the main construction.
    static LabelScheme counterexample() {
        LabelScheme s;
        s.overrides_.emplace(point(1, 1), HatBijection::transpositions(
                                              {{Rational(1, 4), Rational(7, 16)}}));
        return s;
    }

    static LabelScheme power(const std::vector<std::pair<Point, Rational>>& rs) {
        LabelScheme s;
        for (const auto& [p, r] : rs) {
            if (s.overrides_.count(p)) throw MalformedSpec("duplicate override point " + p.str());
            s.overrides_.emplace(p, HatBijection::power(r));
        }
        return s;
    }

    static LabelScheme custom(const std::vector<std::pair<Point, HatBijection>>& table) {
        LabelScheme s;
        for (const auto& [p, b] : table) {
            if (s.overrides_.count(p)) throw MalformedSpec("duplicate override point " + p.str());
            s.overrides_.emplace(p, b);
        }
        return s;
    }

    const HatBijection& hat_for(const Point& p) const {
        auto it = overrides_.find(p);
        if (it != overrides_.end()) return it->second;
        static const HatBijection id = HatBijection::identity();
        return id;
    }

    const std::map<Point, HatBijection>& overrides() const { return overrides_; }

    static LabelScheme from_json(const nlohmann::json& j) {
        if (j.value("default", "identity") != "identity")
            throw MalformedSpec("only \"identity\" is supported as the default bijection");
        auto rq = [](const nlohmann::json& v) {
            auto q = parse_rational(v.get<std::string>());
            if (!q) throw MalformedSpec("bad fraction literal: " + v.get<std::string>());
            return *q;
        };
        std::vector<std::pair<Point, HatBijection>> table;
        for (const auto& ov : j.value("overrides", nlohmann::json::array())) {
            Point p{rq(ov.at("point").at(0)), rq(ov.at("point").at(1))};
            const auto& bj = ov.at("bijection");
            std::string kind = bj.at("kind").get<std::string>();
            if (kind == "identity") {
                table.emplace_back(p, HatBijection::identity());
            } else if (kind == "transpositions") {
                std::vector<std::pair<Rational, Rational>> ps;
                for (const auto& pr : bj.at("pairs"))
                    ps.emplace_back(rq(pr.at(0)), rq(pr.at(1)));
                table.emplace_back(p, HatBijection::transpositions(std::move(ps)));
            } else if (kind == "power") {
                table.emplace_back(p, HatBijection::power(rq(bj.at("r"))));
            } else {
                throw MalformedSpec("unknown bijection kind: " + kind);
            }
        }
        return custom(table);
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["default"] = "identity";
        j["overrides"] = nlohmann::json::array();
        for (const auto& [p, b] : overrides_) {
            nlohmann::json ov;
            ov["point"] = {to_string(p.x), to_string(p.y)};
            nlohmann::json bj;
            switch (b.kind) {
                case HatBijection::Kind::Identity:
                    bj["kind"] = "identity";
                    break;
                case HatBijection::Kind::Transpositions: {
                    bj["kind"] = "transpositions";
                    bj["pairs"] = nlohmann::json::array();
                    for (const auto& [u, v] : b.pairs)
                        bj["pairs"].push_back({to_string(u), to_string(v)});
                    break;
                }
                case HatBijection::Kind::Power:
                    bj["kind"] = "power";
                    bj["r"] = to_string(b.exponent);
                    break;
            }
            ov["bijection"] = bj;
            j["overrides"].push_back(ov);
        }
        return j;
    }

  private:
    std::map<Point, HatBijection> overrides_;
};

// The piecewise extension of the hat bijection to (0, pi), applied to the
// measure of the angle at its own vertex:
//   mu < pi/2  ->  hat(mu)
//   mu = pi/2  ->  pi/2
//   mu > pi/2  ->  pi - hat(pi - mu)
inline AngleValue label_of(const LabelScheme& s, const Angle& a) {
    AngleValue mu = measure_value(a);
    const HatBijection& hat = s.hat_for(a.vertex());
    Cmp c = compare_with_pi_multiple(mu, Rational(1, 2));
    if (c == Cmp::Equal) return AngleValue::pi_multiple(Rational(1, 2));
    if (c == Cmp::Less) return hat_apply(hat, mu);
    AngleValue pi1 = AngleValue::pi_multiple(Rational(1));
    return pi1 - hat_apply(hat, pi1 - mu);
}

// Label equality. When both vertices carry the same bijection the labels agree
// exactly when the measures do (the extension is injective), which keeps the
// verdict exact even for interval-valued labels.
inline TriBool congruent(const LabelScheme& s, const Angle& a1, const Angle& a2) {
    if (s.hat_for(a1.vertex()) == s.hat_for(a2.vertex()))
        return tri_of(compare_measure(a1, a2) == Ordering::Equal);
    switch (compare(label_of(s, a1), label_of(s, a2))) {
        case Cmp::Equal: return TriBool::True;
        case Cmp::Less:
        case Cmp::Greater: return TriBool::False;
        default: return TriBool::Unknown;
    }
}

inline AngleValue add_classes(const AngleValue& c1, const AngleValue& c2) {
    AngleValue s = c1 + c2;
    Cmp c = compare_with_pi_multiple(s, Rational(2));
    if (c == Cmp::Greater || c == Cmp::Equal) throw RangeOverflow();
    return s;
}

inline AngleValue supplement_class(const AngleValue& c) {
    if (compare_with_pi_multiple(c, Rational(0)) != Cmp::Greater ||
        compare_with_pi_multiple(c, Rational(1)) == Cmp::Greater ||
        compare_with_pi_multiple(c, Rational(1)) == Cmp::Equal)
        throw OutOfDomain("supplement argument outside (0, pi)");
    return AngleValue::pi_multiple(Rational(1)) - c;
}

inline Cmp compare_to_two_rights(const AngleValue& c) {
    return compare_with_pi_multiple(c, Rational(1));
}

// Result of transferring a label onto a ray base: either an exact ray (when
// the target measure is a realizable pi/4 multiple or the bisection lands on
// it) or a certified direction bracket around the unique solution.
struct RayBracket {
    Ray lower, upper;
    std::optional<Ray> exact;
};

namespace detail {

inline Ray rotated(const Ray& h, const Int& cre, const Int& cim) {
    // (dx + i dy) * (cre + i cim), reduced to a primitive direction.
    Int dx = h.dx * cre - h.dy * cim;
    Int dy = h.dx * cim + h.dy * cre;
    Int g;
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    if (g > 1) {
        dx /= g;
        dy /= g;
    }
    return {h.origin, dx, dy};
}

// Rotation of h by 2*arctan(t), t = p/q > 0, counterclockwise when ccw.
inline Ray half_angle_rotated(const Ray& h, const Rational& t, bool ccw) {
    Int p = t.get_num(), q = t.get_den();
    Int cre = q * q - p * p, cim = 2 * p * q;
    return rotated(h, cre, ccw ? cim : Int(-cim));
}

inline AngleValue half_angle_measure(const Rational& t) {
    Int p = t.get_num(), q = t.get_den();
    return AngleValue::from_arg(q * q - p * p, 2 * p * q);
}

}  // namespace detail

inline RayBracket transfer_angle(const LabelScheme& s, const AngleValue& c, const Ray& base,
                                 const Point& side) {
    Line bl = base.line();
    Rational side_sign = bl.eval(side);
    if (side_sign == 0) throw PointOnLine();

    // Invert the piecewise extension at the base vertex to get the target measure.
    const HatBijection& hat = s.hat_for(base.origin);
    Cmp cc = compare_with_pi_multiple(c, Rational(1, 2));
    if (cc == Cmp::Undetermined) throw PrecisionExhausted();
    AngleValue target = AngleValue::zero();
    if (cc == Cmp::Equal) {
        target = AngleValue::pi_multiple(Rational(1, 2));
    } else if (cc == Cmp::Less) {
        target = hat_invert(hat, c);
    } else {
        AngleValue pi1 = AngleValue::pi_multiple(Rational(1));
        target = pi1 - hat_invert(hat, pi1 - c);
    }

    // Which rotation sense moves the tip to the requested side?
    bool ccw = sign(bl.eval(detail::rotated(base, Int(0), Int(1)).tip())) == sign(side_sign);

    if (auto q = target.exact_pi()) {
        std::optional<Ray> exact;
        if (*q == Rational(1, 4)) exact = detail::rotated(base, Int(1), ccw ? Int(1) : Int(-1));
        if (*q == Rational(1, 2)) exact = detail::rotated(base, Int(0), ccw ? Int(1) : Int(-1));
        if (*q == Rational(3, 4)) exact = detail::rotated(base, Int(-1), ccw ? Int(1) : Int(-1));
        if (exact) return {*exact, *exact, exact};
    }

    // Bisect the half-angle parameter: measure(t) = 2*arctan(t), monotone.
    Rational lo(0), hi(1);
    while (true) {
        Cmp r = compare(detail::half_angle_measure(hi), target);
        if (r == Cmp::Undetermined) throw PrecisionExhausted();
        if (r == Cmp::Equal) {
            Ray e = detail::half_angle_rotated(base, hi, ccw);
            return {e, e, e};
        }
        if (r == Cmp::Greater) break;
        lo = hi;
        hi *= 2;
    }
    for (int i = 0; i < 64; ++i) {
        Rational mid = (lo + hi) / 2;
        Cmp r = compare(detail::half_angle_measure(mid), target);
        if (r == Cmp::Undetermined) throw PrecisionExhausted();
        if (r == Cmp::Equal) {
            Ray e = detail::half_angle_rotated(base, mid, ccw);
            return {e, e, e};
        }
        (r == Cmp::Less ? lo : hi) = mid;
    }
    Ray rl = lo == 0 ? base : detail::half_angle_rotated(base, lo, ccw);
    Ray rh = detail::half_angle_rotated(base, hi, ccw);
    return {rl, rh, std::nullopt};
}

}  // namespace nonsas
