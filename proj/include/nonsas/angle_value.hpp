#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "nonsas/errors.hpp"
#include "nonsas/interval.hpp"
#include "nonsas/rational.hpp"

namespace nonsas {

enum class Cmp { Less, Equal, Greater, Undetermined };

// A real angle quantity in radians.
//
// Two representations:
//  - symbolic: pi_part * pi + arg(re + i*im), with arg in (-pi, pi]. Multiples
//    of pi/4 in the arg are absorbed into pi_part during normalization, so the
//    stored Gaussian part is either exactly 1 (pure rational multiple of pi)
//    or has im != 0 and |re| != |im|. Sums of angle measures of rational-
//    direction rays stay in this form (Gaussian multiplication), which is what
//    makes congruence and supplement identities exactly decidable.
//  - opaque: a certified-enclosure generator, used for values (power-map
//    labels) that leave the symbolic class.
class AngleValue {
  public:
    using Generator = std::function<Interval(Prec)>;

    static AngleValue pi_multiple(Rational q) {
        AngleValue v;
        v.pi_part_ = std::move(q);
        return v;
    }

    static AngleValue zero() { return pi_multiple(Rational(0)); }

    // arg(re + i*im); (re, im) != (0, 0).
    static AngleValue from_arg(Int re, Int im) {
        AngleValue v;
        v.re_ = std::move(re);
        v.im_ = std::move(im);
        v.normalize();
        return v;
    }

    static AngleValue opaque(Generator gen) {
        AngleValue v;
        v.gen_ = std::make_shared<Generator>(std::move(gen));
        return v;
    }

    bool is_symbolic() const { return gen_ == nullptr; }
    bool is_exact_pi() const { return is_symbolic() && re_ == 1 && im_ == 0; }

    // The q with value = q*pi, when the value is an exact pi multiple.
    std::optional<Rational> exact_pi() const {
        if (is_exact_pi()) return pi_part_;
        return std::nullopt;
    }

    bool symbolically_zero() const {
        return is_exact_pi() && pi_part_ == 0;
    }

    AngleValue operator+(const AngleValue& o) const {
        if (is_symbolic() && o.is_symbolic()) {
            AngleValue v;
            int s1 = arg_sign(), s2 = o.arg_sign();
            v.re_ = re_ * o.re_ - im_ * o.im_;
            v.im_ = re_ * o.im_ + im_ * o.re_;
            int k = 0;
            if (s1 > 0 && s2 > 0 && (v.im_ < 0 || (v.im_ == 0 && v.re_ > 0))) k = 1;
            if (s1 < 0 && s2 < 0 && (v.im_ > 0 || (v.im_ == 0 && v.re_ < 0))) k = -1;
            v.pi_part_ = pi_part_ + o.pi_part_ + Rational(2 * k);
            v.normalize();
            return v;
        }
        AngleValue a = *this, b = o;
        return opaque([a, b](Prec p) { return a.enclosure(p) + b.enclosure(p); });
    }

    AngleValue negate() const {
        if (is_symbolic()) {
            AngleValue v;
            v.pi_part_ = -pi_part_;
            v.re_ = re_;
            v.im_ = -im_;
            v.normalize();
            return v;
        }
        AngleValue a = *this;
        return opaque([a](Prec p) { return -a.enclosure(p); });
    }

    AngleValue operator-(const AngleValue& o) const { return *this + o.negate(); }

    Interval enclosure(Prec prec) const {
        if (!is_symbolic()) return (*gen_)(prec);
        Interval v = Interval::pi(prec) * Interval::from_rational(pi_part_, prec);
        if (!(re_ == 1 && im_ == 0)) v = v + Interval::atan2_int(im_, re_, prec);
        return v;
    }

    std::string str() const {
        if (auto q = exact_pi()) return nonsas::to_string(*q) + " π";
        return enclosure(kDefaultPrec).str();
    }

  private:
    AngleValue() = default;

    // Sign of arg(re + i*im) for stored (normalized) symbolic values.
    int arg_sign() const { return sign(im_); }

    void normalize() {
        Int g;
        mpz_gcd(g.get_mpz_t(), re_.get_mpz_t(), im_.get_mpz_t());
        if (g > 1) {
            re_ /= g;
            im_ /= g;
        }
        if (im_ == 0) {
            if (re_ < 0) pi_part_ += 1;
            re_ = 1;
            return;
        }
        if (re_ == 0) {
            pi_part_ += (im_ > 0) ? Rational(1, 2) : Rational(-1, 2);
            re_ = 1;
            im_ = 0;
            return;
        }
        if (abs(re_) == abs(im_)) {
            if (re_ > 0)
                pi_part_ += (im_ > 0) ? Rational(1, 4) : Rational(-1, 4);
            else
                pi_part_ += (im_ > 0) ? Rational(3, 4) : Rational(-3, 4);
            re_ = 1;
            im_ = 0;
        }
    }

    Rational pi_part_ = 0;
    Int re_ = 1, im_ = 0;
    std::shared_ptr<Generator> gen_;
};

// Certified three-way comparison. Exact (never Undetermined) when both sides
// are symbolic; otherwise escalates interval precision up to `cap` by doubling.
inline Cmp compare(const AngleValue& a, const AngleValue& b, Prec cap = 0) {
    if (cap == 0) cap = max_prec();
    AngleValue d = a - b;
    if (d.is_symbolic() && d.symbolically_zero()) return Cmp::Equal;
    for (Prec p = kDefaultPrec; p <= cap; p *= 2) {
        int s = d.enclosure(p).certain_sign();
        if (s < 0) return Cmp::Less;
        if (s > 0) return Cmp::Greater;
        if (d.is_symbolic() && p == cap) break;  // nonzero but unseparated at cap
    }
    return Cmp::Undetermined;
}

inline Cmp compare_with_pi_multiple(const AngleValue& a, const Rational& q,
                                    Prec cap = 0) {
    return compare(a, AngleValue::pi_multiple(q), cap);
}

inline const char* to_string(Cmp c) {
    switch (c) {
        case Cmp::Less: return "Less";
        case Cmp::Equal: return "Equal";
        case Cmp::Greater: return "Greater";
        default: return "Undetermined";
    }
}

}  // namespace nonsas
