#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "nonsas/rational.hpp"

namespace nonsas {

using Prec = mpfr_prec_t;

inline constexpr Prec kDefaultPrec = 64;
inline constexpr Prec kMaxPrec = 1024;

// Escalation ceiling for certified comparisons; GEO_PRECISION_BITS overrides.
inline Prec max_prec() {
    static const Prec cached = [] {
        if (const char* e = std::getenv("GEO_PRECISION_BITS")) {
            long v = std::atol(e);
            if (v >= 16) return Prec(v);
        }
        return kMaxPrec;
    }();
    return cached;
}

// Thin RAII handle over mpfr_t.
class Mpf {
  public:
    explicit Mpf(Prec prec) { mpfr_init2(v_, prec); }
    Mpf(const Mpf& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpf(Mpf&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Mpf& operator=(const Mpf& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Mpf& operator=(Mpf&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpf() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

// Closed enclosure [lo, hi] of a real, endpoints rounded outward.
class Interval {
  public:
    Interval(Mpf lo, Mpf hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    static Interval from_rational(const Rational& q, Prec prec) {
        Mpf lo(prec), hi(prec);
        mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
        return {std::move(lo), std::move(hi)};
    }

    static Interval pi(Prec prec) {
        Mpf lo(prec), hi(prec);
        mpfr_const_pi(lo.get(), MPFR_RNDD);
        mpfr_const_pi(hi.get(), MPFR_RNDU);
        return {std::move(lo), std::move(hi)};
    }

    // atan2(y, x) on exact integer arguments; correctly rounded both ways.
    static Interval atan2_int(const Int& y, const Int& x, Prec prec) {
        Mpf fy(prec + 32), fx(prec + 32);
        mpfr_set_z(fy.get(), y.get_mpz_t(), MPFR_RNDN);  // exact for z below 2^(prec+32)
        mpfr_set_z(fx.get(), x.get_mpz_t(), MPFR_RNDN);
        Mpf lo(prec), hi(prec);
        mpfr_atan2(lo.get(), fy.get(), fx.get(), MPFR_RNDD);
        mpfr_atan2(hi.get(), fy.get(), fx.get(), MPFR_RNDU);
        // Guard against inexact operand conversion for huge integers.
        mpfr_nextbelow(lo.get());
        mpfr_nextabove(hi.get());
        return {std::move(lo), std::move(hi)};
    }

    Interval operator+(const Interval& o) const {
        Prec p = prec();
        Mpf lo(p), hi(p);
        mpfr_add(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_add(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
        return {std::move(lo), std::move(hi)};
    }

    Interval operator-(const Interval& o) const {
        Prec p = prec();
        Mpf lo(p), hi(p);
        mpfr_sub(lo.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
        mpfr_sub(hi.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
        return {std::move(lo), std::move(hi)};
    }

    Interval operator-() const {
        Prec p = prec();
        Mpf lo(p), hi(p);
        mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
        mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
        return {std::move(lo), std::move(hi)};
    }

    Interval operator*(const Interval& o) const {
        Prec p = prec();
        Mpf lo(p), hi(p);
        mpfr_t c[4];
        for (auto& x : c) mpfr_init2(x, p);
        mpfr_mul(c[0], lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_mul(c[1], lo_.get(), o.hi_.get(), MPFR_RNDD);
        mpfr_mul(c[2], hi_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_mul(c[3], hi_.get(), o.hi_.get(), MPFR_RNDD);
        mpfr_set(lo.get(), c[0], MPFR_RNDD);
        for (int i = 1; i < 4; ++i) mpfr_min(lo.get(), lo.get(), c[i], MPFR_RNDD);
        mpfr_mul(c[0], lo_.get(), o.lo_.get(), MPFR_RNDU);
        mpfr_mul(c[1], lo_.get(), o.hi_.get(), MPFR_RNDU);
        mpfr_mul(c[2], hi_.get(), o.lo_.get(), MPFR_RNDU);
        mpfr_mul(c[3], hi_.get(), o.hi_.get(), MPFR_RNDU);
        mpfr_set(hi.get(), c[0], MPFR_RNDU);
        for (int i = 1; i < 4; ++i) mpfr_max(hi.get(), hi.get(), c[i], MPFR_RNDU);
        for (auto& x : c) mpfr_clear(x);
        return {std::move(lo), std::move(hi)};
    }

    // Enclosure of b^e for exact rational b > 0 and exact rational e.
    static Interval pow_rational(const Rational& base, const Rational& exp, Prec prec) {
        Interval b = from_rational(base, prec + 16);
        Interval e = from_rational(exp, prec + 16);
        Mpf lo(prec), hi(prec);
        mpfr_t c;
        mpfr_init2(c, prec);
        bool first = true;
        mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
        mpfr_srcptr es[2] = {e.lo_.get(), e.hi_.get()};
        for (auto bp : bs)
            for (auto ep : es) {
                mpfr_pow(c, bp, ep, MPFR_RNDD);
                if (first)
                    mpfr_set(lo.get(), c, MPFR_RNDD);
                else
                    mpfr_min(lo.get(), lo.get(), c, MPFR_RNDD);
                mpfr_pow(c, bp, ep, MPFR_RNDU);
                if (first)
                    mpfr_set(hi.get(), c, MPFR_RNDU);
                else
                    mpfr_max(hi.get(), hi.get(), c, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(c);
        return {std::move(lo), std::move(hi)};
    }

    // Enclosure of b^e for interval b (required positive) and exact rational e.
    static Interval pow_interval(const Interval& base, const Rational& exp, Prec prec) {
        Interval e = from_rational(exp, prec + 16);
        Mpf lo(prec), hi(prec);
        mpfr_t c;
        mpfr_init2(c, prec);
        bool first = true;
        mpfr_srcptr bs[2] = {base.lo_.get(), base.hi_.get()};
        mpfr_srcptr es[2] = {e.lo_.get(), e.hi_.get()};
        for (auto bp : bs)
            for (auto ep : es) {
                mpfr_pow(c, bp, ep, MPFR_RNDD);
                if (first)
                    mpfr_set(lo.get(), c, MPFR_RNDD);
                else
                    mpfr_min(lo.get(), lo.get(), c, MPFR_RNDD);
                mpfr_pow(c, bp, ep, MPFR_RNDU);
                if (first)
                    mpfr_set(hi.get(), c, MPFR_RNDU);
                else
                    mpfr_max(hi.get(), hi.get(), c, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(c);
        return {std::move(lo), std::move(hi)};
    }

    // 1/x for intervals not containing zero.
    Interval recip() const {
        Prec p = prec();
        Mpf lo(p), hi(p);
        mpfr_ui_div(lo.get(), 1, hi_.get(), MPFR_RNDD);
        mpfr_ui_div(hi.get(), 1, lo_.get(), MPFR_RNDU);
        return {std::move(lo), std::move(hi)};
    }

    // +1 when the whole interval is positive, -1 when negative, 0 when it straddles.
    int certain_sign() const {
        if (mpfr_sgn(lo_.get()) > 0) return 1;
        if (mpfr_sgn(hi_.get()) < 0) return -1;
        return 0;
    }

    bool strictly_less(const Interval& o) const {
        return mpfr_cmp(hi_.get(), o.lo_.get()) < 0;
    }

    bool disjoint(const Interval& o) const {
        return strictly_less(o) || o.strictly_less(*this);
    }

    bool contains_rational(const Rational& q) const {
        Interval r = from_rational(q, prec());
        return mpfr_cmp(lo_.get(), r.hi_.get()) <= 0 && mpfr_cmp(r.lo_.get(), hi_.get()) <= 0;
    }

    Prec prec() const { return mpfr_get_prec(lo_.get()); }

    double lo_approx() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    double hi_approx() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

    std::string str(int digits = 17) const {
        char* a = nullptr;
        char* b = nullptr;
        mpfr_asprintf(&a, "%.*Rg", digits, lo_.get());
        mpfr_asprintf(&b, "%.*Rg", digits, hi_.get());
        std::string out = std::string("[") + a + ", " + b + "]";
        mpfr_free_str(a);
        mpfr_free_str(b);
        return out;
    }

  private:
    Mpf lo_, hi_;
};

}  // namespace nonsas
