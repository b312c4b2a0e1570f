#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace nonsas {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Exact parse of "7", "-3/16" or a finite decimal like "0.25".
// No floating-point ingestion anywhere.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    auto ok_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (c < '0' || c > '9') return false;
        return true;
    };
    bool neg = false;
    std::string_view body = s;
    if (body.front() == '-' || body.front() == '+') {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!ok_digits(num) || !ok_digits(den)) return std::nullopt;
        Int d{std::string(den)};
        if (d == 0) return std::nullopt;
        out = Rational(Int{std::string(num)}, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (!ok_digits(ip) || !ok_digits(fp)) return std::nullopt;
        Int scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        out = Rational(Int(std::string(ip)) * scale + Int(std::string(fp)), scale);
    } else {
        if (!ok_digits(body)) return std::nullopt;
        out = Rational(Int(std::string(body)));
    }
    out.canonicalize();
    if (neg) out = -out;
    return out;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

}  // namespace nonsas
