#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "nonsas/errors.hpp"
#include "nonsas/geometry.hpp"

namespace nonsas {

// Finite carrier for bounded checking: explicit points and lines, a seed for
// sampled sub-checks and a sample budget. Rays and angles are derived on
// demand.
struct Domain {
    std::vector<Point> points;
    std::vector<Line> lines;
    std::uint64_t seed = 42;
    long budget = 1000;

    Domain(std::vector<Point> pts, std::vector<Line> lns, std::uint64_t seed_ = 42,
           long budget_ = 1000)
        : points(std::move(pts)), lines(std::move(lns)), seed(seed_), budget(budget_) {
        if (budget < 1) throw InsufficientDomain("sample budget must be >= 1");
        std::set<Point> ps(points.begin(), points.end());
        if (ps.size() != points.size())
            throw InsufficientDomain("duplicate points in domain");
        std::set<Line> ls(lines.begin(), lines.end());
        if (ls.size() != lines.size()) throw InsufficientDomain("duplicate lines in domain");
    }

    // Integer grid [0,6]^2 plus y = 0, y = 1 and y = x: every witness of the
    // main construction lies inside it.
    static Domain canonical(std::uint64_t seed = 42, long budget = 1000) {
        std::vector<Point> pts;
        for (long x = 0; x <= 6; ++x)
            for (long y = 0; y <= 6; ++y) pts.push_back(point(x, y));
        std::vector<Line> lns = {
            Line::from_coeffs(0, 1, 0),   // y = 0
            Line::from_coeffs(0, 1, -1),  // y = 1
            Line::from_coeffs(1, -1, 0),  // y = x
        };
        return Domain(std::move(pts), std::move(lns), seed, budget);
    }

    // Small carrier for bounded formula evaluation; rich enough to contain the
    // standard witnesses while keeping quantifier enumeration tractable.
    static Domain compact(std::uint64_t seed = 42, long budget = 1000) {
        std::vector<Point> pts = {point(0, 0), point(1, 0), point(0, 1), point(1, 1),
                                  point(2, 1), point(2, 2), point(2, 3), point(1, 2),
                                  point(5, 5), point(6, 5), point(6, 6)};
        std::vector<Line> lns = {
            Line::from_coeffs(0, 1, 0),
            Line::from_coeffs(0, 1, -1),
            Line::from_coeffs(1, -1, 0),
        };
        return Domain(std::move(pts), std::move(lns), seed, budget);
    }

    static Domain from_json(const nlohmann::json& j) {
        auto rq = [](const nlohmann::json& v) {
            auto q = parse_rational(v.get<std::string>());
            if (!q) throw MalformedSpec("bad fraction literal: " + v.get<std::string>());
            return *q;
        };
        std::vector<Point> pts;
        for (const auto& p : j.at("points")) pts.push_back({rq(p.at(0)), rq(p.at(1))});
        std::vector<Line> lns;
        for (const auto& l : j.value("lines", nlohmann::json::array()))
            lns.push_back(Line::from_coeffs(rq(l.at(0)), rq(l.at(1)), rq(l.at(2))));
        return Domain(std::move(pts), std::move(lns), j.value("seed", std::uint64_t(42)),
                      j.value("budget", 1000L));
    }

    // Given points plus all pairwise line intersections.
    std::vector<Point> carrier_points() const {
        std::set<Point> out(points.begin(), points.end());
        for (size_t i = 0; i < lines.size(); ++i)
            for (size_t j = i + 1; j < lines.size(); ++j)
                if (auto p = intersect(lines[i], lines[j])) out.insert(*p);
        return {out.begin(), out.end()};
    }

    // Given lines, lines through carrier point pairs, and the parallel to each
    // given line through each carrier point.
    std::vector<Line> carrier_lines() const {
        auto pts = carrier_points();
        std::set<Line> out(lines.begin(), lines.end());
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                out.insert(line_through(pts[i], pts[j]));
        for (const auto& l : lines)
            for (const auto& p : pts)
                out.insert(Line::from_coeffs(Rational(l.a), Rational(l.b),
                                             -(Rational(l.a) * p.x + Rational(l.b) * p.y)));
        return {out.begin(), out.end()};
    }

    // Rays from each carrier point through every other carrier point.
    std::vector<Ray> carrier_rays() const {
        auto pts = carrier_points();
        std::set<Ray> out;
        for (const auto& p : pts)
            for (const auto& q : pts)
                if (!(p == q)) out.insert(make_ray(p, q));
        return {out.begin(), out.end()};
    }
};

}  // namespace nonsas
