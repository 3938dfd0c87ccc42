#pragma once

// Brute-force oracles, independent of the library's double-description
// kernel. Membership in 2-D goes through hull orientation tests, 1-D through
// plain interval arithmetic.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "tfan/vec.hpp"

namespace oracle {

using tfan::Int;
using tfan::QVec;
using tfan::Rat;
using tfan::ZVec;

inline Rat cross(const QVec& o, const QVec& a, const QVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone-chain convex hull of 2-D points (counterclockwise, no duplicates).
inline std::vector<QVec> hull2d(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end(), [](const QVec& a, const QVec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<QVec> h;
    for (const auto& p : pts) {
        while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
        h.push_back(p);
    }
    size_t lower = h.size() + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
        h.push_back(*it);
    }
    h.pop_back();
    return h;
}

// Point-in-convex-polygon via orientation against every hull edge.
inline bool in_hull2d(const std::vector<QVec>& hull, const QVec& p) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return hull[0] == p;
    if (hull.size() == 2) {
        // p on the segment?
        if (cross(hull[0], hull[1], p) != 0) return false;
        for (int c = 0; c < 2; ++c) {
            Rat lo = std::min(hull[0][c], hull[1][c]), hi = std::max(hull[0][c], hull[1][c]);
            if (p[c] < lo || p[c] > hi) return false;
        }
        return true;
    }
    for (size_t i = 0; i < hull.size(); ++i) {
        const QVec& a = hull[i];
        const QVec& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < 0) return false;
    }
    return true;
}

// min over a vertex list of <u, v>
inline Rat min_over(const std::vector<QVec>& verts, const QVec& u) {
    Rat best = tfan::dot(u, verts[0]);
    for (const auto& v : verts) best = std::min(best, tfan::dot(u, v));
    return best;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rat rational(long lo, long hi, long max_den) {
        long den = integer(1, max_den);
        long num = integer(lo * den, hi * den);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
};

// Shoelace area of a convex polygon given by hull vertices.
inline Rat polygon_area(const std::vector<QVec>& hull) {
    Rat s = 0;
    for (size_t i = 0; i < hull.size(); ++i) {
        const QVec& a = hull[i];
        const QVec& b = hull[(i + 1) % hull.size()];
        s += a[0] * b[1] - b[0] * a[1];
    }
    if (s < 0) s = -s;
    return s / 2;
}

// Lattice points of a 2-D polytope by bounding-box scan with hull membership.
inline std::vector<ZVec> lattice_points_2d(const std::vector<QVec>& verts) {
    auto h = hull2d(verts);
    Rat xlo = verts[0][0], xhi = verts[0][0], ylo = verts[0][1], yhi = verts[0][1];
    for (const auto& v : verts) {
        xlo = std::min(xlo, v[0]);
        xhi = std::max(xhi, v[0]);
        ylo = std::min(ylo, v[1]);
        yhi = std::max(yhi, v[1]);
    }
    std::vector<ZVec> out;
    for (Int x = tfan::ceil_rat(xlo); x <= tfan::floor_rat(xhi); ++x)
        for (Int y = tfan::ceil_rat(ylo); y <= tfan::floor_rat(yhi); ++y)
            if (in_hull2d(h, {Rat(x), Rat(y)})) out.push_back({x, y});
    return out;
}

}  // namespace oracle
