#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tfan/rational.hpp"

namespace tfan {

enum class Tri { Yes, No, Unknown };

std::string to_string(Tri t);

// The base curve: genus, an ordered list of named marked points, and whether
// the curve is affine or projective. Exact section counts and principality
// are only decidable at genus zero.
struct Curve {
    unsigned genus = 0;
    std::vector<std::string> marked_points;
    bool projective = true;

    bool is_marked(const std::string& p) const;
    void check() const;  // unique point names
};

// A finitely supported Q-divisor on the curve. Points absent from the map
// carry coefficient zero.
class CurveDivisor {
public:
    CurveDivisor() = default;
    explicit CurveDivisor(std::map<std::string, Rat> coeffs);

    static CurveDivisor single(const std::string& p, const Rat& c);

    const std::map<std::string, Rat>& coeffs() const { return coeffs_; }
    Rat coeff(const std::string& p) const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_integral() const;

    CurveDivisor operator+(const CurveDivisor& o) const;
    CurveDivisor operator-(const CurveDivisor& o) const;
    CurveDivisor operator*(const Rat& c) const;
    bool operator==(const CurveDivisor& o) const { return coeffs_ == o.coeffs_; }

    Rat degree() const;
    CurveDivisor floor() const;

    std::string to_string() const;

private:
    std::map<std::string, Rat> coeffs_;  // zero coefficients are pruned
};

// h^0(Y, O(floor D)). Genus zero is Riemann-Roch exact; for genus >= 1 only
// the degree-forced ranges are answered, the rest is Undetermined (nullopt).
std::optional<Int> h0(const Curve& y, const CurveDivisor& d);

Tri is_principal(const Curve& y, const CurveDivisor& d);

// A chosen canonical representative: (2g-2) * anchor on a projective curve.
CurveDivisor canonical_rep(const Curve& y, const std::string& anchor);

}  // namespace tfan
